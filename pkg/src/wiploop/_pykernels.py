"""Pure-Python reference implementations of the search kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output, element for element.  Inputs are C-contiguous int32
numpy arrays; outputs are int32 numpy arrays.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

IMPLEMENTATION = "python"


def find_identity(table) -> int:
    t = table.tolist()
    n = len(t)
    ident = list(range(n))
    for e in range(n):
        if t[e] == ident and all(t[x][e] == x for x in range(n)):
            return e
    return -1


def isotope(g, a_inv, b_inv, c):
    """Table of ``u o v = c[g[a_inv[u]][b_inv[v]]]``."""
    t = g.tolist()
    ai, bi, cc = a_inv.tolist(), b_inv.tolist(), c.tolist()
    n = len(t)
    out = [[cc[t[ai[u]][bi[v]]] for v in range(n)] for u in range(n)]
    return np.asarray(out, dtype=np.int32).reshape(n, n)


def enumerate_reduced(n: int):
    """All reduced Latin squares of order ``n`` in lexicographic order."""
    t = [[0] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = i
        t[i][0] = i
    rows = [1 << i for i in range(n)]
    cols = [1 << j for j in range(n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    out = []

    def bt(k):
        if k == len(cells):
            out.append([r[:] for r in t])
            return
        i, j = cells[k]
        used = rows[i] | cols[j]
        for v in range(n):
            bit = 1 << v
            if used & bit:
                continue
            t[i][j] = v
            rows[i] |= bit
            cols[j] |= bit
            bt(k + 1)
            rows[i] ^= bit
            cols[j] ^= bit

    if n == 1:
        out.append([[0]])
    else:
        bt(0)
    return np.asarray(out, dtype=np.int32).reshape(len(out), n, n)


def canonical_form(table, e: int):
    """Row-major minimum over relabelings that send ``e`` to 0."""
    t = table.tolist()
    n = len(t)
    others = [x for x in range(n) if x != e]
    best = None
    for rest in permutations(others):
        src = (e,) + rest  # src[i] = preimage of label i
        lab = [0] * n
        for i, x in enumerate(src):
            lab[x] = i
        cand = []
        worse = False
        decided = best is None
        for i in range(n):
            row = t[src[i]]
            for j in range(n):
                v = lab[row[src[j]]]
                if not decided:
                    b = best[len(cand)]
                    if v > b:
                        worse = True
                        break
                    if v < b:
                        decided = True
                cand.append(v)
            if worse:
                break
        if not worse and (best is None or cand < best):
            best = cand
    return np.asarray(best, dtype=np.int32)


def isotopisms(g, h, limit: int = -1):
    """All isotopisms ``(A, B, C)`` from ``g`` to ``h`` as rows of shape (3, n).

    For each ``A`` (lexicographic) and each choice of ``B(e)``, the rest of
    the triple is forced: ``C(x) = A(x) o B(e)`` and ``B(y) = A(e) \\ C(y)``.
    With ``limit >= 0`` the scan stops after the ``A`` block in which the
    count first reaches ``limit``.
    """
    gt, ht = g.tolist(), h.tolist()
    n = len(gt)
    eg = find_identity(g)
    out = []
    for A in permutations(range(n)):
        row = ht[A[eg]]
        row_inv = [0] * n
        for u, v in enumerate(row):
            row_inv[v] = u
        for b0 in range(n):
            C = [ht[A[x]][b0] for x in range(n)]
            if len(set(C)) != n:
                continue
            B = [row_inv[C[y]] for y in range(n)]
            ok = True
            for x in range(n):
                hx = ht[A[x]]
                gx = gt[x]
                for y in range(n):
                    if hx[B[y]] != C[gx[y]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append([list(A), B, C])
        if 0 <= limit <= len(out):
            break
    return np.asarray(out, dtype=np.int32).reshape(len(out), 3, n)


def isomorphisms(g, h):
    """All bijections ``phi`` with ``phi(x*y) = phi(x) o phi(y)``, lexicographic."""
    gt, ht = g.tolist(), h.tolist()
    n = len(gt)
    eg, eh = find_identity(g), find_identity(h)
    phi = [-1] * n
    used = [False] * n
    out = []

    def consistent(x):
        # products with x; a full check runs at the leaf
        for y in range(n):
            if phi[y] < 0:
                continue
            for a, b in ((x, y), (y, x)):
                z = gt[a][b]
                w = ht[phi[a]][phi[b]]
                if phi[z] >= 0:
                    if phi[z] != w:
                        return False
                elif used[w]:
                    return False
        return True

    def bt(x):
        if x == n:
            if all(phi[gt[a][b]] == ht[phi[a]][phi[b]] for a in range(n) for b in range(n)):
                out.append(phi[:])
            return
        if phi[x] >= 0:
            bt(x + 1)
            return
        for v in range(n):
            if used[v]:
                continue
            phi[x] = v
            used[v] = True
            if consistent(x):
                bt(x + 1)
            phi[x] = -1
            used[v] = False

    if eg < 0 or eh < 0:
        return np.zeros((0, n), dtype=np.int32)
    phi[eg] = eh
    used[eh] = True
    bt(0)
    return np.asarray(out, dtype=np.int32).reshape(len(out), n)


def weak_inverse_flags(j_rho, j_lambda):
    """For every permutation (lexicographic) the right-form and left-form flags."""
    r, l = j_rho.tolist(), j_lambda.tolist()
    n = len(r)
    perms, right, left = [], [], []
    for a in permutations(range(n)):
        perms.append(a)
        right.append(all(r[x] == a[r[a[x]]] for x in range(n)))
        left.append(all(l[x] == a[l[a[x]]] for x in range(n)))
    return (
        np.asarray(perms, dtype=np.int32).reshape(len(perms), n),
        np.asarray(right, dtype=bool),
        np.asarray(left, dtype=bool),
    )
