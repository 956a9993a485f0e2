# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; output-identical to ``_pykernels``."""

import numpy as np

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

IMPLEMENTATION = "cython"


cdef bint next_perm(int* p, int n) noexcept nogil:
    """Advance ``p`` to the next permutation in lexicographic order."""
    cdef int i = n - 2, j, t
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j -= 1
    return True


cdef int _identity(const int[:, ::1] t) noexcept nogil:
    cdef int n = t.shape[0], e, x
    cdef bint ok
    for e in range(n):
        ok = True
        for x in range(n):
            if t[e, x] != x or t[x, e] != x:
                ok = False
                break
        if ok:
            return e
    return -1


def find_identity(const int[:, ::1] table):
    return _identity(table)


def isotope(const int[:, ::1] g, const int[::1] a_inv, const int[::1] b_inv, const int[::1] c):
    cdef int n = g.shape[0], u, v
    out = np.empty((n, n), dtype=np.int32)
    cdef int[:, ::1] o = out
    for u in range(n):
        for v in range(n):
            o[u, v] = c[g[a_inv[u], b_inv[v]]]
    return out


def enumerate_reduced(int n):
    cdef int ncell = (n - 1) * (n - 1)
    cdef int* t = <int*> malloc(n * n * sizeof(int))
    cdef int* rows = <int*> malloc(n * sizeof(int))
    cdef int* cols = <int*> malloc(n * sizeof(int))
    cdef int* val = <int*> malloc((ncell + 1) * sizeof(int))
    cdef int i, j, k, v, bit, used
    out = []
    try:
        for i in range(n):
            for j in range(n):
                t[i * n + j] = 0
        for i in range(n):
            t[i] = i
            t[i * n] = i
            rows[i] = 1 << i
            cols[i] = 1 << i
        if n == 1 or ncell == 0:
            out.append([t[x] for x in range(n * n)])
        else:
            # iterative DFS over cells in row-major order; val[k] = next value to try
            k = 0
            val[0] = 0
            while k >= 0:
                if k == ncell:
                    out.append([t[x] for x in range(n * n)])
                    k -= 1
                    continue
                i = k // (n - 1) + 1
                j = k % (n - 1) + 1
                if val[k] > 0:
                    # undo previous placement at this cell
                    bit = 1 << t[i * n + j]
                    rows[i] ^= bit
                    cols[j] ^= bit
                used = rows[i] | cols[j]
                v = val[k]
                while v < n and (used >> v) & 1:
                    v += 1
                if v == n:
                    val[k] = 0
                    k -= 1
                    continue
                t[i * n + j] = v
                bit = 1 << v
                rows[i] |= bit
                cols[j] |= bit
                val[k] = v + 1
                k += 1
                val[k] = 0
    finally:
        free(t); free(rows); free(cols); free(val)
    return np.asarray(out, dtype=np.int32).reshape(len(out), n, n)


def canonical_form(const int[:, ::1] table, int e):
    cdef int n = table.shape[0]
    cdef int m = n - 1
    cdef int* rest = <int*> malloc(n * sizeof(int))
    cdef int* src = <int*> malloc(n * sizeof(int))
    cdef int* lab = <int*> malloc(n * sizeof(int))
    cdef int* best = <int*> malloc(n * n * sizeof(int))
    cdef int* cand = <int*> malloc(n * n * sizeof(int))
    cdef int i, j, k, v, pos
    cdef bint have = False, decided, worse
    try:
        k = 0
        for i in range(n):
            if i != e:
                rest[k] = i
                k += 1
        while True:
            src[0] = e
            for i in range(m):
                src[i + 1] = rest[i]
            for i in range(n):
                lab[src[i]] = i
            decided = not have
            worse = False
            pos = 0
            for i in range(n):
                for j in range(n):
                    v = lab[table[src[i], src[j]]]
                    if not decided:
                        if v > best[pos]:
                            worse = True
                            break
                        if v < best[pos]:
                            decided = True
                    cand[pos] = v
                    pos += 1
                if worse:
                    break
            if not worse and decided:
                memcpy(best, cand, n * n * sizeof(int))
                have = True
            if m == 0 or not next_perm(rest, m):
                break
        out = np.array([best[i] for i in range(n * n)], dtype=np.int32)
    finally:
        free(rest); free(src); free(lab); free(best); free(cand)
    return out


def isotopisms(const int[:, ::1] g, const int[:, ::1] h, int limit=-1):
    cdef int n = g.shape[0]
    cdef int eg = _identity(g)
    cdef int* A = <int*> malloc(n * sizeof(int))
    cdef int* B = <int*> malloc(n * sizeof(int))
    cdef int* C = <int*> malloc(n * sizeof(int))
    cdef int* row_inv = <int*> malloc(n * sizeof(int))
    cdef int* seen = <int*> malloc(n * sizeof(int))
    cdef int x, y, b0, ae
    cdef bint ok
    out = []
    try:
        for x in range(n):
            A[x] = x
        while True:
            ae = A[eg]
            for x in range(n):
                row_inv[h[ae, x]] = x
            for b0 in range(n):
                ok = True
                for x in range(n):
                    seen[x] = 0
                for x in range(n):
                    C[x] = h[A[x], b0]
                    if seen[C[x]]:
                        ok = False
                        break
                    seen[C[x]] = 1
                if not ok:
                    continue
                for y in range(n):
                    B[y] = row_inv[C[y]]
                for x in range(n):
                    for y in range(n):
                        if h[A[x], B[y]] != C[g[x, y]]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append([[A[i] for i in range(n)],
                                [B[i] for i in range(n)],
                                [C[i] for i in range(n)]])
            if 0 <= limit <= len(out):
                break
            if not next_perm(A, n):
                break
    finally:
        free(A); free(B); free(C); free(row_inv); free(seen)
    return np.asarray(out, dtype=np.int32).reshape(len(out), 3, n)


cdef bint _consistent(const int[:, ::1] g, const int[:, ::1] h, int* phi, int* used,
                      int x, int n) noexcept nogil:
    cdef int y, z, w, k, a, b
    for y in range(n):
        if phi[y] < 0:
            continue
        for k in range(2):
            if k == 0:
                a = x; b = y
            else:
                a = y; b = x
            z = g[a, b]
            w = h[phi[a], phi[b]]
            if phi[z] >= 0:
                if phi[z] != w:
                    return False
            elif used[w]:
                return False
    return True


def isomorphisms(const int[:, ::1] g, const int[:, ::1] h):
    cdef int n = g.shape[0]
    cdef int eg = _identity(g), eh = _identity(h)
    if eg < 0 or eh < 0:
        return np.zeros((0, n), dtype=np.int32)
    cdef int* phi = <int*> malloc(n * sizeof(int))
    cdef int* used = <int*> malloc(n * sizeof(int))
    cdef int* nxt = <int*> malloc((n + 1) * sizeof(int))
    cdef int x, v, a, b
    cdef bint ok
    out = []
    try:
        for x in range(n):
            phi[x] = -1
            used[x] = 0
        phi[eg] = eh
        used[eh] = 1
        # iterative DFS over x = 0..n-1, skipping the pre-assigned identity
        x = 0
        nxt[0] = 0
        while x >= 0:
            if x == eg:
                # identity is fixed: pass through forwards, unwind backwards
                if nxt[x] == 0:
                    nxt[x] = 1
                    x += 1
                    if x <= n:
                        nxt[x] = 0
                else:
                    x -= 1
                continue
            if x == n:
                ok = True
                for a in range(n):
                    for b in range(n):
                        if phi[g[a, b]] != h[phi[a], phi[b]]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append([phi[i] for i in range(n)])
                x -= 1
                continue
            if phi[x] >= 0:
                used[phi[x]] = 0
                phi[x] = -1
            v = nxt[x]
            while v < n:
                if not used[v]:
                    phi[x] = v
                    used[v] = 1
                    if _consistent(g, h, phi, used, x, n):
                        break
                    phi[x] = -1
                    used[v] = 0
                v += 1
            if v == n:
                x -= 1
                continue
            nxt[x] = v + 1
            x += 1
            if x < n:
                nxt[x] = 0
    finally:
        free(phi); free(used); free(nxt)
    return np.asarray(out, dtype=np.int32).reshape(len(out), n)


def weak_inverse_flags(const int[::1] j_rho, const int[::1] j_lambda):
    cdef int n = j_rho.shape[0]
    cdef int* a = <int*> malloc(n * sizeof(int))
    cdef int x
    cdef bint r, l
    perms, right, left = [], [], []
    try:
        for x in range(n):
            a[x] = x
        while True:
            r = True
            l = True
            for x in range(n):
                if j_rho[x] != a[j_rho[a[x]]]:
                    r = False
                    break
            for x in range(n):
                if j_lambda[x] != a[j_lambda[a[x]]]:
                    l = False
                    break
            perms.append([a[i] for i in range(n)])
            right.append(r)
            left.append(l)
            if not next_perm(a, n):
                break
    finally:
        free(a)
    return (
        np.asarray(perms, dtype=np.int32).reshape(len(perms), n),
        np.asarray(right, dtype=bool),
        np.asarray(left, dtype=bool),
    )
