"""Brute-force reference computations for the tests.

Nothing here imports wiploop; tables are plain nested lists and permutations
plain tuples, so a bug in the library cannot leak into its own oracle.
"""

from itertools import permutations, product


def rows(spec):
    """'01234/13042/...' -> nested lists."""
    return [[int(c) for c in r] for r in spec.split("/")]


def identity_of(t):
    n = len(t)
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            return e
    return None


def reduced_squares(n):
    """Reduced Latin squares, filled column by column (the library fills by rows)."""
    grid = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[0][i] = grid[i][0] = i
    cells = [(r, c) for c in range(1, n) for r in range(1, n)]
    out = []

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(r) for r in grid))
            return
        r, c = cells[k]
        for v in range(n - 1, -1, -1):
            if v in grid[r] or any(grid[i][c] == v for i in range(n)):
                continue
            grid[r][c] = v
            rec(k + 1)
            grid[r][c] = None

    rec(0)
    return sorted(out)


def right_inv(t):
    e = identity_of(t)
    return [next(y for y in range(len(t)) if t[x][y] == e) for x in range(len(t))]


def left_inv(t):
    e = identity_of(t)
    return [next(y for y in range(len(t)) if t[y][x] == e) for x in range(len(t))]


def wip(t):
    n, e = len(t), identity_of(t)
    return all(t[x][t[y][z]] == e for x, y, z in product(range(n), repeat=3) if t[t[x][y]][z] == e)


def wip_first_witness(t):
    n, e = len(t), identity_of(t)
    for x, y, z in product(range(n), repeat=3):
        if t[t[x][y]][z] == e and t[x][t[y][z]] != e:
            return (x, y, z)
    return None


def cip(t):
    r, n = right_inv(t), len(t)
    return all(t[t[x][y]][r[x]] == y for x in range(n) for y in range(n))


def aip(t):
    r, l, n = right_inv(t), left_inv(t), len(t)
    return all(r[t[x][y]] == t[r[x]][l[y]] for x in range(n) for y in range(n))


def is_isotopism(g, h, a, b, c):
    n = len(g)
    return all(h[a[x]][b[y]] == c[g[x][y]] for x in range(n) for y in range(n))


def isotopisms_triple_loop(g, h):
    """Every (A, B, C) in S_n^3 that works; (n!)^3 candidates."""
    P = list(permutations(range(len(g))))
    return sorted((a, b, c) for a in P for b in P for c in P if is_isotopism(g, h, a, b, c))


def isotopisms_double_loop(g, h):
    """Every (A, B) pair with C derived from y = e; no pruning."""
    n, e = len(g), identity_of(g)
    out = []
    for a in permutations(range(n)):
        for b in permutations(range(n)):
            c = tuple(h[a[x]][b[e]] for x in range(n))
            if len(set(c)) == n and is_isotopism(g, h, a, b, c):
                out.append((a, b, c))
    return sorted(out)


def isomorphisms(g, h):
    n = len(g)
    return sorted(p for p in permutations(range(n)) if all(p[g[x][y]] == h[p[x]][p[y]] for x in range(n) for y in range(n)))


def compose(*ps):
    """Right action: apply ps[0] first."""
    out = list(range(len(ps[0])))
    for p in ps:
        out = [p[i] for i in out]
    return tuple(out)


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def principal(t, f, g):
    """u o v = (u R_g^-1)(v L_f^-1)."""
    n = len(t)
    rg_inv = inverse(tuple(t[y][g] for y in range(n)))
    lf_inv = inverse(tuple(t[f]))
    return [[t[rg_inv[u]][lf_inv[v]] for v in range(n)] for u in range(n)]


def weak_inverse_perms(t, side):
    j = right_inv(t) if side == "right" else left_inv(t)
    n = len(t)
    return sorted(a for a in permutations(range(n)) if all(a[j[a[x]]] == j[x] for x in range(n)))


def aac_t_pairs(g):
    """(A, C) over S_n x S_n with the (A, A, C) isotope a loop satisfying T2 or T3."""
    n = len(g)
    jr, jl = right_inv(g), left_inv(g)
    out = []
    P = list(permutations(range(n)))
    for a in P:
        ai = inverse(a)
        for c in P:
            h = [[c[g[ai[u]][ai[v]]] for v in range(n)] for u in range(n)]
            if identity_of(h) is None:
                continue
            ci = inverse(c)
            hr, hl = tuple(right_inv(h)), tuple(left_inv(h))
            t2 = hr == compose(ci, jr, a) == compose(ai, jr, c)
            t3 = hl == compose(ci, jl, a) == compose(ai, jl, c)
            if t2 or t3:
                out.append((a, c, h))
    return out
