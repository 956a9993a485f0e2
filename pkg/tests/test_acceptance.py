"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (also gathered into the
pytest terminal summary).  Checks are exact.  Expected values come either
from the bundled data or from the brute-force routines in ``_oracle``, which
share no code with the library.  Timing bounds cover the library calls; the
oracle side is excluded.

Run standalone with ``python3 tests/test_acceptance.py``.
"""

import time
from contextlib import contextmanager

import pytest

import _oracle
from wiploop import (
    IsotopismTriple,
    Permutation,
    WipCriterion,
    assets,
    autotopisms,
    cyclic_group,
    find_isomorphisms,
    is_aip,
    is_cip,
    is_m_inverse,
    is_wip,
    weak_inverse_sets,
)
from wiploop.catalog import build_catalog, enumerate_loops
from wiploop.isotopy import check_group
from wiploop.properties import commuting_closure_check
from wiploop.theorems import (
    aac_loop_isotopes,
    sweep_artzy,
    t_condition_sweep,
    verify_counterexample,
    verify_osborn_autotopism,
)

RESULTS = []


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException as exc:
        line = f"[FAIL] criterion {number:>2}: {title} -- {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"[PASS] criterion {number:>2}: {title}"
    RESULTS.append(line)
    print(line)


def timed(fn, repeat=1):
    """(result of the last call, best wall time in seconds)."""
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def _catalog():
    return [L for n in range(1, 6) for L in enumerate_loops(n)]


def _tab(L):
    return [list(r) for r in L.table]


def test_criterion_01_counterexample():
    with criterion(1, "bundled order-5 loop: commutative WIPL, (A,B,I) self-isotopism, A != B, isotope WIP"):
        verify_counterexample()  # warm caches (asset parsing)
        v, secs = timed(verify_counterexample, repeat=5)
        assert v.passed, v.violations
        assert v.instances_checked == 6
        assert dict(v.records) == {
            "validate": 1, "commutative": 1, "wip": 1, "self_isotopism": 1, "t_fails": 1, "isotope_is_wip": 1,
        }
        # oracle: the same chain by direct scans
        t = _oracle.rows("01234/13042/20413/34120/42301")
        a, b = (1, 3, 0, 4, 2), (2, 0, 4, 1, 3)
        assert all(t[x][y] == t[y][x] for x in range(5) for y in range(5))
        assert _oracle.wip(t)
        assert _oracle.is_isotopism(t, t, a, b, tuple(range(5)))
        assert a != b
        assert secs < 0.010, f"{secs * 1e3:.2f} ms"


def test_criterion_02_wip_criteria_agree():
    with criterion(2, "five WIP criteria agree on every reduced loop of orders 1-5 (1+1+1+4+56)"):
        counts = [len(_oracle.reduced_squares(n)) for n in range(1, 6)]
        assert counts == [1, 1, 1, 4, 56]
        total = sum(counts)  # 63

        def run():
            loops = _catalog()
            return loops, [{c: is_wip(L, c).holds for c in WipCriterion} for L in loops]

        (loops, verdicts), secs = timed(run)
        assert [sum(1 for L in loops if L.order == n) for n in range(1, 6)] == counts
        assert len(loops) == total
        for L, v in zip(loops, verdicts):
            assert len(set(v.values())) == 1, (L, v)
            assert v[WipCriterion.DEFINITIONAL] == _oracle.wip(_tab(L))
        assert secs < 1.0, f"{secs:.3f} s"


def test_criterion_03_m_inverse_correspondence():
    with criterion(3, "m=-1 <=> WIP and m=0 <=> CIP over the catalog"):
        def run():
            return [(is_m_inverse(L, -1).holds, is_wip(L).holds, is_m_inverse(L, 0).holds, is_cip(L).holds)
                    for L in _catalog()]

        rows, secs = timed(run)
        assert len(rows) == sum(len(_oracle.reduced_squares(n)) for n in range(1, 6))
        for m1, w, m0, c in rows:
            assert m1 == w and m0 == c
        assert secs < 1.0, f"{secs:.3f} s"


def test_criterion_04_implication_lattice():
    with criterion(4, "CIP => WIP and WIP and AIP => CIP over the catalog"):
        def run():
            return [(is_cip(L).holds, is_wip(L).holds, is_aip(L).holds, L) for L in _catalog()]

        rows, secs = timed(run)
        for c, w, a, L in rows:
            assert (not c) or w, L
            assert (not (w and a)) or c, L
            t = _tab(L)
            assert (c, w, a) == (_oracle.cip(t), _oracle.wip(t), _oracle.aip(t))
        assert secs < 1.0, f"{secs:.3f} s"


def test_criterion_05_weak_inverse_sets():
    with criterion(5, "S_rho = S_lambda and commuting closure on every catalog loop"):
        def run():
            loops = _catalog()
            return loops, [weak_inverse_sets(L) for L in loops], [commuting_closure_check(L) for L in loops]

        (loops, sets, closure), secs = timed(run)
        for L, s, c in zip(loops, sets, closure):
            assert s.s_rho == s.s_lambda == s.s_prime, L
            assert Permutation.identity(L.order) in s.s_prime
            assert c.holds, (L, c)
            t = _tab(L)
            assert [p.images for p in s.s_rho] == _oracle.weak_inverse_perms(t, "right")
            assert [p.images for p in s.s_lambda] == _oracle.weak_inverse_perms(t, "left")
        assert secs < 30.0, f"{secs:.3f} s"


def _order5_wipls():
    return [L for L in enumerate_loops(5) if is_wip(L).holds]


@pytest.fixture(scope="module")
def t_sweep():
    loops = _order5_wipls()
    out, secs = timed(lambda: t_condition_sweep(loops, workers=1, exhaustive=True))
    return loops, out, secs


def test_criterion_06_t_transfer(t_sweep):
    with criterion(6, "(A,A,C) T-isotopes of order-5 WIPLs over 120x120 pairs are WIPLs; corollaries hold"):
        loops, out, secs = t_sweep
        assert len(loops) == 8
        wt, tc = out["wip_transfer"], out["t_corollaries"]
        assert wt.passed, wt.violations[:3]
        assert tc.passed, tc.violations[:3]
        oracle_pairs = {}
        for L in loops:
            oracle_pairs[L] = _oracle.aac_t_pairs(_tab(L))
            for _, _, h in oracle_pairs[L]:
                assert _oracle.wip(h)
        n_pairs = sum(len(v) for v in oracle_pairs.values())
        assert tc.instances_checked == n_pairs == wt.records["sweep_t_pairs"] // 1
        assert wt.records["forward"] == wt.records["converse"] == n_pairs
        # the pruned candidate set equals the exhaustive one
        for L in loops:
            pruned = sorted((A.images, C.images) for A, C, _ in aac_loop_isotopes(L))
            full = sorted((A.images, C.images) for A, C, _ in aac_loop_isotopes(L, exhaustive=True))
            assert pruned == full
        assert secs < 180.0, f"{secs:.1f} s"


def test_criterion_07_t_isomorphy(t_sweep):
    with criterion(7, "every T-isotopic WIPL pair from criterion 6 is isomorphic"):
        loops, out, _ = t_sweep
        ti = out["t_isomorphy"]
        assert ti.instances_checked > 0
        assert ti.violations == [], [v.to_dict() for v in ti.violations[:3]]
        for L in loops:
            g = _tab(L)
            for _, _, h in _oracle.aac_t_pairs(g):
                assert _oracle.isomorphisms(g, h)


def test_criterion_08_osborn_instance():
    with criterion(8, "a=2, b=1, J_rho L_b J_lambda = B, J_lambda R_a J_rho = A, autotopisms on the bundled loop"):
        G = assets.table1()
        A, B = assets.paper_a(), assets.paper_b()
        t = IsotopismTriple(A, B, Permutation.identity(5))

        def run():
            return verify_osborn_autotopism(G, G, t, 1), verify_osborn_autotopism(G, G, t, 3)

        run()
        (v1, v3), secs = timed(run, repeat=5)
        assert v1.passed and v1.records["v1_member"] == 1 and v1.records["c_isomorphism"] == 1
        assert v3.passed and v3.records["v3_member"] == 1

        # oracle side, all from the raw table
        tab = _oracle.rows("01234/13042/20413/34120/42301")
        a_img, b_img = tuple(A.images), tuple(B.images)
        e = _oracle.identity_of(tab)
        a, b = _oracle.inverse(a_img)[e], _oracle.inverse(b_img)[e]
        assert (a, b) == (2, 1)
        jr, jl = tuple(_oracle.right_inv(tab)), tuple(_oracle.left_inv(tab))
        L_b = tuple(tab[b])
        R_a = tuple(tab[y][a] for y in range(5))
        assert _oracle.compose(jr, L_b, jl) == b_img
        assert _oracle.compose(jl, R_a, jr) == a_img
        ident = tuple(range(5))
        assert _oracle.is_isotopism(tab, tab, b_img, a_img, ident)
        L_1 = tuple(tab[1])
        R_2 = tuple(tab[y][2] for y in range(5))
        assert _oracle.is_isotopism(tab, tab, L_1, R_2, ident)
        assert _oracle.compose(R_2, L_1) == ident
        assert tab[1][2] == e
        # and the library agrees on the same objects
        assert (G.j_rho * G.L(1) * G.j_lambda).images == b_img
        assert (G.j_lambda * G.R(2) * G.j_rho).images == a_img
        assert secs < 0.010, f"{secs * 1e3:.2f} ms"


def test_criterion_09_artzy_sweep():
    with criterion(9, "every principal isotope of every CIP loop of order <= 6 is isomorphic to its parent"):
        v, secs = timed(lambda: sweep_artzy(range(1, 7), workers=1))
        assert secs < 60.0, f"{secs:.1f} s"
        assert v.instances_checked == sum(e.order ** 2 for n in range(1, 7) for e in build_catalog(n, "cip"))
        assert v.violations == [], (
            f"{len(v.violations)} principal isotopes not isomorphic to their parent; first: {v.violations[0].to_dict()}"
        )


def test_criterion_10_search_sanity():
    with criterion(10, "|AUT(Z_5)| = 100, a group; |Iso(Z_5, Z_5)| = 4"):
        z5 = cyclic_group(5)
        (aut, isos), secs = timed(lambda: (autotopisms(z5), find_isomorphisms(z5, z5)))
        g = _tab(z5)
        oracle_aut = _oracle.isotopisms_double_loop(g, g)
        assert len(oracle_aut) == 100
        assert [t.key() for t in aut] == [a + b + c for a, b, c in oracle_aut]
        assert check_group(aut) is None
        members = set(aut)
        for s in aut:
            assert s.inverse() in members
            for u in aut:
                assert s * u in members
        assert len(isos) == 4
        assert [p.images for p in isos] == _oracle.isomorphisms(g, g)
        assert secs < 5.0, f"{secs:.3f} s"


def test_criterion_11_enumeration_counts():
    with criterion(11, "4 loops of order 4, 56 of order 5, 6 isomorphism classes at order 5"):
        (l4, l5, classes), secs = timed(lambda: (list(enumerate_loops(4)), list(enumerate_loops(5)), build_catalog(5)))
        assert len(l4) == len(_oracle.reduced_squares(4)) == 4
        o5 = _oracle.reduced_squares(5)
        assert len(l5) == len(o5) == 56
        assert {L.table for L in l5} == set(o5)
        reps = []
        for t in o5:
            t = [list(r) for r in t]
            if not any(_oracle.isomorphisms(t, r) for r in reps):
                reps.append(t)
        assert len(classes) == len(reps) == 6
        assert secs < 5.0, f"{secs:.3f} s"


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
