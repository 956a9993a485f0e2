import pytest

import _oracle
from wiploop import (
    DegreeMismatch,
    OrderTooLarge,
    Permutation,
    WipCriterion,
    classify,
    commuting_closure_check,
    involution_preserving_check,
    is_aip,
    is_cip,
    is_m_inverse,
    is_weak_inverse_permutation,
    is_wip,
    weak_inverse_sets,
)
from wiploop.catalog import enumerate_loops
from wiploop.properties import FLAG_BIT_ORDER

from conftest import NON_WIP5, NON_WIP5_WITNESS

CATALOG = [L for n in range(1, 6) for L in enumerate_loops(n)]


class TestWip:
    @pytest.mark.parametrize("crit", list(WipCriterion))
    def test_table1_every_criterion(self, t1, crit):
        rep = is_wip(t1, crit)
        assert rep.holds and rep.witness is None
        assert rep.property == f"WIP[{crit.name}]"

    def test_z3(self, z):
        assert is_wip(z[3])

    def test_smallest_failure_fixture(self, non_wip5):
        first_bad = next(t for t in _oracle.reduced_squares(5) if not _oracle.wip(t))
        assert _oracle.rows(NON_WIP5) == [list(r) for r in first_bad]
        rep = is_wip(non_wip5)
        assert not rep.holds
        assert rep.witness == NON_WIP5_WITNESS == _oracle.wip_first_witness(first_bad)
        for crit in WipCriterion:
            assert not is_wip(non_wip5, crit).holds

    def test_parse_tags(self):
        assert WipCriterion.parse("operator-rho") is WipCriterion.OPERATOR_RHO
        assert is_wip(_loop1(), "right_identity").holds
        with pytest.raises(ValueError):
            WipCriterion.parse("nope")

    @pytest.mark.parametrize("L", CATALOG, ids=repr)
    def test_matches_oracle(self, L):
        t = [list(r) for r in L.table]
        assert is_wip(L).holds == _oracle.wip(t)
        assert is_cip(L).holds == _oracle.cip(t)
        assert is_aip(L).holds == _oracle.aip(t)


def _loop1():
    from wiploop import validate_loop

    return validate_loop([[0]])


class TestCipAip:
    def test_table1(self, t1):
        assert is_cip(t1).holds
        assert is_aip(t1).holds
        assert is_aip(t1).flags == {"rho_form": True, "lambda_form": True}

    def test_abelian_groups(self, z):
        for n in range(1, 7):
            assert is_cip(z[n]).holds and is_aip(z[n]).holds

    def test_non_wip_fixture(self, non_wip5):
        assert not is_cip(non_wip5).holds
        rep = is_aip(non_wip5)
        assert rep.holds == _oracle.aip(_oracle.rows(NON_WIP5))
        assert not rep.holds and rep.witness == (0, 2)
        assert rep.flags == {"rho_form": False, "lambda_form": False}


class TestMInverse:
    def test_table1(self, t1):
        assert is_m_inverse(t1, 0).holds == is_cip(t1).holds == True  # noqa: E712
        assert is_m_inverse(t1, -1).holds == is_wip(t1).holds == True  # noqa: E712
        assert is_m_inverse(t1, 3).flags["m"] == 3

    @pytest.mark.parametrize("m", range(-2, 3))
    def test_z3(self, z, m):
        assert is_m_inverse(z[3], m).holds

    def test_non_wip_fixture(self, non_wip5):
        assert not is_m_inverse(non_wip5, -1).holds
        assert not is_m_inverse(non_wip5, 0).holds


class TestWeakInversePermutations:
    def test_identity(self, t1, non_wip5):
        for L in (t1, non_wip5):
            assert is_weak_inverse_permutation(L, Permutation.identity(5)).holds

    def test_j_rho(self, t1):
        assert is_weak_inverse_permutation(t1, t1.j_rho).holds

    def test_left_translation(self, t1):
        # Table 1 is the cyclic group of order 5 in disguise, where
        # 1 (1x)^-1 = x^-1, so L_1 does satisfy both forms.
        rep = is_weak_inverse_permutation(t1, t1.L(1))
        t = _oracle.rows("01234/13042/20413/34120/42301")
        l1 = tuple(t[1])
        assert rep.holds == (l1 in _oracle.weak_inverse_perms(t, "right")) == True  # noqa: E712
        assert rep.flags == {"right": True, "left": True}

    def test_failure_witness(self, nonassoc_wip5):
        rep = is_weak_inverse_permutation(nonassoc_wip5, nonassoc_wip5.L(1))
        assert not rep.holds
        assert rep.witness is not None

    def test_degree(self, t1):
        with pytest.raises(DegreeMismatch):
            is_weak_inverse_permutation(t1, Permutation.identity(4))
        with pytest.raises(DegreeMismatch):
            involution_preserving_check(t1, Permutation.identity(4))

    def test_sets_small(self, z):
        s = weak_inverse_sets(z[1])
        assert s.s_rho == s.s_lambda == s.s_prime == (Permutation.identity(1),)
        s = weak_inverse_sets(z[2])
        assert len(s.s_prime) == 2 and s.consistent

    def test_sets_table1(self, t1):
        s = weak_inverse_sets(t1)
        assert s.consistent
        assert Permutation.identity(5) in s.s_prime and t1.j_rho in s.s_prime
        t = [list(r) for r in t1.table]
        assert [p.images for p in s.s_rho] == _oracle.weak_inverse_perms(t, "right")
        assert [p.images for p in s.s_lambda] == _oracle.weak_inverse_perms(t, "left")
        assert list(s.s_prime) == sorted(s.s_prime)

    def test_guard(self, z):
        with pytest.raises(OrderTooLarge):
            weak_inverse_sets(z[6], max_order=5)
        with pytest.raises(OrderTooLarge):
            commuting_closure_check(z[6], max_order=5)

    def test_commuting_closure(self, z, t1):
        for L in (z[1], z[3], t1):
            rep = commuting_closure_check(L)
            assert rep.holds, rep

    def test_involution_preserving(self, t1):
        rep = involution_preserving_check(t1, Permutation.from_cycles(5, (1, 2), (3, 4)))
        assert rep.holds and rep.flags["branch"] == "checked"
        rep = involution_preserving_check(t1, Permutation.identity(5))
        assert rep.holds and rep.flags["antecedent_right"]
        rep = involution_preserving_check(t1, t1.L(1))
        assert rep.holds and rep.flags["branch"] == "vacuous" and not rep.flags["involution"]

    @pytest.mark.parametrize("L", CATALOG, ids=repr)
    def test_involutions_over_catalog(self, L):
        from wiploop import all_permutations

        for a in all_permutations(L.order):
            if (a * a).is_identity():
                assert involution_preserving_check(L, a).holds


class TestClassify:
    def test_table1(self, t1):
        f = classify(t1)
        assert f.commutative and f.wip and f.cip
        # Table 1 turns out to be a group (isomorphic to Z_5)
        assert f.associative
        assert f.bits() == "1101111"

    def test_z2(self, z):
        f = classify(z[2])
        assert all(f.to_dict().values())
        assert f.bits() == "1111111"

    def test_non_wip_fixture(self, non_wip5):
        assert not classify(non_wip5).wip

    def test_bit_order(self):
        assert FLAG_BIT_ORDER == ("commutative", "associative", "exponent2", "wip", "cip", "aip", "m_inverse_1")
