"""Inverse-property predicates and weak inverse permutations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import DegreeMismatch, OrderTooLarge
from .loop import FiniteLoop, PropertyReport
from .perm import Permutation

DEFAULT_WIP_SET_GUARD = 6


class WipCriterion(enum.Enum):
    DEFINITIONAL = "definitional"
    RIGHT_IDENTITY = "right_identity"
    LEFT_IDENTITY = "left_identity"
    OPERATOR_RHO = "operator_rho"
    OPERATOR_LAMBDA = "operator_lambda"

    @classmethod
    def parse(cls, tag: str) -> "WipCriterion":
        key = tag.strip().upper().replace("-", "_")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown WIP criterion {tag!r}; choose from {[c.name for c in cls]}") from None


def _wip_definitional(L: FiniteLoop) -> Optional[tuple]:
    t, e, n = L.table, L.identity, L.order
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] == e and t[x][t[y][z]] != e:
                    return (x, y, z)
    return None


def _wip_right_identity(L: FiniteLoop) -> Optional[tuple]:
    # y (xy)^rho = x^rho
    t, r, n = L.table, L.j_rho, L.order
    for x in range(n):
        for y in range(n):
            if t[y][r(t[x][y])] != r(x):
                return (x, y)
    return None


def _wip_left_identity(L: FiniteLoop) -> Optional[tuple]:
    # (xy)^lambda x = y^lambda
    t, l, n = L.table, L.j_lambda, L.order
    for x in range(n):
        for y in range(n):
            if t[l(t[x][y])][x] != l(y):
                return (x, y)
    return None


def _first_difference(p: Permutation, q: Permutation) -> int:
    return next(x for x in range(len(p)) if p(x) != q(x))


def _wip_operator_rho(L: FiniteLoop) -> Optional[tuple]:
    # R_y J_rho L_y = J_rho for every y
    jr = L.j_rho
    for y in L.elements:
        lhs = L.R(y) * jr * L.L(y)
        if lhs != jr:
            return (y, _first_difference(lhs, jr))
    return None


def _wip_operator_lambda(L: FiniteLoop) -> Optional[tuple]:
    # L_x J_lambda R_x = J_lambda for every x
    jl = L.j_lambda
    for x in L.elements:
        lhs = L.L(x) * jl * L.R(x)
        if lhs != jl:
            return (x, _first_difference(lhs, jl))
    return None


_WIP_SCANS = {
    WipCriterion.DEFINITIONAL: _wip_definitional,
    WipCriterion.RIGHT_IDENTITY: _wip_right_identity,
    WipCriterion.LEFT_IDENTITY: _wip_left_identity,
    WipCriterion.OPERATOR_RHO: _wip_operator_rho,
    WipCriterion.OPERATOR_LAMBDA: _wip_operator_lambda,
}


def is_wip(L: FiniteLoop, criterion: WipCriterion = WipCriterion.DEFINITIONAL) -> PropertyReport:
    """Weak inverse property, decided by the chosen (equivalent) criterion.

    Witnesses: ``(x, y, z)`` for DEFINITIONAL, ``(x, y)`` for the element
    identities, and ``(y, x)`` / ``(x, y)`` for the operator forms, where the
    second entry is the first point at which the composed map differs.
    """
    criterion = WipCriterion.parse(criterion) if isinstance(criterion, str) else criterion
    w = _WIP_SCANS[criterion](L)
    name = f"WIP[{criterion.name}]"
    if w is None:
        return PropertyReport.passed(name, criterion=criterion.name)
    return PropertyReport.failed(name, w, criterion=criterion.name)


def wip_all_criteria(L: FiniteLoop) -> dict[WipCriterion, PropertyReport]:
    return {c: is_wip(L, c) for c in WipCriterion}


def is_cip(L: FiniteLoop) -> PropertyReport:
    t, r, n = L.table, L.j_rho, L.order
    for x in range(n):
        for y in range(n):
            if t[t[x][y]][r(x)] != y:
                return PropertyReport.failed("CIP", (x, y))
    return PropertyReport.passed("CIP")


def is_aip(L: FiniteLoop) -> PropertyReport:
    """``(xy)^rho = x^rho y^lambda``; the dual ``(xy)^lambda = x^lambda y^rho`` is in ``flags``."""
    t, r, l, n = L.table, L.j_rho, L.j_lambda, L.order
    rho_w = lam_w = None
    for x in range(n):
        for y in range(n):
            if rho_w is None and r(t[x][y]) != t[r(x)][l(y)]:
                rho_w = (x, y)
            if lam_w is None and l(t[x][y]) != t[l(x)][r(y)]:
                lam_w = (x, y)
    flags = {"rho_form": rho_w is None, "lambda_form": lam_w is None}
    if rho_w is None:
        return PropertyReport.passed("AIP", **flags)
    return PropertyReport.failed("AIP", rho_w, **flags)


def is_m_inverse(L: FiniteLoop, m: int) -> PropertyReport:
    """``(xy)J^m . x J^(m+1) = y J^m`` with ``J = J_rho``; negative powers invert."""
    t, n = L.table, L.order
    jm = L.j_rho ** m
    jm1 = L.j_rho ** (m + 1)
    for x in range(n):
        for y in range(n):
            if t[jm(t[x][y])][jm1(x)] != jm(y):
                return PropertyReport.failed(f"m-inverse[{m}]", (x, y), m=m)
    return PropertyReport.passed(f"m-inverse[{m}]", m=m)


def _check_degree(L: FiniteLoop, alpha: Permutation) -> None:
    if len(alpha) != L.order:
        raise DegreeMismatch(f"permutation of degree {len(alpha)} for a loop of order {L.order}")


def is_weak_inverse_permutation(L: FiniteLoop, alpha: Permutation) -> PropertyReport:
    """Both ``x^rho = [(x alpha)^rho] alpha`` and the lambda form, for all ``x``."""
    _check_degree(L, alpha)
    r, l = L.j_rho, L.j_lambda
    right_w = next((x for x in L.elements if alpha(r(alpha(x))) != r(x)), None)
    left_w = next((x for x in L.elements if alpha(l(alpha(x))) != l(x)), None)
    flags = {"right": right_w is None, "left": left_w is None}
    fails = [w for w in (right_w, left_w) if w is not None]
    if not fails:
        return PropertyReport.passed("weak-inverse-permutation", **flags)
    return PropertyReport.failed("weak-inverse-permutation", (min(fails),), **flags)


@dataclass(frozen=True)
class WeakInverseSets:
    s_rho: tuple[Permutation, ...]
    s_lambda: tuple[Permutation, ...]
    s_prime: tuple[Permutation, ...]

    @property
    def consistent(self) -> bool:
        return self.s_rho == self.s_lambda == self.s_prime


def weak_inverse_sets(L: FiniteLoop, max_order: int = DEFAULT_WIP_SET_GUARD) -> WeakInverseSets:
    """Scan all ``n!`` permutations with separate right-only and left-only tests."""
    if L.order > max_order:
        raise OrderTooLarge(f"order {L.order} exceeds the weak-inverse-set guard {max_order}")
    jr = np.asarray(L.j_rho.images, dtype=np.int32)
    jl = np.asarray(L.j_lambda.images, dtype=np.int32)
    perms, right, left = kernels.weak_inverse_flags(jr, jl)
    rows = [Permutation(p) for p in perms.tolist()]
    return WeakInverseSets(
        s_rho=tuple(p for p, f in zip(rows, right) if f),
        s_lambda=tuple(p for p, f in zip(rows, left) if f),
        s_prime=tuple(p for p, a, b in zip(rows, right, left) if a and b),
    )


def commuting_closure_check(L: FiniteLoop, max_order: int = DEFAULT_WIP_SET_GUARD) -> PropertyReport:
    """Commuting weak inverse permutations are closed under product and inverse."""
    s = weak_inverse_sets(L, max_order).s_prime
    members = set(s)
    ident = Permutation.identity(L.order)
    if ident not in members:
        return PropertyReport.failed("commuting-closure", (ident.images,), "identity missing")
    pairs = 0
    for a in s:
        if a.inverse() not in members:
            return PropertyReport.failed("commuting-closure", (a.images,), "inverse missing")
        for b in s:
            if a.commutes_with(b):
                pairs += 1
                if a * b not in members:
                    return PropertyReport.failed("commuting-closure", (a.images, b.images), "product missing")
    return PropertyReport.passed("commuting-closure", size=len(s), commuting_pairs=pairs)


def involution_preserving_check(L: FiniteLoop, alpha: Permutation) -> PropertyReport:
    """An involution preserving right (left) inverses is a weak right (left) inverse permutation.

    Vacuous when ``alpha`` is not an involution preserving either inverse
    map; ``flags['branch']`` says which case applied.
    """
    _check_degree(L, alpha)
    r, l = L.j_rho, L.j_lambda
    involution = (alpha * alpha).is_identity()
    keeps_rho = all(alpha(r(x)) == r(alpha(x)) for x in L.elements)
    keeps_lambda = all(alpha(l(x)) == l(alpha(x)) for x in L.elements)
    wip_report = is_weak_inverse_permutation(L, alpha)
    ante_r = involution and keeps_rho
    ante_l = involution and keeps_lambda
    flags = {
        "involution": involution,
        "antecedent_right": ante_r,
        "antecedent_left": ante_l,
        "weak_right": wip_report.flags["right"],
        "weak_left": wip_report.flags["left"],
        "branch": "checked" if (ante_r or ante_l) else "vacuous",
    }
    if ante_r and not wip_report.flags["right"]:
        return PropertyReport.failed("involution-preserving", (0,), "right form fails", **flags)
    if ante_l and not wip_report.flags["left"]:
        return PropertyReport.failed("involution-preserving", (1,), "left form fails", **flags)
    return PropertyReport.passed("involution-preserving", **flags)


FLAG_BIT_ORDER = ("commutative", "associative", "exponent2", "wip", "cip", "aip", "m_inverse_1")


@dataclass(frozen=True)
class LoopFlags:
    commutative: bool
    associative: bool
    exponent2: bool
    wip: bool
    cip: bool
    aip: bool
    aip_dual: bool
    m_inverse_minus1: bool
    m_inverse_0: bool
    m_inverse_1: bool

    def bits(self) -> str:
        """Seven-character bit string in ``FLAG_BIT_ORDER``."""
        return "".join("1" if getattr(self, name) else "0" for name in FLAG_BIT_ORDER)

    def to_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


class CriterionDisagreement(RuntimeError):
    pass


def classify(L: FiniteLoop) -> LoopFlags:
    verdicts = {c: r.holds for c, r in wip_all_criteria(L).items()}
    if len(set(verdicts.values())) != 1:
        raise CriterionDisagreement(f"WIP criteria disagree on {L!r}: {verdicts}")
    aip = is_aip(L)
    return LoopFlags(
        commutative=L.is_commutative(),
        associative=L.is_associative(),
        exponent2=L.has_exponent_two(),
        wip=verdicts[WipCriterion.DEFINITIONAL],
        cip=is_cip(L).holds,
        aip=aip.holds,
        aip_dual=aip.flags["lambda_form"],
        m_inverse_minus1=is_m_inverse(L, -1).holds,
        m_inverse_0=is_m_inverse(L, 0).holds,
        m_inverse_1=is_m_inverse(L, 1).holds,
    )
