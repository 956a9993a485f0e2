"""Isotopisms between loops: checks, construction, T-condition, and searches.

A triple ``(A, B, C)`` is an isotopism ``G -> H`` when
``A(x) o B(y) == C(x * y)`` for all ``x, y`` in ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import DegreeMismatch, NoIdentity, NotAnIsotopism, NotBijective, OrderTooLarge
from .loop import FiniteLoop, PropertyReport
from .perm import Permutation

DEFAULT_SEARCH_GUARD = 7
DEFAULT_AUT_GUARD = 6


@dataclass(frozen=True, order=True)
class IsotopismTriple:
    a: Permutation
    b: Permutation
    c: Permutation

    def __post_init__(self):
        if not len(self.a) == len(self.b) == len(self.c):
            raise DegreeMismatch(f"triple degrees differ: {len(self.a)}, {len(self.b)}, {len(self.c)}")

    @classmethod
    def identity(cls, n: int) -> "IsotopismTriple":
        i = Permutation.identity(n)
        return cls(i, i, i)

    @classmethod
    def isomorphism(cls, phi: Permutation) -> "IsotopismTriple":
        return cls(phi, phi, phi)

    @classmethod
    def from_images(cls, a, b, c) -> "IsotopismTriple":
        return cls(Permutation(a), Permutation(b), Permutation(c))

    @property
    def degree(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __mul__(self, other: "IsotopismTriple") -> "IsotopismTriple":
        """Componentwise product, ``self`` applied first."""
        return IsotopismTriple(self.a * other.a, self.b * other.b, self.c * other.c)

    def inverse(self) -> "IsotopismTriple":
        return IsotopismTriple(self.a.inverse(), self.b.inverse(), self.c.inverse())

    def key(self) -> tuple:
        return self.a.images + self.b.images + self.c.images

    def to_lists(self) -> list[list[int]]:
        return [list(self.a.images), list(self.b.images), list(self.c.images)]


@dataclass(frozen=True)
class TConditionReport:
    t1: bool
    t2: bool
    t3: bool

    @property
    def t(self) -> bool:
        return self.t1 and (self.t2 or self.t3)

    def to_dict(self) -> dict[str, bool]:
        return {"t1": self.t1, "t2": self.t2, "t3": self.t3, "t": self.t}


def _same_order(G: FiniteLoop, H: FiniteLoop, t: Optional[IsotopismTriple] = None) -> None:
    if G.order != H.order:
        raise DegreeMismatch(f"loop orders differ: {G.order} vs {H.order}")
    if t is not None and t.degree != G.order:
        raise DegreeMismatch(f"triple of degree {t.degree} for loops of order {G.order}")


def check_isotopism(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> PropertyReport:
    _same_order(G, H, t)
    a, b, c = t
    gt, ht = G.table, H.table
    for x in G.elements:
        hx = ht[a(x)]
        for y in G.elements:
            if hx[b(y)] != c(gt[x][y]):
                return PropertyReport.failed("isotopism", (x, y))
    return PropertyReport.passed("isotopism")


def derive_third(G: FiniteLoop, H: FiniteLoop, a: Permutation, b: Permutation) -> Permutation:
    """The only ``C`` that can complete ``(a, b, C)``: ``x -> a(x) o b(e)``."""
    _same_order(G, H)
    if len(a) != G.order or len(b) != G.order:
        raise DegreeMismatch("component degree does not match loop order")
    be = b(G.identity)
    try:
        return Permutation(H.mul(a(x), be) for x in G.elements)
    except NotBijective as exc:  # pragma: no cover - a right translation is always bijective
        raise NotBijective(f"derived third component is not a bijection: {exc}") from exc


def _array(p: Permutation) -> np.ndarray:
    return np.asarray(p.images, dtype=np.int32)


def apply_isotopism(G: FiniteLoop, t: IsotopismTriple) -> FiniteLoop:
    """The isotope ``u o v = C(A^-1(u) * B^-1(v))``.

    Raises NoIdentity (carrying the quasigroup table) when the isotope has
    no two-sided identity.
    """
    if t.degree != G.order:
        raise DegreeMismatch(f"triple of degree {t.degree} for a loop of order {G.order}")
    arr = kernels.isotope(G.array, _array(t.a.inverse()), _array(t.b.inverse()), _array(t.c))
    e = kernels.find_identity(arr)
    table = tuple(tuple(r) for r in arr.tolist())
    if e < 0:
        raise NoIdentity("isotope is a quasigroup without identity", table)
    return FiniteLoop(table, e)


def principal_isotope(G: FiniteLoop, f: int, g: int) -> FiniteLoop:
    """Isotope under ``(R_g, L_f, I)``; its identity is ``f * g``."""
    return apply_isotopism(G, IsotopismTriple(G.R(g), G.L(f), Permutation.identity(G.order)))


def check_t_condition(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> TConditionReport:
    report = check_isotopism(G, H, t)
    if not report.holds:
        raise NotAnIsotopism(f"triple fails the isotopism identity at {report.witness}")
    a, b, c = t
    ai, bi, ci = a.inverse(), b.inverse(), c.inverse()
    jr, jl = G.j_rho, G.j_lambda
    jr_h, jl_h = H.j_rho, H.j_lambda
    t2 = jr_h == ci * jr * b == ai * jr * c
    t3 = jl_h == ci * jl * a == bi * jl * c
    return TConditionReport(t1=a == b, t2=t2, t3=t3)


def _guard(n: int, max_order: int, what: str) -> None:
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the {what} guard {max_order}")


def find_isotopisms(
    G: FiniteLoop,
    H: FiniteLoop,
    limit: Optional[int] = None,
    max_order: int = DEFAULT_SEARCH_GUARD,
) -> list[IsotopismTriple]:
    """All isotopisms ``G -> H`` sorted by ``(A, B, C)`` images, or the first ``limit``."""
    _same_order(G, H)
    _guard(G.order, max_order, "isotopism search")
    rows = kernels.isotopisms(G.array, H.array, -1 if limit is None else int(limit))
    found = sorted(IsotopismTriple.from_images(*r) for r in rows.tolist())
    return found if limit is None else found[:limit]


def find_isomorphisms(G: FiniteLoop, H: FiniteLoop, max_order: int = DEFAULT_SEARCH_GUARD + 1) -> list[Permutation]:
    if G.order != H.order:
        return []
    _guard(G.order, max_order, "isomorphism search")
    return [Permutation(r) for r in kernels.isomorphisms(G.array, H.array).tolist()]


def is_isomorphism(G: FiniteLoop, H: FiniteLoop, phi: Permutation) -> bool:
    if G.order != H.order or len(phi) != G.order:
        return False
    return check_isotopism(G, H, IsotopismTriple.isomorphism(phi)).holds


def check_group(triples: list[IsotopismTriple]) -> Optional[str]:
    """``None`` if ``triples`` is closed under product and inverse and has the identity."""
    members = set(triples)
    if not triples:
        return "empty"
    if IsotopismTriple.identity(triples[0].degree) not in members:
        return "identity missing"
    for s in triples:
        if s.inverse() not in members:
            return f"inverse of {s.to_lists()} missing"
        for u in triples:
            if s * u not in members:
                return f"product {s.to_lists()} * {u.to_lists()} missing"
    return None


def autotopisms(G: FiniteLoop, max_order: int = DEFAULT_AUT_GUARD) -> list[IsotopismTriple]:
    """The autotopism group of ``G``, sorted; group axioms are verified before return."""
    _guard(G.order, max_order, "autotopism")
    found = find_isotopisms(G, G, max_order=max_order)
    problem = check_group(found)
    if problem is not None:
        raise RuntimeError(f"autotopisms of {G!r} do not form a group: {problem}")
    return found
