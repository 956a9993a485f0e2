"""Finite loops as Cayley tables.

A :class:`FiniteLoop` is built only through :func:`validate_loop`, which
checks the Latin property and locates the two-sided identity.  Instances are
immutable; derived maps (translations, inverse maps) are cached on first use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Mapping, Optional, Sequence

import numpy as np

from . import kernels
from .errors import BadEntry, DegreeMismatch, NoIdentity, NotLatin, NotSquare
from .perm import Permutation


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a predicate.

    ``witness`` is the first counterexample in row-major scan order and is
    present exactly when ``holds`` is false.  ``flags`` carries auxiliary
    verdicts (e.g. the dual AIP form, or the right/left weak-inverse tests).
    """

    property: str
    holds: bool
    witness: Optional[tuple] = None
    detail: Optional[str] = None
    flags: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError(f"{self.property}: holds={self.holds} but witness={self.witness!r}")

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
            "flags": dict(self.flags),
        }

    @classmethod
    def passed(cls, prop: str, detail: Optional[str] = None, **flags) -> "PropertyReport":
        return cls(prop, True, None, detail, flags)

    @classmethod
    def failed(cls, prop: str, witness: tuple, detail: Optional[str] = None, **flags) -> "PropertyReport":
        return cls(prop, False, tuple(witness), detail, flags)


@dataclass(frozen=True, eq=False)
class FiniteLoop:
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.table)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteLoop):
            return self.table == other.table
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        rows = ",".join("".join(map(str, r)) if self.order <= 10 else str(list(r)) for r in self.table)
        return f"FiniteLoop(n={self.order}, e={self.identity}, rows={rows})"

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.ascontiguousarray(self.table, dtype=np.int32).reshape(self.order, self.order)
        arr.setflags(write=False)
        return arr

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def _left_div(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for row in self.table:
            inv = [0] * self.order
            for y, v in enumerate(row):
                inv[v] = y
            out.append(tuple(inv))
        return tuple(out)

    @cached_property
    def _right_div(self) -> tuple[tuple[int, ...], ...]:
        n = self.order
        out = [[0] * n for _ in range(n)]
        for y in range(n):
            for a in range(n):
                out[a][self.table[y][a]] = y
        return tuple(tuple(r) for r in out)

    def left_divide(self, a: int, b: int) -> int:
        """The unique ``x`` with ``a*x == b``."""
        return self._left_div[a][b]

    def right_divide(self, a: int, b: int) -> int:
        """The unique ``y`` with ``y*a == b``."""
        return self._right_div[a][b]

    @cached_property
    def left_translations(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(row) for row in self.table)

    @cached_property
    def right_translations(self) -> tuple[Permutation, ...]:
        n = self.order
        return tuple(Permutation(self.table[y][x] for y in range(n)) for x in range(n))

    def L(self, x: int) -> Permutation:
        return self.left_translations[x]

    def R(self, x: int) -> Permutation:
        return self.right_translations[x]

    @cached_property
    def j_rho(self) -> Permutation:
        """``x -> x^rho`` with ``x * x^rho == e``."""
        e = self.identity
        return Permutation(self.left_divide(x, e) for x in self.elements)

    @cached_property
    def j_lambda(self) -> Permutation:
        """``x -> x^lambda`` with ``x^lambda * x == e``."""
        e = self.identity
        return Permutation(self.right_divide(x, e) for x in self.elements)

    def relabel(self, phi: Permutation) -> "FiniteLoop":
        """Isomorphic copy ``phi(x)*'phi(y) = phi(x*y)``."""
        if len(phi) != self.order:
            raise DegreeMismatch(f"relabeling of degree {len(phi)} for a loop of order {self.order}")
        n = self.order
        inv = phi.inverse()
        t = [[phi(self.table[inv(u)][inv(v)]) for v in range(n)] for u in range(n)]
        return FiniteLoop(tuple(tuple(r) for r in t), phi(self.identity))

    def is_commutative(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in self.elements for y in range(x))

    def is_associative(self) -> bool:
        t = self.table
        n = self.order
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n))

    def has_exponent_two(self) -> bool:
        return all(self.table[x][x] == self.identity for x in self.elements)


def validate_loop(grid: Sequence[Sequence[int]]) -> FiniteLoop:
    """Check ``grid`` is the Cayley table of a loop and return it.

    Raises NotSquare, BadEntry, NotLatin (with the first repeated cell in
    row-major order) or NoIdentity.
    """
    rows = [list(r) for r in grid]
    n = len(rows)
    if n == 0:
        raise NotSquare("empty table")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise NotSquare(f"row {i} has {len(r)} entries, expected {n}")
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise BadEntry(f"entry {v!r} at ({i}, {j}) is not in 0..{n - 1}", (i, j))
    row_seen = [set() for _ in range(n)]
    col_seen = [set() for _ in range(n)]
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            v = int(v)
            if v in row_seen[i]:
                raise NotLatin(f"value {v} repeats in row {i} at ({i}, {j})", (i, j))
            if v in col_seen[j]:
                raise NotLatin(f"value {v} repeats in column {j} at ({i}, {j})", (i, j))
            row_seen[i].add(v)
            col_seen[j].add(v)
    table = tuple(tuple(int(v) for v in r) for r in rows)
    e = kernels.find_identity(np.ascontiguousarray(table, dtype=np.int32).reshape(n, n))
    if e < 0:
        raise NoIdentity("Latin square has no two-sided identity", table)
    return FiniteLoop(table, e)


def mul(L: FiniteLoop, x: int, y: int) -> int:
    return L.table[x][y]


def left_divide(L: FiniteLoop, a: int, b: int) -> int:
    return L.left_divide(a, b)


def right_divide(L: FiniteLoop, a: int, b: int) -> int:
    return L.right_divide(a, b)


def translations(L: FiniteLoop, x: int) -> tuple[Permutation, Permutation]:
    """``(L_x, R_x)``."""
    return L.L(x), L.R(x)


def inverse_maps(L: FiniteLoop) -> tuple[Permutation, Permutation]:
    """``(J_lambda, J_rho)``."""
    return L.j_lambda, L.j_rho


def inner_mappings(L: FiniteLoop, x: int, y: int) -> tuple[Permutation, Permutation]:
    """Left and right inner mappings ``L(x,y)`` and ``R(x,y)``.

    ``R(x,y) = R_x R_y R_{xy}^{-1}`` and ``L(x,y) = L_x L_y L_{yx}^{-1}``,
    both fixing the identity.
    """
    rmap = L.R(x) * L.R(y) * L.R(L.mul(x, y)).inverse()
    lmap = L.L(x) * L.L(y) * L.L(L.mul(y, x)).inverse()
    return lmap, rmap


def cyclic_group(n: int) -> FiniteLoop:
    return validate_loop([[(i + j) % n for j in range(n)] for i in range(n)])


def elementary_abelian_2(k: int) -> FiniteLoop:
    n = 1 << k
    return validate_loop([[i ^ j for j in range(n)] for i in range(n)])
