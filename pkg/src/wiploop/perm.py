"""Permutations of ``{0, ..., n-1}`` acting on the right.

``p(x)`` is the image of ``x`` (written ``xp`` in operator notation) and the
product ``p * q`` means "apply ``p`` first, then ``q``", so that
``(p * q)(x) == q(p(x))``.  Operator strings such as ``R_y J_rho L_y``
therefore translate literally into ``R[y] * J_rho * L[y]``.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

from .errors import DegreeMismatch, NotBijective


class Permutation:
    """An immutable bijection on ``range(n)`` stored as its image tuple."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        seen = [False] * n
        for i in imgs:
            if not 0 <= i < n or seen[i]:
                raise NotBijective(f"image list {list(imgs)} is not a permutation of range({n})")
            seen[i] = True
        self._images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(5, (1, 2), (3, 4))``."""
        imgs = list(range(n))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                imgs[x] = cyc[(k + 1) % len(cyc)]
        return cls(imgs)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __len__(self) -> int:
        return len(self._images)

    def __iter__(self) -> Iterator[int]:
        return iter(self._images)

    def __getitem__(self, x: int) -> int:
        return self._images[x]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self._images == other._images
        return NotImplemented

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def __str__(self) -> str:
        return self.cycle_string()

    def __reduce__(self):
        return (Permutation, (self._images,))

    def _check_degree(self, other: "Permutation") -> None:
        if len(other) != len(self):
            raise DegreeMismatch(f"degrees differ: {len(self)} vs {len(other)}")

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check_degree(other)
        o = other._images
        return Permutation(o[i] for i in self._images)

    def then(self, *others: "Permutation") -> "Permutation":
        """Right-action product ``self * others[0] * others[1] * ...``."""
        out = self
        for o in others:
            out = out * o
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for x, y in enumerate(self._images):
            inv[y] = x
        return Permutation(inv)

    __invert__ = inverse

    def __pow__(self, m: int) -> "Permutation":
        base = self if m >= 0 else self.inverse()
        out = Permutation.identity(len(self))
        for _ in range(abs(m)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def order(self) -> int:
        from math import lcm

        out = 1
        for cyc in self.cycles():
            out = lcm(out, len(cyc))
        return out

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self._images)
        out = []
        for start in range(len(self._images)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self._images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def commutes_with(self, other: "Permutation") -> bool:
        return self * other == other * self

    def to_line(self) -> str:
        return " ".join(map(str, self._images))


def compose(*perms: Permutation) -> Permutation:
    """Right-action product of ``perms`` in the order given."""
    if not perms:
        raise ValueError("compose() needs at least one permutation")
    return perms[0].then(*perms[1:])


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of ``range(n)`` in lexicographic order of images."""
    for imgs in _itertools_permutations(range(n)):
        yield Permutation(imgs)
