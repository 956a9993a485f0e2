"""Exhaustive catalogs of small loops up to isomorphism.

Loops of order ``n`` are enumerated as reduced Latin squares (first row and
column in natural order, so the identity is 0), classified, and deduplicated
by a brute-force canonical key: the row-major minimum of the table over all
relabelings sending the identity to 0.

A persisted catalog is a directory holding ``loops/*.loop`` and
``index.tsv``.  Each index record is::

    <relative path>\t<order>\t<flag bits>\t<iso_class_id>

sorted by canonical key, with flag bits in the order commutative,
associative, exponent2, WIP, CIP, AIP, m=1 (see ``FLAG_BIT_ORDER``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterator, Optional, Union

import numpy as np

from . import kernels
from ._parallel import pmap
from .errors import LoopFormatError, OrderTooLarge
from .loop import FiniteLoop
from .perm import Permutation
from .properties import FLAG_BIT_ORDER, LoopFlags, classify, is_aip, is_cip, is_wip
from .textio import format_loop, read_loop

DEFAULT_CATALOG_GUARD = 6
INDEX_NAME = "index.tsv"

FlagFilter = Union[str, Callable[[LoopFlags], bool], None]

_FAST_FILTERS: dict[str, Callable[[FiniteLoop], bool]] = {
    "wip": lambda L: is_wip(L).holds,
    "cip": lambda L: is_cip(L).holds,
    "aip": lambda L: is_aip(L).holds,
    "commutative": FiniteLoop.is_commutative,
    "associative": FiniteLoop.is_associative,
    "exponent2": FiniteLoop.has_exponent_two,
}


@dataclass(frozen=True)
class CatalogEntry:
    loop: FiniteLoop
    flags: LoopFlags
    canonical_key: bytes
    iso_class_id: int

    @property
    def order(self) -> int:
        return self.loop.order

    @property
    def name(self) -> str:
        return f"n{self.order}_{self.iso_class_id:04d}"


def _guard(n: int, max_order: int) -> None:
    if not 1 <= n:
        raise ValueError(f"order must be positive, got {n}")
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the catalog guard {max_order}")


def enumerate_loops(n: int, max_order: int = DEFAULT_CATALOG_GUARD) -> Iterator[FiniteLoop]:
    """Every reduced loop of order ``n`` in lexicographic order of tables."""
    _guard(n, max_order)
    for arr in kernels.enumerate_reduced(n).tolist():
        yield FiniteLoop(tuple(tuple(r) for r in arr), 0)


def normalize(L: FiniteLoop) -> FiniteLoop:
    """Isomorphic copy with identity 0 (swap the identity with 0)."""
    if L.identity == 0:
        return L
    imgs = list(range(L.order))
    imgs[0], imgs[L.identity] = L.identity, 0
    return L.relabel(Permutation(imgs))


def _canonical_array(L: FiniteLoop) -> np.ndarray:
    return kernels.canonical_form(L.array, L.identity)


def canonical_key(L: FiniteLoop) -> bytes:
    """Equal keys exactly for isomorphic loops."""
    if L.order > 255:
        raise OrderTooLarge("canonical keys are defined for order <= 255")
    return _canonical_array(L).astype(np.uint8).tobytes()


def canonical_loop(L: FiniteLoop) -> FiniteLoop:
    """The isomorphic copy whose table is the canonical key."""
    n = L.order
    flat = _canonical_array(L).tolist()
    return FiniteLoop(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), 0)


def _analyse(L: FiniteLoop) -> tuple[bytes, LoopFlags]:
    return canonical_key(L), classify(L)


def build_catalog(
    n: int,
    filter: FlagFilter = None,
    workers: Optional[int] = 1,
    max_order: int = DEFAULT_CATALOG_GUARD,
) -> list[CatalogEntry]:
    """Isomorphism classes of loops of order ``n``, sorted by canonical key.

    ``filter`` is a flag name (``"wip"``, ``"cip"``, ...; tested cheaply before
    full classification) or a predicate on :class:`LoopFlags`.  Every member
    of a class is classified and the flags are checked to agree.
    """
    _guard(n, max_order)
    fast = None
    if isinstance(filter, str):
        fast = filter.lower()
        if fast not in _FAST_FILTERS:
            raise ValueError(f"unknown filter {filter!r}; choose from {sorted(_FAST_FILTERS)}")
    if workers == 1:
        entries = _cached_catalog(n, fast, max_order)
    else:
        entries = _build(n, fast, max_order, workers)
    if callable(filter):
        return [e for e in entries if filter(e.flags)]
    return list(entries)


def _build(n: int, fast: Optional[str], max_order: int, workers: Optional[int] = 1) -> tuple[CatalogEntry, ...]:
    loops = list(enumerate_loops(n, max_order))
    if fast is not None:
        loops = [L for L in loops if _FAST_FILTERS[fast](L)]
    analysed = pmap(_analyse, loops, workers)
    classes: dict[bytes, LoopFlags] = {}
    for L, (key, flags) in zip(loops, analysed):
        prior = classes.setdefault(key, flags)
        if prior != flags:
            raise RuntimeError(f"flags differ inside one isomorphism class: {L!r}")
    out = []
    for cid, key in enumerate(sorted(classes)):
        flat = list(key)
        loop = FiniteLoop(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), 0)
        out.append(CatalogEntry(loop, classes[key], key, cid))
    return tuple(out)


@lru_cache(maxsize=None)
def _cached_catalog(n: int, fast: Optional[str], max_order: int) -> tuple[CatalogEntry, ...]:
    _guard(n, max_order)
    return _build(n, fast, max_order)


def catalog_up_to(max_n: int, filter: FlagFilter = None, max_order: int = DEFAULT_CATALOG_GUARD) -> list[CatalogEntry]:
    out: list[CatalogEntry] = []
    for n in range(1, max_n + 1):
        out.extend(build_catalog(n, filter, max_order=max_order))
    return out


def save_catalog(entries: list[CatalogEntry], out_dir: Union[str, os.PathLike]) -> Path:
    """Write ``loops/*.loop`` and ``index.tsv`` under ``out_dir``; return the index path."""
    root = Path(out_dir)
    (root / "loops").mkdir(parents=True, exist_ok=True)
    lines = ["# path\torder\tflags(" + ",".join(FLAG_BIT_ORDER) + ")\tiso_class_id"]
    for e in sorted(entries, key=lambda e: (e.order, e.canonical_key)):
        rel = f"loops/{e.name}.loop"
        (root / rel).write_text(format_loop(e.loop), encoding="utf-8")
        lines.append(f"{rel}\t{e.order}\t{e.flags.bits()}\t{e.iso_class_id}")
    index = root / INDEX_NAME
    index.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return index


def load_catalog(in_dir: Union[str, os.PathLike]) -> list[CatalogEntry]:
    root = Path(in_dir)
    index = root / INDEX_NAME
    out = []
    for lineno, raw in enumerate(index.read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        parts = raw.split("\t")
        if len(parts) != 4:
            raise LoopFormatError("expected 4 tab-separated fields", str(index), lineno, 1)
        rel, order, bits, cid = parts
        L = read_loop(root / rel)
        if L.order != int(order):
            raise LoopFormatError(f"order mismatch for {rel}", str(index), lineno, len(rel) + 2)
        flags = classify(L)
        if flags.bits() != bits:
            raise LoopFormatError(f"stored flags {bits} disagree with recomputed {flags.bits()}",
                                  str(index), lineno, len(rel) + len(order) + 3)
        out.append(CatalogEntry(L, flags, canonical_key(L), int(cid)))
    return out
