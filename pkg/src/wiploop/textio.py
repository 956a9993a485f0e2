"""Plain-text formats.

``.loop``
    The first non-comment line is the order ``n``; the next ``n`` non-comment
    lines hold ``n`` whitespace-separated integers each.  Lines starting with
    ``#`` are comments.
permutation
    One line of ``n`` integers, the image list.
triple
    Three permutation lines ``A``, ``B``, ``C``; ``#`` comments allowed.

Writers emit single-space separated values and a trailing newline, so
``format_loop(parse_loop(format_loop(L))) == format_loop(L)``.
"""

from __future__ import annotations

import os
from typing import Iterator, Optional

from .errors import BadEntry, LoopError, LoopFormatError, NoIdentity, NotLatin, NotSquare
from .loop import FiniteLoop, validate_loop
from .perm import Permutation


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _tokens(raw: str) -> list[tuple[int, str]]:
    """Tokens with their 1-based column."""
    out = []
    i = 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((i + 1, raw[i:j]))
        i = j
    return out


def _int_tokens(raw: str, lineno: int, path: str) -> list[tuple[int, int]]:
    vals = []
    for col, tok in _tokens(raw):
        try:
            vals.append((col, int(tok)))
        except ValueError:
            raise LoopFormatError(f"not an integer: {tok!r}", path, lineno, col) from None
    return vals


def parse_loop(text: str, path: str = "<string>") -> FiniteLoop:
    lines = list(_content_lines(text))
    if not lines:
        raise LoopFormatError("missing order line", path, 1, 1)
    lineno, raw = lines[0]
    head = _int_tokens(raw, lineno, path)
    if len(head) != 1 or head[0][1] < 1:
        raise LoopFormatError("first line must be a single positive integer n", path, lineno, head[0][0] if head else 1)
    n = head[0][1]
    body = lines[1:]
    if len(body) < n:
        last = body[-1][0] if body else lineno
        raise LoopFormatError(f"expected {n} table rows, found {len(body)}", path, last + 1, 1)
    if len(body) > n:
        raise LoopFormatError(f"unexpected content after {n} table rows", path, body[n][0], 1)
    grid, where = [], []
    for r, (ln, raw) in enumerate(body):
        vals = _int_tokens(raw, ln, path)
        if len(vals) != n:
            col = vals[n][0] if len(vals) > n else len(raw) + 1
            raise LoopFormatError(f"row {r} has {len(vals)} entries, expected {n}", path, ln, col)
        grid.append([v for _, v in vals])
        where.append([(ln, c) for c, _ in vals])
    try:
        return validate_loop(grid)
    except (NotLatin, BadEntry) as exc:
        i, j = exc.cell
        ln, col = where[i][j]
        raise LoopFormatError(f"{type(exc).__name__}: {exc}", path, ln, col) from exc
    except NoIdentity as exc:
        raise LoopFormatError(f"NoIdentity: {exc}", path, where[0][0][0], 1) from exc
    except NotSquare as exc:  # pragma: no cover - excluded by the row-length check above
        raise LoopFormatError(f"NotSquare: {exc}", path, lineno, 1) from exc


def format_loop(L: FiniteLoop, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(str(L.order))
    out.extend(" ".join(map(str, row)) for row in L.table)
    return "\n".join(out) + "\n"


def read_loop(path: str | os.PathLike) -> FiniteLoop:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise LoopFormatError(f"cannot read file: {exc.strerror}", path, 0, 0) from exc
    return parse_loop(text, path)


def write_loop(L: FiniteLoop, path: str | os.PathLike, comment: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_loop(L, comment))


def parse_perm_line(raw: str, lineno: int = 1, path: str = "<string>") -> Permutation:
    vals = _int_tokens(raw, lineno, path)
    try:
        return Permutation(v for _, v in vals)
    except LoopError as exc:
        raise LoopFormatError(f"NotBijective: {exc}", path, lineno, vals[0][0] if vals else 1) from exc


def parse_perm(text: str, path: str = "<string>") -> Permutation:
    lines = list(_content_lines(text))
    if len(lines) != 1:
        ln = lines[1][0] if len(lines) > 1 else 1
        raise LoopFormatError(f"expected exactly one permutation line, found {len(lines)}", path, ln, 1)
    return parse_perm_line(lines[0][1], lines[0][0], path)


def format_perm(p: Permutation) -> str:
    return p.to_line() + "\n"


def parse_triple(text: str, path: str = "<string>") -> tuple[Permutation, Permutation, Permutation]:
    lines = list(_content_lines(text))
    if len(lines) != 3:
        ln = lines[3][0] if len(lines) > 3 else (lines[-1][0] + 1 if lines else 1)
        raise LoopFormatError(f"expected three permutation lines (A, B, C), found {len(lines)}", path, ln, 1)
    a, b, c = (parse_perm_line(raw, ln, path) for ln, raw in lines)
    if not len(a) == len(b) == len(c):
        raise LoopFormatError("permutations in a triple must share a degree", path, lines[1][0], 1)
    return a, b, c


def format_triple(a: Permutation, b: Permutation, c: Permutation, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c_}" for c_ in comment.splitlines())
    out.extend(p.to_line() for p in (a, b, c))
    return "\n".join(out) + "\n"


def _read_text(path: str | os.PathLike) -> tuple[str, str]:
    path = os.fspath(path)
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise LoopFormatError(f"cannot read file: {exc.strerror}", path, 0, 0) from exc


def read_perm(path: str | os.PathLike) -> Permutation:
    text, p = _read_text(path)
    return parse_perm(text, p)


def read_triple(path: str | os.PathLike) -> tuple[Permutation, Permutation, Permutation]:
    text, p = _read_text(path)
    return parse_triple(text, p)
