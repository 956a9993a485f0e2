"""Command-line front end.

Every command prints one JSON record (a :class:`RunReport`) on stdout:

.. code-block:: text

    {"command": ..., "inputs": [...], "outcome": "success" | "failure",
     "exit_status": 0 | 1 | 2, "payload": {...}, "duration_ms": ...,
     "schema": "wiploop.run/1"}

Exit status 0 means success, 1 means a property failed (with a witness in the
payload), 2 means bad usage or input; the diagnostic on stderr then reads
``path:line:column: message``.  ``--human`` also renders the payload as text
on stderr.

The environment variable ``WIPLOOP_MAX_ORDER`` (an integer) replaces every
default order guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from . import kernels
from ._parallel import default_workers
from .catalog import DEFAULT_CATALOG_GUARD, build_catalog, save_catalog
from .errors import LoopError, LoopFormatError, NoIdentity, OrderTooLarge
from .isotopy import (
    DEFAULT_AUT_GUARD,
    DEFAULT_SEARCH_GUARD,
    IsotopismTriple,
    apply_isotopism,
    autotopisms,
    check_isotopism,
    check_t_condition,
    find_isomorphisms,
    find_isotopisms,
    principal_isotope,
)
from .loop import FiniteLoop
from .properties import (
    DEFAULT_WIP_SET_GUARD,
    WipCriterion,
    classify,
    is_m_inverse,
    is_wip,
    weak_inverse_sets,
)
from .textio import _content_lines, format_loop, read_loop, read_triple
from .theorems import PRINCIPAL_ISOTOPE_NOTE, run_paper_verification

SCHEMA = "wiploop.run/1"
GUARD_ENV = "WIPLOOP_MAX_ORDER"


@dataclass
class RunReport:
    command: str
    inputs: list[str]
    outcome: str
    exit_status: int
    payload: dict[str, Any] = field(default_factory=dict)
    duration_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": SCHEMA,
                "command": self.command,
                "inputs": self.inputs,
                "outcome": self.outcome,
                "exit_status": self.exit_status,
                "payload": self.payload,
                "duration_ms": self.duration_ms,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        d = json.loads(text)
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {d.get('schema')!r}")
        return cls(d["command"], d["inputs"], d["outcome"], d["exit_status"], d["payload"], d["duration_ms"])

    def comparable(self) -> str:
        """Serialized form without timing, for determinism checks."""
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "outcome": self.outcome,
             "exit_status": self.exit_status, "payload": self.payload},
            sort_keys=True,
        )


class UsageError(Exception):
    """Bad input that is not tied to a file position."""

    def __init__(self, msg: str, where: str = "<argv>", line: int = 0, column: int = 0):
        super().__init__(msg)
        self.where, self.line, self.column = where, line, column


def guard(default: int) -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{GUARD_ENV} must be an integer, got {raw!r}", GUARD_ENV) from None


def _order_line(path: str) -> int:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError:
        return 0
    return next((ln for ln, _ in _content_lines(text)), 1)


def _load(path: str) -> FiniteLoop:
    return read_loop(path)


def _guarded(fn, path: str, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except OrderTooLarge as exc:
        raise UsageError(str(exc), path, _order_line(path), 1) from exc


def _table(L: FiniteLoop) -> list[list[int]]:
    return [list(r) for r in L.table]


def _triple_from_file(path: str, n: int) -> IsotopismTriple:
    a, b, c = read_triple(path)
    if len(a) != n:
        raise UsageError(f"triple has degree {len(a)} but the loop has order {n}", path, 1, 1)
    return IsotopismTriple(a, b, c)


# --------------------------------------------------------------------------
# commands; each returns (exit_status, payload)


def cmd_validate(args) -> tuple[int, dict]:
    L = _load(args.file)
    return 0, {"valid": True, "order": L.order, "identity": L.identity}


def cmd_props(args) -> tuple[int, dict]:
    L = _load(args.file)
    flags = classify(L)
    payload: dict[str, Any] = {"order": L.order, "identity": L.identity, "flags": flags.to_dict(), "bits": flags.bits()}
    status = 0
    if args.criterion is not None:
        try:
            crit = WipCriterion.parse(args.criterion)
        except ValueError as exc:
            raise UsageError(str(exc), "--criterion") from exc
        rep = is_wip(L, crit)
        payload["wip_criterion"] = rep.to_dict()
        status = max(status, 0 if rep.holds else 1)
    if args.m is not None:
        rep = is_m_inverse(L, args.m)
        payload["m_inverse"] = rep.to_dict()
        status = max(status, 0 if rep.holds else 1)
    return status, payload


def cmd_inverses(args) -> tuple[int, dict]:
    L = _load(args.file)
    return 0, {"j_rho": list(L.j_rho.images), "j_lambda": list(L.j_lambda.images)}


def _loop_payload(L: FiniteLoop) -> dict:
    return {"order": L.order, "identity": L.identity, "table": _table(L), "loop_text": format_loop(L)}


def _emit_loop(L: FiniteLoop, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(format_loop(L), encoding="utf-8")


def cmd_isotope_apply(args) -> tuple[int, dict]:
    G = _load(args.loop)
    t = _triple_from_file(args.triple, G.order)
    try:
        H = apply_isotopism(G, t)
    except NoIdentity as exc:
        return 1, {"error": "NoIdentity", "quasigroup_table": [list(r) for r in exc.table]}
    _emit_loop(H, args.out)
    return 0, _loop_payload(H)


def cmd_isotope_principal(args) -> tuple[int, dict]:
    G = _load(args.loop)
    for name, v in (("f", args.f), ("g", args.g)):
        if not 0 <= v < G.order:
            raise UsageError(f"{name}={v} is not an element of a loop of order {G.order}", f"<argument {name}>")
    H = principal_isotope(G, args.f, args.g)
    _emit_loop(H, args.out)
    return 0, _loop_payload(H)


def cmd_tcheck(args) -> tuple[int, dict]:
    G, H = _load(args.g_loop), _load(args.h_loop)
    if G.order != H.order:
        raise UsageError(f"loop orders differ: {G.order} vs {H.order}", args.h_loop, _order_line(args.h_loop), 1)
    t = _triple_from_file(args.triple, G.order)
    iso = check_isotopism(G, H, t)
    if not iso.holds:
        return 1, {"isotopism": iso.to_dict()}
    rep = check_t_condition(G, H, t)
    return (0 if rep.t else 1), {"isotopism": iso.to_dict(), "t_condition": rep.to_dict()}


def cmd_search(args) -> tuple[int, dict]:
    G = _load(args.g_loop)
    if args.kind == "aut":
        found = _guarded(autotopisms, args.g_loop, G, max_order=guard(DEFAULT_AUT_GUARD))
        return 0, {"count": len(found), "autotopisms": [t.to_lists() for t in found]}
    if args.h_loop is None:
        raise UsageError(f"search {args.kind} needs two loop files")
    H = _load(args.h_loop)
    if G.order != H.order:
        return 0, {"count": 0, "results": [], "note": "orders differ"}
    if args.kind == "isotopism":
        found = _guarded(find_isotopisms, args.g_loop, G, H, limit=args.limit,
                         max_order=guard(DEFAULT_SEARCH_GUARD))
        return 0, {"count": len(found), "isotopisms": [t.to_lists() for t in found]}
    found = _guarded(find_isomorphisms, args.g_loop, G, H, max_order=guard(DEFAULT_SEARCH_GUARD + 1))
    return 0, {"count": len(found), "isomorphisms": [list(p.images) for p in found]}


def cmd_wipset(args) -> tuple[int, dict]:
    L = _load(args.file)
    sets = _guarded(weak_inverse_sets, args.file, L, max_order=guard(DEFAULT_WIP_SET_GUARD))
    right, left = set(sets.s_rho), set(sets.s_lambda)
    rows = [{"perm": list(p.images), "right": p in right, "left": p in left} for p in sorted(right | left)]
    return 0, {
        "s_prime": [list(p.images) for p in sets.s_prime],
        "members": rows,
        "sizes": {"s_rho": len(sets.s_rho), "s_lambda": len(sets.s_lambda), "s_prime": len(sets.s_prime)},
        "s_rho_equals_s_lambda": sets.consistent,
    }


def cmd_catalog_build(args) -> tuple[int, dict]:
    n = args.order
    try:
        entries = build_catalog(n, args.filter, workers=args.workers, max_order=guard(DEFAULT_CATALOG_GUARD))
    except OrderTooLarge as exc:
        raise UsageError(str(exc), "--order") from exc
    index = save_catalog(entries, args.out)
    return 0, {
        "order": n,
        "filter": args.filter,
        "classes": len(entries),
        "index": str(index),
        "entries": [{"name": e.name, "bits": e.flags.bits(), "iso_class_id": e.iso_class_id} for e in entries],
    }


def cmd_verify_paper(args) -> tuple[int, dict]:
    limit = guard(DEFAULT_CATALOG_GUARD)
    for name, v in (("--order", args.order), ("--artzy-order", args.artzy_order)):
        if not 1 <= v <= limit:
            raise UsageError(f"{name} {v} outside 1..{limit}", name)
    verdicts = run_paper_verification(args.order, args.artzy_order, workers=args.workers)
    payload = {
        "header": {
            "orders": list(range(1, args.order + 1)),
            "artzy_orders": list(range(1, args.artzy_order + 1)),
            "kernels": kernels.IMPLEMENTATION,
            "notes": [PRINCIPAL_ISOTOPE_NOTE],
        },
        "verdicts": [v.to_dict() for v in verdicts],
        "all_passed": all(v.passed for v in verdicts),
    }
    if args.out:
        Path(args.out).write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return (0 if payload["all_passed"] else 1), payload


# --------------------------------------------------------------------------


class _CommonSubparsers:
    """Adds the shared global flags to every (nested) subcommand parser."""

    def __init__(self, action, common):
        self._action, self._common = action, common

    def add_parser(self, name, **kwargs):
        return _CommonParser(self._action.add_parser(name, parents=[self._common], **kwargs), self._common)


class _CommonParser:
    def __init__(self, parser, common):
        self._parser, self._common = parser, common

    def add_subparsers(self, **kwargs):
        return _CommonSubparsers(self._parser.add_subparsers(**kwargs), self._common)

    def __getattr__(self, name):
        return getattr(self._parser, name)


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", default=argparse.SUPPRESS,
                        help="also render the payload as text on stderr")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes for sweeps (default: all cores)")
    p = argparse.ArgumentParser(prog="wiploop", description="Finite loop analysis and isotopy search.", parents=[common])
    p.set_defaults(human=False, workers=None)
    sub = _CommonSubparsers(p.add_subparsers(dest="command", required=True), common)

    s = sub.add_parser("validate", help="parse a .loop file and check the loop axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("props", help="classify a loop")
    s.add_argument("file")
    s.add_argument("--criterion", help="check WIP with one criterion: " + ", ".join(c.name.lower() for c in WipCriterion))
    s.add_argument("--m", type=int, help="check the m-inverse identity for this m")
    s.set_defaults(func=cmd_props)

    s = sub.add_parser("inverses", help="print J_rho and J_lambda")
    s.add_argument("file")
    s.set_defaults(func=cmd_inverses)

    s = sub.add_parser("isotope", help="construct isotopes")
    iso_sub = s.add_subparsers(dest="isotope_kind", required=True)
    a = iso_sub.add_parser("apply")
    a.add_argument("loop")
    a.add_argument("triple")
    a.add_argument("--out")
    a.set_defaults(func=cmd_isotope_apply)
    a = iso_sub.add_parser("principal")
    a.add_argument("loop")
    a.add_argument("f", type=int)
    a.add_argument("g", type=int)
    a.add_argument("--out")
    a.set_defaults(func=cmd_isotope_principal)

    s = sub.add_parser("tcheck", help="T-condition report for an isotopism")
    s.add_argument("g_loop")
    s.add_argument("h_loop")
    s.add_argument("triple")
    s.set_defaults(func=cmd_tcheck)

    s = sub.add_parser("search", help="search isotopisms, isomorphisms or autotopisms")
    s.add_argument("kind", choices=["isotopism", "iso", "aut"])
    s.add_argument("g_loop")
    s.add_argument("h_loop", nargs="?")
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("wipset", help="list weak inverse permutations")
    s.add_argument("file")
    s.set_defaults(func=cmd_wipset)

    s = sub.add_parser("catalog", help="catalog operations")
    cat_sub = s.add_subparsers(dest="catalog_kind", required=True)
    b = cat_sub.add_parser("build")
    b.add_argument("--order", type=int, required=True)
    b.add_argument("--filter", choices=["wip", "cip"])
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_catalog_build)

    s = sub.add_parser("verify-paper", help="run every theorem harness over bundled data and catalogs")
    s.add_argument("--order", type=int, default=5)
    s.add_argument("--artzy-order", type=int, default=6)
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify_paper)
    return p


def _inputs(args) -> list[str]:
    keys = ("file", "loop", "g_loop", "h_loop", "triple")
    return [getattr(args, k) for k in keys if getattr(args, k, None) is not None]


def _command_name(args) -> str:
    parts = [args.command]
    for k in ("isotope_kind", "catalog_kind", "kind"):
        v = getattr(args, k, None)
        if v:
            parts.append(v)
    return " ".join(parts)


def render_human(report: RunReport) -> str:
    lines = [f"{report.command}: {report.outcome} (exit {report.exit_status})"]
    payload = report.payload
    if "table" in payload:
        n = payload["order"]
        width = len(str(n - 1))
        lines.append(f"order {n}, identity {payload['identity']}")
        for row in payload["table"]:
            lines.append(" ".join(str(v).rjust(width) for v in row))
    for key, val in payload.items():
        if key in ("table", "loop_text"):
            continue
        if key == "verdicts":
            for v in val:
                mark = "PASS" if v["passed"] else "FAIL"
                lines.append(f"  [{mark}] {v['theorem_id']}: {v['instances_checked']} instances, "
                             f"{len(v['violations'])} violations")
            continue
        text = json.dumps(val, sort_keys=True)
        lines.append(f"{key}: {text if len(text) <= 160 else text[:157] + '...'}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.workers is None:
        args.workers = default_workers()
    start = time.perf_counter()
    try:
        status, payload = args.func(args)
    except LoopFormatError as exc:
        kind = type(exc.__cause__).__name__ if exc.__cause__ is not None else type(exc).__name__
        status, payload = 2, {"error": kind, "path": exc.path, "line": exc.line,
                              "column": exc.column, "message": exc.reason}
        print(str(exc), file=stderr)
    except UsageError as exc:
        status, payload = 2, {"error": "UsageError", "path": exc.where, "line": exc.line,
                              "column": exc.column, "message": str(exc)}
        print(f"{exc.where}:{exc.line}:{exc.column}: {exc}", file=stderr)
    except LoopError as exc:
        status, payload = 2, {"error": type(exc).__name__, "message": str(exc)}
        print(f"<input>:0:0: {type(exc).__name__}: {exc}", file=stderr)
    report = RunReport(
        command=_command_name(args),
        inputs=_inputs(args),
        outcome="success" if status == 0 else "failure",
        exit_status=status,
        payload=payload,
        duration_ms=round((time.perf_counter() - start) * 1000.0, 3),
    )
    print(report.to_json(), file=stdout)
    if args.human:
        print(render_human(report), file=stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
