"""Bundled example data: the order-5 commutative WIP loop and its (A, B, I) self-isotopism."""

from __future__ import annotations

from importlib import resources

from .loop import FiniteLoop
from .perm import Permutation
from .textio import parse_loop, parse_perm, parse_triple

ASSET_FILES = ("table1.loop", "paperA.perm", "paperB.perm", "paper_triple.txt")


def asset_path(name: str):
    return resources.files("wiploop") / "data" / name


def asset_text(name: str) -> str:
    return asset_path(name).read_text(encoding="utf-8")


def table1() -> FiniteLoop:
    return parse_loop(asset_text("table1.loop"), "table1.loop")


def paper_a() -> Permutation:
    return parse_perm(asset_text("paperA.perm"), "paperA.perm")


def paper_b() -> Permutation:
    return parse_perm(asset_text("paperB.perm"), "paperB.perm")


def paper_triple() -> tuple[Permutation, Permutation, Permutation]:
    return parse_triple(asset_text("paper_triple.txt"), "paper_triple.txt")
