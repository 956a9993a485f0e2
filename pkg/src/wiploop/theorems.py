"""Executable checks of the isotopy results for weak inverse property loops.

Each ``verify_*`` function checks one result on one input and returns a
:class:`TheoremVerdict`.  Hypotheses are checked, never assumed: calling a
harness outside its hypotheses raises :class:`HypothesisUnmet` (or a
subclass).  The ``sweep_*`` functions run the same checks over whole
catalogs, and :func:`run_paper_verification` bundles everything.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Optional

from . import assets
from ._parallel import pmap
from .catalog import build_catalog
from .errors import (
    HypothesisUnmet,
    LoopError,
    NotAnIsotopism,
    NotBothWip,
    NotCip,
    TConditionFails,
)
from .isotopy import (
    IsotopismTriple,
    apply_isotopism,
    check_isotopism,
    check_t_condition,
    find_isomorphisms,
    find_isotopisms,
    is_isomorphism,
    principal_isotope,
)
from .loop import FiniteLoop, validate_loop
from .perm import Permutation, all_permutations
from .properties import is_aip, is_cip, is_weak_inverse_permutation, is_wip

WIP_TRANSFER = "wip_transfer"
TRANSLATION_IDENTITIES = "translation_identities"
COUNTEREXAMPLE = "counterexample"
OSBORN_AUTOTOPISM = "osborn_autotopism"
T_COROLLARIES = "t_corollaries"
T_ISOMORPHY = "t_isomorphy"
ARTZY_CIP = "artzy_cip"

THEOREM_IDS = (
    COUNTEREXAMPLE,
    WIP_TRANSFER,
    TRANSLATION_IDENTITIES,
    OSBORN_AUTOTOPISM,
    T_COROLLARIES,
    T_ISOMORPHY,
    ARTZY_CIP,
)

PRINCIPAL_ISOTOPE_NOTE = (
    "Isotope quantifiers are reduced to principal isotopes (R_g, L_f, I): "
    "every loop isotope of G is isomorphic to a principal isotope of G."
)


def loop_ref(L: FiniteLoop) -> str:
    return "/".join("".join(map(str, r)) if L.order <= 10 else ",".join(map(str, r)) for r in L.table)


@dataclass(frozen=True)
class Violation:
    refs: dict
    witness: Any
    message: str

    def to_dict(self) -> dict:
        return {"refs": self.refs, "witness": self.witness, "message": self.message}

    def sort_key(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class TheoremVerdict:
    theorem_id: str
    instances_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    records: Counter = field(default_factory=Counter)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def absorb(self, other: "TheoremVerdict") -> "TheoremVerdict":
        if other.theorem_id != self.theorem_id:
            raise ValueError(f"cannot merge {other.theorem_id} into {self.theorem_id}")
        self.instances_checked += other.instances_checked
        self.violations.extend(other.violations)
        self.records.update(other.records)
        self.notes.extend(n for n in other.notes if n not in self.notes)
        return self

    def violate(self, message: str, witness: Any = None, **refs) -> None:
        self.violations.append(Violation(refs, witness, message))

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "violations": [v.to_dict() for v in self.violations],
            "records": dict(sorted(self.records.items())),
            "notes": list(self.notes),
        }


def merge_verdicts(theorem_id: str, parts: Iterable[TheoremVerdict], require_instances: bool = True) -> TheoremVerdict:
    """Sum instance counts and records; concatenate then sort violations."""
    out = TheoremVerdict(theorem_id)
    for p in parts:
        out.absorb(p)
    out.violations.sort(key=Violation.sort_key)
    if require_instances and out.instances_checked == 0:
        raise HypothesisUnmet(f"{theorem_id}: sweep checked no instances (vacuous run)")
    return out


def _refs(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> dict:
    return {"G": loop_ref(G), "H": loop_ref(H), "triple": t.to_lists()}


def _require_isotopism(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> None:
    rep = check_isotopism(G, H, t)
    if not rep.holds:
        raise NotAnIsotopism(f"triple {t.to_lists()} fails the isotopism identity at {rep.witness}")


def _require_t(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple):
    _require_isotopism(G, H, t)
    rep = check_t_condition(G, H, t)
    if not rep.t:
        raise TConditionFails(f"T condition fails for {t.to_lists()}: {rep.to_dict()}")
    return rep


def verify_wip_transfer(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> TheoremVerdict:
    """Under the T condition, G is a WIPL iff H is."""
    rep = _require_t(G, H, t)
    g_wip, h_wip = is_wip(G).holds, is_wip(H).holds
    if not (g_wip or h_wip):
        raise HypothesisUnmet("neither loop is a WIPL")
    v = TheoremVerdict(WIP_TRANSFER)
    if g_wip:
        v.instances_checked += 1
        v.records["forward"] += 1
        if not h_wip:
            v.violate("G is a WIPL but its T-isotope H is not", is_wip(H).witness, **_refs(G, H, t))
    if h_wip:
        v.instances_checked += 1
        v.records["converse"] += 1
        if not g_wip:
            v.violate("H is a WIPL but G is not", is_wip(G).witness, **_refs(G, H, t))
    if g_wip and h_wip:
        v.records["t2_equals_t3" if rep.t2 == rep.t3 else "t2_differs_t3"] += 1
        if rep.t2 != rep.t3:
            v.violate("T2 and T3 disagree on a pair of WIPLs", rep.to_dict(), **_refs(G, H, t))
    return v


def verify_translation_identities(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> TheoremVerdict:
    """For isotopic WIPLs, check for every x:

    * ``J_l R_x J_r B == C J_l' R'_{xA} J_r'``
    * ``J_r L_x J_l A == C J_r' L'_{xB} J_l'``

    together with ``L_x = B L'_{xA} C^-1`` and ``R_x = A R'_{xB} C^-1``,
    which hold for any isotopism.
    """
    _require_isotopism(G, H, t)
    if not (is_wip(G).holds and is_wip(H).holds):
        raise NotBothWip("both loops must be WIPLs")
    a, b, c = t
    ci = c.inverse()
    jr, jl, jr2, jl2 = G.j_rho, G.j_lambda, H.j_rho, H.j_lambda
    v = TheoremVerdict(TRANSLATION_IDENTITIES)
    for x in G.elements:
        v.instances_checked += 1
        checks = {
            "J_l R_x J_r B = C J_l' R'_xA J_r'": (jl * G.R(x) * jr * b, c * jl2 * H.R(a(x)) * jr2),
            "J_r L_x J_l A = C J_r' L'_xB J_l'": (jr * G.L(x) * jl * a, c * jr2 * H.L(b(x)) * jl2),
            "L_x = B L'_xA C^-1": (G.L(x), b * H.L(a(x)) * ci),
            "R_x = A R'_xB C^-1": (G.R(x), a * H.R(b(x)) * ci),
        }
        for name, (lhs, rhs) in checks.items():
            if lhs != rhs:
                v.violate(f"{name} fails", {"x": x, "lhs": list(lhs.images), "rhs": list(rhs.images)}, **_refs(G, H, t))
    return v


def verify_counterexample(
    table: Optional[list[list[int]]] = None,
    a: Optional[Permutation] = None,
    b: Optional[Permutation] = None,
) -> TheoremVerdict:
    """The order-5 WIPL whose self-isotopism (A, B, I) has A != B.

    The chain: the table is a loop; it is commutative; it is a WIPL;
    (A, B, I) is a self-isotopism; A != B so T fails; the isotope is a WIPL
    anyway.  Defaults to the bundled data; a broken link stops the chain and
    is reported as a violation.
    """
    v = TheoremVerdict(COUNTEREXAMPLE)
    a = assets.paper_a() if a is None else a
    b = assets.paper_b() if b is None else b
    try:
        G = assets.table1() if table is None else validate_loop(table)
    except LoopError as exc:
        v.instances_checked += 1
        v.violate("table does not validate as a loop", str(exc), step="validate", error=type(exc).__name__)
        return v
    ident = Permutation.identity(G.order)
    t = IsotopismTriple(a, b, ident)
    ref = {"G": loop_ref(G), "triple": t.to_lists()}
    steps = [
        ("validate", lambda: True),
        ("commutative", G.is_commutative),
        ("wip", lambda: is_wip(G).holds),
        ("self_isotopism", lambda: check_isotopism(G, G, t).holds),
        ("t_fails", lambda: (a != b) and not check_t_condition(G, G, t).t),
        ("isotope_is_wip", lambda: is_wip(apply_isotopism(G, t)).holds),
    ]
    for name, check in steps:
        v.instances_checked += 1
        try:
            ok = bool(check())
        except LoopError as exc:
            ok = False
            v.records[f"{name}_error"] += 1
            v.violate(f"step {name} raised {type(exc).__name__}: {exc}", None, step=name, **ref)
            return v
        v.records[name] += int(ok)
        if not ok:
            v.violate(f"step {name} does not hold", None, step=name, **ref)
            return v
    return v


def _is_aut(L: FiniteLoop, t: IsotopismTriple) -> bool:
    return check_isotopism(L, L, t).holds


def verify_osborn_autotopism(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple, variant: int) -> TheoremVerdict:
    """Autotopism characterisations of ``C`` being an isomorphism G -> H.

    variant 1: ``(J_r L_b J_l, J_l R_a J_r, I) in AUT(G)`` with
    ``a = A^-1(e')``, ``b = B^-1(e')``.  variant 2: the dual statement in H
    with ``a' = A(e)``, ``b' = B(e)``.  variants 3 and 4 (needing the
    automorphic inverse property in G, resp. H): ``(L_b, R_a, I)`` in AUT.
    Each is checked as a biconditional against a direct test of ``C``; the
    consequences are checked whenever the autotopism is present.
    """
    if variant not in (1, 2, 3, 4):
        raise ValueError(f"variant must be 1..4, got {variant}")
    _require_isotopism(G, H, t)
    if not (is_wip(G).holds and is_wip(H).holds):
        raise NotBothWip("both loops must be WIPLs")
    A, B, C = t
    n = G.order
    ident = Permutation.identity(n)
    c_iso = is_isomorphism(G, H, C)
    v = TheoremVerdict(OSBORN_AUTOTOPISM)
    v.instances_checked = 1
    refs = dict(_refs(G, H, t), variant=variant)

    if variant in (1, 3):
        K, e_here = G, G.identity
        a, b = A.inverse()(H.identity), B.inverse()(H.identity)
    else:
        K, e_here = H, H.identity
        a, b = A(G.identity), B(G.identity)
    if variant == 3 and not any(is_aip(G).flags.values()):
        raise HypothesisUnmet("variant 3 needs the automorphic inverse property in G")
    if variant == 4 and not any(is_aip(H).flags.values()):
        raise HypothesisUnmet("variant 4 needs the automorphic inverse property in H")

    jr, jl = K.j_rho, K.j_lambda
    Ra, Lb = K.R(a), K.L(b)
    if variant in (1, 2):
        X = IsotopismTriple(jr * Lb * jl, jl * Ra * jr, ident)
    else:
        X = IsotopismTriple(Lb, Ra, ident)
    member = _is_aut(K, X)
    v.records[f"v{variant}_member" if member else f"v{variant}_not_member"] += 1
    v.records["c_isomorphism" if c_iso else "c_not_isomorphism"] += 1
    wit = {"a": a, "b": b, "member": member, "c_isomorphism": c_iso}
    if member != c_iso:
        v.violate("autotopism membership does not match isomorphy of C", wit, **refs)
    if not member:
        return v
    if variant in (1, 2):
        Y = IsotopismTriple(jl * Ra * jr, jr * Lb * jl, Ra * Lb)
        if not _is_aut(K, Y):
            v.violate("(J_l R_a J_r, J_r L_b J_l, R_a L_b) is not an autotopism", wit, **refs)
        if K.has_exponent_two():
            v.records["exponent2_case"] += 1
            if not _is_aut(K, IsotopismTriple(Ra, Lb, Ra * Lb)):
                v.violate("(R_a, L_b, R_a L_b) is not an autotopism in exponent 2", wit, **refs)
    else:
        if not (Ra * Lb).is_identity():
            v.violate("R_a L_b is not the identity", wit, **refs)
        if K.mul(b, a) != e_here:
            v.violate("b a is not the identity element", wit, **refs)
        if not (is_cip(G).holds and is_cip(H).holds):
            v.violate("the loops are not both CIP loops", wit, **refs)
    return v


def verify_t_corollaries(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> TheoremVerdict:
    """``alpha = C A^-1`` and ``beta = C B^-1`` are weak inverse permutations,
    ``alpha == beta``, and ``J_r' == J_l'`` iff ``J_r == J_l``."""
    _require_t(G, H, t)
    if not is_wip(G).holds:
        raise HypothesisUnmet("G must be a WIPL")
    if not is_wip(H).holds:
        raise HypothesisUnmet("H must be a verified WIPL")
    A, B, C = t
    alpha, beta = C * A.inverse(), C * B.inverse()
    v = TheoremVerdict(T_COROLLARIES)
    v.instances_checked = 1
    refs = _refs(G, H, t)
    for name, p in (("alpha", alpha), ("beta", beta)):
        rep = is_weak_inverse_permutation(G, p)
        if not rep.holds:
            v.violate(f"{name} = C X^-1 is not a weak inverse permutation", list(p.images), **refs)
    if alpha != beta:
        v.violate("alpha != beta", [list(alpha.images), list(beta.images)], **refs)
    if (H.j_rho == H.j_lambda) != (G.j_rho == G.j_lambda):
        v.violate("J_r' = J_l' does not match J_r = J_l", None, **refs)
    v.records["alpha_identity" if alpha.is_identity() else "alpha_nontrivial"] += 1
    return v


def verify_t_isomorphy(G: FiniteLoop, H: FiniteLoop, t: IsotopismTriple) -> TheoremVerdict:
    """T-isotopic WIPLs are isomorphic.  Whether C itself is an isomorphism
    and whether A == C are recorded, not asserted."""
    _require_t(G, H, t)
    if not (is_wip(G).holds and is_wip(H).holds):
        raise NotBothWip("both loops must be WIPLs")
    v = TheoremVerdict(T_ISOMORPHY)
    v.instances_checked = 1
    isos = find_isomorphisms(G, H)
    if not isos:
        v.violate("T-isotopic WIPLs are not isomorphic", None, **_refs(G, H, t))
    A, _, C = t
    v.records["c_isomorphism" if is_isomorphism(G, H, C) else "c_not_isomorphism"] += 1
    v.records["a_equals_c" if A == C else "a_differs_c"] += 1
    return v


def verify_artzy_cip(G: FiniteLoop, cip_isotopes_only: bool = False) -> TheoremVerdict:
    """Every principal isotope of a CIP loop is isomorphic to it.

    Each isotope is also tested for CIP and the outcome recorded.  With
    ``cip_isotopes_only`` the claim is restricted to isotopes that are
    themselves CIP loops; the others are counted but not checked.
    """
    if not is_cip(G).holds:
        raise NotCip("loop is not a CIP loop")
    v = TheoremVerdict(ARTZY_CIP, notes=[PRINCIPAL_ISOTOPE_NOTE])
    for f in G.elements:
        for g in G.elements:
            P = principal_isotope(G, f, g)
            p_cip = is_cip(P).holds
            if cip_isotopes_only and not p_cip:
                v.records["skipped_non_cip_isotope"] += 1
                continue
            v.instances_checked += 1
            iso = bool(find_isomorphisms(G, P))
            v.records[f"{'isomorphic' if iso else 'not_isomorphic'}_{'cip' if p_cip else 'non_cip'}_isotope"] += 1
            if not iso:
                v.violate("principal isotope not isomorphic to its CIP parent",
                          {"f": f, "g": g, "isotope_cip": p_cip}, G=loop_ref(G), H=loop_ref(P))
    return v

# --------------------------------------------------------------------------
# catalog sweeps


def aac_loop_isotopes(G: FiniteLoop, exhaustive: bool = False) -> Iterator[tuple[Permutation, Permutation, FiniteLoop]]:
    """Every ``(A, C, H)`` where ``(A, A, C)`` carries ``G`` onto a loop ``H``.

    The isotope has identity ``A(f)`` exactly when ``C = L_f^-1 A`` and
    ``L_f = R_f``, so by default only those ``C`` are visited.  With
    ``exhaustive=True`` all ``n! * n!`` pairs are tried instead.
    """
    n = G.order
    perms = list(all_permutations(n))
    if exhaustive:
        for A in perms:
            for C in perms:
                try:
                    H = apply_isotopism(G, IsotopismTriple(A, A, C))
                except LoopError:
                    continue
                yield A, C, H
        return
    centre = [f for f in G.elements if G.L(f) == G.R(f)]
    for A in perms:
        cands = sorted(G.L(f).inverse() * A for f in centre)
        for C in cands:
            yield A, C, apply_isotopism(G, IsotopismTriple(A, A, C))


def _t_sweep_one(args) -> tuple[TheoremVerdict, TheoremVerdict, TheoremVerdict, dict]:
    G, exhaustive = args
    parts = [TheoremVerdict(WIP_TRANSFER), TheoremVerdict(T_COROLLARIES), TheoremVerdict(T_ISOMORPHY)]
    stats = Counter()
    for A, C, H in aac_loop_isotopes(G, exhaustive):
        t = IsotopismTriple(A, A, C)
        stats["loop_targets"] += 1
        rep = check_t_condition(G, H, t)
        if not (rep.t2 or rep.t3):
            continue
        stats["t_pairs"] += 1
        parts[0].absorb(verify_wip_transfer(G, H, t))
        if is_wip(H).holds:
            parts[1].absorb(verify_t_corollaries(G, H, t))
            parts[2].absorb(verify_t_isomorphy(G, H, t))
    return parts[0], parts[1], parts[2], dict(stats)


def sweep_t_condition(orders: Iterable[int], workers: Optional[int] = 1, exhaustive: bool = False) -> dict[str, TheoremVerdict]:
    """Every ``(A, A, C)`` T-isotope of every catalog WIPL of the given orders."""
    loops = [e.loop for n in orders for e in build_catalog(n, "wip")]
    return t_condition_sweep(loops, workers, exhaustive)


def t_condition_sweep(loops: Iterable[FiniteLoop], workers: Optional[int] = 1, exhaustive: bool = False) -> dict[str, TheoremVerdict]:
    """:func:`sweep_t_condition` over explicit WIPLs; records include ``sweep_loop_targets`` and ``sweep_t_pairs``."""
    loops = list(loops)
    for G in loops:
        if not is_wip(G).holds:
            raise HypothesisUnmet(f"{loop_ref(G)} is not a WIPL")
    results = pmap(_t_sweep_one, [(G, exhaustive) for G in loops], workers)
    out = {}
    for k, tid in enumerate((WIP_TRANSFER, T_COROLLARIES, T_ISOMORPHY)):
        merged = merge_verdicts(tid, [r[k] for r in results])
        for r in results:
            merged.records.update({f"sweep_{key}": val for key, val in r[3].items()})
        out[tid] = merged
    return out


def _isotopic_wip_pairs(orders: Iterable[int]) -> list[tuple[FiniteLoop, FiniteLoop]]:
    pairs = []
    for n in orders:
        wips = [e.loop for e in build_catalog(n, "wip")]
        pairs.extend((G, H) for G in wips for H in wips)
    return pairs


def _pair_sweep_one(pair) -> tuple[TheoremVerdict, TheoremVerdict]:
    G, H = pair
    tv, ov = TheoremVerdict(TRANSLATION_IDENTITIES), TheoremVerdict(OSBORN_AUTOTOPISM)
    g_aip = any(is_aip(G).flags.values())
    h_aip = any(is_aip(H).flags.values())
    variants = [1, 2] + ([3] if g_aip else []) + ([4] if h_aip else [])
    for t in find_isotopisms(G, H):
        tv.absorb(verify_translation_identities(G, H, t))
        for k in variants:
            ov.absorb(verify_osborn_autotopism(G, H, t, k))
    return tv, ov


def sweep_isotopic_wip_pairs(orders: Iterable[int], workers: Optional[int] = 1) -> dict[str, TheoremVerdict]:
    """All isotopisms between catalog WIPLs of equal order."""
    results = pmap(_pair_sweep_one, _isotopic_wip_pairs(orders), workers)
    return {
        TRANSLATION_IDENTITIES: merge_verdicts(TRANSLATION_IDENTITIES, [r[0] for r in results]),
        OSBORN_AUTOTOPISM: merge_verdicts(OSBORN_AUTOTOPISM, [r[1] for r in results]),
    }


def _artzy_cip_only(G: FiniteLoop) -> TheoremVerdict:
    return verify_artzy_cip(G, cip_isotopes_only=True)


def sweep_artzy(orders: Iterable[int], workers: Optional[int] = 1, cip_isotopes_only: bool = False) -> TheoremVerdict:
    loops = [e.loop for n in orders for e in build_catalog(n, "cip")]
    fn = _artzy_cip_only if cip_isotopes_only else verify_artzy_cip
    return merge_verdicts(ARTZY_CIP, pmap(fn, loops, workers))


def bundled_instances() -> dict[str, TheoremVerdict]:
    """Every harness applied to the bundled loop and its self-isotopisms."""
    G = assets.table1()
    n = G.order
    paper = IsotopismTriple(*assets.paper_triple())
    ident = IsotopismTriple.identity(n)
    auts = [IsotopismTriple.isomorphism(phi) for phi in find_isomorphisms(G, G)]
    t_triples = [ident] + [s for s in auts if s != ident]
    out = {
        COUNTEREXAMPLE: verify_counterexample(),
        WIP_TRANSFER: merge_verdicts(WIP_TRANSFER, [verify_wip_transfer(G, G, s) for s in t_triples]),
        T_COROLLARIES: merge_verdicts(T_COROLLARIES, [verify_t_corollaries(G, G, s) for s in t_triples]),
        T_ISOMORPHY: merge_verdicts(T_ISOMORPHY, [verify_t_isomorphy(G, G, s) for s in t_triples]),
        TRANSLATION_IDENTITIES: merge_verdicts(
            TRANSLATION_IDENTITIES, [verify_translation_identities(G, G, s) for s in (ident, paper)]
        ),
        OSBORN_AUTOTOPISM: merge_verdicts(
            OSBORN_AUTOTOPISM, [verify_osborn_autotopism(G, G, paper, k) for k in (1, 2, 3, 4)]
        ),
        ARTZY_CIP: verify_artzy_cip(G),
    }
    return out


def run_paper_verification(order: int = 5, artzy_order: int = 6, workers: Optional[int] = 1) -> list[TheoremVerdict]:
    """One merged verdict per result: bundled data plus catalog sweeps.

    T-condition and isotopic-pair sweeps cover catalog orders ``1..order``;
    the CIP principal-isotope sweep covers ``1..artzy_order``.
    """
    orders = range(1, order + 1)
    bundled = bundled_instances()
    swept: dict[str, TheoremVerdict] = {}
    swept.update(sweep_t_condition(orders, workers))
    swept.update(sweep_isotopic_wip_pairs(orders, workers))
    swept[ARTZY_CIP] = sweep_artzy(range(1, artzy_order + 1), workers)
    out = []
    for tid in THEOREM_IDS:
        parts = [bundled[tid]] + ([swept[tid]] if tid in swept else [])
        out.append(merge_verdicts(tid, parts))
    return out
