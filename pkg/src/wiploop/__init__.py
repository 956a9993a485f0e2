"""Finite loops: weak inverse property, isotopy and small-order catalogs."""

from .errors import (
    BadEntry,
    DegreeMismatch,
    HypothesisUnmet,
    LoopError,
    LoopFormatError,
    NoIdentity,
    NotAnIsotopism,
    NotBijective,
    NotBothWip,
    NotCip,
    NotLatin,
    NotSquare,
    OrderTooLarge,
    TConditionFails,
)
from .perm import Permutation, all_permutations, compose
from .loop import (
    FiniteLoop,
    PropertyReport,
    cyclic_group,
    elementary_abelian_2,
    inner_mappings,
    inverse_maps,
    left_divide,
    mul,
    right_divide,
    translations,
    validate_loop,
)
from .textio import format_loop, parse_loop, read_loop, read_perm, read_triple, write_loop
from .properties import (
    LoopFlags,
    WeakInverseSets,
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
from .isotopy import (
    IsotopismTriple,
    TConditionReport,
    apply_isotopism,
    autotopisms,
    check_isotopism,
    check_t_condition,
    derive_third,
    find_isomorphisms,
    find_isotopisms,
    principal_isotope,
)
from .catalog import CatalogEntry, build_catalog, canonical_key, enumerate_loops, load_catalog, save_catalog
from .theorems import TheoremVerdict, run_paper_verification

__version__ = "0.1.0"
