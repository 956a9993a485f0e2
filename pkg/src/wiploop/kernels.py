"""Kernel selection.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` twin is used.  Setting ``WIPLOOP_PURE_PYTHON=1``
forces the fallback.  Both expose the same functions with identical output.
"""

from __future__ import annotations

import os

from . import _pykernels as python_kernels

compiled_kernels = None
if os.environ.get("WIPLOOP_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

active = compiled_kernels if compiled_kernels is not None else python_kernels
IMPLEMENTATION: str = active.IMPLEMENTATION

find_identity = active.find_identity
isotope = active.isotope
enumerate_reduced = active.enumerate_reduced
canonical_form = active.canonical_form
isotopisms = active.isotopisms
isomorphisms = active.isomorphisms
weak_inverse_flags = active.weak_inverse_flags

__all__ = [
    "IMPLEMENTATION",
    "active",
    "compiled_kernels",
    "python_kernels",
    "find_identity",
    "isotope",
    "enumerate_reduced",
    "canonical_form",
    "isotopisms",
    "isomorphisms",
    "weak_inverse_flags",
]
