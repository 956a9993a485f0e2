"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both implementations; outputs are
compared before timing so a mismatch aborts the run.
"""

import argparse
import sys
import timeit

import numpy as np

from wiploop import kernels
from wiploop.assets import table1
from wiploop.loop import cyclic_group


def _cases():
    t1 = table1()
    z6 = cyclic_group(6)
    g5 = t1.array
    ident5 = np.arange(5, dtype=np.int32)
    jr = np.asarray(t1.j_rho.images, dtype=np.int32)
    jl = np.asarray(t1.j_lambda.images, dtype=np.int32)
    return [
        ("enumerate_reduced(5)", lambda k: k.enumerate_reduced(5)),
        ("enumerate_reduced(6)", lambda k: k.enumerate_reduced(6)),
        ("canonical_form(Z6)", lambda k: k.canonical_form(z6.array, 0)),
        ("isotopisms(T1, T1)", lambda k: k.isotopisms(g5, g5, -1)),
        ("isomorphisms(Z6, Z6)", lambda k: k.isomorphisms(z6.array, z6.array)),
        ("isotope(T1)", lambda k: k.isotope(g5, ident5, ident5, ident5)),
        ("weak_inverse_flags(T1)", lambda k: k.weak_inverse_flags(jr, jl)),
    ]


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    fast, slow = kernels.compiled_kernels, kernels.python_kernels
    if fast is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':<26}{'compiled ms':>14}{'python ms':>14}{'speedup':>10}")
    for name, fn in _cases():
        if not _same(fn(fast), fn(slow)):
            print(f"{name}: outputs differ", file=sys.stderr)
            return 2
        tc = min(timeit.repeat(lambda: fn(fast), number=1, repeat=args.repeat)) * 1e3
        tp = min(timeit.repeat(lambda: fn(slow), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<26}{tc:>14.3f}{tp:>14.3f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
