"""Time the compiled labeling kernel against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row is one compiled state-sum problem; both kernels get identical
inputs and must return identical histograms.
"""

import argparse
import time

from statesum import kernels
from statesum.catdata import load_category
from statesum.engine import _compile_fusion, _kernel_inputs
from statesum.cells import dual_complex
from statesum.pachner import random_flips
from statesum.registry import load_triangulation

# (manifold, category, seeded flips applied first)
CASES = [
    ("s3_bdy4simplex", "fibonacci", 0),
    ("t3", "rep_s3", 0),
    ("t3", "fibonacci", 150),
    ("t3", "vec_z3", 40),
    ("s3_2tet", "rep_s3", 200),
    ("rp3", "fibonacci", 80),
]


def best_of(fn, args, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled_kernel is None:
        raise SystemExit("compiled kernel not built; run pip install -e . --no-build-isolation")
    print(f"{'manifold':16} {'category':10} {'flips':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, cat, flips in CASES:
        d = load_category(cat)
        t = load_triangulation(name)
        if flips:
            *_, last = random_flips(t, flips, seed=42)
            t = last.triangulation
        p = _compile_fusion(dual_complex(t), d, d.lam)
        tables, checks, gens, wvecs = _kernel_inputs(p)
        kargs = (p.domains, tables, checks, wvecs, len(gens))
        tp, hp = best_of(kernels.python_kernel, kargs, args.repeat)
        tc, hc = best_of(kernels.compiled_kernel, kargs, args.repeat)
        assert hp == hc, f"kernels disagree on {name}/{cat}"
        print(f"{name:16} {cat:10} {flips:5} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
