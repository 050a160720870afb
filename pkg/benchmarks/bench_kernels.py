"""Benchmark the compiled Newton-refinement kernel against the numpy one.

Both backends receive identical tensors and start points; the script
reports per-call wall time, the speedup, and the worst disagreement in
the refined eigenvalues so a regression in either backend is visible.

Usage: python benchmarks/bench_kernels.py [--tensors 50] [--starts 400]
"""

import argparse
import math
import time

import numpy as np

from octupolar import _kernels_py
from octupolar.params import OctupolarParams, build_tensor
from octupolar.spectra import HAVE_COMPILED, SolverConfig, _start_points

try:
    from octupolar import _kernels
except ImportError:
    _kernels = None

MAX_ITER = 80
RESIDUAL_TOL = 1e-15
STEP_TOL = 1e-15


def admissible_triple(rng):
    r = math.sqrt(rng.uniform(0.0, 1.0))
    chi = rng.uniform(-math.pi, math.pi)
    return OctupolarParams(
        r * math.cos(chi), -0.5 + r * math.sin(chi), rng.uniform(0.0, 1.0)
    )


def run_backend(refine, tensors, x0):
    t0 = time.perf_counter()
    lams = []
    for a in tensors:
        _, lam, resid = refine(a, x0, MAX_ITER, RESIDUAL_TOL, STEP_TOL)
        lam = np.where(resid <= 1e-11, lam, np.nan)  # drop unconverged starts
        lams.append(np.sort(lam))
    return time.perf_counter() - t0, np.array(lams)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--tensors", type=int, default=50)
    parser.add_argument("--starts", type=int, default=400)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    tensors = [
        build_tensor(admissible_triple(rng)).array for _ in range(args.tensors)
    ]
    x0 = _start_points(SolverConfig(n_starts=args.starts, seed=args.seed))

    t_py, lam_py = run_backend(_kernels_py.refine, tensors, x0)
    for _ in range(args.repeat - 1):
        t, _ = run_backend(_kernels_py.refine, tensors, x0)
        t_py = min(t_py, t)
    print(f"python  backend: {1e3 * t_py / args.tensors:8.3f} ms/tensor")

    if _kernels is None:
        print("compiled backend: not built (HAVE_COMPILED =", HAVE_COMPILED, ")")
        return 0

    t_c, lam_c = run_backend(_kernels.refine, tensors, x0)
    for _ in range(args.repeat - 1):
        t, _ = run_backend(_kernels.refine, tensors, x0)
        t_c = min(t_c, t)
    print(f"compiled backend: {1e3 * t_c / args.tensors:8.3f} ms/tensor")
    print(f"speedup: {t_py / t_c:.2f}x over {args.tensors} tensors,"
          f" {args.starts} starts each")
    diff = np.abs(lam_py - lam_c)
    print(f"max |lambda| disagreement (converged starts):"
          f" {np.nanmax(diff):.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
