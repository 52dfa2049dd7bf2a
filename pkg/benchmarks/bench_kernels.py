"""Compiled extension versus numpy fallback on the root-solver kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeats N] [--sweep-steps N]

Reports best-of-N per-call times for the two kernels at production size
(210 charge roots, 105 spin roots) and the wall time of a short
continuation sweep under each backend.  Cross-checks the backends against
each other first; a benchmark of two disagreeing kernels means nothing.
"""
import argparse
import time

import numpy as np

from dfflab import _bae_numpy, bethe, kernels

try:
    from dfflab import _bae_core
except ImportError:
    _bae_core = None


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def check_parity(roots) -> None:
    args = (roots.k, roots.lam, roots.qnums.I, roots.qnums.J, roots.params.L, roots.params.U)
    d_gap = np.abs(_bae_core.defects(*args) - _bae_numpy.defects(*args)).max()
    jac_args = (roots.k, roots.lam, roots.params.L, roots.params.U)
    j_gap = np.abs(_bae_core.jacobian(*jac_args) - _bae_numpy.jacobian(*jac_args)).max()
    if max(d_gap, j_gap) > 1e-12:
        raise SystemExit(f"backend mismatch: defects {d_gap:.3e}, jacobian {j_gap:.3e}")
    print(f"parity check: defects gap {d_gap:.1e}, jacobian gap {j_gap:.1e}")


def sweep_time(impl, steps: int) -> float:
    original = kernels._impl
    kernels._impl = impl
    try:
        t0 = time.perf_counter()
        bethe.continuation_sweep(210, 210, 105, 20.0, 20.0 - 0.04 * steps, 0.04)
        return time.perf_counter() - t0
    finally:
        kernels._impl = original


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=200, help="per-call timing repeats")
    parser.add_argument("--sweep-steps", type=int, default=100, help="continuation steps to time")
    args = parser.parse_args()

    backends = {"numpy": _bae_numpy}
    if _bae_core is not None:
        backends["compiled"] = _bae_core
    else:
        print("compiled extension unavailable; timing the numpy fallback only")

    qn = bethe.ground_state_quantum_numbers(210, 210, 105)
    roots = bethe.solve_bae(bethe.HubbardParams(210, 210, 105, 4.0), qn)
    if _bae_core is not None:
        check_parity(roots)

    call_args = (roots.k, roots.lam, qn.I, qn.J, 210, 4.0)
    jac_args = (roots.k, roots.lam, 210, 4.0)
    times = {}
    for name, impl in backends.items():
        t_def = best_of(lambda: impl.defects(*call_args), args.repeats)
        t_jac = best_of(lambda: impl.jacobian(*jac_args), args.repeats)
        times[name] = (t_def, t_jac)
        print(f"{name:>9}: defects {t_def * 1e6:9.1f} us   jacobian {t_jac * 1e6:9.1f} us")
    if len(times) == 2:
        print(
            "  speedup: defects {0:.1f}x, jacobian {1:.1f}x".format(
                times["numpy"][0] / times["compiled"][0],
                times["numpy"][1] / times["compiled"][1],
            )
        )

    for name, impl in backends.items():
        dt = sweep_time(impl, args.sweep_steps)
        print(f"{name:>9}: {args.sweep_steps}-step continuation sweep {dt:7.2f} s")


if __name__ == "__main__":
    main()
