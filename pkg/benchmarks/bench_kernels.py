"""Compare the compiled and pure-Python convolution kernels on real workloads.

    python3 benchmarks/bench_kernels.py --tmax 16 --repeat 3
"""

from __future__ import annotations

import argparse
import os
import statistics
import time

from siegel6.classical import igusa_generator
from siegel6.kernels import available_backends, convolve
from siegel6.rcpoly import elliptic_rc, psi
from siegel6.vvforms import rc_apply


def scalar_product_case(tmax: int):
    f = igusa_generator("phi4", tmax)
    g = igusa_generator("chi10", tmax)
    left = {tuple(n): [int(c)] for n, c in f.coeffs.items()}
    right = {tuple(n): [int(c)] for n, c in g.coeffs.items()}
    targets = sorted(set(left) | {tuple(n) for n in g.coeffs})
    return left, right, [(0, 0, [(0, 1)])], 1, targets


def wide_groups_case(tmax: int):
    """Many channels per side, as in the vector-valued operators."""
    f = igusa_generator("phi4", tmax)
    g = igusa_generator("phi6", tmax)
    left = {tuple(n): [int(c) * x for x in (1, *n.scaled_entries())] for n, c in f.coeffs.items()}
    right = {tuple(n): [int(c) * x for x in (1, *n.scaled_entries())] for n, c in g.coeffs.items()}
    groups = [(a, b, [(o, (a + 1) * (b + 2) - o) for o in range(7)]) for a in range(4) for b in range(4)]
    targets = sorted(set(left))
    return left, right, groups, 7, targets


def time_backend(case, backend: str, repeat: int, threads: int):
    left, right, groups, nout, targets = case
    runs, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = convolve(left, right, groups, nout, targets, backend=backend, threads=threads)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), result


def rc_case_timing(tmax: int, backend: str):
    os.environ["SIEGEL6_KERNEL"] = backend
    forms = [igusa_generator("phi4", tmax), igusa_generator("phi6", tmax)]
    P = psi(elliptic_rc(6, 4, 6))
    t0 = time.perf_counter()
    F = rc_apply(P, forms, tmax=tmax, verify=False)
    return time.perf_counter() - t0, F.coeffs


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tmax", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args(argv)

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    cases = {
        "scalar product": scalar_product_case(args.tmax),
        "16 channel pairs": wide_groups_case(args.tmax),
    }
    for label, case in cases.items():
        timings = {}
        results = {}
        for b in backends:
            timings[b], results[b] = time_backend(case, b, args.repeat, args.threads)
        agree = len({repr(sorted(r.items())) for r in results.values()}) == 1
        line = "  ".join(f"{b}={timings[b]:.3f}s" for b in backends)
        speed = ""
        if "python" in timings and "compiled" in timings and timings["compiled"] > 0:
            speed = f"  speedup={timings['python'] / timings['compiled']:.1f}x"
        print(f"{label:<18} {line}{speed}  agree={agree}")

    rc = {}
    for b in backends:
        rc[b] = rc_case_timing(args.tmax, b)
    agree = len({repr(sorted(r.items())) for _, r in rc.values()}) == 1
    line = "  ".join(f"{b}={rc[b][0]:.3f}s" for b in backends)
    speed = ""
    if "python" in rc and "compiled" in rc:
        speed = f"  speedup={rc['python'][0] / rc['compiled'][0]:.1f}x"
    print(f"{'weight (6,10) RC':<18} {line}{speed}  agree={agree}")


if __name__ == "__main__":
    main()
