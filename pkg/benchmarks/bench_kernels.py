"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat R]

Times each raw kernel at a few lengths, then one end-to-end branch
computation with the series layer routed through each backend in turn.
"""
from __future__ import annotations

import argparse
import random
import timeit
from contextlib import contextmanager

from nodalis import kernels
from nodalis.field import prime_field
from nodalis.parsing import parse_polynomial
from nodalis.prep import factor_node_branches
from nodalis.series import revert_unit_times_x
from nodalis.translate import branch_gap_unit

P = 1_000_003


@contextmanager
def routed(backend):
    saved = {k: getattr(kernels, k) for k in ("conv_int", "conv_mod", "inv_mod", "inv_int")}
    for k in saved:
        setattr(kernels, k, getattr(backend, k))
    try:
        yield
    finally:
        for k, v in saved.items():
            setattr(kernels, k, v)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_rows(py, cy, repeat):
    rng = random.Random(0)
    rows = []
    for n in (64, 256, 1024):
        a = [rng.randrange(P) for _ in range(n)]
        b = [rng.randrange(P) for _ in range(n)]
        ai = [rng.randint(-10**6, 10**6) for _ in range(n)]
        bi = [rng.randint(-10**6, 10**6) for _ in range(n)]
        ai[0] = 7
        cases = {
            "conv_mod": lambda m: m.conv_mod(a, b, n, P),
            "conv_int": lambda m: m.conv_int(ai, bi, n),
            "inv_mod": lambda m: m.inv_mod(a, n, P),
            "inv_int": lambda m: m.inv_int(ai[: min(n, 128)], min(n, 128)),
        }
        for name, call in cases.items():
            assert call(py) == call(cy), f"backends disagree on {name}"
            tp = best(lambda: call(py), repeat)
            tc = best(lambda: call(cy), repeat)
            rows.append((name, n, tp, tc))
    return rows


def end_to_end(py, cy, repeat):
    """(label, N, python s, cython s) for two pipelines.

    Branch factorisation is dominated by the Weierstrass division loops,
    which do not go through the kernels; series reversion is dominated by
    truncated products, which do.
    """
    K = prime_field(P)
    F = parse_polynomial("Y^2 - X^2 - X^3 + 3*X*Y^3 - 5*X^4*Y", K)
    b = factor_node_branches(F, 182)
    U = branch_gap_unit(b)
    jobs = [
        ("factor_node_branches", 120, lambda: factor_node_branches(F, 120)),
        ("revert_unit_times_x", 100, lambda: revert_unit_times_x(U, 100)),
    ]
    rows = []
    for label, N, job in jobs:
        times = []
        for backend in (py, cy):
            with routed(backend):
                times.append(best(job, repeat))
        rows.append((label, N, *times))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py, cy = kernels.python_backend, kernels.compiled_backend
    if cy is None:
        print("compiled kernels unavailable (pure-Python build); nothing to compare")
        return
    print(f"{'kernel':<10}{'n':>6}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for name, n, tp, tc in kernel_rows(py, cy, args.repeat):
        print(f"{name:<10}{n:>6}{tp:>12.5f}{tc:>12.5f}{tp / tc:>8.1f}x")
    print(f"\nend to end over F_{P}")
    for label, N, tp, tc in end_to_end(py, cy, args.repeat):
        print(f"{label:<22} N={N:<4} python {tp:.3f}s  cython {tc:.3f}s  {tp / tc:.1f}x")


if __name__ == "__main__":
    main()
