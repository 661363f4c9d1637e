"""Benchmark the two Murnaghan-Nakayama kernels.

Builds complete character tables at a few degrees with the pure-Python
kernel and, when available, the compiled one, and reports wall times
and the speedup.  Both kernels are cleared before each run so the
numbers measure cold construction.

Run:  python benchmarks/bench_characters.py [max_n]
"""

import sys
import time

from kronmf import _mn_py
from kronmf.partitions import enumerate_partitions

try:
    from kronmf import _mnkernel
except ImportError:
    _mnkernel = None


def build_table(kernel, n: int) -> float:
    kernel.clear_cache()
    parts = [tuple(p) for p in enumerate_partitions(n)]
    start = time.perf_counter()
    for lam in parts:
        for rho in parts:
            kernel.char_value(lam, rho)
    return time.perf_counter() - start


def check_agreement(n: int) -> None:
    parts = [tuple(p) for p in enumerate_partitions(n)]
    for lam in parts:
        for rho in parts:
            assert _mn_py.char_value(lam, rho) == _mnkernel.char_value(lam, rho)


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 14
    print(f"{'n':>3} {'classes':>8} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n in range(8, max_n + 1):
        classes = len(enumerate_partitions(n))
        pure = build_table(_mn_py, n)
        if _mnkernel is None:
            print(f"{n:>3} {classes:>8} {pure:>10.3f} {'-':>13} {'-':>8}")
            continue
        compiled = build_table(_mnkernel, n)
        check_agreement(n)
        speedup = pure / compiled if compiled else float("inf")
        print(f"{n:>3} {classes:>8} {pure:>10.3f} {compiled:>13.3f} {speedup:>7.1f}x")
    if _mnkernel is None:
        print("compiled kernel not built; install with Cython available to compare")


if __name__ == "__main__":
    main()
