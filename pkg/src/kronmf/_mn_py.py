"""Pure-Python Murnaghan-Nakayama kernel.

Reference implementation of the border-strip recursion; the compiled
twin in ``_mnkernel`` implements the identical algorithm with C-typed
inner loops.  Both compute exact integers (values are bounded by
irreducible dimensions, far inside int64 range at the supported table
sizes, and Python ints are unbounded anyway).
"""

from __future__ import annotations

_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _strips(lam: tuple[int, ...], k: int) -> list[tuple[int, tuple[int, ...]]]:
    """Removals of a border strip of size k: (height, remaining shape)."""
    ell = len(lam)
    out = []
    for i in range(ell):
        for r in range(i, ell):
            rest = lam[i + 1:r + 1]
            last = lam[i] + (r - i) - k
            below = lam[r + 1] if r + 1 < ell else 0
            if below <= last <= lam[r] - 1:
                mu = lam[:i] + tuple(v - 1 for v in rest) + (last,) + lam[r + 1:]
                while mu and mu[-1] == 0:
                    mu = mu[:-1]
                out.append((r - i, mu))
    return out


def char_value(lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """Character value of the irreducible labelled lam at cycle type cycles.

    ``cycles`` must be sorted weakly decreasing; the largest cycle is
    peeled off first, which keeps the branching shallow.
    """
    if not lam:
        return 1
    key = (lam, cycles)
    val = _memo.get(key)
    if val is not None:
        return val
    k = cycles[0]
    rest = cycles[1:]
    total = 0
    for height, mu in _strips(lam, k):
        sub = char_value(mu, rest)
        total += -sub if height & 1 else sub
    _memo[key] = total
    return total


def cache_size() -> int:
    return len(_memo)


def clear_cache() -> None:
    _memo.clear()
