# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Murnaghan-Nakayama kernel.

Same border-strip recursion as ``_mn_py``, with the strip enumeration
running over C arrays.  Values stay well inside int64 for every
partition size the character-table ceiling admits (they are bounded by
irreducible dimensions, about 1.8e6 at n = 14); a guard enforces that.
"""

from cpython.tuple cimport PyTuple_GET_SIZE

_memo = {}

DEF MAXPARTS = 64

cdef long long _char_rec(long long* lam, int ell, tuple cycles, int ci) except? -12345:
    cdef int k, i, r, m, nell
    cdef long long last, below, total, sub
    cdef long long mu[MAXPARTS]
    if ell == 0:
        return 1
    if ci == PyTuple_GET_SIZE(cycles):
        # exhausted cycles with cells left: cannot happen for equal sizes
        return 0
    key = (tuple([lam[i] for i in range(ell)]), cycles[ci:])
    cached = _memo.get(key)
    if cached is not None:
        return <long long> cached
    k = cycles[ci]
    total = 0
    for i in range(ell):
        for r in range(i, ell):
            last = lam[i] + (r - i) - k
            below = lam[r + 1] if r + 1 < ell else 0
            if below <= last <= lam[r] - 1:
                nell = 0
                for m in range(i):
                    mu[nell] = lam[m]
                    nell += 1
                for m in range(i + 1, r + 1):
                    mu[nell] = lam[m] - 1
                    nell += 1
                mu[nell] = last
                nell += 1
                for m in range(r + 1, ell):
                    mu[nell] = lam[m]
                    nell += 1
                while nell > 0 and mu[nell - 1] == 0:
                    nell -= 1
                sub = _char_rec(mu, nell, cycles, ci + 1)
                if (r - i) & 1:
                    total -= sub
                else:
                    total += sub
    _memo[key] = total
    return total


def char_value(tuple lam, tuple cycles):
    """Exact character value; mirrors ``_mn_py.char_value``."""
    cdef long long buf[MAXPARTS]
    cdef int ell = len(lam)
    cdef int i
    if ell > MAXPARTS:
        raise ValueError("partition has too many parts for the compiled kernel")
    n = 0
    for i in range(ell):
        buf[i] = lam[i]
        n += lam[i]
    if n > 20:
        # int64 safety margin; callers fall back to the pure kernel
        raise OverflowError("compiled kernel supports n <= 20")
    return _char_rec(buf, ell, cycles, 0)


def cache_size():
    return len(_memo)


def clear_cache():
    _memo.clear()
