"""Littlewood-Richardson expansions and the outer-product classifications.

Skew characters are expanded into irreducibles by enumerating
column-strict fillings whose reverse reading word is a lattice word.
The enumeration fills cells row by row, right to left inside each row,
which is exactly reverse reading order, so the lattice condition can be
maintained incrementally with a single counts array.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expansion import CharacterExpansion
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    is_fat_hook,
    is_linear,
    is_near_rectangle,
    is_rectangle,
    is_two_line,
    removable_nodes,
    rotate_skew,
    skew_normalize,
)
from .verdict import MF_NO, MfVerdict

_expand_cache: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def _lr_counts(shape: SkewShape) -> dict[Partition, int]:
    """Tally LR tableau contents over all fillings of the shape."""
    spans = [(a, b) for a, b in shape.row_spans()]
    cells: list[tuple[int, bool, bool]] = []  # (row, has_right_in_shape, has_above_in_shape)
    for i, (a, b) in enumerate(spans, start=1):
        for j in range(b, a, -1):
            has_right = j < b
            has_above = i > 1 and spans[i - 2][0] < j <= spans[i - 2][1]
            cells.append((i, has_right, has_above))
    ncells = len(cells)
    tally: dict[Partition, int] = {}
    if ncells == 0:
        tally[EMPTY] = 1
        return tally

    nrows = len(spans)
    counts = [0] * (nrows + 2)
    values = [0] * ncells
    # index of the cell above / to the right of each cell, in fill order
    above_of = [-1] * ncells
    right_of = [-1] * ncells
    pos: dict[tuple[int, int], int] = {}
    k = 0
    for i, (a, b) in enumerate(spans, start=1):
        for j in range(b, a, -1):
            pos[(i, j)] = k
            if cells[k][1]:
                right_of[k] = pos[(i, j + 1)]
            if cells[k][2]:
                above_of[k] = pos[(i - 1, j)]
            k += 1

    def rec(k: int) -> None:
        if k == ncells:
            content = Partition(c for c in counts if c)
            tally[content] = tally.get(content, 0) + 1
            return
        row = cells[k][0]
        hi = row
        if right_of[k] >= 0:
            hi = min(hi, values[right_of[k]])
        lo = values[above_of[k]] + 1 if above_of[k] >= 0 else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            values[k] = v
            rec(k + 1)
            counts[v] -= 1

    rec(0)
    return tally


def skew_expand(s: SkewShape) -> CharacterExpansion:
    """Decompose the skew character of s into irreducibles."""
    key = (s.outer, s.inner)
    cached = _expand_cache.get(key)
    if cached is None:
        cached = _lr_counts(s)
        _expand_cache[key] = cached
    return CharacterExpansion(s.size, cached)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The multiplicity of [lam] in [mu] x [nu], via LR tableau counting."""
    if mu.n + nu.n != lam.n:
        raise ValueError(f"|mu| + |nu| = {mu.n + nu.n} != |lam| = {lam.n}")
    if not lam.contains(mu):
        return 0
    return skew_expand(SkewShape(lam, mu))[nu]


def outer_product_irr(a: Partition, b: Partition) -> CharacterExpansion:
    """Outer (induction) product of two irreducible characters."""
    from .partitions import enumerate_partitions

    n = a.n + b.n
    terms = {}
    for lam in enumerate_partitions(n):
        if not lam.contains(a):
            continue
        c = skew_expand(SkewShape(lam, a))[b]
        if c:
            terms[lam] = c
    return CharacterExpansion(n, terms)


def outer_product(a: CharacterExpansion, b: CharacterExpansion) -> CharacterExpansion:
    """Bilinear extension of the outer product to expansions."""
    out = CharacterExpansion.zero(a.degree + b.degree)
    for lam, m1 in a.items():
        for mu, m2 in b.items():
            out = out + outer_product_irr(lam, mu).scale(m1 * m2)
    return out


def is_mf_outer(a: Partition, b: Partition) -> MfVerdict:
    """Stembridge's classification of multiplicity-free outer products."""
    for left, right, swapped in ((a, b, False), (b, a, True)):
        norm = ("swapped",) if swapped else ()
        if is_rectangle(left) and is_rectangle(right):
            return MfVerdict(True, "outer-rect-rect", norm)
        if is_rectangle(left) and is_near_rectangle(right):
            return MfVerdict(True, "outer-rect-near-rect", norm)
        if is_rectangle(left) and is_two_line(left) and is_fat_hook(right):
            return MfVerdict(True, "outer-2line-rect-fat-hook", norm)
        if is_linear(left):
            return MfVerdict(True, "outer-linear-any", norm)
    return MF_NO


@dataclass(frozen=True)
class PathProfile:
    s_in: int
    s_out: int
    inner_is_rectangle: bool
    outer_removable_count: int


def _segments(runs: list[int]) -> list[int]:
    return [r for r in runs if r]


def _rim_paths(s: SkewShape) -> tuple[list[int], list[int]]:
    """Segment lengths of the inner and outer rim paths, in order.

    Both paths run from the lower left to the upper right corner of the
    bounding box; the inner one hugs the inner partition (starting with
    an upward segment), the outer one hugs the outer partition (starting
    rightward).  Lengths count unit cell edges.
    """
    ell = len(s.outer)
    w = s.outer.width
    inner_runs: list[int] = []
    x = 0
    up = 0
    for y in range(ell):
        target = s.inner.row(ell - y)
        if target > x:
            inner_runs.extend((up, target - x))
            up = 0
            x = target
        up += 1
    inner_runs.extend((up, w - x))

    outer_runs: list[int] = []
    x = 0
    up = 0
    for y in range(ell):
        target = s.outer.row(ell - y)
        if target > x:
            if up:
                outer_runs.append(up)
                up = 0
            outer_runs.append(target - x)
            x = target
        up += 1
    outer_runs.append(up)
    return _segments(inner_runs), _segments(outer_runs)


def path_profile(s: SkewShape) -> PathProfile:
    """Rim-path profile of a nonempty basic skew shape."""
    norm = skew_normalize(s)
    if s.size == 0:
        raise ValueError("empty shape has no rim paths")
    if norm.basic != s:
        raise ValueError(f"{s!r} is not basic; normalize first")
    inner_segs, outer_segs = _rim_paths(s)
    return PathProfile(
        s_in=min(inner_segs),
        s_out=min(outer_segs),
        inner_is_rectangle=s.inner != EMPTY and is_rectangle(s.inner),
        outer_removable_count=len(removable_nodes(s.outer)),
    )


def _component_as_partition(c: SkewShape) -> Partition | None:
    """The partition a component is equivalent to, up to rotation, else None."""
    if c.inner == EMPTY:
        return c.outer
    rot = rotate_skew(c)
    if rot.inner == EMPTY:
        return rot.outer
    return None


def is_mf_skew(s: SkewShape) -> MfVerdict:
    """Gutschwager's classification of multiplicity-free skew characters."""
    norm = skew_normalize(s)
    basic = norm.basic
    if basic.size == 0:
        return MfVerdict(True, "skew-empty")
    if basic.inner == EMPTY or norm.rotated_equal:
        return MfVerdict(True, "skew-irreducible")

    comps = norm.components
    if len(comps) > 2:
        return MF_NO
    if len(comps) == 2:
        parts = [_component_as_partition(c) for c in comps]
        if any(p is None for p in parts):
            return MF_NO
        sub = is_mf_outer(parts[0], parts[1])
        if sub:
            return MfVerdict(True, f"skew-two-components:{sub.clause}", sub.normalization)
        return MF_NO

    for shape, rotated in ((basic, False), (rotate_skew(basic), True)):
        if shape.inner == EMPTY or not is_rectangle(shape.inner):
            continue
        norm_tag = ("rotated",) if rotated else ()
        prof = path_profile(shape)
        r = prof.outer_removable_count
        if prof.s_in == 1:
            return MfVerdict(True, "skew-sin-1", norm_tag)
        if prof.s_in == 2 and r == 3:
            return MfVerdict(True, "skew-sin-2-rem-3", norm_tag)
        if prof.s_out == 1 and r == 3:
            return MfVerdict(True, "skew-sout-1-rem-3", norm_tag)
        if r == 2:
            return MfVerdict(True, "skew-rem-2", norm_tag)
    return MF_NO


def clear_caches() -> None:
    _expand_cache.clear()
