"""Integer partitions, Young diagrams and skew shapes.

Everything downstream (characters, Littlewood-Richardson expansions, the
Kronecker engines) consumes the types defined here.  All values are
immutable and hashable, so they can be used as memo keys and shared
freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache, reduce
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction; anything else that is
    not weakly decreasing and positive is rejected.  Equality, ordering
    and hashing are inherited from tuple, so two equal partitions always
    hash identically.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    @property
    def depth(self) -> int:
        return self.n - self.width

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """Rowwise containment of Young diagrams."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def row(self, i: int) -> int:
        """Part at 1-based row i, zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


class Node(NamedTuple):
    """A diagram node in 1-based (row, col) coordinates."""

    row: int
    col: int


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram."""
    if not p:
        return EMPTY
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return Partition(cols)


def intersect(p: Partition, q: Partition) -> Partition:
    """Rowwise minimum: the largest partition contained in both."""
    return Partition(min(a, b) for a, b in zip(p, q))


def partition_sum(p: Partition, q: Partition) -> Partition:
    """Componentwise sum, padding the shorter with zeros."""
    if len(p) < len(q):
        p, q = q, p
    return Partition(a + (q[i] if i < len(q) else 0) for i, a in enumerate(p))


def removable_nodes(p: Partition) -> list[Node]:
    """Corners that can be removed leaving a partition, top to bottom."""
    out = []
    for i, part in enumerate(p):
        below = p[i + 1] if i + 1 < len(p) else 0
        if part > below:
            out.append(Node(i + 1, part))
    return out


def addable_nodes(p: Partition) -> list[Node]:
    """Positions where a node can be added, top to bottom."""
    out = [Node(1, p[0] + 1)] if p else [Node(1, 1)]
    for i in range(1, len(p)):
        if p[i] < p[i - 1]:
            out.append(Node(i + 1, p[i] + 1))
    if p:
        out.append(Node(len(p) + 1, 1))
    return out


def remove_node(p: Partition, node: Node) -> Partition:
    """Remove a removable corner node."""
    i = node.row - 1
    if not (0 <= i < len(p)) or p[i] != node.col:
        raise ValueError(f"{node} is not a corner of {p!r}")
    return Partition(p[:i] + (p[i] - 1,) + p[i + 1:])


def add_node(p: Partition, node: Node) -> Partition:
    """Add a node at an addable position."""
    i = node.row - 1
    if i == len(p):
        if node.col != 1:
            raise ValueError(f"{node} is not addable to {p!r}")
        return Partition(p + (1,))
    if not (0 <= i < len(p)) or p[i] + 1 != node.col:
        raise ValueError(f"{node} is not addable to {p!r}")
    return Partition(p[:i] + (p[i] + 1,) + p[i + 1:])


def hook_length(p: Partition, i: int, j: int) -> int:
    """Hook length of the 1-based node (i, j)."""
    arm = p[i - 1] - j
    leg = sum(1 for r in range(i, len(p)) if p[r] >= j)
    return arm + leg + 1


def hook_counts(p: Partition) -> dict[str, int]:
    """Counts of small hooks: nodes of hook length 1, 2 and 3.

    ``h21`` counts the non-linear 3-hooks, i.e. hooks of size three
    with arm and leg both of length one.
    """
    h1 = h2 = h3 = h21 = 0
    for i in range(1, len(p) + 1):
        for j in range(1, p[i - 1] + 1):
            h = hook_length(p, i, j)
            if h == 1:
                h1 += 1
            elif h == 2:
                h2 += 1
            elif h == 3:
                h3 += 1
                if p[i - 1] - j == 1:
                    h21 += 1
    return {"h1": h1, "h2": h2, "h3": h3, "h21": h21}


@cache
def dimension(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    if not p:
        return 1
    num = factorial(p.n)
    den = reduce(
        lambda acc, h: acc * h,
        (hook_length(p, i, j) for i in range(1, len(p) + 1) for j in range(1, p[i - 1] + 1)),
        1,
    )
    assert num % den == 0
    return num // den


def durfee_length(p: Partition) -> int:
    """Side of the largest square fitting inside the diagram."""
    d = 0
    for i, part in enumerate(p, start=1):
        if part >= i:
            d = i
    return d


def enumerate_partitions(
    n: int,
    max_length: int | None = None,
    max_width: int | None = None,
) -> list[Partition]:
    """All partitions of n under the constraints, in descending lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    max_length = n if max_length is None else min(max_length, n)
    max_width = n if max_width is None else min(max_width, n)
    out: list[Partition] = []

    def rec(remaining: int, cap: int, rows_left: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if rows_left == 0:
            return
        top = min(cap, remaining)
        # least feasible first part: remaining split across rows_left rows
        low = -(-remaining // rows_left)
        for part in range(top, low - 1, -1):
            prefix.append(part)
            rec(remaining - part, part, rows_left - 1, prefix)
            prefix.pop()

    rec(n, max_width, max_length, [])
    return out


# --- shape classification (the vocabulary of the multiplicity-free families) ---

SHAPE_TAGS = ("empty", "linear", "natural-label", "two-line", "hook", "rectangle", "fat-hook", "general")


@dataclass(frozen=True)
class ShapeClass:
    tag: str
    qualifiers: frozenset[str]

    def has(self, qualifier: str) -> bool:
        return qualifier in self.qualifiers


def is_linear(p: Partition) -> bool:
    return len(p) <= 1 or p[0] == 1


def is_rectangle(p: Partition) -> bool:
    return len(set(p)) <= 1


def is_hook(p: Partition) -> bool:
    return bool(p) and all(part == 1 for part in p[1:])


def is_fat_hook(p: Partition) -> bool:
    """At most two different part values."""
    return len(set(p)) <= 2


def is_two_line(p: Partition) -> bool:
    return bool(p) and (len(p) == 2 or p[0] == 2)


def is_near_rectangle(p: Partition) -> bool:
    """A rectangle with one extra row or column (a special fat hook).

    Checked as: deleting one part of p, or one part of its conjugate,
    leaves a rectangle.  Closed under conjugation by construction.
    """
    if len(set(p)) != 2:
        return False
    for q in (p, conjugate(p)):
        for i in range(len(q)):
            rest = q[:i] + q[i + 1:]
            if len(set(rest)) <= 1:
                return True
    return False


def classify_shape(p: Partition) -> ShapeClass:
    """Total classification into one tag plus refinement flags."""
    quals = set()
    if is_near_rectangle(p):
        quals.add("near-rectangle")
    if is_rectangle(p) and p and is_two_line(p):
        quals.add("two-line-rectangle")
    if is_rectangle(p) and len(p) >= 3 and p[0] >= 3:
        quals.add("fat-rectangle")
    if is_hook(p) and len(p) >= 2 and p[0] >= 2:
        quals.add("proper-hook")
    if is_fat_hook(p) and not (is_rectangle(p) or is_hook(p) or is_two_line(p)):
        quals.add("proper-fat-hook")

    if not p:
        tag = "empty"
    elif is_linear(p):
        tag = "linear"
    elif p.n >= 3 and (p == Partition((p.n - 1, 1)) or conjugate(p) == Partition((p.n - 1, 1))):
        tag = "natural-label"
    elif is_two_line(p):
        tag = "two-line"
    elif is_hook(p):
        tag = "hook"
    elif is_rectangle(p):
        tag = "rectangle"
    elif is_fat_hook(p):
        tag = "fat-hook"
    else:
        tag = "general"
    return ShapeClass(tag, frozenset(quals))


def split_rows(p: Partition, index_set: Iterable[int]) -> tuple[Partition, Partition]:
    """Split rows into (selected, complement) by 1-based row indices."""
    idx = set(index_set)
    bad = [i for i in idx if not (1 <= i <= len(p))]
    if bad:
        raise ValueError(f"row indices {sorted(bad)} out of range for {p!r}")
    picked = sorted((p[i - 1] for i in idx), reverse=True)
    rest = sorted((p[i - 1] for i in range(1, len(p) + 1) if i not in idx), reverse=True)
    return Partition(picked), Partition(rest)


# --- skew shapes ---


class SkewShape:
    """A nested pair of partitions outer/inner, inner padded with zeros."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        outer = outer if isinstance(outer, Partition) else Partition(outer)
        inner = inner if isinstance(inner, Partition) else Partition(inner)
        if not outer.contains(inner):
            raise ValueError(f"inner {inner!r} not contained in outer {outer!r}")
        self.outer = outer
        self.inner = inner

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def row_spans(self) -> list[tuple[int, int]]:
        """Per row: half-open column span (start, end) of the cells."""
        return [(self.inner.row(i), self.outer[i - 1]) for i in range(1, len(self.outer) + 1)]

    def cells(self) -> list[Node]:
        return [
            Node(i, j)
            for i, (a, b) in enumerate(self.row_spans(), start=1)
            for j in range(a + 1, b + 1)
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewShape) and self.outer == other.outer and self.inner == other.inner

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __str__(self) -> str:
        return format_skew(self)

    def __repr__(self) -> str:
        return f"SkewShape({tuple(self.outer)!r}, {tuple(self.inner)!r})"


@dataclass(frozen=True)
class SkewNormalForm:
    basic: SkewShape
    components: tuple[SkewShape, ...]
    rotated_equal: bool


def _strip_to_basic(s: SkewShape) -> SkewShape:
    """Drop empty rows and columns, keeping the cells' relative layout."""
    spans = [(a, b) for a, b in s.row_spans() if a < b]
    if not spans:
        return SkewShape(EMPTY, EMPTY)
    cols = sorted({j for a, b in spans for j in range(a + 1, b + 1)})
    remap = {c: k + 1 for k, c in enumerate(cols)}
    # a nonempty row's own columns are all kept, so its span maps onto a
    # contiguous block of kept columns
    outer = [remap[b] for a, b in spans]
    inner = [remap[a + 1] - 1 for a, b in spans]
    return SkewShape(Partition(outer), Partition(inner))


def rotate_skew(s: SkewShape) -> SkewShape:
    """Rotate the diagram by 180 degrees inside its bounding box."""
    if s.size == 0:
        return SkewShape(EMPTY, EMPTY)
    ell = len(s.outer)
    w = s.outer.width
    outer = [w - s.inner.row(ell + 1 - r) for r in range(1, ell + 1)]
    inner = [w - s.outer.row(ell + 1 - r) for r in range(1, ell + 1)]
    return SkewShape(Partition(outer), Partition(inner))


def _components(s: SkewShape) -> list[SkewShape]:
    """Edge-connected components, top to bottom; corner contact separates.

    Consecutive nonempty rows belong to one component iff their column
    ranges share a column; touching only at a corner does not connect.
    """
    spans = s.row_spans()
    comps: list[SkewShape] = []
    start = 0
    rows = len(spans)
    while start < rows:
        if spans[start][0] >= spans[start][1]:
            start += 1
            continue
        end = start
        while end + 1 < rows:
            a_next, b_next = spans[end + 1]
            if a_next >= b_next or spans[end][0] >= b_next:
                break
            end += 1
        block = spans[start:end + 1]
        sub = SkewShape(Partition(b for a, b in block), Partition(a for a, b in block))
        comps.append(_strip_to_basic(sub))
        start = end + 1
    return comps


def skew_normalize(s: SkewShape) -> SkewNormalForm:
    """Basic form, connected components, and whether the rotation is a partition."""
    basic = _strip_to_basic(s)
    comps = tuple(_components(basic))
    if basic.size == 0:
        rotated_equal = True
    else:
        rotated_equal = rotate_skew(basic).inner == EMPTY
    return SkewNormalForm(basic, comps, rotated_equal)


def is_proper_skew(s: SkewShape) -> bool:
    """True iff neither the basic shape nor its rotation is a partition diagram."""
    norm = skew_normalize(s)
    if norm.basic.size == 0:
        return False
    return norm.basic.inner != EMPTY and not norm.rotated_equal


def enumerate_basic_skew_shapes(size: int) -> list[SkewShape]:
    """All basic skew shapes with the given number of cells.

    Rows are described by column spans (a_i, b_i]; the basic conditions
    are a_i < b_i, a_i <= b_{i+1}, a weakly decreasing, b weakly
    decreasing and a_last = 0.
    """
    if size < 0:
        raise ValueError("size must be nonnegative")
    if size == 0:
        return [SkewShape(EMPTY, EMPTY)]
    out: list[SkewShape] = []

    def rec(rows: list[tuple[int, int]], remaining: int) -> None:
        if remaining == 0:
            if rows[-1][0] == 0:
                out.append(SkewShape(
                    Partition([b for a, b in rows]),
                    Partition([a for a, b in rows]),
                ))
            return
        prev_a, prev_b = rows[-1]
        for b in range(prev_b, max(prev_a, 1) - 1, -1):
            for a in range(min(prev_a, b - 1), -1, -1):
                if b - a <= remaining:
                    rows.append((a, b))
                    rec(rows, remaining - (b - a))
                    rows.pop()

    for b in range(size, 0, -1):
        for a in range(b - 1, -1, -1):
            if b - a <= size:
                rec([(a, b)], size - (b - a))
    return out


# --- text grammar ---

_TERM_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse the ``a`` / ``a^b`` comma grammar, e.g. ``5,4,2^3,1``."""
    s = re.sub(r"\s+", "", text)
    if not s:
        return EMPTY
    parts: list[int] = []
    for term in s.split(","):
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"bad partition term {term!r}")
        a = int(m.group(1))
        b = int(m.group(2)) if m.group(2) else 1
        if a <= 0 or b <= 0:
            raise ValueError(f"bad partition term {term!r}")
        parts.extend([a] * b)
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ValueError(f"{text!r}: {exc}") from None


def format_partition(p: Partition) -> str:
    """Render with exponents for runs of length three or more."""
    if not p:
        return ""
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        run = j - i
        out.append(f"{p[i]}^{run}" if run >= 3 else ",".join([str(p[i])] * run))
        i = j
    return ",".join(out)


def parse_skew(text: str) -> SkewShape:
    """Parse ``outer/inner`` in the partition grammar, e.g. ``4,3,1/2,1``."""
    if text.count("/") > 1:
        raise ValueError(f"bad skew shape {text!r}")
    outer_text, _, inner_text = text.partition("/")
    return SkewShape(parse_partition(outer_text), parse_partition(inner_text))


def format_skew(s: SkewShape) -> str:
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"


def iter_subpartitions(p: Partition, size: int) -> Iterator[Partition]:
    """Partitions of the given size contained rowwise in p."""

    def rec(i: int, remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        if i >= len(p):
            return
        top = min(cap, p[i], remaining)
        for part in range(top, 0, -1):
            rows_left = len(p) - i - 1
            room = sum(min(part, p[i + 1 + r]) for r in range(rows_left))
            if remaining - part > room:
                continue
            prefix.append(part)
            yield from rec(i + 1, remaining - part, part, prefix)
            prefix.pop()

    if size == 0:
        yield EMPTY
    elif size > 0:
        yield from rec(0, size, p.width if p else 0, [])
