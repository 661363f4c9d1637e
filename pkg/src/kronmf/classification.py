"""The multiplicity-free classification and its closed-form products.

Predicates for pairs, triples and skew-times-irreducible products, and
the explicit expansions for every family on the classification list:
products with the natural character, staircase and two-row squares,
two-row times hook via the four-indicator formula, and the small-depth
rectangle products.  Clause matching always normalizes by conjugation
and reports the first clause that fires, in classification order, so
verdict provenance is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expansion import CharacterExpansion
from .kronecker import kron_coefficient, kron_product
from .littlewood_richardson import skew_expand
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    add_node,
    addable_nodes,
    conjugate,
    durfee_length,
    enumerate_partitions,
    hook_counts,
    is_fat_hook,
    is_hook,
    is_linear,
    is_rectangle,
    remove_node,
    removable_nodes,
    rotate_skew,
    skew_normalize,
)
from .verdict import MF_NO, MfVerdict

_CONJ_COMBOS = (
    ((False, False), ()),
    ((True, False), ("conjugate-left",)),
    ((False, True), ("conjugate-right",)),
    ((True, True), ("conjugate-left", "conjugate-right")),
)

_EXCEPTIONAL_PAIRS = (
    (Partition((3, 3, 3)), Partition((6, 3))),
    (Partition((3, 3, 3)), Partition((5, 4))),
    (Partition((4, 4, 4)), Partition((6, 6))),
)


def _try_partition(parts) -> Partition | None:
    """The indicator convention: a non-partition label contributes nothing."""
    try:
        return Partition(parts)
    except ValueError:
        return None


def _pair_clause(a: Partition, b: Partition, n: int, clause: int) -> bool:
    def one_sided(x: Partition, y: Partition) -> bool:
        if clause == 1:
            return x == Partition((n,))
        if clause == 2:
            return n >= 2 and x == Partition((n - 1, 1)) and is_fat_hook(y)
        if clause == 3:
            k, r = divmod(n, 2)
            shape = Partition((k + 1, k)) if r else Partition((k, k))
            return x == shape and y == shape
        if clause == 4:
            if n % 2:
                return False
            k = n // 2
            if x != Partition((k, k)):
                return False
            if is_hook(y):
                return True
            others = [_try_partition((k + 1, k - 1)), _try_partition((n - 3, 3))]
            return any(y == o for o in others if o is not None)
        if clause == 5:
            if not (is_rectangle(x) and x):
                return False
            others = [_try_partition((n - 2, 2)), _try_partition((n - 2, 1, 1))]
            return any(y == o for o in others if o is not None)
        if clause == 6:
            return (x, y) in _EXCEPTIONAL_PAIRS or (y, x) in _EXCEPTIONAL_PAIRS
        raise AssertionError(clause)

    return one_sided(a, b) or one_sided(b, a)


def is_mf_pair(lam: Partition, mu: Partition) -> MfVerdict:
    """Is [lam].[mu] multiplicity-free?  The complete classification."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: {lam.n} vs {mu.n}")
    if lam.n < 1:
        raise ValueError("degree must be at least 1")
    n = lam.n
    lam_t, mu_t = conjugate(lam), conjugate(mu)
    for clause in range(1, 7):
        for (cl, cr), norm in _CONJ_COMBOS:
            a = lam_t if cl else lam
            b = mu_t if cr else mu
            if _pair_clause(a, b, n, clause):
                return MfVerdict(True, f"pair-case-{clause}", norm)
    return MF_NO


def is_mf_triple(lam: Partition, mu: Partition, nu: Partition) -> MfVerdict:
    """Is the triple product multiplicity-free?

    Linear operands are peeled off (trivial and sign characters only
    permute or twist constituents); three non-linear operands never give
    a multiplicity-free product.
    """
    if not (lam.n == mu.n == nu.n):
        raise ValueError(f"degree mismatch: {lam.n}, {mu.n}, {nu.n}")
    if lam.n < 1:
        raise ValueError("degree must be at least 1")
    nonlinear = [p for p in (lam, mu, nu) if not is_linear(p)]
    if len(nonlinear) == 3:
        return MF_NO
    if len(nonlinear) == 2:
        sub = is_mf_pair(nonlinear[0], nonlinear[1])
        if sub:
            return MfVerdict(True, f"triple-reduced:{sub.clause}", sub.normalization + ("linear-reduction",))
        return MF_NO
    if len(nonlinear) == 1:
        return MfVerdict(True, "triple-reduced-irreducible", ("linear-reduction",))
    return MfVerdict(True, "triple-all-linear")


def _skew_equivalent_partition(s: SkewShape) -> Partition:
    norm = skew_normalize(s)
    if norm.basic.inner == EMPTY:
        return norm.basic.outer
    rot = rotate_skew(norm.basic)
    assert rot.inner == EMPTY
    return rot.outer


def is_mf_skew_times_irr(s: SkewShape, alpha: Partition) -> MfVerdict:
    """Is [s].[alpha] multiplicity-free?  Clause tests compare expansions."""
    if s.size != alpha.n:
        raise ValueError(f"size mismatch: |s| = {s.size} vs |alpha| = {alpha.n}")
    norm = skew_normalize(s)
    if norm.basic.size == 0:
        return MfVerdict(True, "skew-irr-empty")
    if norm.basic.inner == EMPTY or norm.rotated_equal:
        sub = is_mf_pair(_skew_equivalent_partition(s), alpha)
        if sub:
            return MfVerdict(True, f"skew-irr-reduced:{sub.clause}", sub.normalization)
        return MF_NO

    n = alpha.n
    chi = skew_expand(norm.basic)
    chi_t = chi.conjugate()
    alpha_t = conjugate(alpha)
    combos = (
        ((chi, alpha), ()),
        ((chi, alpha_t), ("conjugate-irr",)),
        ((chi_t, alpha), ("twist-skew",)),
        ((chi_t, alpha_t), ("twist-skew", "conjugate-irr")),
    )

    row_pair = CharacterExpansion(
        n, {Partition((n,)): 1, Partition((n - 1, 1)): 1}
    ) if n >= 2 else None
    near_pair = None
    if n % 2 == 0 and n >= 4:
        k = n // 2
        near_pair = CharacterExpansion(
            n, {Partition((k + 1, k - 1)): 1, Partition((k, k)): 1}
        )

    if chi.is_multiplicity_free() and is_linear(alpha):
        return MfVerdict(True, "skew-irr-case-1")
    for (c, a), norm_tag in combos:
        if row_pair is not None and c == row_pair and is_rectangle(a) and len(a) >= 2 and a[0] >= 2:
            return MfVerdict(True, "skew-irr-case-2", norm_tag)
    for (c, a), norm_tag in combos:
        if near_pair is not None and c == near_pair and a == Partition((n // 2, n // 2)):
            return MfVerdict(True, "skew-irr-case-3", norm_tag)
    return MF_NO


def product_with_natural(mu: Partition) -> CharacterExpansion:
    """[mu].[n-1,1] from removable/addable node bookkeeping."""
    n = mu.n
    if n < 3:
        raise ValueError("defined for n >= 3")
    acc = CharacterExpansion.zero(n)
    for a_node in removable_nodes(mu):
        mu_a = remove_node(mu, a_node)
        for b_node in addable_nodes(mu_a):
            acc = acc + CharacterExpansion.irreducible(add_node(mu_a, b_node))
    return acc - CharacterExpansion.irreducible(mu)


def staircase_square(k: int) -> CharacterExpansion:
    """Square of the staircase [k+1,k]: everything of length at most 4."""
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * k + 1
    return CharacterExpansion(n, {p: 1 for p in enumerate_partitions(n, max_length=4)})


def _all_even(p: Partition) -> bool:
    return all(part % 2 == 0 for part in p)


def _all_odd(p: Partition) -> bool:
    return all(part % 2 == 1 for part in p)


def kk_square(k: int) -> CharacterExpansion:
    """Square of [k,k]: even-part labels up to length 4, odd at length 4."""
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * k
    terms = {}
    for p in enumerate_partitions(n, max_length=4):
        if _all_even(p) or (_all_odd(p) and len(p) == 4):
            terms[p] = 1
    return CharacterExpansion(n, terms)


def kk_times_near(k: int) -> CharacterExpansion:
    """[k,k].[k+1,k-1]: the complement of the square inside length <= 4."""
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * k
    terms = {}
    for p in enumerate_partitions(n, max_length=4):
        if len(p) < 4 and not _all_even(p):
            terms[p] = 1
        elif len(p) == 4 and not _all_even(p) and not _all_odd(p):
            terms[p] = 1
    return CharacterExpansion(n, terms)


def kk_times_hook_mult(k: int, b: int, nu: Partition, engine: str = "auto") -> int:
    """Multiplicity of [nu] in [k,k].[n-b,1^b], n = 2k.

    Double hooks go through the four-indicator formula; hook-shaped nu
    falls back to the engine (the source formula for hooks is not
    reproduced here); Durfee length three or more never contributes.
    The result is asserted to be 0 or 1.
    """
    n = 2 * k
    if k < 1 or not (0 <= b <= n - 1):
        raise ValueError(f"bad hook parameters k={k}, b={b}")
    if nu.n != n:
        raise ValueError(f"degree mismatch: {nu.n} vs {n}")
    if durfee_length(nu) >= 3:
        return 0
    if is_hook(nu):
        hook = Partition((n - b,) + (1,) * b)
        g = kron_coefficient(Partition((k, k)), hook, nu, engine)
        if g not in (0, 1):
            raise RuntimeError(f"hook constituent multiplicity {g} > 1 at {nu}")
        return g

    a1, a2 = nu[0], nu[1]
    b2 = sum(1 for part in nu[2:] if part == 2)
    b1 = sum(1 for part in nu[2:] if part == 1)
    if a1 - a2 > b1:
        nu = conjugate(nu)
        b = n - 1 - b
        a1, a2 = nu[0], nu[1]
        b2 = sum(1 for part in nu[2:] if part == 2)
        b1 = sum(1 for part in nu[2:] if part == 1)
    assert a1 - a2 <= b1

    x1 = int(a2 <= k - b2 - 1 <= a1 and b1 + 2 * b2 < b < b1 + 2 * b2 + 3)
    x2 = int(a2 <= k - b2 <= a1 and b1 + 2 * b2 <= b <= b1 + 2 * b2 + 3)
    x3 = int(a2 <= k - b2 + 1 <= a1 and b1 + 2 * b2 < b < b1 + 2 * b2 + 3)
    x4 = int(a2 + b2 + b1 == k and b1 + 2 * b2 + 1 <= b <= b1 + 2 * b2 + 2)
    g = x1 + x2 + x3 - x4
    if g not in (0, 1):
        raise RuntimeError(f"indicator formula produced {g} at k={k}, b={b}, nu={nu}")
    return g


KK_N33_SMALL_EXCEPTIONS = (
    Partition((4, 2)),
    Partition((4, 1, 1)),
    Partition((4, 3)),
    Partition((3, 3, 3)),
)


def _rect_n22_terms(a: int, b: int) -> list[tuple[int, ...]]:
    terms = [(a,) * b]
    if a > 2:
        terms.append((a,) * (b - 1) + (a - 1, 1))
    terms.append((a,) * (b - 2) + (a - 1, a - 1, 1, 1))
    if b > 3:
        terms.append((a + 1, a + 1) + (a,) * (b - 4) + (a - 1, a - 1))
    if b > 2:
        terms.append((a + 1,) + (a,) * (b - 2) + (a - 1,))
        terms.append((a + 1,) + (a,) * (b - 3) + (a - 1, a - 1, 1))
    terms.append((a + 2,) + (a,) * (b - 2) + (a - 2,))
    if a > 2:
        terms.append((a + 1,) + (a,) * (b - 2) + (a - 2, 1))
    if a > 3:
        terms.append((a,) * (b - 1) + (a - 2, 2))
    return terms


def _rect_n212_terms(a: int, b: int) -> list[tuple[int, ...]]:
    terms = []
    if b > 2:
        terms.append((a + 2,) + (a,) * (b - 3) + (a - 1, a - 1))
    terms.append((a + 1,) + (a,) * (b - 2) + (a - 1,))
    terms.append((a + 1,) + (a,) * (b - 2) + (a - 2, 1))
    terms.append((a,) * (b - 2) + (a - 1, a - 1, 2))
    if b > 2:
        terms.append((a + 1,) + (a,) * (b - 3) + (a - 1, a - 1, 1))
        terms.append((a + 1, a + 1) + (a,) * (b - 3) + (a - 2,))
    terms.append((a,) * (b - 1) + (a - 2, 1, 1))
    terms.append((a,) * (b - 1) + (a - 1, 1))
    return terms


def _kk_n33_terms(k: int) -> list[tuple[int, ...]]:
    return [
        (k + 1, k - 1),
        (k + 1, k - 2, 1),
        (k, k - 1, 1),
        (k, k - 2, 1, 1),
        (k, k - 2, 2),
        (k, k - 3, 3),
        (k - 1, k - 1, 2),
        (k - 1, k - 2, 2, 1),
        (k + 3, k - 3),
        (k + 2, k - 3, 1),
        (k + 1, k - 3, 2),
    ]


def small_depth_products(
    kind: str,
    a: int | None = None,
    b: int | None = None,
    k: int | None = None,
    engine: str = "auto",
) -> CharacterExpansion:
    """Closed-form products of a rectangle or [k,k] with a depth-2/3 label.

    kinds: ``rect-times-n22`` ([n-2,2].[a^b], a,b>1, ab>=6),
    ``rect-times-n212`` ([n-2,1^2].[a^b], a>=b>1), and
    ``kk-times-n33`` ([n-3,3].[k,k], closed form for 2k>16, engine
    product for 6<=2k<=16 where only the exceptional partners are
    multiplicity-free).
    """
    if kind == "rect-times-n22":
        if a is None or b is None or a <= 1 or b <= 1 or a * b < 6:
            raise ValueError("requires a, b > 1 and ab >= 6")
        raw = _rect_n22_terms(a, b)
        degree = a * b
    elif kind == "rect-times-n212":
        if a is None or b is None or not (a >= b > 1):
            raise ValueError("requires a >= b > 1")
        raw = _rect_n212_terms(a, b)
        degree = a * b
    elif kind == "kk-times-n33":
        if k is None or 2 * k < 6:
            raise ValueError("requires k with 2k >= 6")
        n = 2 * k
        if n <= 16:
            return kron_product(Partition((n - 3, 3)), Partition((k, k)), engine)
        raw = _kk_n33_terms(k)
        degree = n
    else:
        raise ValueError(f"unknown kind {kind!r}")

    acc = CharacterExpansion.zero(degree)
    for parts in raw:
        p = _try_partition(parts)
        if p is not None:
            acc = acc + CharacterExpansion.irreducible(p)
    return acc


@dataclass(frozen=True)
class SquareLowDepth:
    """Multiplicities of the depth <= 3 constituents in [lam]^2.

    Out-of-range coefficients are None (absent), never zero.
    """

    a1: int
    a2: int | None
    b2: int
    a3: int | None
    b3: int | None
    c3: int | None


def square_low_depth(lam: Partition) -> SquareLowDepth:
    """Low-depth square coefficients from the small-hook counts."""
    if is_linear(lam):
        raise ValueError(f"{lam!r} is linear")
    n = lam.n
    h = hook_counts(lam)
    h1, h2, h3, h21 = h["h1"], h["h2"], h["h3"], h["h21"]
    return SquareLowDepth(
        a1=h1 - 1,
        a2=h2 + h1 * (h1 - 2) if n >= 4 else None,
        b2=(h1 - 1) ** 2,
        a3=h1 * (h1 - 1) * (h1 - 3) + h2 * (2 * h1 - 3) + h3 if n >= 6 else None,
        b3=h1 * (h1 - 1) * (h1 - 3) + (h1 - 1) * (h2 + 1) + h21 if n >= 4 else None,
        c3=2 * h1 * (h1 - 1) * (h1 - 3) + h2 * (3 * h1 - 4) + h1 + h21 if n >= 5 else None,
    )
