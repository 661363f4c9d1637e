"""Structural Kronecker engine: Dvir recursion and semigroup bounds.

The recursion computes g(lam, mu, nu) from Littlewood-Richardson data:
the width of any constituent is bounded by |lam ^ mu| (rowwise
intersection), coefficients at maximal width come from a product of two
skew characters of smaller degree, and lower widths follow from the
band sums with corrections over the horizontal-strip set Y(nu).  All
corrections have a strictly larger first part, so a sweep by decreasing
width settles every coefficient.

Products of the smaller-degree irreducibles go through this same engine
(mutual recursion on strictly smaller degree), never the character
table, so the oracle stays an independent cross-check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product as iproduct

from .characters import kron_oracle, kron_product_oracle, table_ceiling
from .expansion import CharacterExpansion
from .littlewood_richardson import skew_expand
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    add_node,
    addable_nodes,
    intersect,
    enumerate_partitions,
    iter_subpartitions,
    partition_sum,
    remove_node,
    removable_nodes,
    split_rows,
)

DEFAULT_ORACLE_CROSSOVER = 10
_CROSSOVER_ENV = "KRONMF_ENGINE_CROSSOVER"

ENGINES = ("auto", "oracle", "dvir")


class DvirInvariantError(RuntimeError):
    """A negative intermediate in the recursion: always an implementation bug."""


def _oracle_crossover() -> int:
    raw = os.environ.get(_CROSSOVER_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CROSSOVER


def _resolve_engine(engine: str, n: int) -> str:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if engine != "auto":
        return engine
    return "oracle" if n <= min(_oracle_crossover(), table_ceiling()) else "dvir"


def max_width(lam: Partition, mu: Partition) -> int:
    """Largest first part among constituents of [lam].[mu]: |lam ^ mu|."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: {lam.n} vs {mu.n}")
    return intersect(lam, mu).n


@dataclass(frozen=True)
class YNuSet:
    base: Partition
    members: tuple[Partition, ...]


def y_set(nu: Partition) -> YNuSet:
    """Partitions obtained from nu-hat by adding a horizontal strip of nu_1.

    Interleaving characterisation: eta_i >= nu_{i+1} >= eta_{i+1} for
    all i >= 1, with |eta| = |nu|.
    """
    n = nu.n
    ell = len(nu)
    members = []
    ranges = [range(nu.row(i + 1), nu.row(i) + 1) for i in range(2, ell + 1)]
    for tail in iproduct(*ranges):
        head = n - sum(tail)
        if head >= nu.row(2):
            members.append(Partition((head,) + tail))
    members.sort(reverse=True)
    return YNuSet(nu, tuple(members))


_coeff_memo: dict[tuple[Partition, Partition, Partition], int] = {}
_band_memo: dict[tuple[Partition, Partition, int], dict[Partition, int]] = {}
_product_memo: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def _pair_key(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    return (lam, mu) if lam >= mu else (mu, lam)


def _dvir_band(lam: Partition, mu: Partition, k: int) -> dict[Partition, int]:
    """Expansion of sum over alpha |- k inside lam^mu of [lam/a].[mu/a]."""
    key = _pair_key(lam, mu) + (k,)
    cached = _band_memo.get(key)
    if cached is not None:
        return cached
    lam, mu = key[0], key[1]
    beta = intersect(lam, mu)
    acc: dict[Partition, int] = {}
    for alpha in iter_subpartitions(beta, k):
        left = skew_expand(SkewShape(lam, alpha))
        right = skew_expand(SkewShape(mu, alpha))
        for sig, c1 in left.items():
            for tau, c2 in right.items():
                weight = c1 * c2
                for nu_hat, g in _dvir_product(sig, tau).items():
                    acc[nu_hat] = acc.get(nu_hat, 0) + weight * g
    _band_memo[key] = acc
    return acc


def _dvir_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Full Kronecker product map at this degree, by the recursion alone."""
    key = _pair_key(lam, mu)
    cached = _product_memo.get(key)
    if cached is not None:
        return cached
    n = lam.n
    out: dict[Partition, int] = {}
    if n == 0:
        out[EMPTY] = 1
    else:
        w = max_width(lam, mu)
        for nu in sorted(enumerate_partitions(n), key=lambda p: (p[0], p), reverse=True):
            if nu[0] > w:
                continue
            g = g_dvir(lam, mu, nu)
            if g:
                out[nu] = g
    _product_memo[key] = out
    return out


def g_dvir(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Kronecker coefficient by the width recursion (no character tables)."""
    if not (lam.n == mu.n == nu.n):
        raise ValueError(f"degree mismatch: {lam.n}, {mu.n}, {nu.n}")
    if lam.n == 0:
        return 1
    key = _pair_key(lam, mu) + (nu,)
    cached = _coeff_memo.get(key)
    if cached is not None:
        return cached
    lam, mu = key[0], key[1]
    w = max_width(lam, mu)
    if nu[0] > w:
        return 0
    nu_hat = Partition(nu[1:])
    total = _dvir_band(lam, mu, nu[0]).get(nu_hat, 0)
    for eta in y_set(nu).members:
        if eta != nu and eta[0] <= w:
            total -= g_dvir(lam, mu, eta)
    if total < 0:
        raise DvirInvariantError(f"negative coefficient {total} at g({lam}, {mu}, {nu})")
    _coeff_memo[key] = total
    return total


def g_at_max_width(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Coefficient when nu_1 equals |lam ^ mu| (the closed top of the sweep)."""
    w = max_width(lam, mu)
    if nu.n != lam.n:
        raise ValueError(f"degree mismatch: {nu.n} vs {lam.n}")
    if nu.row(1) != w:
        raise ValueError(f"nu_1 = {nu.row(1)} != |lam ^ mu| = {w}")
    return _dvir_band(lam, mu, w).get(Partition(nu[1:]), 0)


def kron_coefficient(lam: Partition, mu: Partition, nu: Partition, engine: str = "auto") -> int:
    """Single coefficient through the requested engine."""
    eng = _resolve_engine(engine, lam.n)
    if eng == "oracle":
        return kron_oracle(lam, mu, nu)
    return g_dvir(lam, mu, nu)


def kron_product(lam: Partition, mu: Partition, engine: str = "auto") -> CharacterExpansion:
    """Full product expansion through the requested engine."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: {lam.n} vs {mu.n}")
    eng = _resolve_engine(engine, lam.n)
    if eng == "oracle":
        return kron_product_oracle(lam, mu)
    return CharacterExpansion(lam.n, _dvir_product(lam, mu))


def g_max(lam: Partition, mu: Partition, engine: str = "auto") -> int:
    """Largest multiplicity in [lam].[mu]; 1 iff the product is mf."""
    return kron_product(lam, mu, engine).max_multiplicity()


def multiply_expansions(
    a: CharacterExpansion, b: CharacterExpansion, engine: str = "auto"
) -> CharacterExpansion:
    """Pointwise (Kronecker) product of two expansions of equal degree."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    acc: dict[Partition, int] = {}
    for sig, c1 in a.items():
        for tau, c2 in b.items():
            weight = c1 * c2
            for nu, g in kron_product(sig, tau, engine).items():
                acc[nu] = acc.get(nu, 0) + weight * g
    return CharacterExpansion(a.degree, acc)


# --- semigroup lower bounds ---


@dataclass(frozen=True)
class SemigroupWitness:
    """A decomposition certifying a lower bound for g(lam, mu).

    sum-split: lam = left[0] + left[1], mu = right[0] + right[1]
    (componentwise partition addition).
    row-split: lam is the disjoint row union of left, mu of right,
    with |left[0]| = |right[0]|.
    """

    kind: str
    left_parts: tuple[Partition, Partition]
    right_parts: tuple[Partition, Partition]

    def __post_init__(self):
        if self.kind not in ("sum-split", "row-split"):
            raise ValueError(f"unknown witness kind {self.kind!r}")
        if self.left_parts[0].n != self.right_parts[0].n or self.left_parts[1].n != self.right_parts[1].n:
            raise ValueError("witness parts must pair up by degree")

    def target(self) -> tuple[Partition, Partition]:
        if self.kind == "sum-split":
            return (
                partition_sum(self.left_parts[0], self.left_parts[1]),
                partition_sum(self.right_parts[0], self.right_parts[1]),
            )
        lam = Partition(sorted(self.left_parts[0] + self.left_parts[1], reverse=True))
        mu = Partition(sorted(self.right_parts[0] + self.right_parts[1], reverse=True))
        return lam, mu

    @classmethod
    def row_split(cls, lam: Partition, mu: Partition, rows_i, rows_j) -> "SemigroupWitness":
        lam_i, lam_rest = split_rows(lam, rows_i)
        mu_j, mu_rest = split_rows(mu, rows_j)
        if lam_i.n != mu_j.n:
            raise ValueError(f"|lam_I| = {lam_i.n} != |mu_J| = {mu_j.n}")
        return cls("row-split", (lam_i, lam_rest), (mu_j, mu_rest))


@dataclass(frozen=True)
class SemigroupBound:
    bound: int
    parts: tuple[tuple[Partition, Partition], ...]
    target: tuple[Partition, Partition]


def semigroup_bound(
    witness: SemigroupWitness, engine: str = "auto", sides: str = "both"
) -> SemigroupBound:
    """Lower bound for g at the witness target, from g on the parts.

    ``sides`` selects which part pairs are actually evaluated ("left",
    "right" or "both"); the maximum over evaluated sides is a valid
    bound either way, which lets callers skip a part that is beyond
    desk scale.
    """
    pairs = []
    if sides in ("both", "left"):
        pairs.append((witness.left_parts[0], witness.right_parts[0]))
    if sides in ("both", "right"):
        pairs.append((witness.left_parts[1], witness.right_parts[1]))
    if not pairs:
        raise ValueError(f"bad sides selector {sides!r}")
    bound = 1
    for a, b in pairs:
        if a.n > 0:
            bound = max(bound, g_max(a, b, engine))
    return SemigroupBound(bound=bound, parts=tuple(pairs), target=witness.target())


# --- the virtual character of the width-extension lemma ---


def virtual_extension_chi(lam: Partition, mu: Partition, engine: str = "auto") -> CharacterExpansion:
    """Virtual character whose positive part pins coefficients at width m-1.

    Requires beta = lam ^ mu with lam/beta a single row and [mu/beta]
    irreducible, say [alpha]; neither lam nor mu may be (n) or (n-1,1)
    up to conjugation.  For every kappa with a positive multiplicity in
    the result, g(lam, mu, (m-1, kappa)) equals that multiplicity, where
    m = |beta|.
    """
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: {lam.n} vs {mu.n}")
    n = lam.n
    banned = {Partition((n,)), Partition((n,)).conjugate()}
    if n >= 2:
        nat = Partition((n - 1, 1))
        banned |= {nat, nat.conjugate()}
    for p in (lam, mu):
        if p in banned:
            raise ValueError(f"operand {p!r} is (n) or (n-1,1) up to conjugation")
    beta = intersect(lam, mu)
    cells_rows = {i for i in range(1, len(lam) + 1) if lam[i - 1] > beta.row(i)}
    if len(cells_rows) != 1:
        raise ValueError(f"lam/beta is not a single row for {lam!r}, {mu!r}")
    mu_skew = skew_expand(SkewShape(mu, beta))
    if len(mu_skew) != 1 or mu_skew.max_multiplicity() != 1:
        raise ValueError(f"[mu/beta] is not irreducible for {lam!r}, {mu!r}")
    alpha = mu_skew.support()[0]

    deg = n - beta.n + 1
    chi = CharacterExpansion.zero(deg)
    for node in removable_nodes(beta):
        beta_a = remove_node(beta, node)
        left = skew_expand(SkewShape(lam, beta_a))
        right = skew_expand(SkewShape(mu, beta_a))
        chi = chi + multiply_expansions(left, right, engine)
    for node in addable_nodes(alpha):
        chi = chi - CharacterExpansion.irreducible(add_node(alpha, node))
    return chi


def clear_caches() -> None:
    _coeff_memo.clear()
    _band_memo.clear()
    _product_memo.clear()
