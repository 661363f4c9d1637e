"""Exact symmetric-group character tables and the scalar-product oracle.

The oracle computes Kronecker coefficients straight from the definition
(class-size weighted triple products divided by n!) and is the ground
truth that every structural engine is checked against.

Character values come from the Murnaghan-Nakayama border-strip
recursion.  A compiled kernel is used when the optional extension built
from ``_mnkernel.pyx`` is available; otherwise the pure-Python twin in
``_mn_py`` takes over.  Both backends are importable directly for
benchmarking and parity tests.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from math import factorial

from . import _mn_py
from .expansion import CharacterExpansion
from .partitions import Partition, dimension, enumerate_partitions, format_partition

try:  # pragma: no cover - exercised only when the extension is built
    from . import _mnkernel  # type: ignore[attr-defined]

    MN_BACKEND = "compiled"
except ImportError:  # pragma: no cover
    _mnkernel = None
    MN_BACKEND = "python"

DEFAULT_TABLE_CEILING = 14
_CEILING_ENV = "KRONMF_TABLE_CEILING"


class TableCeilingError(ValueError):
    """Raised when a character-table request exceeds the resource ceiling."""


def table_ceiling() -> int:
    raw = os.environ.get(_CEILING_ENV)
    return int(raw) if raw else DEFAULT_TABLE_CEILING


def _check_ceiling(n: int, ceiling: int | None) -> None:
    limit = table_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise TableCeilingError(
            f"character table for n={n} exceeds the ceiling {limit}; "
            f"raise it explicitly or via {_CEILING_ENV}"
        )


def _mn_value(lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if _mnkernel is not None and sum(lam) <= 20:
        return _mnkernel.char_value(lam, cycles)
    return _mn_py.char_value(lam, cycles)


def character_value(lam: Partition, rho: Partition) -> int:
    """Character of the irreducible [lam] on the class of cycle type rho."""
    if lam.n != rho.n:
        raise ValueError(f"degree mismatch: |{lam!r}| = {lam.n}, |{rho!r}| = {rho.n}")
    return _mn_value(tuple(lam), tuple(rho))


def class_size(rho: Partition) -> int:
    """Number of permutations with cycle type rho: n! / prod i^{m_i} m_i!."""
    n = rho.n
    z = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for i, m in mult.items():
        z *= i**m * factorial(m)
    size, rem = divmod(factorial(n), z)
    assert rem == 0
    return size


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def value(self, lam: Partition, rho: Partition) -> int:
        return self.values[self.rows.index(lam)][self.cols.index(rho)]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.rows.index(lam)]

    def check_orthogonality(self) -> None:
        """Both orthogonality relations, exactly; raises on violation."""
        nfact = factorial(self.degree)
        k = len(self.rows)
        for a in range(k):
            for b in range(a, k):
                dot = sum(
                    cs * x * y
                    for cs, x, y in zip(self.class_sizes, self.values[a], self.values[b])
                )
                expected = nfact if a == b else 0
                if dot != expected:
                    raise AssertionError(f"row orthogonality fails at {self.rows[a]}, {self.rows[b]}")
        for a in range(k):
            for b in range(a, k):
                dot = sum(self.values[i][a] * self.values[i][b] for i in range(k))
                expected = nfact // self.class_sizes[a] if a == b else 0
                if dot != expected:
                    raise AssertionError(f"column orthogonality fails at {self.cols[a]}, {self.cols[b]}")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition"] + [format_partition(c) for c in self.cols])
        for lam, row in zip(self.rows, self.values):
            writer.writerow([format_partition(lam)] + list(row))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.degree,
                "partitions": [format_partition(p) for p in self.rows],
                "cycle_types": [format_partition(c) for c in self.cols],
                "class_sizes": list(self.class_sizes),
                "values": [list(row) for row in self.values],
            },
            separators=(",", ":"),
        )


_table_cache: dict[int, CharacterTable] = {}
_product_cache: dict[tuple[Partition, Partition], CharacterExpansion] = {}


def character_table(n: int, ceiling: int | None = None) -> CharacterTable:
    """Complete exact character table of the symmetric group of degree n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_ceiling(n, ceiling)
    cached = _table_cache.get(n)
    if cached is not None:
        return cached
    parts = tuple(enumerate_partitions(n))
    values = tuple(
        tuple(_mn_value(tuple(lam), tuple(rho)) for rho in parts) for lam in parts
    )
    table = CharacterTable(
        degree=n,
        rows=parts,
        cols=parts,
        values=values,
        class_sizes=tuple(class_size(rho) for rho in parts),
    )
    _table_cache[n] = table
    return table


def kron_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Kronecker coefficient from the class-sum scalar product."""
    if not (lam.n == mu.n == nu.n):
        raise ValueError(f"degree mismatch: {lam.n}, {mu.n}, {nu.n}")
    t = character_table(lam.n)
    total = sum(
        cs * x * y * z
        for cs, x, y, z in zip(t.class_sizes, t.row(lam), t.row(mu), t.row(nu))
    )
    g, rem = divmod(total, factorial(lam.n))
    assert rem == 0, f"scalar product not divisible by n! for {lam}, {mu}, {nu}"
    assert g >= 0
    return g


def kron_product_oracle(lam: Partition, mu: Partition) -> CharacterExpansion:
    """Full Kronecker product expansion via the character table."""
    if lam.n != mu.n:
        raise ValueError(f"degree mismatch: {lam.n} vs {mu.n}")
    key = (lam, mu) if lam >= mu else (mu, lam)
    cached = _product_cache.get(key)
    if cached is not None:
        return cached
    n = lam.n
    t = character_table(n)
    nfact = factorial(n)
    weights = [cs * x * y for cs, x, y in zip(t.class_sizes, t.row(lam), t.row(mu))]
    terms = {}
    for nu, row in zip(t.rows, t.values):
        total = sum(w * z for w, z in zip(weights, row))
        g, rem = divmod(total, nfact)
        assert rem == 0 and g >= 0
        if g:
            terms[nu] = g
    out = CharacterExpansion(n, terms)
    assert out.total_dimension() == dimension(lam) * dimension(mu)
    _product_cache[key] = out
    return out


def clear_caches() -> None:
    _table_cache.clear()
    _product_cache.clear()
    _mn_py.clear_cache()
    if _mnkernel is not None:
        _mnkernel.clear_cache()
