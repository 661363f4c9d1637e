"""Integer-multiplicity expansions in the irreducible-character basis.

A :class:`CharacterExpansion` maps partitions of one fixed degree to
integer multiplicities.  Genuine characters carry positive entries;
virtual characters (differences of characters) may go negative.  The
container is deliberately dumb: products depend on which engine is in
play and live with the engines.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .partitions import Partition, dimension, format_partition


class CharacterExpansion:
    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for p, m in items:
            if not isinstance(p, Partition):
                p = Partition(p)
            if p.n != degree:
                raise ValueError(f"term {p!r} has degree {p.n}, expected {degree}")
            if m:
                acc[p] = acc.get(p, 0) + m
        self.degree = degree
        self._terms = {p: m for p, m in acc.items() if m}

    @classmethod
    def irreducible(cls, p: Partition) -> "CharacterExpansion":
        return cls(p.n, {p: 1})

    @classmethod
    def zero(cls, degree: int) -> "CharacterExpansion":
        return cls(degree, {})

    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Partition, int]]:
        """Terms in descending lex order of the labels."""
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True))

    def support(self) -> list[Partition]:
        return sorted(self._terms, reverse=True)

    def __getitem__(self, p: Partition) -> int:
        return self._terms.get(p, 0)

    def __contains__(self, p: Partition) -> bool:
        return p in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharacterExpansion)
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._terms.items())))

    def __add__(self, other: "CharacterExpansion") -> "CharacterExpansion":
        self._check_degree(other)
        out = dict(self._terms)
        for p, m in other._terms.items():
            out[p] = out.get(p, 0) + m
        return CharacterExpansion(self.degree, out)

    def __sub__(self, other: "CharacterExpansion") -> "CharacterExpansion":
        self._check_degree(other)
        out = dict(self._terms)
        for p, m in other._terms.items():
            out[p] = out.get(p, 0) - m
        return CharacterExpansion(self.degree, out)

    def scale(self, c: int) -> "CharacterExpansion":
        return CharacterExpansion(self.degree, {p: c * m for p, m in self._terms.items()})

    def conjugate(self) -> "CharacterExpansion":
        """Twist by the sign character: conjugate every label."""
        return CharacterExpansion(self.degree, {p.conjugate(): m for p, m in self._terms.items()})

    def max_multiplicity(self) -> int:
        return max(self._terms.values(), default=0)

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self._terms.values())

    def is_genuine(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def total_dimension(self) -> int:
        return sum(m * dimension(p) for p, m in self._terms.items())

    def inner(self, other: "CharacterExpansion") -> int:
        """Scalar product assuming both sides are in the irreducible basis."""
        self._check_degree(other)
        small, big = self._terms, other._terms
        if len(big) < len(small):
            small, big = big, small
        return sum(m * big.get(p, 0) for p, m in small.items())

    def _check_degree(self, other: "CharacterExpansion") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for p, m in self.items():
            label = f"[{format_partition(p)}]"
            if m == 1:
                term = label
            elif m == -1:
                term = f"-{label}"
            else:
                term = f"{m}{label}"
            pieces.append(term)
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CharacterExpansion({self.degree}, {self._terms!r})"
