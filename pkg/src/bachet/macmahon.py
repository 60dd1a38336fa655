"""MacMahon's perfect and subperfect partitions and ordered factorizations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from math import prod
from typing import Iterable, Iterator


@dataclass(frozen=True)
class OrderedFactorization:
    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("an ordered factorization needs at least one factor")
        if any(f < 2 for f in self.factors):
            raise ValueError(f"factors must be >= 2, got {self.factors}")

    @property
    def product(self) -> int:
        return prod(self.factors)

    def __str__(self) -> str:
        return "x".join(map(str, self.factors))


@dataclass(frozen=True)
class MultiplicityPartition:
    """A partition as ``(value, multiplicity)`` pairs with increasing values."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple((int(v), int(k)) for v, k in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("a partition needs at least one part")
        if any(v < 1 or k < 1 for v, k in entries):
            raise ValueError(f"values and multiplicities must be positive: {entries}")
        if any(a[0] >= b[0] for a, b in zip(entries, entries[1:])):
            raise ValueError(f"values must be strictly increasing: {entries}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> MultiplicityPartition:
        return cls(tuple((v, len(list(g))) for v, g in groupby(sorted(parts))))

    @property
    def m(self) -> int:
        return sum(v * k for v, k in self.entries)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(v for v, k in self.entries for _ in range(k))

    def __str__(self) -> str:
        return " + ".join(f"({v})^{k}" for v, k in self.entries)


def ordered_factorizations(n: int) -> list[OrderedFactorization]:
    """All ordered factorizations of n into factors >= 2, lexicographically."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        for d in range(2, k + 1):
            if k % d == 0:
                if d == k:
                    yield (k,)
                else:
                    for rest in rec(k // d):
                        yield (d,) + rest

    return [OrderedFactorization(f) for f in rec(n)]


def _cumulative(f: OrderedFactorization, halve: bool) -> MultiplicityPartition:
    entries: list[tuple[int, int]] = []
    value = 1
    for factor in f.factors:
        mult = (factor - 1) // 2 if halve else factor - 1
        # cumulative products strictly increase because every factor is >= 2
        assert not entries or entries[-1][0] < value
        entries.append((value, mult))
        value *= factor
    return MultiplicityPartition(tuple(entries))


def perfect_from_factorization(f: OrderedFactorization) -> MultiplicityPartition:
    """(1)^(f1-1) + (f1)^(f2-1) + (f1*f2)^(f3-1) + ..., a perfect partition of product - 1."""
    return _cumulative(f, halve=False)


def subperfect_from_factorization(f: OrderedFactorization) -> MultiplicityPartition:
    """Same construction with halved multiplicities; needs an odd product."""
    if f.product % 2 == 0:
        raise ValueError(f"{f} has an even product {f.product}")
    return _cumulative(f, halve=True)


def representation_counts(p: MultiplicityPartition, signed: bool = False) -> list[int]:
    """How many ways each l in 0..m can be written from the parts.

    Copies of one value are indistinguishable, so a value with multiplicity k
    contributes a single coefficient in 0..k, or in -k..k when ``signed``.
    """
    m = p.m
    offset = m if signed else 0
    counts = [0] * (m + offset + 1)
    counts[offset] = 1
    for v, k in p.entries:
        lo = -k if signed else 0
        nxt = [0] * len(counts)
        for idx, c in enumerate(counts):
            if c:
                for a in range(lo, k + 1):
                    nxt[idx + a * v] += c
        counts = nxt
    return counts[offset:]


class NotPerfectError(ValueError):
    pass


def _uniqueness_failure(p: MultiplicityPartition, signed: bool) -> str | None:
    for l, c in enumerate(representation_counts(p, signed)):
        if c != 1:
            return f"{l} has {c} representations"
    return None


def is_perfect(p: MultiplicityPartition) -> bool:
    return _uniqueness_failure(p, signed=False) is None


def is_subperfect(p: MultiplicityPartition) -> bool:
    return _uniqueness_failure(p, signed=True) is None


def factorization_from_perfect(p: MultiplicityPartition) -> OrderedFactorization:
    """Inverse of :func:`perfect_from_factorization`."""
    failure = _uniqueness_failure(p, signed=False)
    if failure:
        raise NotPerfectError(f"{p} is not perfect: {failure}")
    return OrderedFactorization(tuple(k + 1 for _, k in p.entries))


def factorization_from_subperfect(p: MultiplicityPartition) -> OrderedFactorization:
    failure = _uniqueness_failure(p, signed=True)
    if failure:
        raise NotPerfectError(f"{p} is not subperfect: {failure}")
    return OrderedFactorization(tuple(2 * k + 1 for _, k in p.entries))


def perfect_partitions(m: int) -> list[MultiplicityPartition]:
    """Perfect partitions of m, listed in the order of the factorizations of m + 1."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return [perfect_from_factorization(f) for f in ordered_factorizations(m + 1)]


def subperfect_partitions(m: int) -> list[MultiplicityPartition]:
    """Subperfect partitions of m, listed in the order of the factorizations of 2m + 1."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return [subperfect_from_factorization(f) for f in ordered_factorizations(2 * m + 1)]
