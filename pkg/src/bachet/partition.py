"""Partitions, (e, r) completeness and the inequality characterization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _require_positive(m: int, name: str = "m") -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"{name} must be an int, got {type(m).__name__}")
    if m <= 0:
        raise ValueError(f"{name} must be positive, got {m}")


def ilog(base: int, x: int) -> int:
    """Largest n with base**n <= x, by exact integer comparison."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    _require_positive(x, "x")
    n, power = 0, base
    while power <= x:
        n += 1
        power *= base
    return n


@dataclass(frozen=True)
class Partition:
    """A nondecreasing tuple of positive parts.

    Use :meth:`of` to build one from an unsorted iterable.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be ints, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nondecreasing, got {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        return cls(tuple(sorted(parts)))

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        """Index of the largest part (number of parts minus one)."""
        return len(self.parts) - 1

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


@dataclass(frozen=True)
class ErParams:
    """Error tolerance ``e`` and per-part coefficient cap ``r``."""

    e: int = 0
    r: int = 2

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"e must be >= 0, got {self.e}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")


BACHET = ErParams(0, 2)
ONE_SCALE = ErParams(0, 1)
ERROR_CORRECTING = ErParams(1, 2)


@dataclass(frozen=True)
class ReachableSet:
    """Which ``0 <= l <= limit`` are sums of parts with coefficients in {0..r}."""

    limit: int
    reachable: tuple[bool, ...]

    def __contains__(self, l: int) -> bool:
        return 0 <= l <= self.limit and self.reachable[l]

    def missing(self) -> list[int]:
        return [l for l, ok in enumerate(self.reachable) if not ok]

    def longest_gap(self) -> int:
        """Length of the longest run of unreachable values."""
        best = run = 0
        for ok in self.reachable:
            run = 0 if ok else run + 1
            best = max(best, run)
        return best


def _reachable_bits(parts: Iterable[int], r: int) -> int:
    # bit l set <=> l reachable
    bits = 1
    for part in parts:
        acc = bits
        for k in range(1, r + 1):
            acc |= bits << (k * part)
        bits = acc
    return bits


def reachable_sums(p: Partition, params: ErParams = BACHET) -> ReachableSet:
    limit = params.r * p.m
    bits = _reachable_bits(p.parts, params.r)
    return ReachableSet(limit, tuple(bool(bits >> l & 1) for l in range(limit + 1)))


def is_er_complete(p: Partition, params: ErParams = BACHET) -> bool:
    """True if no ``e + 1`` consecutive values in ``[0, r*m]`` are unreachable."""
    return reachable_sums(p, params).longest_gap() <= params.e


def satisfies_park_inequalities(p: Partition, params: ErParams = BACHET) -> bool:
    slack = params.e + 1
    if p.parts[0] > slack:
        return False
    prefix = p.parts[0]
    for part in p.parts[1:]:
        if part > slack + params.r * prefix:
            return False
        prefix += part
    return True


def part_bound_n(m: int) -> int:
    """floor(log3(2m)); a Bachet partition of m has this many parts plus one."""
    _require_positive(m)
    return ilog(3, 2 * m)


def canonical_w(m: int) -> Partition:
    """The mostly-ternary solution {1, 3, ..., 3**(n-1), m - (3**n - 1)/2}."""
    _require_positive(m)
    # n is the unique integer with (3**n - 1)/2 < m <= (3**(n+1) - 1)/2
    n = 0
    while (3 ** (n + 1) - 1) // 2 < m:
        n += 1
    powers = [3**i for i in range(n)]
    return Partition.of(powers + [m - (3**n - 1) // 2])


def is_bachet(p: Partition) -> bool:
    return len(p) == part_bound_n(p.m) + 1 and satisfies_park_inequalities(p, BACHET)
