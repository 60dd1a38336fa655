"""Bachet and minimal (e, r)-partitions as lattice points of an inequality polyhedron."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partition import (
    BACHET,
    ErParams,
    Partition,
    _require_positive,
    is_bachet,
    is_er_complete,
    part_bound_n,
)

MAX_PARTS = 64


@dataclass(frozen=True)
class EnumerationResult:
    m: int
    params: ErParams
    partitions: tuple[Partition, ...]

    @property
    def count(self) -> int:
        return len(self.partitions)

    @property
    def num_parts(self) -> int | None:
        return len(self.partitions[0]) if self.partitions else None


@dataclass(frozen=True)
class LiftRefusal:
    """Why a partition could not be lifted; ``condition`` is "i", "ii" or "iii"."""

    condition: str
    reason: str

    def __bool__(self) -> bool:
        return False


def _max_tail(prefix: int, slots: int, params: ErParams) -> int:
    # largest total the next `slots` parts can reach when each takes its cap
    total = 0
    for _ in range(slots):
        cap = params.e + 1 + params.r * prefix
        total += cap
        prefix += cap
    return total


def lattice_points(
    m: int, num_parts: int, params: ErParams = BACHET, ordered: bool = True
) -> Iterator[tuple[int, ...]]:
    """Integer points with ``num_parts`` positive coordinates summing to ``m`` and
    satisfying ``x_0 <= e+1`` and ``x_i <= e+1 + r*(x_0 + ... + x_{i-1})``.

    With ``ordered`` the points must also be nondecreasing. Points come out in
    lexicographic order.
    """
    _require_positive(m)
    if num_parts < 1:
        return
    slack, r = params.e + 1, params.r
    point: list[int] = []

    def extend(prefix: int, prev: int) -> Iterator[tuple[int, ...]]:
        slots = num_parts - len(point)
        remaining = m - prefix
        if slots == 0:
            if remaining == 0:
                yield tuple(point)
            return
        if point:
            lo, cap = (prev if ordered else 1), slack + r * prefix
        else:
            lo, cap = 1, slack
        for v in range(lo, min(cap, remaining) + 1):
            rest = remaining - v
            if rest < (slots - 1) * (v if ordered else 1):
                break
            if rest > _max_tail(prefix + v, slots - 1, params):
                continue
            point.append(v)
            yield from extend(prefix + v, v)
            point.pop()

    yield from extend(0, 0)


def enumerate_bachet(m: int) -> EnumerationResult:
    _require_positive(m)
    points = lattice_points(m, part_bound_n(m) + 1, BACHET)
    return EnumerationResult(m, BACHET, tuple(Partition(p) for p in points))


def enumerate_er(m: int, params: ErParams = BACHET) -> EnumerationResult:
    """All (e, r)-complete partitions of m with the fewest possible parts.

    The inequalities only generate candidates; each one is checked directly.
    """
    _require_positive(m)
    for k in range(1, MAX_PARTS + 1):
        found = tuple(
            Partition(p)
            for p in lattice_points(m, k, params)
            if is_er_complete(Partition(p), params)
        )
        if found:
            return EnumerationResult(m, params, found)
    raise RuntimeError(f"no {params} partition of {m} with at most {MAX_PARTS} parts")


def minimal_part_count(m: int, params: ErParams = BACHET) -> int:
    if params == BACHET:
        return part_bound_n(m) + 1
    return enumerate_er(m, params).num_parts


def project_down(p: Partition) -> Partition:
    """Drop the largest part of a Bachet partition."""
    if len(p) < 2:
        raise ValueError("cannot project a single-part partition")
    if not is_bachet(p):
        raise ValueError(f"{p} is not a Bachet partition")
    return Partition(p.parts[:-1])


def lift_up(p: Partition, m: int) -> Partition | LiftRefusal:
    """Append the part ``m - p.m`` if the result is a Bachet partition of m."""
    _require_positive(m)
    if not is_bachet(p):
        raise ValueError(f"{p} is not a Bachet partition")
    sub = p.m
    new = m - sub
    if new < p.parts[-1]:
        return LiftRefusal("i", f"new part {new} is smaller than largest part {p.parts[-1]}")
    if part_bound_n(m) != len(p):
        return LiftRefusal("ii", f"a Bachet partition of {m} needs {part_bound_n(m) + 1} parts")
    if sub < -(-(m - 1) // 3):
        return LiftRefusal("iii", f"new part {new} exceeds 1 + 2*{sub}")
    return Partition(p.parts + (new,))
