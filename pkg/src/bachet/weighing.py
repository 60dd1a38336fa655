"""Concrete weighing instructions for a set of weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby
from typing import Iterable, Iterator

from .partition import Partition

UNREACHABLE = "—"


class Mode(str, Enum):
    TWO_PAN = "two-pan"
    ONE_PAN = "one-pan"
    GENERAL = "r-general"


def coefficient_range(mode: Mode, r: int = 2) -> range:
    if mode is Mode.TWO_PAN:
        return range(-1, 2)
    if mode is Mode.ONE_PAN:
        return range(0, 2)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return range(0, r + 1)


@dataclass(frozen=True)
class WeighingPlan:
    """``rows[l]`` holds coefficients aligned with ``weights.parts``, or None
    when l cannot be weighed."""

    weights: Partition
    mode: Mode
    r: int
    rows: dict[int, tuple[int, ...] | None]
    notes: tuple[str, ...] = field(default=())

    @property
    def unreachable(self) -> list[int]:
        return [l for l, row in self.rows.items() if row is None]

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights.parts),
            "mode": self.mode.value,
            "r": self.r,
            "rows": [
                {"target": l, "coefficients": None if row is None else list(row)}
                for l, row in self.rows.items()
            ],
            "unreachable": self.unreachable,
            "notes": list(self.notes),
        }


def _cost_tables(weights: tuple[int, ...], coeffs: range) -> list[dict[int, int]]:
    # Reading order is largest weight first; tables[i][v] is the fewest nonzero
    # coefficients that make v from the weights at reading positions i..end.
    order = weights[::-1]
    tables: list[dict[int, int]] = [dict() for _ in order] + [{0: 0}]
    for i in range(len(order) - 1, -1, -1):
        w, nxt, cur = order[i], tables[i + 1], tables[i]
        for v, cost in nxt.items():
            for c in coeffs:
                key = v + c * w
                total = cost + (c != 0)
                if total < cur.get(key, total + 1):
                    cur[key] = total
    return tables


def _pick(weights: tuple[int, ...], coeffs: range, tables, target: int) -> tuple[int, ...] | None:
    if target not in tables[0]:
        return None
    budget, value, chosen = tables[0][target], target, []
    for i, w in enumerate(weights[::-1]):
        for c in coeffs:
            rest = tables[i + 1].get(value - c * w)
            if rest is not None and rest + (c != 0) == budget:
                chosen.append(c)
                budget -= c != 0
                value -= c * w
                break
    return tuple(chosen[::-1])


def plan(
    weights: Partition, mode: Mode | str = Mode.TWO_PAN, targets: Iterable[int] | None = None, r: int = 2
) -> WeighingPlan:
    """One coefficient vector per target.

    Among all valid vectors the one with the fewest nonzero entries wins;
    remaining ties go to the lexicographically smallest vector read from the
    largest weight down. Targets default to ``1..m``.
    """
    mode = Mode(mode)
    if mode is Mode.TWO_PAN:
        r = 2
    elif mode is Mode.ONE_PAN:
        r = 1
    coeffs = coefficient_range(mode, r)
    if targets is None:
        targets = range(1, weights.m + 1)
    tables = _cost_tables(weights.parts, coeffs)
    rows: dict[int, tuple[int, ...] | None] = {}
    notes = []
    for l in targets:
        if l < 0 and mode is Mode.TWO_PAN:
            notes.append(f"target {l} weighed as {-l} with the pans interchanged")
            l = -l
        if l not in rows:
            rows[l] = _pick(weights.parts, coeffs, tables, l)
    return WeighingPlan(weights, mode, r, rows, tuple(notes))


def all_assignments(weights: Partition, mode: Mode | str, target: int, r: int = 2) -> Iterator[tuple[int, ...]]:
    """Every distinct way to weigh ``target``.

    Copies of one weight are interchangeable, so a group of equal weights is
    identified by its net coefficient in two-pan mode (placing a copy on each
    pan cancels) and by its multiset of coefficients otherwise. Each yielded
    vector lists a group's coefficients in nonincreasing order.
    """
    mode = Mode(mode)
    coeffs = coefficient_range(mode, 1 if mode is Mode.ONE_PAN else r)
    groups = [(v, len(list(g))) for v, g in groupby(weights.parts)]

    def group_options(k: int) -> list[tuple[int, ...]]:
        if mode is Mode.TWO_PAN:
            return [(1,) * a + (0,) * (k - a) for a in range(k, 0, -1)] + [(0,) * k] + [
                (0,) * (k - a) + (-1,) * a for a in range(1, k + 1)
            ]
        out: list[tuple[int, ...]] = []

        def fill(prefix: tuple[int, ...], ceiling: int):
            if len(prefix) == k:
                out.append(prefix)
                return
            for c in range(ceiling, coeffs.start - 1, -1):
                fill(prefix + (c,), c)

        fill((), coeffs.stop - 1)
        return out

    options = [group_options(k) for _, k in groups]

    def rec(i: int, remaining: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(groups):
            if remaining == 0:
                yield acc
            return
        v = groups[i][0]
        for opt in options[i]:
            yield from rec(i + 1, remaining - v * sum(opt), acc + opt)

    yield from rec(0, target, ())


def render_table(p: WeighingPlan) -> str:
    """Rows are targets, columns are weights; unreachable rows are dashed."""
    labels = [str(w) for w in p.weights.parts]
    targets = [str(l) for l in p.rows]
    tw = max([len("l")] + [len(t) for t in targets])
    cells = {
        l: [UNREACHABLE] * len(labels) if row is None else [f"{c:+d}" if c else "0" for c in row]
        for l, row in p.rows.items()
    }
    cw = max([len(s) for s in labels] + [len(c) for row in cells.values() for c in row] + [2])
    lines = [" ".join([f"{'l':>{tw}}", "|"] + [f"{s:>{cw}}" for s in labels])]
    lines.append("-" * len(lines[0]))
    for l, row in cells.items():
        lines.append(" ".join([f"{l:>{tw}}", "|"] + [f"{c:>{cw}}" for c in row]))
    return "\n".join(lines) + "\n"
