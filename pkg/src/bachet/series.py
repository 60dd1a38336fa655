"""Truncated integer power series, b-ary partition counts and Rodseth's count.

Every coefficient is a Python int, so nothing overflows.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .partition import _require_positive, part_bound_n


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x**0 .. x**D of a formal power series."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def zero(cls, degree_bound: int) -> TruncatedSeries:
        return cls((0,) * (degree_bound + 1))

    @classmethod
    def one(cls, degree_bound: int) -> TruncatedSeries:
        return cls((1,) + (0,) * degree_bound)

    @classmethod
    def monomial(cls, power: int, degree_bound: int) -> TruncatedSeries:
        coeffs = [0] * (degree_bound + 1)
        if power <= degree_bound:
            coeffs[power] = 1
        return cls(coeffs)

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.degree_bound:
            raise IndexError(f"coefficient {k} outside 0..{self.degree_bound}")
        return self.coeffs[k]

    def truncate(self, degree_bound: int) -> TruncatedSeries:
        if degree_bound > self.degree_bound:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: degree_bound + 1])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        d = min(self.degree_bound, other.degree_bound)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: d + 1], other.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        d = min(self.degree_bound, other.degree_bound)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs[: d + 1], other.coeffs))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)


def series_geometric(t: int, degree_bound: int) -> TruncatedSeries:
    """1/(1 - x**t)."""
    _require_positive(t, "t")
    return TruncatedSeries(1 if k % t == 0 else 0 for k in range(degree_bound + 1))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    d = min(a.degree_bound, b.degree_bound)
    out = [0] * (d + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs[: d + 1]):
        if x:
            for j in range(d + 1 - i):
                out[i + j] += x * bc[j]
    return TruncatedSeries(out)


def series_substitute_power(
    a: TruncatedSeries, t: int, degree_bound: int | None = None
) -> TruncatedSeries:
    """a(x**t).

    Known exactly up to ``a.degree_bound * t + t - 1``; the default keeps
    ``a.degree_bound * t``.
    """
    _require_positive(t, "t")
    exact = a.degree_bound * t + t - 1
    d = a.degree_bound * t if degree_bound is None else degree_bound
    if d > exact:
        raise ValueError(f"a(x**{t}) is only known up to degree {exact}")
    out = [0] * (d + 1)
    for k in range(0, d + 1, t):
        out[k] = a.coeffs[k // t]
    return TruncatedSeries(out)


class _AryTable:
    # f_b(k) = sum_{i <= k//b} f_b(i), stored with running prefix sums.
    def __init__(self, base: int):
        self.base = base
        self.values = [1]
        self.prefix = [1]
        self.lock = threading.Lock()

    def get(self, k: int) -> int:
        if k < 0:
            return 0
        if k >= len(self.values):
            with self.lock:
                values, prefix = self.values, self.prefix
                for j in range(len(values), k + 1):
                    v = prefix[j // self.base]
                    values.append(v)
                    prefix.append(prefix[-1] + v)
        return self.values[k]


_ARY_TABLES: dict[int, _AryTable] = {}
_ARY_LOCK = threading.Lock()


def ary_count(base: int, k: int) -> int:
    """Number of partitions of k into powers of ``base``; 0 for negative k."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    table = _ARY_TABLES.get(base)
    if table is None:
        with _ARY_LOCK:
            table = _ARY_TABLES.setdefault(base, _AryTable(base))
    return table.get(k)


def ternary_f(k: int) -> int:
    return ary_count(3, k)


def ary_series(base: int, degree_bound: int) -> TruncatedSeries:
    """Product of 1/(1 - x**(base**i)) over all powers up to the degree bound."""
    out = TruncatedSeries.one(degree_bound)
    power = 1
    while power <= degree_bound:
        out = out * series_geometric(power, degree_bound)
        power *= base
    return out


def _divide_geometric(coeffs: list[int], t: int) -> None:
    # in place: coeffs <- coeffs / (1 - x**t), a running sum with stride t
    for k in range(t, len(coeffs)):
        coeffs[k] += coeffs[k - t]


def _g_series(degree_bound: int) -> TruncatedSeries:
    D = degree_bound
    total = [0] * (D + 1)
    j = 0
    # the j-th term is x**(3**j - 1) F(x**(5*3**j)) / ((1 - x**(2*3**j)) prod_{i<=j} (1 - x**(3**i)))
    # and starts at degree 3**j - 1, so the sum stops once that passes D
    while 3**j - 1 <= D:
        lead = 3**j
        shift, t = lead - 1, 5 * lead
        term = [0] * (D + 1)
        for k in range(shift, D + 1, t):
            term[k] = ternary_f((k - shift) // t)
        _divide_geometric(term, 2 * lead)
        for i in range(j + 1):
            _divide_geometric(term, 3**i)
        for k in range(shift, D + 1):
            total[k] += term[k]
        j += 1
    return TruncatedSeries(total)


_G_CACHE: dict[str, TruncatedSeries] = {}
_G_LOCK = threading.Lock()


def rodseth_g_series(degree_bound: int) -> TruncatedSeries:
    """G(x) up to ``degree_bound``; the cached prefix only ever grows."""
    with _G_LOCK:
        cached = _G_CACHE.get("G")
        if cached is None or cached.degree_bound < degree_bound:
            size = degree_bound if cached is None else max(degree_bound, 2 * cached.degree_bound)
            cached = _G_CACHE["G"] = _g_series(size)
    return cached.truncate(degree_bound)


def rodseth_g(k: int) -> int:
    """Coefficient of x**k in G(x), and 0 for negative k."""
    if k < 0:
        return 0
    return rodseth_g_series(k)[k]


def _window(m: int) -> tuple[int, int, int]:
    n = part_bound_n(m)
    top = (3 ** (n + 1) - 1) // 2
    if n == 0:
        return n, top, -1
    return n, top, (3**n - 1) // 2 + 3 ** (n - 1) - 1 - m


def is_sandwiched(m: int) -> bool:
    """(3**n - 1)/2 + 3**(n-1) <= m <= (3**(n+1) - 1)/2 with n = floor(log3(2m))."""
    _require_positive(m)
    return _window(m)[2] < 0


def count_bachet(m: int) -> int:
    _require_positive(m)
    _, top, g_arg = _window(m)
    return ternary_f(top - m) - rodseth_g(g_arg)


def sandwiched_count(m: int) -> int:
    """f(0) + ... + f(floor(((3**(n+1) - 1)/2 - m) / 3)); valid for sandwiched m."""
    _require_positive(m)
    _, top, _ = _window(m)
    return sum(ternary_f(i) for i in range((top - m) // 3 + 1))
