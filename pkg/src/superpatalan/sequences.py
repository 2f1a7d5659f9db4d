"""Patalan, (p, q)-Patalan, super Catalan and super Patalan numbers.

The super Patalan table ``Q(i, j)`` is built from its defining recurrences;
``super_patalan_closed`` evaluates the binomial closed form independently so
the two can be compared cell by cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .checks import CheckResult
from .exact import Params, as_integer, binom_rational, sign_power

FAMILIES = ("patalan", "pq_patalan", "super_catalan_row", "custom")


@dataclass(frozen=True)
class SequenceSlice:
    values: tuple[int, ...]
    start_index: int = 0
    family: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a sequence slice needs at least one value")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def __len__(self):
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def indices(self) -> range:
        return range(self.start_index, self.start_index + len(self.values))

    def with_leading_one(self) -> SequenceSlice:
        """Prepend a 1, matching the ``1, 1, C(p,2), ...`` OEIS convention."""
        return SequenceSlice((1,) + self.values, self.start_index, self.family)


@dataclass(frozen=True)
class NumberTable:
    entries: tuple[tuple[int, ...], ...]
    params: Params | None = field(default=None)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("table must be a non-empty rectangle")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def transpose(self) -> NumberTable:
        dual = self.params.dual if self.params is not None else None
        return NumberTable(tuple(zip(*self.entries)), dual)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def antidiagonals(self) -> list[int]:
        """Read the table by antidiagonals: (0,0), (0,1), (1,0), (0,2), ...

        Only complete antidiagonals are emitted.
        """
        out = []
        for d in range(min(self.rows, self.cols)):
            out.extend(self.entries[i][d - i] for i in range(d + 1))
        return out

    def row_major(self) -> list[int]:
        return [v for r in self.entries for v in r]


def _exact_step(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{what}: {numerator}/{denominator} is not an integer")
    return quotient


def super_catalan(m: int, n: int) -> int:
    """Gessel's super Catalan number (2m)! (2n)! / (m! n! (m+n)!)."""
    if m < 0 or n < 0:
        raise ValueError("super Catalan indices must be non-negative")
    f = math.factorial
    value = Fraction(f(2 * m) * f(2 * n), f(m) * f(n) * f(m + n))
    return as_integer(value, f"S({m},{n})")


def super_catalan_row(m: int, count: int) -> SequenceSlice:
    return SequenceSlice([super_catalan(m, n) for n in range(count)], 0, "super_catalan_row")


def pq_patalan_seq(params: Params, count: int) -> SequenceSlice:
    """b(0) = q, b(n) = p (p n - q) b(n-1) / (n + 1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    p, q = params.p, params.q
    values = [q]
    for n in range(1, count):
        values.append(_exact_step(p * (p * n - q) * values[-1], n + 1, f"b({n})"))
    return SequenceSlice(values, 0, "pq_patalan")


def patalan_seq(p: int, count: int) -> SequenceSlice:
    """Patalan numbers of order p: a(0) = 1, a(n) = p (p n - 1) a(n-1) / (n + 1).

    The sequence starts ``1, C(p, 2), ...``; see
    :meth:`SequenceSlice.with_leading_one` for the other convention.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if count < 1:
        raise ValueError("count must be >= 1")
    values = [1]
    for n in range(1, count):
        values.append(_exact_step(p * (p * n - 1) * values[-1], n + 1, f"a({n})"))
    return SequenceSlice(values, 0, "patalan")


def super_patalan_table(params: Params, rows: int, cols: int) -> NumberTable:
    """Q(i, j) from Q(0,0) = 1 and the column-0 and along-row recurrences.

    Q(i, 0) = p (p i - q) Q(i-1, 0) / i
    Q(i, j) = p (p j - p + q) Q(i, j-1) / (i + j)
    """
    if rows < 1 or cols < 1:
        raise ValueError("table dimensions must be positive")
    p, q = params.p, params.q
    column0 = [1]
    for i in range(1, rows):
        column0.append(_exact_step(p * (p * i - q) * column0[-1], i, f"Q({i},0)"))
    table = []
    for i in range(rows):
        row = [column0[i]]
        for j in range(1, cols):
            row.append(_exact_step(p * (p * j - p + q) * row[-1], i + j, f"Q({i},{j})"))
        table.append(tuple(row))
    return NumberTable(tuple(table), params)


def super_patalan_closed(params: Params, m: int, n: int) -> int:
    """Closed form (-1)^n p^(2(m+n)) C(m - q/p, m + n)."""
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    p, q = params.p, params.q
    value = (-1) ** n * p ** (2 * (m + n)) * binom_rational(m - Fraction(q, p), m + n)
    return as_integer(value, f"closed form Q({m},{n}) for p={p} q={q}")


def extended_entry(params: Params, m: int, n: int) -> int:
    """Coefficient of x^(m+n) in (-1)^m (1 - p^2 x)^(m - q/p), for any integers m, n."""
    degree = m + n
    if degree < 0:
        return 0
    p, q = params.p, params.q
    value = sign_power(m) * binom_rational(m - Fraction(q, p), degree) * (-p * p) ** degree
    return as_integer(value, f"E({m},{n}) for p={p} q={q}")


def twisted_transpose_check(params: Params, size: int) -> CheckResult:
    """Compare Q_{p,q}(i, j) with Q_{p,p-q}(j, i) for all i, j < size."""
    table = super_patalan_table(params, size, size)
    dual = super_patalan_table(params.dual, size, size)
    for i in range(size):
        for j in range(size):
            if table[i, j] != dual[j, i]:
                return CheckResult(
                    "transpose", params.p, params.q, size, False,
                    f"Q({i},{j})={table[i, j]} but dual Q({j},{i})={dual[j, i]}",
                )
    return CheckResult("transpose", params.p, params.q, size, True)


def closed_form_check(params: Params, size: int) -> CheckResult:
    table = super_patalan_table(params, size, size)
    for i in range(size):
        for j in range(size):
            closed = super_patalan_closed(params, i, j)
            if closed != table[i, j]:
                return CheckResult(
                    "closed-form", params.p, params.q, size, False,
                    f"Q({i},{j}) recurrence={table[i, j]} closed={closed}",
                )
    return CheckResult("closed-form", params.p, params.q, size, True)
