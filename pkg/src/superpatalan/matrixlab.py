"""Exact matrices over fractions, and the matrix identities of super Patalan arrays."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .checks import CheckResult
from .exact import Params, binom_integer
from .sequences import extended_entry, super_patalan_table


class ExactMatrix:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix must be a non-empty rectangle")
        self._rows = rows

    @classmethod
    def from_function(cls, f: Callable[[int, int], object], rows: int, cols: int | None = None):
        cols = rows if cols is None else cols
        return cls([[f(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls.from_function(lambda i, j: int(i == j), n)

    @classmethod
    def diagonal(cls, values: Iterable) -> ExactMatrix:
        values = list(values)
        return cls.from_function(lambda i, j: values[i] if i == j else 0, len(values))

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"ExactMatrix({self.tolist()})"

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(v) for v in r) + "]" for r in self._rows) + "]"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(zip(*self._rows))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for r in self._rows for v in r)

    def first_non_integral(self) -> tuple[int, int] | None:
        for i, r in enumerate(self._rows):
            for j, v in enumerate(r):
                if v.denominator != 1:
                    return i, j
        return None

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return matrix_mul(self, other)

    def inverse(self) -> ExactMatrix:
        return matrix_inverse(self)


def matrix_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    columns = list(zip(*b))
    return ExactMatrix(
        [sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in columns]
        for row in a
    )


def matrix_inverse(a: ExactMatrix) -> ExactMatrix:
    """Gauss-Jordan elimination with the first nonzero pivot in each column."""
    n = a.rows
    if a.cols != n:
        raise ValueError(f"matrix is not square: {a.shape}")
    left = [list(r) for r in a]
    right = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if left[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        if pivot != col:
            left[col], left[pivot] = left[pivot], left[col]
            right[col], right[pivot] = right[pivot], right[col]
        inv = 1 / left[col][col]
        left[col] = [v * inv for v in left[col]]
        right[col] = [v * inv for v in right[col]]
        for r in range(n):
            factor = left[r][col]
            if r == col or factor == 0:
                continue
            left[r] = [u - factor * v for u, v in zip(left[r], left[col])]
            right[r] = [u - factor * v for u, v in zip(right[r], right[col])]
    return ExactMatrix(right)


def pascal_matrix(n: int) -> ExactMatrix:
    """Symmetric Pascal matrix B(i, j) = C(i + j, i)."""
    return ExactMatrix.from_function(lambda i, j: binom_integer(i + j, i), n)


def reciprocal_pascal(n: int) -> ExactMatrix:
    return ExactMatrix.from_function(lambda i, j: Fraction(1, binom_integer(i + j, i)), n)


def diag_G(params: Params, n: int) -> ExactMatrix:
    """Diagonal matrix of the first column Q(i, 0)."""
    table = super_patalan_table(params, n, 1)
    return ExactMatrix.diagonal(table.column(0))


def hadamard_inverse_matrix(params: Params, n: int) -> ExactMatrix:
    """H(i, j) = 1 / Q(i, j)."""
    table = super_patalan_table(params, n, n)
    return ExactMatrix.from_function(lambda i, j: Fraction(1, table[i, j]), n)


def involution_matrix(params: Params, n: int) -> ExactMatrix:
    """Lower triangular L(m, k) = E(m, -k)."""
    return ExactMatrix.from_function(lambda m, k: extended_entry(params, m, -k), n)


def _first_difference(got: ExactMatrix, want: ExactMatrix) -> str:
    for i in range(want.rows):
        for j in range(want.cols):
            if got[i, j] != want[i, j]:
                return f"cell ({i},{j}): {got[i, j]} != {want[i, j]}"
    return ""


def verify_factorization(params: Params, n: int) -> CheckResult:
    """Q = G_{p,q} R G_{p,p-q} entrywise on an n x n block."""
    table = super_patalan_table(params, n, n)
    product = diag_G(params, n) @ reciprocal_pascal(n) @ diag_G(params.dual, n)
    q_matrix = ExactMatrix(table)
    passed = product == q_matrix
    detail = "" if passed else _first_difference(product, q_matrix)
    return CheckResult("factorization", params.p, params.q, n, passed, detail)


def verify_hadamard_inverse_integral(params: Params, n: int) -> CheckResult:
    """Invert H directly, require integer entries, compare with G_{p,p-q} B^-1 G_{p,q}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    direct = matrix_inverse(hadamard_inverse_matrix(params, n))
    bad = direct.first_non_integral()
    if bad is not None:
        return CheckResult(
            "hadamard", params.p, params.q, n, False,
            f"H^-1 entry {bad} = {direct[bad]} is not an integer",
        )
    factored = diag_G(params.dual, n) @ matrix_inverse(pascal_matrix(n)) @ diag_G(params, n)
    if direct != factored:
        return CheckResult(
            "hadamard", params.p, params.q, n, False,
            "direct vs factored H^-1 " + _first_difference(direct, factored),
        )
    detail = f"H^-1={direct}" if n <= 4 else ""
    return CheckResult("hadamard", params.p, params.q, n, True, detail)


def verify_involution(params: Params, n: int) -> CheckResult:
    """L @ L equals the identity exactly (L is lower triangular, so truncation is harmless)."""
    L = involution_matrix(params, n)
    square = L @ L
    eye = ExactMatrix.identity(n)
    passed = square == eye
    detail = "" if passed else "L^2 " + _first_difference(square, eye)
    return CheckResult("involution", params.p, params.q, n, passed, detail)
