"""Truncated formal power series over exact fractions.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of degrees
``0 .. N-1`` exactly. Results of arithmetic keep the smallest order of the
operands, so a coefficient is never reported unless every contributing term
was known.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .checks import CheckResult
from .exact import Params, binom_integer, sign_power
from .sequences import SequenceSlice, patalan_seq, super_patalan_table


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        coeffs = coeffs[:order] + [Fraction(0)] * (order - len(coeffs))
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._coeffs]})"

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[:order])

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n]))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(c * a for a in self._coeffs)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = Fraction(scalar)
        return TruncatedSeries(a / c for a in self._coeffs)

    def shift_up(self) -> TruncatedSeries:
        """Multiply by x; the order grows by one."""
        return TruncatedSeries((0,) + self._coeffs)

    def shift_down(self) -> TruncatedSeries:
        """Divide by x; requires a zero constant term and loses one order."""
        if self._coeffs[0] != 0:
            raise ValueError("cannot divide by x: nonzero constant term")
        if self.order < 2:
            raise ValueError("series too short to divide by x")
        return TruncatedSeries(self._coeffs[1:])

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)


def series_binomial(c, alpha, order: int) -> TruncatedSeries:
    """(1 + c x)^alpha; coefficient k is C(alpha, k) c^k."""
    c = Fraction(c)
    alpha = Fraction(alpha)
    coeffs = [Fraction(1)]
    for k in range(1, order):
        coeffs.append(coeffs[-1] * (alpha - k + 1) / k * c)
    return TruncatedSeries(coeffs, order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients; the polynomials used here are sparse
    a_nz = [(i, v) for i, v in enumerate(ac[:n]) if v]
    b_nz = [(j, v) for j, v in enumerate(bc[:n]) if v]
    out = [Fraction(0)] * n
    for i, u in a_nz:
        for j, v in b_nz:
            if i + j >= n:
                break
            out[i + j] += u * v
    return TruncatedSeries(out)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) by Horner's rule; ``inner`` must have zero constant term."""
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    result = TruncatedSeries.constant(outer[n - 1], n)
    for k in range(n - 2, -1, -1):
        result = series_mul(result, inner) + outer[k]
    return result


def series_comp_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Series t with s(t(x)) = x, solved one degree at a time.

    At degree n the unknown t_n enters s(t) only through s_1 t_n, every
    other contribution [x^n] t^k (k >= 2) depends on t_1 .. t_{n-1}.
    """
    if s[0] != 0:
        raise ValueError("series must have zero constant term")
    if s.order < 2 or s[1] == 0:
        raise ValueError("series must have a nonzero linear coefficient")
    n_max = s.order
    t = [Fraction(0)] * n_max
    # powers[k][d] = [x^d] t^k, filled as degrees become known
    powers = [None, [Fraction(0)] * n_max]
    for n in range(1, n_max):
        total = Fraction(0)
        for k in range(2, n + 1):
            if len(powers) <= k:
                powers.append([Fraction(0)] * n_max)
            prev = powers[k - 1]
            # t^(k-1) starts at degree k-1, so j runs up to n-k+1
            coeff = sum((t[j] * prev[n - j] for j in range(1, n - k + 2)), Fraction(0))
            powers[k][n] = coeff
            if s[k]:
                total += s[k] * coeff
        t[n] = ((1 if n == 1 else 0) - total) / s[1]
        powers[1][n] = t[n]
    return TruncatedSeries(t)


def polynomial(coeffs: dict[int, object] | list, order: int) -> TruncatedSeries:
    if isinstance(coeffs, dict):
        dense = [Fraction(0)] * order
        for d, c in coeffs.items():
            if d < order:
                dense[d] = Fraction(c)
        return TruncatedSeries(dense)
    return TruncatedSeries(coeffs, order)


def patalan_gf(p: int, order: int) -> TruncatedSeries:
    """A(x) = (1 - (1 - p^2 x)^(1/p)) / (p x) to the given order."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    root = series_binomial(-p * p, Fraction(1, p), order + 1)
    return (1 - root).shift_down() / p


def patalan_inverse_polynomial(p: int, order: int) -> TruncatedSeries:
    """(1 - (1 - p x)^p) / p^2 = sum_{k=1}^p C(p,k) p^(k-2) (-1)^(k+1) x^k."""
    return polynomial(
        {k: binom_integer(p, k) * Fraction(p) ** (k - 2) * (-1) ** (k + 1) for k in range(1, p + 1)},
        order,
    )


def row_gf(params: Params, m: int, order: int) -> TruncatedSeries:
    """(-1)^m (1 - p^2 x)^(m - q/p); its x^(m+n) coefficient is E(m, n)."""
    p, q = params.p, params.q
    return series_binomial(-p * p, m - Fraction(q, p), order) * sign_power(m)


def patalan_via_convolution(p: int, count: int) -> SequenceSlice:
    """Patalan numbers from the degree-p convolutional recurrence.

    a(n) = sum_{k=2}^p C(p,k) p^(k-2) (-1)^k [x^(n-k+1)] A(x)^k
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    weights = {k: binom_integer(p, k) * p ** (k - 2) * (-1) ** k for k in range(2, p + 1)}
    a = [1]
    # powers[k][d] = [x^d] A^k for d < len(a)
    powers = {k: [1] for k in range(1, p + 1)}
    for n in range(1, count):
        value = 0
        for k, w in weights.items():
            d = n - k + 1
            if d >= 0:
                value += w * powers[k][d]
        a.append(value)
        powers[1].append(value)
        for k in range(2, p + 1):
            prev = powers[k - 1]
            powers[k].append(sum(a[j] * prev[n - j] for j in range(n + 1)))
    return SequenceSlice(a, 0, "patalan")


def patalan3_recurrence(count: int) -> SequenceSlice:
    """Order-3 Patalan numbers from the explicit quadratic/cubic convolution.

    a(n) = sum_{k<n} 3 a(k) a(n-k-1) - sum_{i+j+k=n-2} 3 a(i) a(j) a(k)
    """
    a = [1]
    for n in range(1, count):
        quadratic = sum(3 * a[k] * a[n - k - 1] for k in range(n))
        cubic = 0
        for i in range(n - 1):
            for j in range(n - 1 - i):
                cubic += 3 * a[i] * a[j] * a[n - 2 - i - j]
        a.append(quadratic - cubic)
    return SequenceSlice(a, 0, "patalan")


def catalan_convolution(count: int) -> SequenceSlice:
    """C_n = sum_{k=0}^{n-1} C_k C_{n-1-k}."""
    c = [1]
    for n in range(1, count):
        c.append(sum(c[k] * c[n - 1 - k] for k in range(n)))
    return SequenceSlice(c, 0, "patalan")


class BivariateSeries:
    """Coefficients c(i, j) of x^i y^j for total degree i + j < order."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable], order: int | None = None):
        rows = [list(r) for r in rows]
        if order is None:
            order = len(rows)
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        out = []
        for i in range(order):
            src = rows[i] if i < len(rows) else []
            width = order - i
            row = [Fraction(c) for c in src[:width]]
            out.append(tuple(row + [Fraction(0)] * (width - len(row))))
        self._rows = tuple(out)

    @classmethod
    def from_function(cls, f: Callable[[int, int], object], order: int) -> BivariateSeries:
        return cls([[f(i, j) for j in range(order - i)] for i in range(order)])

    @classmethod
    def in_x(cls, s: TruncatedSeries) -> BivariateSeries:
        return cls([[c] for c in s], s.order)

    @classmethod
    def in_y(cls, s: TruncatedSeries) -> BivariateSeries:
        return cls([list(s)], s.order)

    @property
    def order(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if i + j >= self.order:
            raise IndexError(f"degree {i + j} beyond truncation order {self.order}")
        return self._rows[i][j]

    def __eq__(self, other):
        if isinstance(other, BivariateSeries):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"BivariateSeries(order={self.order})"

    def cells(self):
        for i, row in enumerate(self._rows):
            for j, c in enumerate(row):
                yield i, j, c

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        n = min(self.order, other.order)
        return BivariateSeries.from_function(lambda i, j: self[i, j] + other[i, j], n)

    def __neg__(self):
        return BivariateSeries([[-c for c in r] for r in self._rows])

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        return self + (-other)

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        n = min(self.order, other.order)
        out = [[Fraction(0)] * (n - i) for i in range(n)]
        b_nz = [(k, l, v) for k, l, v in other.cells() if v and k + l < n]
        for i, j, u in self.cells():
            if not u or i + j >= n:
                continue
            for k, l, v in b_nz:
                if i + j + k + l < n:
                    out[i + k][j + l] += u * v
        return BivariateSeries(out)


def verify_two_var_gf(params: Params, order: int) -> CheckResult:
    """Check (x + y - p^2 x y) F(x, y) = x f(x) + y g(y) below total degree ``order``.

    f(x) = (1 - p^2 x)^(-(p-q)/p) is the column-0 generating function and
    g(y) = (1 - p^2 y)^(-q/p) the row-0 one; for q = 1 these are the
    ``(p-1)/p`` and ``1/p`` exponents.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    p, q = params.p, params.q
    table = super_patalan_table(params, order, order)
    F = BivariateSeries.from_function(lambda i, j: table[i, j], order)
    D = BivariateSeries([[0, 1], [1, -p * p]], order)
    f = series_binomial(-p * p, -Fraction(p - q, p), order)
    g = series_binomial(-p * p, -Fraction(q, p), order)
    N = BivariateSeries.in_x(f.truncate(order - 1).shift_up()) + BivariateSeries.in_y(
        g.truncate(order - 1).shift_up()
    )
    lhs = D * F
    for i, j, c in lhs.cells():
        if c != N[i, j]:
            return CheckResult(
                "gf2var", p, q, order, False, f"coefficient x^{i}y^{j}: D*F={c} N={N[i, j]}"
            )
    return CheckResult("gf2var", p, q, order, True)


def verify_rubenstein_recurrence(params: Params, size: int) -> CheckResult:
    """p^2 Q(i, j) = Q(i, j+1) + Q(i+1, j) for all i, j < size."""
    if size < 2:
        raise ValueError("size must be >= 2")
    p = params.p
    t = super_patalan_table(params, size + 1, size + 1)
    for i in range(size):
        for j in range(size):
            if p * p * t[i, j] != t[i, j + 1] + t[i + 1, j]:
                return CheckResult(
                    "rubenstein", p, params.q, size, False,
                    f"cell ({i},{j}): p^2*Q={p * p * t[i, j]} sum={t[i, j + 1] + t[i + 1, j]}",
                )
    return CheckResult("rubenstein", p, params.q, size, True)


def verify_convolution(p: int, count: int, q: int = 1) -> CheckResult:
    """Degree-p convolutional recurrence against the defining recurrence.

    For p = 2 the standard Catalan convolution is also compared, and for
    p = 3 the explicit quadratic/cubic form.
    """
    expected = patalan_seq(p, count).values
    conv = patalan_via_convolution(p, count).values
    extras = {}
    if p == 2:
        extras["catalan"] = catalan_convolution(count).values
    if p == 3:
        extras["order3"] = patalan3_recurrence(count).values
    for label, got in [("general", conv), *extras.items()]:
        for n, (u, v) in enumerate(zip(got, expected)):
            if u != v:
                return CheckResult(
                    "convolution", p, q, count, False, f"{label} a({n})={u} expected {v}"
                )
    return CheckResult("convolution", p, q, count, True)


def verify_comp_inverse(p: int, order: int, q: int = 1) -> CheckResult:
    """x A(x) and (1 - (1 - p x)^p) / p^2 are mutual compositional inverses."""
    x = TruncatedSeries.x(order)
    xa = patalan_gf(p, order - 1).shift_up()
    poly = patalan_inverse_polynomial(p, order)
    checks = [
        ("poly(xA)", series_compose(poly, xa), x),
        ("xA(poly)", series_compose(xa, poly), x),
        ("inverse(poly)", series_comp_inverse(poly), xa),
    ]
    for label, got, want in checks:
        if got != want:
            k = next(k for k in range(order) if got[k] != want[k])
            return CheckResult(
                "comp-inverse", p, q, order, False, f"{label} degree {k}: {got[k]} != {want[k]}"
            )
    return CheckResult("comp-inverse", p, q, order, True)
