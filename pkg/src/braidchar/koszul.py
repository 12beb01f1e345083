"""Exact truncated power series and the graded-character Koszul identity:
the dual algebra's character at -z inverts to the graded character of the
universal enveloping algebra on the same class."""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import Partition
from .formulas import char_formula

DEFAULT_TRUNCATION = 12


class TruncatedSeries:
    """A power series modulo z^(trunc+1) with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("need at least the constant term")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls((Fraction(1),) + (Fraction(0),) * trunc)

    @classmethod
    def from_polynomial(cls, coeffs, trunc: int) -> "TruncatedSeries":
        coeffs = list(coeffs)[:trunc + 1]
        coeffs += [0] * (trunc + 1 - len(coeffs))
        return cls(coeffs)

    def negated_argument(self) -> "TruncatedSeries":
        """The series evaluated at -z."""
        return TruncatedSeries(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        trunc = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (trunc + 1)
        for i, x in enumerate(self.coeffs[:trunc + 1]):
            if x:
                for j in range(trunc + 1 - i):
                    y = other.coeffs[j]
                    if y:
                        out[i + j] += x * y
        return TruncatedSeries(out)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def invert(self) -> "TruncatedSeries":
        """The multiplicative inverse to the same truncation; requires a
        nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("cannot invert a series with zero constant term")
        b = [Fraction(1) / a[0]]
        for k in range(1, len(a)):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if a[i]:
                    acc += a[i] * b[k - i]
            b.append(-acc / a[0])
        return TruncatedSeries(b)

    def to_json_list(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def invert(series: TruncatedSeries) -> TruncatedSeries:
    return series.invert()


def dual_character(algebra, n, mu: Partition, trunc: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    """1 / A!(-z) truncated: the graded character of the Koszul-dual
    (enveloping) algebra at class mu, recovered from the closed formula for
    the finite side."""
    if trunc < 0:
        raise ValueError("trunc must be non-negative")
    finite = char_formula(algebra, n, mu)
    return TruncatedSeries.from_polynomial(finite.coeffs, trunc).negated_argument().invert()


def verify_identity(algebra, n, mu: Partition, trunc: int = DEFAULT_TRUNCATION):
    """Check dual(z) * A!(-z) == 1 exactly to the truncation order.

    Returns (ok, residual) where residual is the first offending
    (index, coefficient difference) or None.
    """
    finite = TruncatedSeries.from_polynomial(char_formula(algebra, n, mu).coeffs, trunc)
    product = dual_character(algebra, n, mu, trunc) * finite.negated_argument()
    for i, c in enumerate(product.coeffs):
        want = Fraction(1) if i == 0 else Fraction(0)
        if c != want:
            return False, (i, c - want)
    return True, None
