"""Homogeneous symmetric functions over the rationals, stored in the
power-sum basis.

Products and plethysm are closed form in power sums (p_mu p_nu = p_{mu u nu},
p_m[g] rescales indices by m); Schur conversion goes through the character
table, so Pieri / Littlewood-Richardson facts are derived checks rather than
core algorithms.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import ClassFunction, character_table
from .combinatorics import Partition, centralizer_order, partitions


class SymFunc:
    """A homogeneous symmetric function: degree plus a zero-free map from
    partitions of that degree to rational power-sum coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        self.degree = int(degree)
        clean: dict[Partition, Fraction] = {}
        if coeffs:
            for mu, c in coeffs.items():
                if mu.n != self.degree:
                    raise ValueError(f"{mu!r} does not partition degree {self.degree}")
                c = Fraction(c)
                if c:
                    clean[mu] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls(degree)

    @classmethod
    def one(cls) -> "SymFunc":
        return cls(0, {Partition(()): Fraction(1)})

    def __eq__(self, other):
        return (isinstance(other, SymFunc)
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("cannot add different degrees")
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return SymFunc(self.degree, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            out: dict[Partition, Fraction] = {}
            for a, ca in self.coeffs.items():
                for b, cb in other.coeffs.items():
                    key = Partition(tuple(sorted(a.parts + b.parts, reverse=True)))
                    out[key] = out.get(key, Fraction(0)) + ca * cb
            return SymFunc(self.degree + other.degree, out)
        return SymFunc(self.degree, {mu: c * other for mu, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self):
        terms = ", ".join(f"p[{mu.to_string()}]: {c}" for mu, c in sorted(
            self.coeffs.items(), key=lambda kv: kv[0].parts, reverse=True))
        return f"SymFunc(deg={self.degree}, {{{terms}}})"


def power(mu: Partition) -> SymFunc:
    return SymFunc(mu.n, {mu: Fraction(1)})


def schur(lam: Partition) -> SymFunc:
    """s_lam = sum_mu chi^lam(mu) p_mu / z_mu."""
    row = character_table(lam.n)[lam]
    return SymFunc(lam.n, {mu: Fraction(row[mu], centralizer_order(mu))
                           for mu in partitions(lam.n)})


def elementary(p: int) -> SymFunc:
    if p < 0:
        raise ValueError("p must be non-negative")
    return schur(Partition((1,) * p))


def homogeneous(p: int) -> SymFunc:
    if p < 0:
        raise ValueError("p must be non-negative")
    return schur(Partition((p,) if p else ()))


def ch_regular(m: int) -> SymFunc:
    """p_1^m, the Frobenius characteristic of the regular S_m-module."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return SymFunc(m, {Partition((1,) * m): Fraction(1)})


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f[g].

    p_m[g] replaces every p_i of g by p_{im}; the substitution extends
    multiplicatively over p_mu and linearly over the expansion of f, giving a
    result of degree deg(f) * deg(g).
    """
    if not g.coeffs:
        raise ValueError("g must be nonzero")

    pm_cache: dict[int, SymFunc] = {}

    def pm_of_g(m: int) -> SymFunc:
        got = pm_cache.get(m)
        if got is None:
            got = SymFunc(m * g.degree,
                          {Partition(tuple(q * m for q in mu.parts)): c
                           for mu, c in g.coeffs.items()})
            pm_cache[m] = got
        return got

    total = SymFunc.zero(f.degree * g.degree)
    for mu, c in f.coeffs.items():
        term = SymFunc.one()
        for q in mu.parts:
            term = term * pm_of_g(q)
        total = total + term * c
    return total


def to_schur(f: SymFunc) -> dict[Partition, Fraction]:
    """Schur expansion {lam: <f, s_lam>}; the coefficient of s_lam is
    sum_mu c_mu chi^lam(mu).  Zero entries are dropped; order is
    reverse-lexicographic."""
    tbl = character_table(f.degree)
    out: dict[Partition, Fraction] = {}
    for lam in partitions(f.degree):
        row = tbl[lam]
        v = sum((c * row[mu] for mu, c in f.coeffs.items()), Fraction(0))
        if v:
            out[lam] = v
    return out


def characteristic(f: ClassFunction) -> SymFunc:
    """Frobenius characteristic sum_mu f(mu) p_mu / z_mu of a class function."""
    return SymFunc(f.n, {mu: v / centralizer_order(mu)
                         for mu, v in f.values.items() if v})


def schur_expansion_json(f: SymFunc) -> dict[str, str]:
    """Schur expansion as a JSON-ready map of exact rational strings, e.g.
    {"3,1": "2", "2,2": "1"}, ordered reverse-lexicographically."""
    return {lam.to_string(): str(c) for lam, c in to_schur(f).items()}
