"""Closed-form side of every theorem: Hilbert series, graded character
formulas for both algebras, plethystic decomposition tables, multiplicity
counts, irreducible constraints and stability reports.

Everything here is formula-driven; the independent basis-level computation
lives in ``oracle`` and the two are compared by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebras import (PFB_DUAL, PVB_DUAL, DecompositionTable, GradedCharacter,
                       check_algebra)
from .characters import cf_label_from_tail, cf_tail, partition_for_tail
from .combinatorics import Partition, lah, partitions, set_partitions, stirling2
from .symfunc import SymFunc, ch_regular, elementary, homogeneous, plethysm, to_schur


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _as_coeffs(poly: list, n: int) -> tuple[int, ...]:
    if any(poly[n:]):
        raise ArithmeticError(f"degree overflow beyond {n - 1}: {poly}")
    return tuple(poly[:n]) + (0,) * (n - len(poly))


def hilbert(algebra, n) -> GradedCharacter:
    """Graded dimensions: Lah numbers L(n, n-k) for pvb_dual, Stirling numbers
    S(n, n-k) for pfb_dual."""
    check_algebra(algebra)
    if n < 1:
        raise ValueError("n must be at least 1")
    count = lah if algebra == PVB_DUAL else stirling2
    return GradedCharacter(n, Partition((1,) * n),
                           tuple(count(n, n - k) for k in range(n)))


def char_pvb(n, mu: Partition) -> GradedCharacter:
    """Graded pvb_dual character at cycle type mu.

    One factor per distinct part size s with multiplicity a:
    sum_b L(a, b) (-1)^((a-b)(s-1)) s^(a-b) z^((a-b)s); factors multiply
    across sizes.
    """
    if mu.n != n:
        raise ValueError(f"{mu!r} does not partition {n}")
    poly = [1]
    for size, count in sorted(mu.multiplicity_form().items()):
        factor = [0] * ((count - 1) * size + 1)
        for b in range(1, count + 1):
            exp = (count - b) * size
            sign = -1 if ((count - b) * (size - 1)) % 2 else 1
            factor[exp] += lah(count, b) * sign * size ** (count - b)
        poly = _poly_mul(poly, factor)
    return GradedCharacter(n, mu, _as_coeffs(poly, n))


def char_pvb_substitution(n, mu: Partition) -> GradedCharacter:
    """Same character via the substitution form: each size-s factor is the
    Lah polynomial of the multiplicity evaluated at w = (-1)^(s-1) s z^s."""
    if mu.n != n:
        raise ValueError(f"{mu!r} does not partition {n}")
    poly = [1]
    for size, count in sorted(mu.multiplicity_form().items()):
        w_scale = size if size % 2 else -size
        factor = [0] * ((count - 1) * size + 1)
        for j in range(count):  # w^j term of sum_j L(count, count-j) w^j
            factor[j * size] += lah(count, count - j) * w_scale ** j
        poly = _poly_mul(poly, factor)
    return GradedCharacter(n, mu, _as_coeffs(poly, n))


def _divisors(g: int) -> list[int]:
    return [d for d in range(1, g + 1) if g % d == 0]


def char_pfb(n, mu: Partition) -> GradedCharacter:
    """Graded pfb_dual character at cycle type mu.

    Sum over set partitions of the cycle set; a part holding cycles of lengths
    l_t contributes, for every common divisor k of the l_t (with d_t = l_t/k
    and D = sum d_t), the term eps k^(#cycles - 1) z^(k(D-1)) where
    eps = (-1)^((k-1)(D-1) + sum(d_t - 1)).
    """
    if mu.n != n:
        raise ValueError(f"{mu!r} does not partition {n}")
    lengths = sorted(mu.parts)
    total = [0] * n
    for split in set_partitions(range(len(lengths))):
        prod = [1]
        for part in split:
            ls = [lengths[i] for i in part]
            g = 0
            for l in ls:
                g = gcd(g, l)
            factor = [0] * (sum(ls) - 1 + 1)
            for k in _divisors(g):
                ds = [l // k for l in ls]
                big_d = sum(ds)
                eps = -1 if ((k - 1) * (big_d - 1) + sum(d - 1 for d in ds)) % 2 else 1
                factor[k * (big_d - 1)] += eps * k ** (len(part) - 1)
            prod = _poly_mul(prod, factor)
        for i, c in enumerate(prod):
            if c:
                total[i] += c  # exponents stay below n: each part loses >= 1
    return GradedCharacter(n, mu, tuple(total))


def char_formula(algebra, n, mu: Partition) -> GradedCharacter:
    check_algebra(algebra)
    return char_pvb(n, mu) if algebra == PVB_DUAL else char_pfb(n, mu)


def decompose_formula(algebra, n, k) -> DecompositionTable:
    """Plethystic decomposition of degree k: sum over partitions abar of k
    with at most n-k parts of prod_t v(t, a_t)[inner(t+1)] * h_{n-k-l(abar)},
    where v is h for even t and e for odd t, and inner is the regular
    characteristic (pvb) or e (pfb)."""
    check_algebra(algebra)
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"need 1 <= n and 0 <= k <= n-1, got n={n}, k={k}")
    total = SymFunc.zero(n)
    for abar in partitions(k):
        if len(abar) > n - k:
            continue
        term = SymFunc.one()
        for t, a in sorted(abar.multiplicity_form().items()):
            outer = homogeneous(a) if t % 2 == 0 else elementary(a)
            inner = ch_regular(t + 1) if algebra == PVB_DUAL else elementary(t + 1)
            term = term * plethysm(outer, inner)
        term = term * homogeneous(n - k - len(abar))
        total = total + term
    table = {}
    for lam, c in to_schur(total).items():
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"non-character multiplicity {c} at {lam!r}")
        table[lam] = int(c)
    return DecompositionTable.from_dict(n, k, table)


def decompose_pvb(n, k) -> DecompositionTable:
    return decompose_formula(PVB_DUAL, n, k)


def decompose_pfb(n, k) -> DecompositionTable:
    return decompose_formula(PFB_DUAL, n, k)


def trivial_multiplicity_pvb(n, k) -> int:
    """Multiplicity of the trivial representation in pvb_dual degree k: the
    number of partitions of k into at most n-k parts with no repeated odd
    part value."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    return len(partitions(k, max_length=n - k, no_repeated_odd=True))


def no_repeated_odd_count(k) -> int:
    """Unrestricted count of partitions of k with no repeated odd part."""
    return len(partitions(k, no_repeated_odd=True))


@dataclass(frozen=True)
class ConstraintReport:
    """Constraint scan of one pfb_dual decomposition table."""

    n: int
    degree: int
    small_tail: tuple           # entries whose tail size n - lam_0 is below the degree
    two_row: tuple              # all two-row entries (partition, multiplicity)
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "small_tail": [lam.to_string() for lam in self.small_tail],
            "two_row": [{"lambda": lam.to_string(), "mult": m} for lam, m in self.two_row],
            "ok": self.ok,
        }


def constraint_checks(n, k) -> ConstraintReport:
    """Assert the irreducible constraints on pfb_dual degree k: every entry
    has tail size >= k, and no two-row partition occurs except a single
    (n-1, 1) in degree 1."""
    table = decompose_pfb(n, k)
    small = tuple(lam for lam, m in table.entries if m and (n - lam[0]) < k)
    two_row = tuple((lam, m) for lam, m in table.entries if m and len(lam) == 2)
    if k == 1:
        two_ok = two_row == ((Partition((n - 1, 1)), 1),)
    else:
        two_ok = not two_row
    return ConstraintReport(n, k, small, two_row, ok=(not small) and two_ok)


@dataclass(frozen=True)
class StabilityReport:
    """Per-label multiplicity trajectories of degree k over a range of n.

    ``stable_from`` is the smallest n in range from which every table is
    identical to the last one; it is a verdict about the scanned range, not a
    proof of stability beyond it.  ``stable_from_bound`` records whether the
    tables are constant from n = 4k onward within the range.
    """

    algebra: str
    k: int
    n_values: tuple[int, ...]
    trajectories: dict  # tail tuple -> {n: multiplicity or None when undefined}
    stable_from: int | None
    stable_from_bound: bool

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "k": self.k,
            "n_range": [self.n_values[0], self.n_values[-1]],
            "trajectory": {
                cf_label_from_tail(tail): {str(n): m for n, m in traj.items()}
                for tail, traj in self.trajectories.items()
            },
            "stable_from": self.stable_from,
            "stable_from_4k": self.stable_from_bound,
        }


def stability_report(algebra, k, n_values) -> StabilityReport:
    check_algebra(algebra)
    n_values = tuple(sorted(set(int(n) for n in n_values)))
    if not n_values or n_values[0] <= k:
        raise ValueError(f"every n must exceed k={k}")
    tables = {n: decompose_formula(algebra, n, k) for n in n_values}
    tail_tables = {
        n: {cf_tail(lam): m for lam, m in tables[n].entries if m}
        for n in n_values
    }

    tails = sorted({t for tt in tail_tables.values() for t in tt},
                   key=lambda t: (sum(t), t))
    trajectories = {}
    for tail in tails:
        traj = {}
        for n in n_values:
            if partition_for_tail(tail, n) is None:
                traj[n] = None
            else:
                traj[n] = tail_tables[n].get(tail, 0)
        trajectories[tail] = traj

    stable_from = None
    for i, n0 in enumerate(n_values):
        if all(tail_tables[nv] == tail_tables[n0] for nv in n_values[i:]):
            stable_from = n0
            break

    beyond = [n for n in n_values if n >= 4 * k]
    bound_ok = all(tail_tables[n] == tail_tables[beyond[0]] for n in beyond) if beyond else True

    return StabilityReport(algebra, k, n_values, trajectories, stable_from, bound_ok)
