"""Symmetric group character machinery: irreducible characters through the
Murnaghan-Nakayama recursion, class-function inner products, decomposition
into irreducibles, and the stable V(n_1, .., n_r) labeling."""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .combinatorics import Partition, centralizer_order, partitions


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    # Murnaghan-Nakayama through beta sets: removing a border strip of size r
    # moves one first-column hook length down by r while keeping the set
    # distinct; the height is the number of entries jumped over.
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        nbeta = sorted((c if c != b else nb for c in beta), reverse=True)
        nlam = tuple(x for x in (nbeta[i] - (length - 1 - i) for i in range(length)) if x > 0)
        total += (-1) ** (height % 2) * _mn(nlam, rest)
    return total


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """chi^lam(mu) for lam, mu partitions of the same n."""
    if lam.n != mu.n:
        raise ValueError(f"mismatched sizes: {lam!r} vs {mu!r}")
    return _mn(lam.parts, mu.parts)


_table_lock = threading.Lock()
_tables: dict[int, dict[Partition, dict[Partition, int]]] = {}


def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """The full table {lam: {mu: chi^lam(mu)}}, computed once per n and shared
    for the session (reads after the first call hit the cache)."""
    with _table_lock:
        tbl = _tables.get(n)
        if tbl is None:
            ps = partitions(n)
            tbl = {lam: {mu: _mn(lam.parts, mu.parts) for mu in ps} for lam in ps}
            _tables[n] = tbl
    return tbl


def dimension(lam: Partition) -> int:
    """dim of the irreducible labeled by lam (character at the identity)."""
    return _mn(lam.parts, (1,) * lam.n)


def class_sign(mu: Partition) -> int:
    """Sign character evaluated on the class mu."""
    return -1 if (mu.n - len(mu)) % 2 else 1


class ClassFunction:
    """An exact-rational function on the cycle types of a fixed S_n.

    The value map is totalized over every partition of n at construction, so
    lookups never miss.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values=None):
        self.n = n
        vals = {mu: Fraction(0) for mu in partitions(n)}
        if values:
            for mu, v in values.items():
                if mu not in vals:
                    raise ValueError(f"{mu!r} is not a partition of {n}")
                vals[mu] = Fraction(v)
        self.values = vals

    def __call__(self, mu: Partition) -> Fraction:
        return self.values[mu]

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.n == other.n and self.values == other.values)

    def inner(self, other: "ClassFunction") -> Fraction:
        """<f, g> = sum_mu f(mu) g(mu) / z_mu."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return sum((self.values[mu] * other.values[mu] / centralizer_order(mu)
                    for mu in self.values), Fraction(0))


def irreducible_class_function(lam: Partition) -> ClassFunction:
    tbl = character_table(lam.n)[lam]
    return ClassFunction(lam.n, tbl)


def decompose(f: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicities <f, chi^lam> for every lam with a nonzero multiplicity,
    keyed reverse-lexicographically.

    Non-integer or negative values are reported as-is; they are the designed
    signal that f was not a genuine character.
    """
    tbl = character_table(f.n)
    weights = {mu: Fraction(1, centralizer_order(mu)) for mu in f.values}
    out: dict[Partition, Fraction] = {}
    for lam in partitions(f.n):
        row = tbl[lam]
        m = sum((f.values[mu] * row[mu] * weights[mu] for mu in f.values), Fraction(0))
        if m:
            out[lam] = m
    return out


def multiplicity_trivial(f: ClassFunction) -> Fraction:
    return sum((f.values[mu] / centralizer_order(mu) for mu in f.values), Fraction(0))


def multiplicity_alternating(f: ClassFunction) -> Fraction:
    return sum((f.values[mu] * class_sign(mu) / centralizer_order(mu)
                for mu in f.values), Fraction(0))


# ---------------------------------------------------------------------------
# Stable labels: V(n_1, .., n_r) names the irreducible of S_n whose partition
# is (n - sum n_i, n_1, .., n_r).  The label is defined at n exactly when the
# top row is at least as long as n_1; reports must distinguish "multiplicity
# zero" from "label undefined", hence the None return below.

def cf_tail(lam: Partition) -> tuple[int, ...]:
    """The stable-notation tail of a partition: everything below the top row."""
    return lam.parts[1:]


def cf_label_from_tail(tail) -> str:
    return "V(0)" if not tail else "V(" + ",".join(str(t) for t in tail) + ")"


def cf_label(lam: Partition) -> str:
    return cf_label_from_tail(cf_tail(lam))


def parse_cf_label(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("V(") and text.endswith(")")):
        raise ValueError(f"not a V(..) label: {text!r}")
    body = text[2:-1].strip()
    if body in ("", "0"):
        return ()
    tail = tuple(int(t) for t in body.split(","))
    if any(tail[i] < tail[i + 1] for i in range(len(tail) - 1)) or any(t < 1 for t in tail):
        raise ValueError(f"tail must be weakly decreasing and positive: {text!r}")
    return tail


def partition_for_tail(tail, n: int):
    """The partition of n carrying the label, or None when undefined at n."""
    tail = tuple(tail)
    head = n - sum(tail)
    if head < (tail[0] if tail else 0):
        return None
    if head == 0:
        return Partition(())
    return Partition((head,) + tail)
