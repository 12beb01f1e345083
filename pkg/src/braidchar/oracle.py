"""Brute-force ground truth: explicit monomial bases for both algebras, the
signed S_n action on them, and graded characters computed as traces.

A basis element is a tuple of blocks over {1, .., n}: for pvb_dual each block
is an oriented chain (any order of distinct indices), for pfb_dual the chain
on a block is forced increasing so only the index set matters.  Singleton
blocks are the scalar 1 and are never stored.  Blocks are kept sorted by
root, i.e. by their first entry.
"""

from __future__ import annotations

import itertools
import threading
from typing import NamedTuple

from .algebras import (ALGEBRAS, PFB_DUAL, PVB_DUAL, DecompositionTable,
                       GradedCharacter, check_algebra)
from .characters import ClassFunction, decompose
from .combinatorics import Partition, Permutation, partitions, set_partitions

# Full basis sizes stay modest up to here; larger n streams uncached.
_CACHE_N_MAX = {PVB_DUAL: 7, PFB_DUAL: 9}

_basis_lock = threading.Lock()
_basis_cache: dict[tuple, tuple] = {}

_char_lock = threading.Lock()
_char_cache: dict[tuple, GradedCharacter] = {}


def element_degree(element) -> int:
    return sum(len(b) - 1 for b in element)


def support_partition(element) -> tuple:
    """The stored blocks as unordered index sets (sorted for comparison)."""
    return tuple(sorted(tuple(sorted(b)) for b in element))


def format_element(algebra, element) -> str:
    """Debug form, e.g. "(1<2<4)(3,5)"; pfb uses "<", pvb the stored order."""
    check_algebra(algebra)
    if not element:
        return "1"
    sep = "<" if algebra == PFB_DUAL else ","
    return "".join("(" + sep.join(str(v) for v in b) + ")" for b in element)


def iter_basis(algebra, n, degree):
    """Stream the degree-``degree`` basis of the algebra on n strands, in a
    fixed order, one element per set partition (pfb) or per ordered-block
    assignment (pvb)."""
    check_algebra(algebra)
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= degree <= n - 1:
        raise ValueError(f"degree must lie in 0..{n - 1}, got {degree}")
    for blocks in set_partitions(range(1, n + 1), blocks=n - degree):
        big = [b for b in blocks if len(b) >= 2]
        if algebra == PFB_DUAL:
            yield tuple(big)
        else:
            for orders in itertools.product(*(itertools.permutations(b) for b in big)):
                yield tuple(sorted(orders, key=lambda blk: blk[0]))


def basis(algebra, n, degree) -> tuple:
    """Materialized basis; cached for small n where the full list is cheap."""
    key = (algebra, n, degree)
    with _basis_lock:
        got = _basis_cache.get(key)
    if got is not None:
        return got
    els = tuple(iter_basis(algebra, n, degree))
    if n <= _CACHE_N_MAX[check_algebra(algebra)]:
        with _basis_lock:
            _basis_cache[key] = els
    return els


def _sequence_sort_sign(seq) -> int:
    # parity of the permutation sorting seq ascending
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def act(algebra, sigma: Permutation, element):
    """Apply sigma to a basis element; returns (normal form, sign).

    Relabeled pvb chains are again admissible as visited, so they pick up no
    sign.  A relabeled pfb chain is rewritten to the increasing chain on its
    support at the cost of the sign of the sorting permutation.  Restoring the
    increasing-root order of the wedge factors costs (-1)^(d_i d_j) per
    transposition of adjacent factors, d = block size - 1.
    """
    check_algebra(algebra)
    sign = 1
    blocks = []
    for block in element:
        img = tuple(sigma(v) for v in block)
        if algebra == PFB_DUAL:
            sign *= _sequence_sort_sign(img)
            img = tuple(sorted(img))
        blocks.append(img)
    for i in range(len(blocks)):
        di = len(blocks[i]) - 1
        for j in range(i + 1, len(blocks)):
            if blocks[i][0] > blocks[j][0] and (di * (len(blocks[j]) - 1)) % 2:
                sign = -sign
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks), sign


class SignedIndex(NamedTuple):
    """Position of a basis element in the canonical enumeration, with a sign."""

    index: int
    sign: int


def basis_index(algebra, n, degree) -> dict:
    """Element -> position map for the canonical enumeration of one degree."""
    return {el: i for i, el in enumerate(basis(algebra, n, degree))}


def act_indexed(algebra, sigma: Permutation, element, index=None) -> SignedIndex:
    """As ``act``, but locating the image in the canonical enumeration."""
    image, sign = act(algebra, sigma, element)
    if index is None:
        index = basis_index(algebra, sigma.n, element_degree(element))
    return SignedIndex(index[image], sign)


def graded_character(algebra, n, mu: Partition) -> GradedCharacter:
    """Trace of the canonical permutation of type mu on each graded piece,
    summed over basis elements mapped to themselves up to sign."""
    check_algebra(algebra)
    if mu.n != n:
        raise ValueError(f"{mu!r} does not partition {n}")
    key = (algebra, n, mu)
    with _char_lock:
        got = _char_cache.get(key)
    if got is not None:
        return got
    sigma = Permutation.canonical_of_type(mu)
    coeffs = []
    for k in range(n):
        trace = 0
        for el in basis(algebra, n, k):
            image, sign = act(algebra, sigma, el)
            if image == el:
                trace += sign
        coeffs.append(trace)
    gc = GradedCharacter(n, mu, tuple(coeffs))
    with _char_lock:
        _char_cache.setdefault(key, gc)
    return gc


def all_graded_characters(algebra, n) -> dict[Partition, GradedCharacter]:
    return {mu: graded_character(algebra, n, mu) for mu in partitions(n)}


def degree_class_function(algebra, n, degree) -> ClassFunction:
    """One graded piece as a class function on S_n."""
    chars = all_graded_characters(algebra, n)
    return ClassFunction(n, {mu: gc.coeffs[degree] for mu, gc in chars.items()})


def top_degree_report(algebra, n) -> DecompositionTable:
    """Irreducible decomposition of the top graded piece (degree n - 1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    mults = decompose(degree_class_function(algebra, n, n - 1))
    table = {}
    for lam, m in mults.items():
        if m.denominator != 1:
            raise ArithmeticError(f"non-integer multiplicity {m} at {lam!r}")
        table[lam] = int(m)
    return DecompositionTable.from_dict(n, n - 1, table)
