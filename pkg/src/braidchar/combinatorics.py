"""Exact enumeration primitives: integer partitions, set partitions,
Lah/Stirling/Bell numbers and permutation utilities.

All counts are Python ints (arbitrary precision) and every enumerator has a
fixed deterministic order, so downstream fixtures stay byte-stable.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import factorial


class Partition:
    """A weakly decreasing tuple of positive integers.

    Doubles as the cycle type of a permutation.  Instances are treated as
    immutable, hash by their parts and sort lexicographically.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __le__(self, other):
        return self.parts <= other.parts

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def multiplicity_form(self) -> dict[int, int]:
        """Map part size -> multiplicity, e.g. (3, 1, 1) -> {3: 1, 1: 2}."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def to_string(self) -> str:
        """Comma separated decreasing parts; the empty partition is ""."""
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(sorted((int(t) for t in text.split(",")), reverse=True))


def partitions(n: int, *, exact_length=None, max_length=None, max_part=None,
               no_repeated_odd=False, no_repeated_even=False) -> list[Partition]:
    """All partitions of n satisfying the constraints, in reverse-lexicographic
    order (largest first part first).

    ``no_repeated_odd`` / ``no_repeated_even`` require every odd / even part
    value to appear at most once.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for c in (exact_length, max_length, max_part):
        if c is not None and c < 0:
            raise ValueError("constraints must be non-negative")

    lcap = n
    if exact_length is not None:
        lcap = min(lcap, exact_length)
    if max_length is not None:
        lcap = min(lcap, max_length)
    pcap = n if max_part is None else min(n, max_part)

    def admissible(stack):
        if exact_length is not None and len(stack) != exact_length:
            return False
        if no_repeated_odd or no_repeated_even:
            mult: dict[int, int] = {}
            for p in stack:
                mult[p] = mult.get(p, 0) + 1
            if no_repeated_odd and any(v > 1 for p, v in mult.items() if p % 2):
                return False
            if no_repeated_even and any(v > 1 for p, v in mult.items() if p % 2 == 0):
                return False
        return True

    out: list[Partition] = []
    stack: list[int] = []

    def rec(rem, cap):
        if rem == 0:
            if admissible(stack):
                out.append(Partition(tuple(stack)))
            return
        if len(stack) >= lcap:
            return
        for p in range(min(cap, rem), 0, -1):
            stack.append(p)
            rec(rem - p, p)
            stack.pop()

    rec(n, pcap)
    return out


@lru_cache(maxsize=None)
def lah(n: int, k: int) -> int:
    """Number of partitions of an n-set into k ordered blocks."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    if k == n:
        return 1
    return lah(n - 1, k - 1) + (n - 1 + k) * lah(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k unordered blocks."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    if k == n:
        return 1
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def set_partitions(items, blocks=None):
    """Yield the set partitions of ``items``, each as a tuple of blocks.

    Blocks are sorted tuples ordered by their minimum; the iteration order is
    fixed (restricted-growth order on the sorted items).  With ``blocks``
    given, only partitions into exactly that many blocks are produced.
    """
    items = sorted(items)
    n = len(items)
    if n == 0:
        if blocks in (None, 0):
            yield ()
        return

    parts: list[list[int]] = []

    def rec(i):
        if blocks is not None and len(parts) + (n - i) < blocks:
            return
        if i == n:
            if blocks is None or len(parts) == blocks:
                yield tuple(tuple(b) for b in parts)
            return
        x = items[i]
        for b in parts:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        if blocks is None or len(parts) < blocks:
            parts.append([x])
            yield from rec(i + 1)
            parts.pop()

    yield from rec(0)


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_s s^{m_s} m_s!; n!/z_mu is the conjugacy class size."""
    z = 1
    for size, m in mu.multiplicity_form().items():
        z *= size ** m * factorial(m)
    return z


class Permutation:
    """A bijection of {1, .., n}; 1-based at every interface, 0-based inside."""

    __slots__ = ("_img",)

    def __init__(self, images):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection of 1..{len(img)}: {images}")
        self._img = img

    @classmethod
    def _raw(cls, img0) -> "Permutation":
        p = object.__new__(cls)
        p._img = tuple(img0)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, cycles, n=None) -> "Permutation":
        """Build from 1-based cycles, e.g. [(1, 2, 3), (4, 5)]; points not
        mentioned are fixed."""
        mx = max((max(c) for c in cycles if c), default=0)
        if n is None:
            n = mx
        elif n < mx:
            raise ValueError(f"cycle entry {mx} exceeds n={n}")
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"cycle entry {x} out of range 1..{n}")
                if x in seen:
                    raise ValueError(f"cycles overlap at {x}")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b - 1
        return cls._raw(img)

    @classmethod
    def from_string(cls, text: str, n=None) -> "Permutation":
        """Parse cycle notation "(1 2 3)(4 5)" or one-line notation "2,3,1"."""
        text = text.strip()
        if text.startswith("("):
            chunks = re.findall(r"\(([^()]*)\)", text)
            cycles = [tuple(int(t) for t in c.replace(",", " ").split()) for c in chunks]
            return cls.from_cycles([c for c in cycles if c], n=n)
        if not text:
            return cls.identity(n or 0)
        return cls(int(t) for t in text.split(","))

    @classmethod
    def canonical_of_type(cls, mu: Partition) -> "Permutation":
        """The permutation of cycle type mu whose cycles are blocks of
        consecutive integers, shortest cycles first."""
        img: list[int] = []
        start = 0
        for length in sorted(mu.parts):
            img.extend(range(start + 1, start + length))
            img.append(start)
            start += length
        return cls._raw(img)

    @property
    def n(self) -> int:
        return len(self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def images(self) -> tuple[int, ...]:
        """One-line notation, 1-based."""
        return tuple(v + 1 for v in self._img)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) == self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation._raw(self._img[j] for j in other._img)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self._img):
            inv[v] = i
        return Permutation._raw(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles covering 1..n, each starting at its minimum element,
        ordered by that minimum."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            cyc = [s]
            seen[s] = True
            j = self._img[s]
            while j != s:
                cyc.append(j)
                seen[j] = True
                j = self._img[j]
            out.append(tuple(v + 1 for v in cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1

    def one_line_string(self) -> str:
        return ",".join(str(v) for v in self.images())

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles())

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        return f"Permutation.from_string({self.cycle_string()!r})"


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    return p.cycles()
