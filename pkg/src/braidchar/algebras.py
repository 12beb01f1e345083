"""Shared vocabulary for the two graded algebras and their report containers.

"pvb_dual" grades by Lah numbers and carries arbitrary oriented chains;
"pfb_dual" grades by Stirling numbers and carries increasing chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import cf_label
from .combinatorics import Partition

PVB_DUAL = "pvb_dual"
PFB_DUAL = "pfb_dual"
ALGEBRAS = (PVB_DUAL, PFB_DUAL)


def check_algebra(algebra: str) -> str:
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}; expected one of {ALGEBRAS}")
    return algebra


@dataclass(frozen=True)
class GradedCharacter:
    """Integer trace per degree 0..n-1 at one cycle type: a polynomial in z."""

    n: int
    mu: Partition
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise ValueError(f"need {self.n} coefficients, got {len(self.coeffs)}")

    def to_json_dict(self) -> dict:
        return {"n": self.n, "mu": self.mu.to_string(), "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class DecompositionTable:
    """Irreducible multiplicities of one graded piece, reverse-lex by label."""

    n: int
    degree: int
    entries: tuple[tuple[Partition, int], ...]

    @classmethod
    def from_dict(cls, n: int, degree: int, table) -> "DecompositionTable":
        items = tuple(sorted(((lam, int(m)) for lam, m in table.items() if m),
                             key=lambda kv: kv[0].parts, reverse=True))
        return cls(n, degree, items)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.entries)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "multiplicities": [
                {"lambda": lam.to_string(), "cf": cf_label(lam), "mult": m}
                for lam, m in self.entries
            ],
        }
