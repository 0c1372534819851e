"""Finitely generated abelian groups in invariant-factor normal form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normalize cyclic orders so each divides the next; 1s are dropped.

    >>> invariant_factors([2, 3, 4])
    (2, 12)
    """
    vals = [int(v) for v in orders]
    if any(v < 1 for v in vals):
        raise ValueError("cyclic orders must be positive")
    vals = [v for v in vals if v > 1]
    # Replacing a pair by (gcd, lcm) preserves the group; sweeping every pair
    # leaves a divisibility chain.
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            a, b = vals[i], vals[j]
            g = gcd(a, b)
            vals[i], vals[j] = g, a // g * b
    return tuple(v for v in vals if v > 1)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank + Z/t_1 + ... + Z/t_k`` with ``t_1 | t_2 | ... | t_k``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return AbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def direct_sum(groups: Iterable[AbelianGroup]) -> AbelianGroup:
    total = AbelianGroup()
    for g in groups:
        total = total + g
    return total
