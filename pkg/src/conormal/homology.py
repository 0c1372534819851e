"""Integral and rational homology of the conormal complex."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import ConormalComplex, composite_is_zero
from .errors import InvariantBreach
from .groups import AbelianGroup
from .rational import rational_rank
from .smith import as_int_matrix, smith_normal_form

__all__ = [
    "subquotient",
    "homology",
    "rational_betti",
    "HomologySummary",
    "full_summary",
]


def subquotient(outgoing, incoming) -> AbelianGroup:
    """``ker(outgoing) / im(incoming)`` for composable integer maps.

    ``outgoing`` has shape ``(a, k)`` and ``incoming`` shape ``(k, b)``.  The
    image is written in a kernel basis read off the Smith form of
    ``outgoing``; the invariant factors of that coordinate matrix give the
    torsion.
    """
    out = as_int_matrix(outgoing)
    inc = as_int_matrix(incoming)
    k = out.shape[1]
    if inc.shape[0] != k:
        raise ValueError(f"maps do not compose: {out.shape} after {inc.shape}")

    snf = smith_normal_form(out)
    r = snf.rank
    coords = snf.V_inv.dot(inc) if inc.size else np.zeros((k, inc.shape[1]), dtype=object)
    if np.any(coords[:r] != 0):
        raise InvariantBreach("image of the incoming map is not inside the kernel")
    image = smith_normal_form(coords[r:])
    return AbelianGroup(k - r - image.rank, tuple(x for x in image.diag if x > 1))


def _check_degree(complex: ConormalComplex, p: int) -> None:
    if not 0 <= p <= complex.d:
        raise ValueError(f"degree {p} outside 0..{complex.d}")


def homology(complex: ConormalComplex, p: int) -> AbelianGroup:
    _check_degree(complex, p)
    if not composite_is_zero(complex.D(p), complex.D(p + 1)):
        raise InvariantBreach(f"D_{p} D_{p + 1} != 0")
    return subquotient(complex.D(p), complex.D(p + 1))


def rational_betti(complex: ConormalComplex, p: int) -> int:
    """``dim_Q`` of the degree-``p`` homology, from ranks alone."""
    _check_degree(complex, p)
    if not composite_is_zero(complex.D(p), complex.D(p + 1)):
        raise InvariantBreach(f"D_{p} D_{p + 1} != 0")
    return complex.rank(p) - rational_rank(complex.D(p)) - rational_rank(complex.D(p + 1))


@dataclass(frozen=True)
class HomologySummary:
    groups: tuple[AbelianGroup, ...]
    betti: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.groups) - 1

    def lines(self) -> list[str]:
        return [f"H_{p} = {g}" for p, g in enumerate(self.groups)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * b for p, b in enumerate(self.betti))


def full_summary(complex: ConormalComplex) -> HomologySummary:
    groups = tuple(homology(complex, p) for p in range(complex.d + 1))
    betti = tuple(rational_betti(complex, p) for p in range(complex.d + 1))
    for p, (g, b) in enumerate(zip(groups, betti)):
        if g.free_rank != b:
            raise InvariantBreach(f"degree {p}: Smith path gives rank {g.free_rank}, rational path {b}")
    return HomologySummary(groups, betti)
