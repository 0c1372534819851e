"""The one-row first page of the codimension filtration of the orbit space.

Position ``s`` of the row carries one generator per face of codimension
``d - s`` and sits in cohomological degree ``N - (d - s)``.  The first
differential goes from position ``s`` to ``s + 1``.  Everything here is
rebuilt straight from the poset: the matrices are not copied from
:mod:`conormal.complex`, so agreement with conormal homology is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import AbelianGroup
from .homology import homology, subquotient
from .complex import build_complex
from .poset import CornerPoset, ensure_valid

__all__ = [
    "OrbitCochainComplex",
    "default_ambient_degree",
    "build_orbit_cochain",
    "orbit_cohomology",
    "DegreeComparison",
    "BComparison",
    "assert_B_isomorphism",
]


def default_ambient_degree(d: int) -> int:
    return max(2, d + d % 2)


def _shift_sign(i: int, index_set: tuple[int, ...]) -> int:
    # Moving e_i to the front of the wedge passes every smaller index once.
    return (-1) ** sum(1 for k in index_set if k < i)


@dataclass(frozen=True)
class OrbitCochainComplex:
    """Generators per position and coboundary matrices between positions.

    ``coboundaries[s]`` has one row per generator at position ``s`` and one
    column per generator at ``s + 1``; row ``f`` lists the coboundary of the
    generator of face ``f``.
    """

    ambient_degree: int
    d: int
    generators: tuple[tuple[str, ...], ...]
    coboundaries: tuple[np.ndarray, ...]

    def cohomological_degree(self, s: int) -> int:
        return self.ambient_degree - (self.d - s)

    def position_of_codim(self, p: int) -> int:
        return self.d - p

    def e2_row(self) -> int:
        """Row index ``q`` of the single nonzero row, so that ``s + q`` is the total degree."""
        return self.ambient_degree - self.d

    def summands_in_degree(self, total: int) -> list[tuple[int, int]]:
        """Positions ``(s, q)`` of the first page contributing to ``H^total``."""
        q = self.e2_row()
        return [(s, q) for s in range(self.d + 1) if s + q == total]

    def coboundary(self, s: int) -> np.ndarray:
        if 0 <= s < self.d:
            return self.coboundaries[s]
        rows = len(self.generators[s]) if 0 <= s <= self.d else 0
        cols = len(self.generators[s + 1]) if 0 <= s + 1 <= self.d else 0
        return np.zeros((rows, cols), dtype=np.int64)


def build_orbit_cochain(poset: CornerPoset, N: int | None = None) -> OrbitCochainComplex:
    ensure_valid(poset)
    d = poset.d
    if N is None:
        N = default_ambient_degree(d)
    if N % 2:
        raise ValueError(f"ambient degree must be even, got {N}")
    if N < max(d, 1):
        raise ValueError(f"ambient degree {N} is smaller than the codimension {d}")

    generators = []
    slot: dict[str, int] = {}
    for s in range(d + 1):
        faces = sorted(
            (f for f in poset.faces if f.codim == d - s), key=lambda f: (f.index_set, f.id)
        )
        generators.append(tuple(f.id for f in faces))
        for k, f in enumerate(faces):
            slot[f.id] = k

    mats = [np.zeros((len(generators[s]), len(generators[s + 1])), dtype=np.int64) for s in range(d)]
    index_sets = {f.id: f.index_set for f in poset.faces}
    for adj in poset.adjacencies:
        s = d - len(index_sets[adj.lower])
        mats[s][slot[adj.lower], slot[adj.upper]] = _shift_sign(adj.missing_index, index_sets[adj.lower])
    for m in mats:
        m.flags.writeable = False
    return OrbitCochainComplex(N, d, tuple(generators), tuple(mats))


def orbit_cohomology(c: OrbitCochainComplex, s: int) -> AbelianGroup:
    """Second-page group at position ``s``: kernel of the outgoing over image of the incoming coboundary."""
    if not 0 <= s <= c.d:
        raise ValueError(f"position {s} outside 0..{c.d}")
    # Column-vector convention for the shared kernel/image engine.
    return subquotient(c.coboundary(s).T, c.coboundary(s - 1).T)


@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    cohomological_degree: int
    conormal: AbelianGroup
    orbit: AbelianGroup

    @property
    def ok(self) -> bool:
        return self.conormal == self.orbit

    def line(self) -> str:
        tag = "OK" if self.ok else "MISMATCH"
        return f"{self.degree}: conormal={self.conormal} orbit={self.orbit} {tag}"


@dataclass(frozen=True)
class BComparison:
    ambient_degree: int
    degrees: tuple[DegreeComparison, ...]
    collapsed: bool

    @property
    def passed(self) -> bool:
        return self.collapsed and all(c.ok for c in self.degrees)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.degrees]
        out.append(f"B-ISOMORPHISM: {'PASS' if self.passed else 'FAIL'}")
        return out


def assert_B_isomorphism(poset: CornerPoset, N: int | None = None) -> BComparison:
    """Compare conormal homology with orbit-space cohomology degree by degree.

    Face ``f`` of codimension ``p`` is matched with the generator of ``f``
    at position ``d - p``, i.e. ``H^{N-p}`` on the orbit side against
    ``H_p`` on the conormal side.
    """
    cochain = build_orbit_cochain(poset, N)
    cx = build_complex(poset)
    rows = []
    for p in range(poset.d + 1):
        s = cochain.position_of_codim(p)
        rows.append(
            DegreeComparison(p, cochain.cohomological_degree(s), homology(cx, p), orbit_cohomology(cochain, s))
        )
    collapsed = all(
        len(cochain.summands_in_degree(cochain.ambient_degree - r)) == 1 for r in range(poset.d + 1)
    )
    return BComparison(cochain.ambient_degree, tuple(rows), collapsed)
