"""The conormal chain complex of a manifold with embedded corners.

``C_p`` is free on the faces of codimension ``p``, each co-oriented by the
wedge of the differentials of its defining functions in increasing index
order.  The differential sends a co-oriented face to the faces containing it
in their closure, each with the contracted co-orientation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .poset import CornerPoset, ensure_valid

__all__ = [
    "contraction_sign",
    "ConormalComplex",
    "ChainVector",
    "build_complex",
    "apply_differential",
    "verify_d_squared",
]


def contraction_sign(i: int, index_set: Sequence[int]) -> int:
    """Coefficient of the shortened wedge in ``e_i`` contracted into ``e_I``.

    >>> contraction_sign(3, (1, 3))
    -1
    """
    index_set = tuple(index_set)
    if i not in index_set:
        raise ValueError(f"index {i} not in {index_set}")
    j = index_set.index(i) + 1
    return -1 if j % 2 == 0 else 1


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class ConormalComplex:
    """Chain groups ``C_0..C_d`` with differentials ``D_1..D_d``.

    ``basis[p]`` lists face ids of codimension ``p`` in basis order and
    ``differentials[p - 1]`` is ``D_p`` with shape ``(|F_{p-1}|, |F_p|)``.
    """

    basis: tuple[tuple[str, ...], ...]
    differentials: tuple[np.ndarray, ...]

    def __post_init__(self):
        basis = tuple(tuple(b) for b in self.basis)
        if len(self.differentials) != max(len(basis) - 1, 0):
            raise ValueError("need one differential per positive degree")
        diffs = []
        for p, m in enumerate(self.differentials, start=1):
            shape = (len(basis[p - 1]), len(basis[p]))
            m = np.array(m, dtype=np.int64)
            if m.size == 0:
                m = np.zeros(shape, dtype=np.int64)
            if m.shape != shape:
                raise ValueError(f"D_{p} has shape {m.shape}, expected {shape}")
            diffs.append(_readonly(m))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "differentials", tuple(diffs))

    @property
    def d(self) -> int:
        return len(self.basis) - 1

    def rank(self, p: int) -> int:
        """Rank of the free group ``C_p`` (0 outside ``0..d``)."""
        return len(self.basis[p]) if 0 <= p <= self.d else 0

    def D(self, p: int) -> np.ndarray:
        """``D_p : C_p -> C_{p-1}``; an empty map at both ends of the complex."""
        if 1 <= p <= self.d:
            return self.differentials[p - 1]
        return np.zeros((self.rank(p - 1), self.rank(p)), dtype=np.int64)

    def with_differentials(self, differentials: Sequence[np.ndarray]) -> "ConormalComplex":
        return ConormalComplex(self.basis, tuple(differentials))


@dataclass(frozen=True)
class ChainVector:
    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def build_complex(poset: CornerPoset) -> ConormalComplex:
    ensure_valid(poset)
    d = poset.d
    basis = []
    position: dict[str, int] = {}
    for p in range(d + 1):
        faces = sorted(poset.faces_of(p), key=lambda f: (f.index_set, f.id))
        basis.append(tuple(f.id for f in faces))
        position.update((f.id, k) for k, f in enumerate(faces))

    diffs = [np.zeros((len(basis[p - 1]), len(basis[p])), dtype=np.int64) for p in range(1, d + 1)]
    for adj in poset.adjacencies:
        f = poset.face(adj.lower)
        diffs[f.codim - 1][position[adj.upper], position[f.id]] = contraction_sign(
            adj.missing_index, f.index_set
        )
    return ConormalComplex(tuple(basis), tuple(diffs))


def apply_differential(c: ChainVector, complex: ConormalComplex) -> ChainVector:
    if c.degree < 1:
        raise ValueError("the differential is only applied in positive degree")
    if len(c.coefficients) != complex.rank(c.degree):
        raise ValueError(
            f"chain has {len(c.coefficients)} coefficients, C_{c.degree} has rank {complex.rank(c.degree)}"
        )
    m = complex.D(c.degree).astype(object)
    image = m.dot(np.array(c.coefficients, dtype=object)) if m.size else [0] * m.shape[0]
    return ChainVector(c.degree - 1, tuple(image))


def _sparse_columns(m: np.ndarray) -> list[dict[int, int]]:
    cols: list[dict[int, int]] = [dict() for _ in range(m.shape[1])]
    for r, c in zip(*np.nonzero(m)):
        cols[c][r] = int(m[r, c])
    return cols


def composite_is_zero(outer: np.ndarray, inner: np.ndarray) -> bool:
    """True iff ``outer @ inner`` vanishes, using column sparsity of ``outer``."""
    outer_cols = _sparse_columns(outer)
    for inner_col in _sparse_columns(inner):
        acc: dict[int, int] = defaultdict(int)
        for mid, coeff in inner_col.items():
            for r, v in outer_cols[mid].items():
                acc[r] += coeff * v
        if any(acc.values()):
            return False
    return True


def verify_d_squared(complex: ConormalComplex) -> bool:
    return all(composite_is_zero(complex.D(p), complex.D(p + 1)) for p in range(1, complex.d))
