"""Combinatorial presentation of compact connected manifolds with embedded corners.

A manifold with embedded corners is described here by its boundary
hypersurfaces ``1..n``, its connected faces (each tagged with the increasing
tuple of hypersurfaces containing it) and the closure relation between faces
whose codimensions differ by one.  That is all the conormal differential
needs, so no geometric data is stored.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import AmbiguousAdjacencyError, ValidationError

__all__ = [
    "Face",
    "Adjacency",
    "CornerPoset",
    "Violation",
    "ValidationReport",
    "validate",
    "ensure_valid",
    "auto_adjacency",
    "closed_manifold",
    "boundary_components",
    "interval",
    "simplex",
    "product",
    "hypercube",
    "relabel_hypersurfaces",
]


@dataclass(frozen=True)
class Face:
    """A connected face of codimension ``codim`` lying in the hypersurfaces ``index_set``."""

    id: str
    codim: int
    index_set: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "index_set", tuple(self.index_set))


@dataclass(frozen=True, order=True)
class Adjacency:
    """``lower`` lies in the closure of ``upper``; ``missing_index`` cuts ``lower`` out of ``upper``."""

    lower: str
    upper: str
    missing_index: int


@dataclass(frozen=True)
class CornerPoset:
    """Faces and closure adjacencies of a manifold with embedded corners.

    Instances may hold invalid candidate data; run :func:`validate` (or use
    :func:`ensure_valid`) before computing with them.  ``factors`` records the
    codimensions of the factors when the poset came out of :func:`product`
    and is ``None`` otherwise.  It does not take part in equality.
    """

    n: int
    faces: tuple[Face, ...]
    adjacencies: frozenset[Adjacency] = frozenset()
    factors: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(self.faces))
        object.__setattr__(self, "adjacencies", frozenset(self.adjacencies))

    @property
    def d(self) -> int:
        """Maximal codimension of a face (0 for a closed manifold)."""
        return max((f.codim for f in self.faces), default=0)

    @cached_property
    def _by_id(self) -> dict[str, Face]:
        return {f.id: f for f in self.faces}

    def face(self, face_id: str) -> Face:
        return self._by_id[face_id]

    def faces_of(self, codim: int) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.codim == codim)

    def adjacencies_below(self, face_id: str) -> list[Adjacency]:
        """Adjacencies whose lower face is ``face_id``, sorted."""
        return sorted(a for a in self.adjacencies if a.lower == face_id)


@dataclass(frozen=True)
class Violation:
    invariant: str
    subjects: tuple[str, ...]
    message: str

    def __str__(self):
        return f"{self.invariant}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def invariants(self) -> set[str]:
        return {v.invariant for v in self.violations}

    def format(self) -> str:
        if self.ok:
            return "VALID"
        return "\n".join(str(v) for v in self.violations)


def _is_valid_id(face_id: str) -> bool:
    return bool(face_id) and not any(c.isspace() for c in face_id) and "#" not in face_id


def validate(poset: CornerPoset) -> ValidationReport:
    """Check every structural invariant of ``poset``; never raises."""
    out: list[Violation] = []

    def bad(invariant: str, subjects: Sequence[str], message: str):
        out.append(Violation(invariant, tuple(subjects), message))

    if poset.n < 0:
        bad("hypersurface-count", (), f"n must be >= 0, got {poset.n}")

    ids = Counter(f.id for f in poset.faces)
    for face_id, count in sorted(ids.items()):
        if count > 1:
            bad("unique-ids", (face_id,), f"face id {face_id} used {count} times")
    for f in poset.faces:
        if not _is_valid_id(f.id):
            bad("face-id", (f.id,), f"face id {f.id!r} is empty or contains whitespace or '#'")
        if len(f.index_set) != f.codim:
            bad(
                "codim",
                (f.id,),
                f"face {f.id} has codim {f.codim} but {len(f.index_set)} indices",
            )
        if any(b <= a for a, b in zip(f.index_set, f.index_set[1:])):
            bad("increasing", (f.id,), f"index set of face {f.id} is not strictly increasing")
        for i in f.index_set:
            if not 1 <= i <= poset.n:
                bad("index-range", (f.id,), f"face {f.id} uses index {i} outside 1..{poset.n}")

    top = poset.faces_of(0)
    if len(top) != 1:
        bad(
            "connected",
            tuple(f.id for f in top),
            f"expected exactly one codim-0 face, found {len(top)}",
        )
    elif top[0].index_set:
        bad("connected", (top[0].id,), "the codim-0 face must have an empty index set")

    walls = defaultdict(list)
    for f in poset.faces_of(1):
        walls[f.index_set].append(f.id)
    for i in range(1, poset.n + 1):
        owners = walls.pop((i,), [])
        if not owners:
            bad("hypersurfaces", (), f"hypersurface {i} missing")
        elif len(owners) > 1:
            bad("hypersurfaces", tuple(owners), f"hypersurface {i} not connected")
    for index_set, owners in walls.items():
        if len(index_set) == 1:
            bad("hypersurfaces", tuple(owners), f"codim-1 face on unknown hypersurface {index_set[0]}")

    by_id = {f.id: f for f in poset.faces}
    adj_ok: list[Adjacency] = []
    for a in sorted(poset.adjacencies):
        f, g = by_id.get(a.lower), by_id.get(a.upper)
        if f is None or g is None:
            missing = [x for x in (a.lower, a.upper) if x not in by_id]
            bad("adjacency", (a.lower, a.upper), f"adjacency refers to unknown face {missing[0]}")
            continue
        if f.codim != g.codim + 1:
            bad(
                "adjacency",
                (f.id, g.id),
                f"adjacency {f.id} -> {g.id} does not drop codimension by one",
            )
            continue
        if a.missing_index not in f.index_set or tuple(
            i for i in f.index_set if i != a.missing_index
        ) != g.index_set:
            bad(
                "adjacency",
                (f.id, g.id),
                f"adjacency {f.id} -> {g.id} is inconsistent with missing index {a.missing_index}",
            )
            continue
        adj_ok.append(a)

    below: dict[tuple[str, int], list[str]] = defaultdict(list)
    for a in adj_ok:
        below[a.lower, a.missing_index].append(a.upper)
    for f in poset.faces:
        for i in f.index_set:
            uppers = below.get((f.id, i), [])
            if len(uppers) != 1:
                what = "violated" if not uppers else f"ambiguous ({len(uppers)} faces)"
                bad("completeness", (f.id,), f"completeness {what} at face {f.id}, index {i}")

    adj_set = set(adj_ok)
    from_lower: dict[str, list[Adjacency]] = defaultdict(list)
    for a in adj_ok:
        from_lower[a.lower].append(a)
    for a in adj_ok:
        for b in from_lower.get(a.upper, ()):
            # (f -i-> g -j-> h) must close up through the face f minus j.
            other = below.get((a.lower, b.missing_index), [])
            if len(other) != 1:
                continue
            if Adjacency(other[0], b.upper, a.missing_index) not in adj_set:
                bad(
                    "diamond",
                    (a.lower, a.upper, b.upper),
                    f"diamond property violated at face {a.lower}: {a.upper} and "
                    f"{other[0]} do not share {b.upper}",
                )

    return ValidationReport(tuple(out))


def ensure_valid(poset: CornerPoset) -> CornerPoset:
    report = validate(poset)
    if not report.ok:
        raise ValidationError(report)
    return poset


def auto_adjacency(faces: Iterable[Face]) -> frozenset[Adjacency]:
    """Derive adjacencies from index sets; only sound when every index set is unique."""
    faces = list(faces)
    owner: dict[tuple[int, ...], str] = {}
    for f in faces:
        if f.index_set in owner:
            label = "{" + ",".join(map(str, f.index_set)) + "}"
            report = ValidationReport(
                (
                    Violation(
                        "ambiguous-adjacency",
                        (owner[f.index_set], f.id),
                        f"ambiguous adjacency: index set {label} shared by faces "
                        f"{owner[f.index_set]} and {f.id}",
                    ),
                )
            )
            raise AmbiguousAdjacencyError(report, f.index_set)
        owner[f.index_set] = f.id
    out = set()
    for f in faces:
        for i in f.index_set:
            g = owner.get(tuple(j for j in f.index_set if j != i))
            if g is not None:
                out.add(Adjacency(f.id, g, i))
    return frozenset(out)


def _name(index_set: tuple[int, ...]) -> str:
    if not index_set:
        return "X"
    if len(index_set) == 1:
        return f"H{index_set[0]}"
    return "F" + "_".join(map(str, index_set))


def _from_index_sets(n: int, index_sets: Iterable[tuple[int, ...]]) -> CornerPoset:
    faces = [Face(_name(s), len(s), s) for s in sorted(index_sets, key=lambda s: (len(s), s))]
    return CornerPoset(n, faces, auto_adjacency(faces))


def closed_manifold() -> CornerPoset:
    return CornerPoset(0, (Face("X", 0, ()),))


def boundary_components(p: int) -> CornerPoset:
    """Manifold with ``p`` connected boundary components and no corners."""
    if p < 1:
        raise ValueError("boundary_components needs p >= 1; use closed_manifold() for p = 0")
    return _from_index_sets(p, [()] + [(i,) for i in range(1, p + 1)])


def interval() -> CornerPoset:
    return boundary_components(2)


def simplex(k: int) -> CornerPoset:
    """The k-simplex: one face per proper subset of its ``k + 1`` facets."""
    if k < 1:
        raise ValueError("simplex needs k >= 1")
    labels = range(1, k + 2)
    sets = [s for r in range(k + 1) for s in itertools.combinations(labels, r)]
    return _from_index_sets(k + 1, sets)


def product(a: CornerPoset, b: CornerPoset) -> CornerPoset:
    """Face poset of the product manifold; hypersurfaces of ``b`` are shifted by ``a.n``.

    Face ids are ``"<a-id>*<b-id>"``.
    """
    ensure_valid(a)
    ensure_valid(b)
    shift = a.n
    faces = []
    for fa, fb in itertools.product(a.faces, b.faces):
        faces.append(
            Face(
                f"{fa.id}*{fb.id}",
                fa.codim + fb.codim,
                fa.index_set + tuple(i + shift for i in fb.index_set),
            )
        )
    faces.sort(key=lambda f: (f.codim, f.index_set, f.id))
    if len({f.id for f in faces}) != len(faces):
        raise ValueError("product face ids collide; rename faces containing '*'")
    adjs = set()
    for adj in a.adjacencies:
        for fb in b.faces:
            adjs.add(Adjacency(f"{adj.lower}*{fb.id}", f"{adj.upper}*{fb.id}", adj.missing_index))
    for adj in b.adjacencies:
        for fa in a.faces:
            adjs.add(
                Adjacency(f"{fa.id}*{adj.lower}", f"{fa.id}*{adj.upper}", adj.missing_index + shift)
            )
    factors = (a.factors or (a.d,)) + (b.factors or (b.d,))
    return CornerPoset(a.n + b.n, faces, adjs, factors=factors)


def hypercube(k: int) -> CornerPoset:
    if k < 1:
        raise ValueError("hypercube needs k >= 1")
    cube = interval()
    for _ in range(k - 1):
        cube = product(cube, interval())
    return cube


def relabel_hypersurfaces(poset: CornerPoset, perm: Mapping[int, int]) -> CornerPoset:
    """Rename hypersurface ``i`` to ``perm[i]``; ``perm`` must be a bijection of ``1..n``."""
    if sorted(perm) != list(range(1, poset.n + 1)) or sorted(perm.values()) != sorted(perm):
        raise ValueError("perm must be a permutation of 1..n")
    faces = [Face(f.id, f.codim, tuple(sorted(perm[i] for i in f.index_set))) for f in poset.faces]
    adjs = [Adjacency(a.lower, a.upper, perm[a.missing_index]) for a in poset.adjacencies]
    return CornerPoset(poset.n, faces, adjs, factors=poset.factors)
