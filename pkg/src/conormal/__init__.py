"""Conormal homology of manifolds with embedded corners and the rational
K-theory of their b-compact operators, computed from face data."""

from .complex import (
    ChainVector,
    ConormalComplex,
    apply_differential,
    build_complex,
    contraction_sign,
    verify_d_squared,
)
from .errors import AmbiguousAdjacencyError, CornerError, InvariantBreach, ParseError, ValidationError
from .fileformat import dump, load, parse, serialize
from .groups import AbelianGroup, direct_sum
from .homology import HomologySummary, full_summary, homology, rational_betti
from .ktheory import KTheoryReport, ObstructionVerdict, VerdictKind, ktheory, obstruction_verdict, periodic_groups
from .orbit import assert_B_isomorphism, build_orbit_cochain, orbit_cohomology
from .poset import (
    Adjacency,
    CornerPoset,
    Face,
    auto_adjacency,
    boundary_components,
    closed_manifold,
    hypercube,
    interval,
    product,
    relabel_hypersurfaces,
    simplex,
    validate,
)
from .smith import SmithDecomposition, smith_normal_form

__version__ = "0.1.0"
