import random

import numpy as np
import pytest

from conormal.complex import ConormalComplex, build_complex
from conormal.errors import InvariantBreach
from conormal.groups import AbelianGroup
from conormal.homology import full_summary, homology, rational_betti, subquotient
from conormal.poset import (
    boundary_components,
    closed_manifold,
    hypercube,
    interval,
    product,
    relabel_hypersurfaces,
    simplex,
)

from conftest import bigon
from oracles import INTERVAL_HOMOLOGY, complex_homology_oracle, kunneth

Z = AbelianGroup(1)
ZERO = AbelianGroup()


def groups(poset):
    return list(full_summary(build_complex(poset)).groups)


def test_closed_manifold():
    assert homology(build_complex(closed_manifold()), 0) == Z


@pytest.mark.parametrize("p", range(1, 11))
def test_boundary_components(p):
    assert groups(boundary_components(p)) == [ZERO, AbelianGroup(p - 1)]


def test_square_and_triangle():
    assert groups(hypercube(2)) == [ZERO, ZERO, Z]
    assert groups(simplex(2)) == [ZERO, ZERO, Z]


def test_bigon():
    assert groups(bigon()) == [ZERO, ZERO, Z]


def test_rational_betti_examples():
    assert rational_betti(build_complex(simplex(2)), 2) == 1
    cube = build_complex(hypercube(3))
    assert [rational_betti(cube, p) for p in range(4)] == [0, 0, 0, 1]


def test_full_summary_lines():
    assert full_summary(build_complex(interval())).lines() == ["H_0 = 0", "H_1 = Z"]
    assert full_summary(build_complex(closed_manifold())).lines() == ["H_0 = Z"]


def test_degree_out_of_range():
    cx = build_complex(interval())
    with pytest.raises(ValueError):
        homology(cx, 2)
    with pytest.raises(ValueError):
        rational_betti(cx, -1)


def test_d_squared_breach_raises():
    cx = build_complex(simplex(2))
    d2 = cx.D(2).copy()
    d2[0, 0] = -d2[0, 0]
    broken = cx.with_differentials([cx.D(1), d2])
    with pytest.raises(InvariantBreach):
        homology(broken, 1)
    with pytest.raises(InvariantBreach):
        rational_betti(broken, 1)


def test_subquotient_torsion():
    # Z --2--> Z --0--> 0 has Z/2 in the middle.
    assert subquotient(np.zeros((0, 1), dtype=int), [[2]]) == AbelianGroup(0, (2,))
    # Z^2 -> Z^2 by diag(2, 6): cokernel Z/2 + Z/6.
    assert subquotient(np.zeros((0, 2), dtype=int), [[2, 0], [0, 6]]) == AbelianGroup(0, (2, 6))
    with pytest.raises(InvariantBreach):
        subquotient([[1]], [[1]])


def test_torsion_complex_against_oracle():
    # A hand-made complex with torsion, in the same container type.
    cx = ConormalComplex((("a",), ("b", "c"), ("e",)), ([[0, 0]], [[2], [0]]))
    assert list(full_summary(cx).groups) == complex_homology_oracle(cx)
    assert full_summary(cx).groups[1] == AbelianGroup(1, (2,))


def _small(poset):
    return all(len(poset.faces_of(p)) <= 6 for p in range(poset.d + 1))


def test_oracle_equivalence_on_small_complexes(builders, products100):
    pool = [p for p in builders.values() if _small(p)]
    pool += [p for _, p in products100 if _small(p)]
    pool += [product(interval(), boundary_components(1)), product(bigon(), boundary_components(1))]
    assert len(pool) >= 10
    for poset in pool:
        cx = build_complex(poset)
        assert groups(poset) == complex_homology_oracle(cx)


def _flip(cx: ConormalComplex, rng: random.Random) -> ConormalComplex:
    signs = [np.diag([rng.choice((-1, 1)) for _ in b]).astype(np.int64) for b in cx.basis]
    return cx.with_differentials(
        [signs[p - 1] @ cx.D(p) @ signs[p] for p in range(1, cx.d + 1)]
    )


def _permute(cx: ConormalComplex, rng: random.Random) -> ConormalComplex:
    perms = [rng.sample(range(len(b)), len(b)) for b in cx.basis]
    basis = [tuple(b[i] for i in perm) for b, perm in zip(cx.basis, perms)]
    diffs = [cx.D(p)[np.ix_(perms[p - 1], perms[p])] for p in range(1, cx.d + 1)]
    return ConormalComplex(tuple(basis), tuple(diffs))


def _invariance_pool(builders, products100):
    return list(builders.values()) + [p for _, p in products100]


def test_orientation_flip_invariance(builders, products100):
    rng = random.Random(1)
    for poset in _invariance_pool(builders, products100):
        cx = build_complex(poset)
        assert full_summary(_flip(cx, rng)).groups == full_summary(cx).groups


def test_face_permutation_invariance(builders, products100):
    rng = random.Random(2)
    for poset in _invariance_pool(builders, products100):
        cx = build_complex(poset)
        assert full_summary(_permute(cx, rng)).groups == full_summary(cx).groups


def test_hypersurface_relabel_invariance(builders, products100):
    rng = random.Random(3)
    for poset in _invariance_pool(builders, products100):
        labels = list(range(1, poset.n + 1))
        rng.shuffle(labels)
        relabeled = relabel_hypersurfaces(poset, dict(zip(range(1, poset.n + 1), labels)))
        assert groups(relabeled) == groups(poset)


def test_euler_characteristic(builders, products100):
    for poset in _invariance_pool(builders, products100):
        summary = full_summary(build_complex(poset))
        cells = sum((-1) ** p * len(poset.faces_of(p)) for p in range(poset.d + 1))
        assert summary.euler_characteristic() == cells


@pytest.mark.parametrize("k", range(1, 7))
def test_hypercube_kunneth(k):
    expected = [Z]
    for _ in range(k):
        expected = kunneth(expected, INTERVAL_HOMOLOGY)
    assert groups(hypercube(k)) == expected
    assert expected == [ZERO] * k + [Z]


def test_kunneth_on_products(products100):
    rng = random.Random(4)
    pool = [closed_manifold(), interval(), boundary_components(3), simplex(2), simplex(3), bigon()]
    for _ in range(15):
        a, b = rng.choice(pool), rng.choice(pool)
        ga = groups(a)
        gb = groups(b)
        summary = full_summary(build_complex(product(a, b)))
        assert list(summary.groups) == kunneth(ga, gb)
        for k, bk in enumerate(summary.betti):
            assert bk == sum(
                ga[i].free_rank * gb[k - i].free_rank for i in range(len(ga)) if 0 <= k - i < len(gb)
            )
