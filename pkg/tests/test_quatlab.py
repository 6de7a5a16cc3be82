import itertools
import random
from fractions import Fraction as F

import pytest

from stablelab import quatlab


def test_algebra_params_validation():
    quatlab.AlgebraParams(7, 3)
    quatlab.AlgebraParams(7, 6)  # -1 is a non-residue mod 7
    with pytest.raises(ValueError):
        quatlab.AlgebraParams(7, 2)  # 2 = 3^2 mod 7
    with pytest.raises(ValueError):
        quatlab.AlgebraParams(9, 2)


def test_structure_constants():
    params = quatlab.AlgebraParams(7, 3)
    table = quatlab.build_algebra(params)
    assert table[(1, 2)] == (0, 0, 0, 1)  # i eps_j = eps_k
    assert table[(2, 1)] == (0, 0, 0, 6)  # eps_j i = -eps_k
    assert table[(1, 3)] == (0, 0, 3, 0)  # i eps_k = alpha eps_j
    assert table[(1, 1)] == (3, 0, 0, 0)  # i^2 = alpha
    for a, b in itertools.product((2, 3), repeat=2):
        assert table[(a, b)] == (0, 0, 0, 0)


def test_associativity_exhaustive_on_full_algebra():
    params = quatlab.AlgebraParams(5, 2)
    elements = [
        quatlab.AbarElement(a, b, c, d)
        for a in range(5) for b in range(5) for c in range(5) for d in range(5)
    ]
    rng = random.Random(4)
    sample = rng.sample(elements, 40)
    for x, y, z in zip(sample, sample[1:], sample[2:]):
        left = quatlab.multiply(quatlab.multiply(x, y, params), z, params)
        right = quatlab.multiply(x, quatlab.multiply(y, z, params), params)
        assert left == right


def test_nilradical_is_two_sided_ideal():
    for p in (5, 7, 13):
        params = quatlab.AlgebraParams(p, quatlab.smallest_nonresidue(p))
        nil = [
            quatlab.AbarElement(0, 0, c, d) for c in range(p) for d in range(p)
        ]
        generic = [
            quatlab.AbarElement(a, b, c, d)
            for a in range(p) for b in range(p) for c in (0, 1) for d in (0, 2 % p)
        ]
        for x in nil:
            for g in generic:
                for prod in (quatlab.multiply(g, x, params), quatlab.multiply(x, g, params)):
                    assert prod.a == 0 and prod.b == 0


@pytest.mark.parametrize("p", [5, 7, 13, 17])
def test_orbit_analysis(p):
    params = quatlab.AlgebraParams(p, quatlab.smallest_nonresidue(p))
    report = quatlab.orbit_analysis(params)
    assert len(report.orbits) == p - 1
    assert all(size == p + 1 for size, _, _ in report.orbits)
    assert sum(size for size, _, _ in report.orbits) == p * p - 1
    invariants = [inv for _, _, inv in report.orbits]
    assert len(set(invariants)) == p - 1 and 0 not in invariants
    # |Orb| * |Stab| = |F_{p^2}^*|
    assert (p + 1) * (p - 1) == p * p - 1


def test_invariant_level_set_sizes():
    p = 7
    alpha = quatlab.smallest_nonresidue(p)
    counts = {}
    for c in range(p):
        for d in range(p):
            if (c, d) == (0, 0):
                continue
            counts.setdefault((c * c - alpha * d * d) % p, 0)
            counts[(c * c - alpha * d * d) % p] += 1
    assert set(counts.values()) == {p + 1}
    assert len(counts) == p - 1


def test_quaternion_square_symbolic():
    components = quatlab.quaternion_square_symbolic()
    assert len(components) == 4


def test_uniformizer_image_search():
    found = quatlab.uniformizer_image_search()
    assert len(found) == 8
    coords = {(e.c, e.d) for e in found}
    assert coords == {(2, 0), (5, 0), (0, 2), (0, 5), (3, 3), (3, 4), (4, 3), (4, 4)}
    assert all(e.a == 0 and e.b == 0 for e in found)
    # (1, 1) is excluded: 1 + 1 = 2 is not 4 mod 7
    assert (1, 1) not in coords


def test_aut_refinement():
    parts = quatlab.aut_refinement()
    assert len(parts) == 4
    as_coords = {frozenset((e.c, e.d) for e in part) for part in parts}
    assert as_coords == {
        frozenset({(2, 0), (5, 0)}),
        frozenset({(0, 2), (0, 5)}),
        frozenset({(3, 4), (4, 3)}),
        frozenset({(3, 3), (4, 4)}),
    }


def test_class_count():
    assert quatlab.class_count(7, 4) == (4, 8)
    assert quatlab.class_count(5, 6) == (2, 4)
    assert quatlab.class_count(13, 2) == (14, 28)
    with pytest.raises(ValueError):
        quatlab.class_count(7, 6)
    with pytest.raises(ValueError):
        quatlab.class_count(7, 8)


def test_quaternion_norm_multiplicative():
    rng = random.Random(17)
    for _ in range(100):
        a = quatlab.QuatElement(*(F(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4)))
        b = quatlab.QuatElement(*(F(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4)))
        assert (a * b).norm() == a.norm() * b.norm()
