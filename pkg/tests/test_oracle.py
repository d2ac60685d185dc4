import itertools
import random
from fractions import Fraction

import pytest

from skeinpres.geometry import SCHEDULES, segment_intersection, stack, standard_curve
from skeinpres.oracle import SkeinElement, kauffman_resolve, loop_classify, resolve_monomial
from skeinpres.scalar import ALPHA, ONE, Q, QBAR
from skeinpres.words import multidegree

SUBSETS = [set(c) for r in range(1, 5) for c in itertools.combinations(range(1, 5), r)]


def mc(*words, coeff=ONE):
    return SkeinElement.multicurve(words, coeff)


@pytest.mark.parametrize("subset", SUBSETS, ids=lambda s: "".join(map(str, sorted(s))))
@pytest.mark.parametrize("level", [1, 2, 5])
def test_single_curve_is_its_word(subset, level):
    curve = standard_curve(subset, level)
    assert loop_classify(curve.vertices) == tuple(sorted(subset))
    assert resolve_monomial([subset]) == mc(tuple(sorted(subset)))


def test_levels_nest():
    top = standard_curve({1, 2, 3, 4}, 1)
    low = standard_curve({1, 2, 3, 4}, 2)
    top_y = max(p[1] for p in top.vertices)
    low_y = max(p[1] for p in low.vertices)
    assert low_y < top_y


def test_loop_classify_small_loops():
    square = lambda cx, cy, r: [(cx - r, cy - r), (cx + r, cy - r), (cx + r, cy + r), (cx - r, cy + r)]
    h = Fraction(1, 4)
    assert loop_classify(square(2, 0, h)) == (2,)
    assert loop_classify(square(Fraction(5, 2), 1, h)) == ()
    assert loop_classify(square(Fraction(5, 2), 0, 2)) == (1, 2, 3, 4)


def test_segment_intersection_exact():
    F = Fraction
    t, u, point = segment_intersection((F(0), F(0)), (F(2), F(2)), (F(0), F(2)), (F(2), F(0)))
    assert (t, u, point) == (F(1, 2), F(1, 2), (F(1), F(1)))
    assert segment_intersection((0, 0), (1, 0), (0, 1), (1, 1)) is None


def test_crossing_counts():
    assert len(stack([{1, 2}, {3, 4}]).crossings) == 0
    assert len(stack([{1, 2}, {2, 3}]).crossings) == 2
    assert len(stack([{1, 3}, {2, 4}]).crossings) >= 4


def test_product_t12_t23():
    expected = mc((1, 2, 3, -2), coeff=Q) + mc((1, 3), coeff=QBAR) + mc((1,), (3,)) + mc((2,), (1, 2, 3))
    assert kauffman_resolve(stack([{1, 2}, {2, 3}])) == expected


def test_disjoint_product():
    assert resolve_monomial([{1}, {3, 4}]) == mc((1,), (3, 4))


def test_t13_t24_has_alpha_t0():
    r = resolve_monomial([{1, 3}, {2, 4}])
    assert r.coefficient(((1, 2, 3, 4),)) == ALPHA
    assert r.coefficient(((1, 2), (3, 4))) == Q * Q
    assert len(r.terms) == 12


def test_order_matters():
    assert resolve_monomial([{1, 2}, {2, 3}]) != resolve_monomial([{2, 3}, {1, 2}])


@pytest.mark.parametrize("g", SUBSETS, ids=lambda s: "".join(map(str, sorted(s))))
def test_central_curves_commute_geometrically(g):
    for c in [{1}, {2}, {3}, {4}, {1, 2, 3, 4}]:
        assert resolve_monomial([c, g]) == resolve_monomial([g, c])


def _random_monomials(count, seed, max_len=4):
    rng = random.Random(seed)
    return [[rng.choice(SUBSETS) for _ in range(rng.randint(1, max_len))] for _ in range(count)]


@pytest.mark.parametrize("m", _random_monomials(12, 3), ids=str)
def test_degree_monotone(m):
    bound = [sum(1 for s in m if v in s) for v in range(1, 5)]
    for curves in resolve_monomial(m).terms:
        assert all(a <= b for a, b in zip(multidegree(curves), bound))


def test_schedules_distinct():
    assert len(set(SCHEDULES)) >= 5


@pytest.mark.parametrize("m", _random_monomials(6, 11, max_len=3), ids=str)
def test_offset_invariance(m):
    results = {resolve_monomial(m, schedule=s) for s in SCHEDULES}
    assert len(results) == 1


def test_empty_monomial_is_one():
    assert resolve_monomial([]) == SkeinElement.multicurve([])


def test_json_roundtrip():
    r = resolve_monomial([{1, 3}, {2, 4}])
    assert SkeinElement.from_json(r.to_json()) == r
