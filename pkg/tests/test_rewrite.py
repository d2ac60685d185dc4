import random
from dataclasses import replace

import pytest

from skeinpres.algebra import GENERATORS, GenPolynomial, equals, monomial_multidegree, reduced_part
from skeinpres.parser import parse_expression as P
from skeinpres.presentation.catalog import RelationCatalog, build_catalog
from skeinpres.presentation.rewrite import (
    RewriteError,
    RewriteSystem,
    StepFailure,
    default_system,
    is_covered,
    is_distinguished,
    normal_form,
    symmetry_images,
)
from skeinpres.presentation.table import TABLE
from skeinpres.presentation.triples import derive_triple_relations


def mono(src):
    (m,) = P(src).monomials()
    return m


def test_swap_of_first_commuting_pair():
    res = normal_form(mono("t23*t12"), checked=True)
    expected = P("q^-1*(q^2-q^-2)*t13 + q^-1*(q-q^-1)*(t1*t3 + t2*t123) + q^-2*t12*t23")
    assert res.result == expected


def test_distinguished_is_fixed():
    res = normal_form(mono("t12*t34"))
    assert res.result == P("t12*t34") and res.steps == 0


def test_crossing_pair_reduces():
    rhs = build_catalog().get("red:t13*t24").rhs
    assert normal_form(mono("t13*t24"), checked=True).result == rhs


def test_centrals_move_front():
    assert normal_form(mono("t12*t3*t0*t1")).result == P("t1*t3*t0*t12")


def test_deterministic():
    m = mono("t234*t123*t12")
    a, b = normal_form(m), normal_form(m)
    assert a.result == b.result and a.steps == b.steps


def test_final_relation_gathered():
    m = mono("t12*t14*t23*t34")
    res = normal_form(m, checked=True)
    assert equals(GenPolynomial({m: 1}), res.result)[0]
    assert not res.irreducible


def test_symmetry_images():
    images = symmetry_images(mono("t14*t234"))
    assert ((1, 2), (1, 3, 4)) in images
    assert len(images) <= 8


def test_verbatim_table_leaves_a_finding():
    extra = [r.relation for r in derive_triple_relations()]
    system = RewriteSystem(build_catalog(), extra, verify_rules=False, table=TABLE)
    m = mono("t12*t34*t34*t234")
    res = normal_form(m, system=system)
    assert res.irreducible == (m,)
    assert not normal_form(m).irreducible


def test_checked_mode_catches_a_bad_rule():
    cat = build_catalog()
    bad = [replace(r, rhs=r.rhs + P("t13")) if r.name == "[2,2]-1" else r for r in cat.relations]
    system = RewriteSystem(RelationCatalog(bad), verify_rules=False)
    with pytest.raises(StepFailure):
        normal_form(mono("t23*t12"), checked=True, system=system)


def test_unverified_rules_are_not_enabled():
    cat = build_catalog()
    bad = [replace(r, rhs=r.rhs + P("t13")) if r.name == "[2,2]-1" else r for r in cat.relations]
    with pytest.raises(RewriteError):
        RewriteSystem(RelationCatalog(bad))


def _sample(rng, max_factors):
    return tuple(rng.choice(GENERATORS) for _ in range(rng.randint(1, max_factors)))


def test_random_three_factor_monomials_checked():
    rng = random.Random(11)
    for _ in range(40):
        m = _sample(rng, 3)
        res = normal_form(m, checked=True)
        assert not res.irreducible
        assert equals(GenPolynomial({m: 1}), res.result)[0]


def test_descent_for_covered_monomials():
    rng = random.Random(12)
    seen = 0
    while seen < 15:
        m = _sample(rng, 4)
        if not is_covered(m) or is_distinguished(m):
            continue
        seen += 1
        top = monomial_multidegree(reduced_part(m))
        for out in normal_form(m).result.monomials():
            if is_distinguished(out) or not reduced_part(out):
                continue
            md = monomial_multidegree(reduced_part(out))
            assert all(a <= b for a, b in zip(md, top)) and md != top, (m, out)


def test_default_system_is_cached():
    assert default_system() is default_system()
