from collections import Counter

import pytest

from skeinpres.algebra import mirror
from skeinpres.parser import parse_expression as P
from skeinpres.presentation.catalog import (
    RelationCatalog,
    build_catalog,
    curves_commute,
    verify,
    verify_identity,
    verify_printed,
)
from skeinpres.scalar import ALPHA, Q, QBAR

CATALOG = build_catalog()
CORRECTED_FAMILIES = {"red:t123*t234", "red:t123*t134", "red:t23*t34*t124", "red:t14*t12*t23*t34"}


def test_kind_counts():
    counts = Counter(r.kind for r in CATALOG.relations)
    assert counts["commuting"] == 17
    assert counts["centrality"] == 75
    assert counts["reduction"] == 1 + 4 * 5 + 4 + 1


def test_two_two_orbits():
    names = [r.name for r in CATALOG.by_kind("commuting") if r.name.startswith("[2,2]")]
    assert sorted(names) == ["[2,2]-1", "[2,2]-1/s1", "[2,2]-1/s2", "[2,2]-1/s3", "[2,2]-2"]


def test_two_three_three_ends_with_alpha_term():
    r = CATALOG.get("[2,3]-3")
    assert r.rhs.coefficient(((1, 2, 3),)) == (Q - QBAR) * (Q - QBAR) * ALPHA


def test_mirror_family_present():
    r = CATALOG.get("mirror:red:t123*t234")
    assert r.mirrored and r.lhs == P("t234*t123")


@pytest.mark.parametrize("rel", CATALOG.relations, ids=lambda r: r.name)
def test_relation_verifies(rel):
    report = verify(rel)
    assert report.zero, report.residual


def test_printed_text_failures_are_exactly_the_corrected_families():
    failing = {r.name for r in CATALOG.relations if not verify_printed(r).zero}
    expected = {r.name for r in CATALOG.relations if r.family in CORRECTED_FAMILIES}
    assert failing == expected and len(failing) == 17


@pytest.mark.parametrize("ident", CATALOG.identities, ids=lambda i: i.name)
def test_curve_identity(ident):
    assert verify_identity(ident).zero


def test_single_coefficient_mutation_is_detected():
    r = CATALOG.get("[2,2]-1")
    mutated = type(r)(r.name, r.lhs, r.rhs + P("(q^3 - q^2)*t13"), r.kind)
    assert not verify(mutated).zero


def test_mirrored_relations_still_hold():
    for r in CATALOG.by_kind("commuting", "reduction")[:10]:
        mirrored = type(r)(r.name, mirror(r.lhs), mirror(r.rhs), r.kind)
        assert verify(mirrored).zero


def test_export_import_roundtrip():
    text = CATALOG.dumps()
    again = RelationCatalog.loads(text)
    assert again.names() == CATALOG.names()
    assert all(a.lhs == b.lhs and a.rhs == b.rhs for a, b in zip(again.relations, CATALOG.relations))
    assert again.dumps() == text


def test_report_json_schema():
    rep = verify(CATALOG.get("[2,2]-1")).to_json()
    assert set(rep) == {"name", "zero", "residual", "ms"}


def test_commuting_geometry():
    assert curves_commute((1, 2), (3, 4))
    assert curves_commute((1, 4), (2, 3))
    assert curves_commute((1, 2), (1, 2, 3))
    assert not curves_commute((1, 3), (2, 4))
    assert not curves_commute((1, 2), (2, 3))
