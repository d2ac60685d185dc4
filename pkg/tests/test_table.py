from fractions import Fraction

import pytest

from skeinpres.algebra import gen
from skeinpres.presentation.table import (
    CORRECTED_TABLE,
    TABLE,
    TABLE_CORRECTIONS,
    check_table_row,
    exact_rank,
    get_row,
    xi_member,
)
from skeinpres.words import canonicalize

VERBATIM_FAILURES = {"R11", "R16", "R19", "R20"}


def test_xi_examples():
    assert xi_member((1, 1, 1, 1))
    assert xi_member((2, 2, 2, 4))
    assert not xi_member((3, 3, 3, 3))


def test_table_shape():
    assert len(TABLE) == 24
    assert TABLE[0].multidegree == (1, 1, 1, 1)
    assert TABLE[-1].multidegree == (2, 2, 2, 4)
    assert all(xi_member(r.multidegree) for r in TABLE)


def test_leading_words_are_canonical():
    assert get_row("R2").leading[0] == ((canonicalize((2, 3, 4, 1, -4))),)
    assert get_row("R2").leading[0] == (((1, -4, 2, 3, 4)),)


def test_exact_rank():
    F = Fraction
    assert exact_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert exact_rank([[F(1), F(2)], [F(0), F(1, 3)]]) == 2
    assert exact_rank([[0, 0, 0]]) == 0


@pytest.mark.parametrize("row", TABLE, ids=lambda r: r.label)
def test_verbatim_rows(row):
    report = check_table_row(row)
    assert report.independent and report.distinct_leading
    assert report.ok == (row.label not in VERBATIM_FAILURES)


@pytest.mark.parametrize("row", CORRECTED_TABLE, ids=lambda r: r.label)
def test_corrected_rows(row):
    report = check_table_row(row)
    assert report.ok, report.failures()


def test_corrections_only_touch_known_rows():
    assert set(TABLE_CORRECTIONS) == VERBATIM_FAILURES | {"R18"}
    assert len(get_row("R18", corrected=True).distinguished) == 2


def test_first_row_entries_are_own_multicurves():
    report = check_table_row(get_row("R1"))
    assert [e.check for e in report.entries] == ["own", "own"]
    assert report.entries[0].leading == ((1, 2), (3, 4))


def test_last_row_square_leading_curve():
    row = get_row("R24")
    assert row.distinguished[0] == tuple(gen(g) for g in ("t12", "t14", "t24", "t34", "t34"))
    report = check_table_row(row)
    assert report.entries[0].leading == ((1, 2, -4, 3, 4), (1, 2, -4, 3, 4))
    assert report.entries[0].coefficient.is_unit()


def test_specializations_in_range_and_distinct():
    report = check_table_row(get_row("R9"), specializations=4, seed=3)
    assert len(set(report.specializations)) == 4
    assert all(2 <= s <= 97 for s in report.specializations)
