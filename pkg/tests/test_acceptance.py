"""Acceptance criteria 1-10, one PASS/FAIL line each.

Criteria 4 and 6 are checked against the verbatim printed relations and
table.  The lines ``4e`` and ``6e`` repeat them with the verified one-term
corrections applied; see README for the corrections.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time

import pytest

from skeinpres.algebra import GENERATORS, GenPolynomial, clear_cache, equals, evaluate, mirror
from skeinpres.geometry import SCHEDULES
from skeinpres.oracle import SkeinElement, resolve_monomial
from skeinpres.parser import parse_expression as P
from skeinpres.presentation.catalog import build_catalog, verify, verify_identity, verify_printed
from skeinpres.presentation.rewrite import is_covered, normal_form
from skeinpres.presentation.table import CORRECTED_TABLE, TABLE, check_table_row
from skeinpres.presentation.triples import derive_triple_relations
from skeinpres.scalar import ONE, Q, QBAR

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script
    ACCEPTANCE = {}

# pinned limits, seconds
CALIBRATION_LIMIT = 1.0
IDENTITY_LIMIT = 5.0
RELATION_LIMIT = 60.0
SUITE_LIMIT = 600.0
TABLE_LIMIT = 600.0

SPECIALIZATIONS = 3
ROBUST_SAMPLES, ROBUST_SEED = 20, 2024
ENGINE_SAMPLES, ENGINE_SEED = 200, 7
MIRROR_PAIRS, MIRROR_SEED = 50, 99
MAX_DEGREE = 6

CATALOG = build_catalog()


def _record(key: str, ok: bool, detail: str) -> bool:
    ACCEPTANCE[key] = (ok, detail)
    return ok


def _random_monomial(rng: random.Random) -> tuple:
    """Uniform degree in 1..MAX_DEGREE, filled with generators that fit."""
    budget = rng.randint(1, MAX_DEGREE)
    out = []
    while budget > 0:
        g = rng.choice([g for g in GENERATORS if len(g) <= budget])
        out.append(g)
        budget -= len(g)
    return tuple(out)


def criterion_1() -> bool:
    clear_cache()
    t0 = time.perf_counter()
    got = evaluate(P("t12*t23"))
    dt = time.perf_counter() - t0
    want = (SkeinElement.multicurve([(1, 2, 3, -2)], Q) + SkeinElement.multicurve([(1, 3)], QBAR)
            + SkeinElement.multicurve([(1,), (3,)]) + SkeinElement.multicurve([(2,), (1, 2, 3)]))
    ok = got == want and len(got) == 4 and dt < CALIBRATION_LIMIT
    return _record("1", ok, f"t12*t23 -> {len(got)} terms, exact={got == want}, {dt:.3f}s")


def criterion_2() -> bool:
    clear_cache()
    bad, slow, worst = [], [], 0.0
    for ident in CATALOG.identities:
        rep = verify_identity(ident)
        worst = max(worst, rep.ms / 1000)
        if not rep.zero:
            bad.append(ident.name)
        if rep.ms / 1000 >= IDENTITY_LIMIT:
            slow.append(ident.name)
    ok = not bad and not slow
    return _record("2", ok, f"{len(CATALOG.identities)} direct identities, failed={bad}, "
                            f"slowest {worst:.2f}s")


def criterion_3() -> bool:
    cleared = CATALOG.by_kind("cleared")
    bad = [r.name for r in cleared if not verify(r).zero]
    return _record("3", len(cleared) == 3 and not bad, f"{len(cleared)} cleared identities, failed={bad}")


def _presentation_suite(check) -> tuple[int, list[str], float, float]:
    clear_cache()
    rels = CATALOG.by_kind("commuting", "reduction", "centrality")
    t0 = time.perf_counter()
    bad, worst = [], 0.0
    for r in rels:
        rep = check(r)
        worst = max(worst, rep.ms / 1000)
        if not rep.zero:
            bad.append(r.name)
    return len(rels), bad, worst, time.perf_counter() - t0


def criterion_4() -> bool:
    n, bad, worst, total = _presentation_suite(verify_printed)
    ok = not bad and worst < RELATION_LIMIT and total < SUITE_LIMIT
    bases = sorted({CATALOG.get(b).family for b in bad})
    return _record("4", ok, f"printed text: {n - len(bad)}/{n} verify; failing families {bases}; "
                            f"total {total:.1f}s, slowest {worst:.2f}s")


def criterion_4e() -> bool:
    n, bad, worst, total = _presentation_suite(verify)
    ok = not bad and worst < RELATION_LIMIT and total < SUITE_LIMIT
    return _record("4e", ok, f"with corrections: {n - len(bad)}/{n} verify; "
                             f"total {total:.1f}s, slowest {worst:.2f}s")


def criterion_5() -> bool:
    base = CATALOG.get("[2,2]-1")
    diff = base.lhs - base.rhs
    undetected = []
    for m, c in diff.items():
        for mutated in (c * Q, c + ONE):
            terms = dict(diff.items())
            terms[m] = mutated
            if evaluate(GenPolynomial(terms)).is_zero():
                undetected.append((m, str(mutated)))
    text = P("q*t23*t12 - q^-1*t12*t23") - P("(q^3-q^-2)*t13 + (q-q^-1)*(t1*t3 + t2*t123)")
    spec_example = not evaluate(text).is_zero()
    ok = not undetected and spec_example
    return _record("5", ok, f"{2 * len(diff)} single-coefficient mutations, undetected={len(undetected)}; "
                            f"q^2->q^3 detected={spec_example}")


def _table_suite(table) -> tuple[list[str], float]:
    clear_cache()
    t0 = time.perf_counter()
    bad = [row.label for row in table if not check_table_row(row, specializations=SPECIALIZATIONS).ok]
    return bad, time.perf_counter() - t0


def criterion_6() -> bool:
    bad, dt = _table_suite(TABLE)
    ok = not bad and dt < TABLE_LIMIT
    return _record("6", ok, f"printed table: {len(TABLE) - len(bad)}/{len(TABLE)} rows pass "
                            f"(the printed table has 24 rows); failing {bad}; {dt:.1f}s")


def criterion_6e() -> bool:
    bad, dt = _table_suite(CORRECTED_TABLE)
    ok = not bad and dt < TABLE_LIMIT
    return _record("6e", ok, f"corrected table: {len(CORRECTED_TABLE) - len(bad)}/"
                             f"{len(CORRECTED_TABLE)} rows pass; {dt:.1f}s")


def criterion_7() -> bool:
    rng = random.Random(ROBUST_SEED)
    differing = []
    for _ in range(ROBUST_SAMPLES):
        m = [set(g) for g in _random_monomial(rng)]
        results = {resolve_monomial(m, schedule=s) for s in SCHEDULES}
        if len(results) != 1:
            differing.append(m)
    ok = not differing and len(SCHEDULES) >= 5
    return _record("7", ok, f"{ROBUST_SAMPLES} monomials x {len(SCHEDULES)} schedules, "
                            f"differing={len(differing)}")


def criterion_8() -> bool:
    rng = random.Random(ENGINE_SEED)
    mismatched, findings, covered_findings, checks = [], 0, 0, 0
    for _ in range(ENGINE_SAMPLES):
        m = _random_monomial(rng)
        res = normal_form(m, checked=True)
        checks += res.checks
        if not equals(GenPolynomial({m: ONE}), res.result)[0]:
            mismatched.append(m)
        findings += len(res.irreducible)
        if is_covered(m):
            covered_findings += len(res.irreducible)
    ok = not mismatched and covered_findings == 0
    return _record("8", ok, f"{ENGINE_SAMPLES} monomials, {checks} checked steps, "
                            f"final mismatches={len(mismatched)}, irreducible={findings} "
                            f"(covered multidegrees: {covered_findings})")


def criterion_9() -> bool:
    bad_rel = [r.name for r in CATALOG.relations
               if not evaluate(mirror(r.lhs) - mirror(r.rhs)).is_zero()]
    rng = random.Random(MIRROR_SEED)
    bad_pairs = 0
    for _ in range(MIRROR_PAIRS):
        x = GenPolynomial({_random_monomial(rng): ONE})
        y = GenPolynomial({_random_monomial(rng): ONE})
        if evaluate(mirror(x * y)) != evaluate(mirror(y) * mirror(x)):
            bad_pairs += 1
    ok = not bad_rel and bad_pairs == 0
    return _record("9", ok, f"{len(CATALOG.relations)} mirrored relations, failed={len(bad_rel)}; "
                            f"{MIRROR_PAIRS} pairs, failed={bad_pairs}")


def criterion_10() -> bool:
    try:
        results = derive_triple_relations()
    except Exception as exc:  # ansatz failure is the reportable outcome
        return _record("10", False, f"derivation failed: {exc}")
    verified = sum(1 for r in results if verify(r.relation).zero)
    first = next(r.relation for r in results if r.triple == (1, 2, 3) and r.pair == ((1, 2), (2, 3)))
    printed = (P("q*t23*t12 - q^-1*t12*t23"), P("(q^2-q^-2)*t13 + (q-q^-1)*(t1*t3 + t2*t123)"))
    same = (first.lhs, first.rhs) == printed
    ok = len(results) == 12 and verified == 12 and same
    return _record("10", ok, f"{len(results)}/12 pairs solved, {verified} verified, "
                             f"(t12,t23) reproduces printed relation={same}")


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_4e, criterion_5,
    criterion_6, criterion_6e, criterion_7, criterion_8, criterion_9, criterion_10,
]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion):
    key = criterion.__name__.split("_", 1)[1]
    assert criterion(), ACCEPTANCE[key][1]


if __name__ == "__main__":
    for fn in CRITERIA:
        fn()
    for key, (ok, detail) in ACCEPTANCE.items():
        print(f"criterion {key:<3} {'PASS' if ok else 'FAIL'}  {detail}")
