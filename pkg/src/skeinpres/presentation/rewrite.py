"""Rewriting generator monomials toward distinguished monomials.

One step acts on one monomial and replaces it by an equal polynomial:

1. central generators are moved to the front in the order t1, t2, t3, t4, t0;
2. a reduction rule is applied to the leftmost contiguous occurrence of its
   left side (ties broken by catalog order);
3. otherwise the leftmost adjacent inversion of the generator order is
   swapped with a commuting rule;
4. a sorted monomial that still contains the factors of a reduction rule is
   reordered so those factors become contiguous, then reduced.

A sorted monomial with no applicable rule is terminal.  If its multidegree
is covered by the table (up to relabeling symmetries) but its factors are not
a distinguished set, it is reported as irreducible.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from ..algebra import (
    GenPolynomial,
    Generator,
    Monomial,
    equals,
    generator_name,
    generator_rank,
    is_central,
    monomial_multidegree,
    reduced_part,
)
from ..scalar import ONE, LaurentScalar
from .catalog import Relation, RelationCatalog, build_catalog, curves_commute, verify
from .table import CORRECTED_TABLE, TableRow

__all__ = [
    "RewriteError",
    "StepFailure",
    "NormalFormResult",
    "RewriteSystem",
    "default_system",
    "normal_form",
    "symmetry_images",
]


class RewriteError(RuntimeError):
    pass


class StepFailure(RewriteError):
    """A checked step whose two sides evaluate differently."""

    def __init__(self, rule: str, before: GenPolynomial, after: GenPolynomial, residual):
        self.rule, self.before, self.after, self.residual = rule, before, after, residual
        super().__init__(f"step {rule!r} is not an identity: {before} -> {after}")


@dataclass
class NormalFormResult:
    result: GenPolynomial
    irreducible: tuple[Monomial, ...] = ()
    steps: int = 0
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.irreducible


# ---------------------------------------------------------------------------
# symmetries of the puncture labels


def _relabel(g: Generator, f) -> Generator:
    return tuple(sorted(f(v) for v in g))


_SYMMETRIES = tuple(
    (lambda k, r: (lambda v: (((5 - v) if r else v) - 1 + k) % 4 + 1))(k, r)
    for r in (False, True) for k in range(4)
)


def symmetry_images(monomial: Monomial) -> set[tuple]:
    """Sorted factor multisets of all dihedral relabelings of ``monomial``."""
    return {tuple(sorted((_relabel(g, f) for g in monomial), key=generator_rank))
            for f in _SYMMETRIES}


def _md_images(md) -> set[tuple]:
    out = set()
    for f in _SYMMETRIES:
        img = [0] * 4
        for v in range(1, 5):
            img[f(v) - 1] = md[v - 1]
        out.add(tuple(img))
    return out


def _sorted_key(m: Monomial) -> tuple:
    return tuple(sorted(m, key=generator_rank))


@lru_cache(maxsize=4)
def _distinguished(table: tuple[TableRow, ...] = CORRECTED_TABLE) -> tuple[frozenset, frozenset]:
    sets, mds = set(), set()
    for row in table:
        mds |= _md_images(row.multidegree)
        for m in row.distinguished:
            sets |= symmetry_images(m)
    return frozenset(sets), frozenset(mds)


def is_distinguished(m: Monomial, table: tuple[TableRow, ...] = CORRECTED_TABLE) -> bool:
    """Factors form a distinguished set of some table row, up to relabeling."""
    return _sorted_key(reduced_part(m)) in _distinguished(table)[0]


def is_covered(m: Monomial, table: tuple[TableRow, ...] = CORRECTED_TABLE) -> bool:
    return monomial_multidegree(reduced_part(m)) in _distinguished(table)[1]


# ---------------------------------------------------------------------------
# rules


@dataclass(frozen=True)
class SwapRule:
    """``x y = coeff * y x + tail`` for adjacent generators ``x y``."""

    name: str
    coeff: LaurentScalar
    tail: GenPolynomial


@dataclass(frozen=True)
class ReductionRule:
    name: str
    lhs: Monomial
    rhs: GenPolynomial


def _swap_from(rel: Relation) -> dict[tuple, SwapRule]:
    """Solve a two-monomial q-commutator relation for both orders."""
    terms = dict(rel.lhs.items())
    if len(terms) != 2:
        return {}
    (m1, c1), (m2, c2) = terms.items()
    if len(m1) != 2 or m2 != (m1[1], m1[0]):
        return {}
    out = {}
    # c1 m1 + c2 m2 = rhs  =>  m1 = -c2/c1 m2 + rhs/c1
    for (ma, ca), (mb, cb) in (((m1, c1), (m2, c2)), ((m2, c2), (m1, c1))):
        if not ca.is_unit():
            continue
        inv = ca ** -1
        out[ma] = SwapRule(rel.name, -(cb * inv), rel.rhs * inv)
    return out


class RewriteSystem:
    def __init__(
        self,
        catalog: RelationCatalog,
        extra: list[Relation] = (),
        verify_rules: bool = True,
        table: tuple[TableRow, ...] = CORRECTED_TABLE,
    ):
        self.catalog = catalog
        self.table = tuple(table)
        sources = catalog.by_kind("commuting", "disjoint") + list(extra)
        reductions = catalog.by_kind("reduction")
        if verify_rules:
            for rel in sources + reductions:
                rep = verify(rel)
                if not rep.zero:
                    raise RewriteError(f"relation {rel.name} does not verify; rule not enabled")
        self.swaps: dict[tuple, SwapRule] = {}
        for rel in sources:
            for key, rule in _swap_from(rel).items():
                self.swaps.setdefault(key, rule)
        self.reductions: list[ReductionRule] = []
        for rel in reductions:
            (m, c), = rel.lhs.items()
            if c != ONE:
                raise RewriteError(f"reduction {rel.name} has a non-unit leading coefficient")
            self.reductions.append(ReductionRule(rel.name, m, rel.rhs))
        self._by_multiset = {}
        for rule in self.reductions:
            self._by_multiset.setdefault(_sorted_key(rule.lhs), rule)

    # -- single steps; each returns (rule name, replacement polynomial)

    def _central_step(self, m: Monomial):
        cent = sorted((g for g in m if is_central(g)), key=generator_rank)
        target = tuple(cent) + reduced_part(m)
        if target != m:
            return "centrality", GenPolynomial({target: ONE})
        return None

    def _reduction_step(self, m: Monomial, start: int):
        best = None
        for pos in range(start, len(m)):
            for rule in self.reductions:
                k = len(rule.lhs)
                if m[pos:pos + k] == rule.lhs:
                    best = (pos, rule)
                    break
            if best:
                break
        if best is None:
            return None
        pos, rule = best
        k = len(rule.lhs)
        left = GenPolynomial({m[:pos]: ONE})
        right = GenPolynomial({m[pos + k:]: ONE})
        return rule.name, left * rule.rhs * right

    def swap(self, m: Monomial, pos: int):
        x, y = m[pos], m[pos + 1]
        if curves_commute(x, y):
            return "disjoint", GenPolynomial({m[:pos] + (y, x) + m[pos + 2:]: ONE})
        rule = self.swaps.get((x, y))
        if rule is None:
            return None
        left = GenPolynomial({m[:pos]: ONE})
        right = GenPolynomial({m[pos + 2:]: ONE})
        main = GenPolynomial({m[:pos] + (y, x) + m[pos + 2:]: rule.coeff})
        return rule.name, main + left * rule.tail * right

    def _sort_step(self, m: Monomial, start: int):
        for pos in range(start, len(m) - 1):
            if generator_rank(m[pos]) > generator_rank(m[pos + 1]):
                step = self.swap(m, pos)
                if step is None:
                    raise RewriteError(
                        f"no commuting rule for {generator_name(m[pos])}*{generator_name(m[pos + 1])}")
                return step
        return None

    def _gather_plan(self, m: Monomial, start: int):
        """A reduction whose factors occur in ``m`` but not contiguously."""
        body = m[start:]
        have = Counter(body)
        for rule in self.reductions:
            need = Counter(rule.lhs)
            if any(have[g] < k for g, k in need.items()):
                continue
            # pick the leftmost occurrences, gather them at the first one
            used, slots = Counter(), []
            for i, g in enumerate(body):
                if used[g] < need[g]:
                    used[g] += 1
                    slots.append(i)
            rest = [g for i, g in enumerate(body) if i not in slots]
            first = slots[0]
            target = tuple(m[:start]) + tuple(rest[:first]) + rule.lhs + tuple(rest[first:])
            return rule, target
        return None

    def reorder(self, m: Monomial, target: Monomial):
        """Adjacent swaps taking ``m`` to ``target``: (main coefficient, corrections, swaps)."""
        cur = list(m)
        coeff = ONE
        corrections = GenPolynomial()
        swaps = []
        for i, g in enumerate(target):
            j = next(k for k in range(i, len(cur)) if cur[k] == g)
            while j > i:
                mono = tuple(cur)
                name, poly = self.swap(mono, j - 1)
                swaps.append((name, mono, poly))
                swapped = mono[:j - 1] + (mono[j], mono[j - 1]) + mono[j + 1:]
                c = poly.coefficient(swapped)
                corrections = corrections + (poly - GenPolynomial({swapped: c})) * coeff
                coeff = coeff * c
                cur = list(swapped)
                j -= 1
        return coeff, corrections, swaps

    def step(self, m: Monomial):
        """The next rewrite of ``m`` as (name, polynomial, substeps) or None if terminal."""
        step = self._central_step(m)
        if step:
            return step + ([],)
        start = sum(1 for g in m if is_central(g))
        step = self._reduction_step(m, start)
        if step:
            return step + ([],)
        step = self._sort_step(m, start)
        if step:
            return step + ([],)
        if is_distinguished(m, self.table):
            return None
        plan = self._gather_plan(m, start)
        if plan is None:
            return None
        rule, target = plan
        coeff, corrections, swaps = self.reorder(m, target)
        _, reduced, _ = self.step(target)
        return f"gather+{rule.name}", corrections + reduced * coeff, swaps


@lru_cache(maxsize=1)
def default_system() -> RewriteSystem:
    from .triples import derive_triple_relations

    extra = [r.relation for r in derive_triple_relations()]
    return RewriteSystem(build_catalog(), extra)


def _measure(m: Monomial):
    md = monomial_multidegree(m)
    inv = sum(1 for a, b in itertools.combinations(m, 2) if generator_rank(a) > generator_rank(b))
    return (sum(md), tuple(sorted(md, reverse=True)), inv, [generator_rank(g) for g in m])


def normal_form(
    p,
    checked: bool = False,
    system: RewriteSystem | None = None,
    max_steps: int = 200_000,
) -> NormalFormResult:
    """Rewrite a monomial (or polynomial) to distinguished and terminal monomials.

    With ``checked`` every step, including each swap inside a gather, is
    verified with :func:`equals` and a failure raises :class:`StepFailure`.
    """
    system = system or default_system()
    if not isinstance(p, GenPolynomial):
        p = GenPolynomial({tuple(p): ONE})
    pending: dict[Monomial, LaurentScalar] = dict(p.items())
    done: dict[Monomial, LaurentScalar] = {}
    stuck: set[Monomial] = set()
    steps = checks = 0
    memo: dict[Monomial, tuple] = {}

    while pending:
        m = max(pending, key=_measure)
        c = pending.pop(m)
        if m not in memo:
            memo[m] = system.step(m)
            if checked and memo[m] is not None:
                name, poly, subs = memo[m]
                for sub_name, before, after in subs:
                    checks += 1
                    ok, res = equals(GenPolynomial({before: ONE}), after)
                    if not ok:
                        raise StepFailure(sub_name, GenPolynomial({before: ONE}), after, res)
                checks += 1
                ok, res = equals(GenPolynomial({m: ONE}), poly)
                if not ok:
                    raise StepFailure(name, GenPolynomial({m: ONE}), poly, res)
        rewrite = memo[m]
        if rewrite is None:
            done[m] = done.get(m, LaurentScalar()) + c
            if is_covered(m, system.table) and not is_distinguished(m, system.table):
                stuck.add(m)
            continue
        steps += 1
        if steps > max_steps:
            raise RewriteError(f"step limit exceeded while rewriting {p}")
        for mm, cc in rewrite[1].items():
            v = pending.get(mm, LaurentScalar()) + c * cc
            if v:
                pending[mm] = v
            else:
                pending.pop(mm, None)
    result = GenPolynomial(done)
    irreducible = tuple(sorted((m for m in stuck if result.coefficient(m)), key=_measure))
    return NormalFormResult(result, irreducible, steps, checks)
