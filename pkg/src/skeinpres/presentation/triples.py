"""q-commutator relations inside each three-puncture subsurface.

For a triple ``{i, j, k}`` and two of its pair curves ``t_A < t_B`` the
ansatz is::

    q^e t_B t_A - q^-e t_A t_B  =  sum over c * (central monomial) * x

with ``x`` in ``{1, t_C, t_ijk, t_C t_ijk}`` and ``e`` in ``{+1, -1}``.  Every
candidate on the right is a product of pairwise disjoint curves, so it maps
to a single multicurve with coefficient 1 and the coefficients can be read
off the oracle expansion of the left side directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..algebra import (
    CENTRAL,
    GenPolynomial,
    Generator,
    Monomial,
    evaluate,
    evaluate_monomial,
    generator_name,
    generator_rank,
    monomial_multidegree,
)
from ..scalar import ONE, Q, QBAR
from .catalog import Relation

__all__ = ["AnsatzFailure", "TripleResult", "derive_triple_relations", "cubic_relation", "triple_pairs"]

_CUBIC = (
    "q^-1*t12*t23*t13 - (t1*t2*t3 + q*t1*t23 + q^-1*t2*t13 + q^-1*t3*t12)*t123"
    " - (t1^2 + t2^2 + t3^2) + A^2 - (q*t2*t3*t23 + q^-1*t1*t3*t13 + q^-1*t1*t2*t12)"
    " - (q^2*t23^2 + q^-2*t13^2 + q^-2*t12^2)"
)


class AnsatzFailure(Exception):
    def __init__(self, triple, pair, leftover):
        self.triple, self.pair, self.leftover = triple, pair, leftover
        names = "/".join(generator_name(g) for g in pair)
        super().__init__(f"no exact solution for {names} in triple {triple}: unmatched {leftover}")


@dataclass(frozen=True)
class TripleResult:
    triple: tuple[int, int, int]
    pair: tuple[Generator, Generator]
    exponent: int
    relation: Relation


def triple_pairs(triple) -> list[tuple[Generator, Generator]]:
    subs = sorted(itertools.combinations(triple, 2), key=generator_rank)
    return [(a, b) for a, b in itertools.combinations(subs, 2)]


def _central_monomials(bound) -> list[Monomial]:
    """All products of central generators (canonical order) with md <= bound."""
    out = [()]
    for g in CENTRAL:
        nxt = []
        for m in out:
            k = 0
            while True:
                cand = m + (g,) * k
                if any(a > b for a, b in zip(monomial_multidegree(cand), bound)):
                    break
                nxt.append(cand)
                k += 1
        out = nxt
    return out


def _candidates(triple, a, b) -> list[Monomial]:
    others = [g for g in itertools.combinations(triple, 2) if g not in (a, b)]
    (tc,) = others
    tijk = tuple(triple)
    bound = monomial_multidegree((a, b))
    out = []
    for cm in _central_monomials(bound):
        for tail in ((), (tc,), (tijk,), (tc, tijk)):
            m = cm + tail
            if any(x > y for x, y in zip(monomial_multidegree(m), bound)):
                continue
            if m in ((a, b), (b, a)):
                continue
            out.append(m)
    return out


def _solve(triple, a, b, e) -> GenPolynomial | None:
    qe = Q if e > 0 else QBAR
    lhs = GenPolynomial({(b, a): qe, (a, b): -qe.bar()})
    target = evaluate(lhs)
    lookup = {}
    for m in _candidates(triple, a, b):
        img = evaluate_monomial(m)
        items = list(img.terms.items())
        if len(items) == 1 and items[0][1] == ONE:
            lookup.setdefault(items[0][0], m)
    rhs = {}
    leftover = {}
    for mc, c in target.terms.items():
        if mc in lookup:
            rhs[lookup[mc]] = c
        else:
            leftover[mc] = c
    if leftover:
        return None, leftover
    return GenPolynomial(rhs), None


def derive_triple_relations(triples=None) -> list[TripleResult]:
    """Solve the ansatz for every ordered pair in every triple.

    Raises :class:`AnsatzFailure` if neither exponent gives an exact match.
    """
    triples = triples or list(itertools.combinations(range(1, 5), 3))
    out = []
    for triple in triples:
        triple = tuple(triple)
        for a, b in triple_pairs(triple):
            last = None
            for e in (1, -1):
                rhs, leftover = _solve(triple, a, b, e)
                if rhs is not None:
                    qe = Q if e > 0 else QBAR
                    lhs = GenPolynomial({(b, a): qe, (a, b): -qe.bar()})
                    name = f"triple:{generator_name(a)}|{generator_name(b)}"
                    rel = Relation(name, lhs, rhs, "derived", family="triple", derived=True)
                    out.append(TripleResult(triple, (a, b), e, rel))
                    break
                last = leftover
            else:
                raise AnsatzFailure(triple, (a, b), last)
    return out


def cubic_relation(triple) -> Relation:
    """The square of a three-puncture curve, relabelled 1,2,3 -> i,j,k in order."""
    from ..parser import parse_expression

    i, j, k = triple
    table = {"1": str(i), "2": str(j), "3": str(k)}
    src = _CUBIC
    out = []
    pos = 0
    while pos < len(src):
        ch = src[pos]
        if ch == "t" and pos + 1 < len(src) and src[pos + 1].isdigit():
            end = pos + 1
            while end < len(src) and src[end].isdigit():
                end += 1
            digits = "".join(sorted(table[d] for d in src[pos + 1:end]))
            out.append("t" + digits)
            pos = end
        else:
            out.append(ch)
            pos += 1
    rhs = parse_expression("".join(out))
    lhs = parse_expression(f"t{i}{j}{k}^2")
    return Relation(f"cubic:t{i}{j}{k}", lhs, rhs, "derived", family="cubic", derived=True)
