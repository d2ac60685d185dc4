"""The relation catalog of the skein algebra of the 5-punctured sphere.

Relations are transcribed in the expression grammar of :mod:`skeinpres.parser`.
Where a printed relation fails verification and a one-term correction is
verified, the relation keeps both texts: ``printed`` is the verbatim source
text and ``lhs``/``rhs`` hold the corrected identity.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from ..algebra import (
    CENTRAL,
    GENERATORS,
    NONCENTRAL,
    GenPolynomial,
    Generator,
    Monomial,
    evaluate,
    generator_name,
    generator_rank,
    is_central,
    mirror,
    permute,
)
from ..oracle import SkeinElement
from ..parser import parse_expression
from ..scalar import ONE, Q, QBAR, LaurentScalar

__all__ = [
    "Relation",
    "CurveIdentity",
    "RelationCatalog",
    "VerifyReport",
    "build_catalog",
    "curve_identities",
    "verify",
    "verify_printed",
    "verify_identity",
    "curves_commute",
    "trace_normal",
    "dedup_key",
]


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: GenPolynomial
    rhs: GenPolynomial
    kind: str  # commuting | reduction | centrality | disjoint | cleared | derived
    family: str = ""
    power: int = 0
    mirrored: bool = False
    derived: bool = False
    printed: tuple[str, str] | None = None  # verbatim text when corrected
    erratum: str = ""

    @property
    def difference(self) -> GenPolynomial:
        return self.lhs - self.rhs

    def printed_difference(self) -> GenPolynomial:
        if self.printed is None:
            return self.difference
        lhs, rhs = (parse_expression(t) for t in self.printed)
        if self.mirrored:
            lhs, rhs = mirror(lhs), mirror(rhs)
        return permute(lhs - rhs, self.power)

    def to_record(self) -> dict:
        rec = {
            "name": self.name,
            "kind": self.kind,
            "family": self.family,
            "power": self.power,
            "mirrored": self.mirrored,
            "derived": self.derived,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }
        if self.printed is not None:
            rec["printed"] = list(self.printed)
            rec["erratum"] = self.erratum
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "Relation":
        return cls(
            name=rec["name"],
            lhs=GenPolynomial.from_json(rec["lhs"]),
            rhs=GenPolynomial.from_json(rec["rhs"]),
            kind=rec["kind"],
            family=rec.get("family", ""),
            power=rec.get("power", 0),
            mirrored=rec.get("mirrored", False),
            derived=rec.get("derived", False),
            printed=tuple(rec["printed"]) if "printed" in rec else None,
            erratum=rec.get("erratum", ""),
        )


@dataclass(frozen=True)
class CurveIdentity:
    """``lhs = rhs + curves`` where ``curves`` holds non-generator multicurves."""

    name: str
    lhs: GenPolynomial
    rhs: GenPolynomial
    curves: SkeinElement


@dataclass(frozen=True)
class VerifyReport:
    name: str
    zero: bool
    residual: SkeinElement
    ms: float

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "zero": self.zero,
            "residual": self.residual.to_json(),
            "ms": round(self.ms, 3),
        }


def verify(r: Relation) -> VerifyReport:
    t0 = time.perf_counter()
    residual = evaluate(r.difference)
    return VerifyReport(r.name, residual.is_zero(), residual, 1000 * (time.perf_counter() - t0))


def verify_printed(r: Relation) -> VerifyReport:
    t0 = time.perf_counter()
    residual = evaluate(r.printed_difference())
    return VerifyReport(r.name, residual.is_zero(), residual, 1000 * (time.perf_counter() - t0))


def verify_identity(ident: CurveIdentity) -> VerifyReport:
    t0 = time.perf_counter()
    residual = evaluate(ident.lhs) - evaluate(ident.rhs) - ident.curves
    return VerifyReport(ident.name, residual.is_zero(), residual, 1000 * (time.perf_counter() - t0))


# ---------------------------------------------------------------------------
# commutation of disjoint standard curves


def _interleaved(s: Generator, t: Generator) -> bool:
    marks = sorted([(v, 0) for v in s] + [(v, 1) for v in t])
    seq = [side for _, side in marks]
    changes = sum(1 for a, b in zip(seq, seq[1:]) if a != b)
    return changes >= 3


def curves_commute(s: Generator, t: Generator) -> bool:
    """Standard curves that can be isotoped apart (or a central one)."""
    if is_central(s) or is_central(t) or s == t:
        return True
    ss, tt = set(s), set(t)
    if ss <= tt or tt <= ss:
        return True
    return not (ss & tt) and not _interleaved(s, t)


def trace_normal(m: Monomial) -> Monomial:
    """Lexicographically least rearrangement using only disjoint commutations."""
    rest = list(m)
    out = []
    while rest:
        best = None
        for i, g in enumerate(rest):
            if all(curves_commute(g, h) for h in rest[:i]):
                if best is None or generator_rank(g) < generator_rank(rest[best]):
                    best = i
        out.append(rest.pop(best))
    return tuple(out)


def dedup_key(p: GenPolynomial) -> frozenset:
    acc: dict = {}
    for m, c in p.items():
        k = trace_normal(m)
        acc[k] = acc.get(k, LaurentScalar()) + c
    items = {(m, c) for m, c in acc.items() if c}
    neg = {(m, -c) for m, c in items}
    return min(frozenset(items), frozenset(neg), key=lambda s: sorted(map(repr, s)))


# ---------------------------------------------------------------------------
# transcriptions

_COMMUTING = (
    ("[2,2]-1", "q*t23*t12 - q^-1*t12*t23",
     "(q^2-q^-2)*t13 + (q-q^-1)*(t1*t3 + t2*t123)"),
    ("[2,2]-2", "t24*t13 - t13*t24",
     "(q^-2-q^2)*(t12*t34 - t14*t23) + (q^-1-q)*(t3*t4*t12 - t1*t4*t23 + t1*t2*t34 - t2*t3*t14)"),
    ("[2,3]-1", "q^-1*t234*t14 - q*t14*t234",
     "(q^-2-q^2)*t123 + (q^-1-q)*(t4*t0 + t1*t23)"),
    ("[2,3]-2", "q*t124*t34 - q^-1*t34*t124",
     "(q^2-q^-2)*t123 + (q-q^-1)*(t4*t0 + t3*t12)"),
    ("[2,3]-3", "t134*t24 - t24*t134",
     "(q-q^-1)*(q^-1*t34*t124 - q*t14*t234 + q*t1*t23 - q^-1*t3*t12) + (q-q^-1)^2*(t4*t0 + A*t123)"),
)

# (family name, lhs, printed rhs, corrected rhs or None, cyclic family?, erratum note)
_REDUCTION = (
    ("t13*t24", "t13*t24",
     "A*t0 + t1*t234 + t2*t134 + t3*t124 + t4*t123 + q^2*t12*t34 + q^-2*t14*t23"
     " + q*t3*t4*t12 + q^-1*t1*t4*t23 + q*t1*t2*t34 + q^-1*t2*t3*t14 + t1*t2*t3*t4",
     None, False, ""),
    ("t24*t134", "t24*t134",
     "q^2*t14*t234 + q^-2*t34*t124 + (1-q^2-q^-2)*t4*t0 - (q^3+q^-3)*t123 - q^2*t1*t23"
     " - q^-2*t3*t12 + t2*(q*t14*t34 - q^2*t13 - q*t4*t134) - q*t1*t2*t3",
     None, True, ""),
    ("t123^2", "t123^2",
     "q^-1*t12*t23*t13 - (t1*t2*t3 + q*t1*t23 + q^-1*t2*t13 + q^-1*t3*t12)*t123"
     " - (t1^2 + t2^2 + t3^2) + A^2 - (q*t2*t3*t23 + q^-1*t1*t3*t13 + q^-1*t1*t2*t12)"
     " - (q^2*t23^2 + q^-2*t13^2 + q^-2*t12^2)",
     None, True, ""),
    ("t123*t234", "t123*t234",
     "(t23 + q*t2*t3)*t0 + q^-1*t12*t23*t34 - q^-1*t3*t12*t234 - q*t2*t34*t234 + q^2*t2*t124"
     " + q^-2*t3*t134 - q^-2*t12*t24 - q^-2*t13*t34 + (q-q^-1)*t2*t4*t12 + q^-2*(A*t14 + t1*t4)",
     "(t23 + q*t2*t3)*t0 + q^-1*t12*t23*t34 - q^-1*t3*t12*t234 - q*t2*t34*t123 + q^2*t2*t124"
     " + q^-2*t3*t134 - q^-2*t12*t24 - q^-2*t13*t34 + (q-q^-1)*t2*t4*t12 + q^-2*(A*t14 + t1*t4)",
     True, "term -q*t2*t34*t234 corrected to -q*t2*t34*t123"),
    ("t123*t134", "t123*t134",
     "t13*t0 + t12*t14 + t23*t34 - t1*t123 - t3*t234 - A*t24 - t2*t4",
     "t13*t0 + t12*t14 + t23*t34 - t1*t124 - t3*t234 - A*t24 - t2*t4",
     True, "term -t1*t123 corrected to -t1*t124"),
    ("t23*t34*t124", "t23*t34*t124",
     "(q*t234 + q^2*t2*t34 + t3*t24 + t4*t23 + q*t2*t3*t4)*t0 + (t2*t4 + q^-1*t24)*t124"
     " + q^3*t34*t134 + q^-1*t23*t123 + t3*t23*t12 + q^2*t14*t34 + q*t2*t12 - q^3*t3*t13"
     " + q*t4*t14 - q^2*t1*t3^2 + q*A*t1",
     "(q*t234 + q^2*t2*t34 + t3*t24 + t4*t23 + q*t2*t3*t4)*t0 + (t2*t4 + q^-1*t24)*t124"
     " + q^3*t34*t134 + q^-1*t23*t123 + t3*t23*t12 + q^2*t3*t14*t34 + q*t2*t12 - q^3*t3*t13"
     " + q*t4*t14 - q^2*t1*t3^2 + q*A*t1",
     True, "term q^2*t14*t34 corrected to q^2*t3*t14*t34"),
    ("t14*t12*t23*t34", "t14*t12*t23*t34",
     "q^2*t0^2 + q^2*(q^-1*t1*t234 + q*t4*t123 + t1*t4*t23 - t2*t3)*t0 + t234^2 + q^4*t123^2"
     " + t3*t14*t12*t234 + q^2*t2*t14*t34*t123 + q*t4*t23*t234 - q^-1*t3*t14*t134"
     " + q^3*t1*t23*t123 - q^3*t2*t14*t124 + q^-1*t14*t12*t24 + q^-1*t14*t13*t34"
     " + (1-q^2)*t2*t4*t14*t12 - q^-2*t14^2 + q^2*t23^2 + (q-q^-1)*t1*t4*t14"
     " + q^2*(t1^2 + t4^2 - A^2)",
     "q^2*t0^2 + q^2*(q^-1*t1*t234 + q*t4*t123 + t1*t4*t23 - t2*t3*t14)*t0 + t234^2 + q^4*t123^2"
     " + t3*t14*t12*t234 + q^2*t2*t14*t34*t123 + q*t4*t23*t234 - q^-1*t3*t14*t134"
     " + q^3*t1*t23*t123 - q^3*t2*t14*t124 + q^-1*t14*t12*t24 + q^-1*t14*t13*t34"
     " + (1-q^2)*t2*t4*t14*t12 - q^-2*t14^2 + q^2*t23^2 + (q-q^-1)*t1*t4*t14"
     " + q^2*(t1^2 + t4^2 - A^2)",
     False, "term -t2*t3 inside the t0 coefficient corrected to -t2*t3*t14"),
)

# the reduction family whose mirror image is also a defining relation
_MIRRORED_FAMILY = "t123*t234"


def _words(*pairs) -> SkeinElement:
    acc = SkeinElement()
    for coeff, words in pairs:
        acc = acc + SkeinElement.multicurve(words, coeff)
    return acc


def curve_identities() -> list[CurveIdentity]:
    """Displayed products whose right sides contain non-generator curves."""
    P = parse_expression
    q2 = Q * Q
    rows = [
        ("t12*t23", "t12*t23", "q^-1*t13 + t1*t3 + t2*t123", [(Q, [(1, 2, 3, -2)])]),
        ("t13*t24", "t13*t24",
         "A*t0 + t1*t234 + t2*t134 + t3*t124 + t4*t123 + q^2*t12*t34 + q^-2*t14*t23"
         " + q*t3*t4*t12 + q^-1*t1*t4*t23 + q*t1*t2*t34 + q^-1*t2*t3*t14 + t1*t2*t3*t4", []),
        ("t14*t234", "t14*t234", "t4*t0 + q*t123 + t1*t23", [(QBAR, [(1, -4, 2, 3, 4)])]),
        ("t34*t124", "t34*t124", "t4*t0 + q^-1*t123 + t3*t12", [(Q, [(1, 2, -4, 3, 4)])]),
        ("t24*t134", "t24*t134", "t4*t0",
         [(QBAR, [(1, 2, -4, 3, 4)]), (Q, [(1, -4, 2, 3, 4)]), (ONE, [(2,), (1, -4, 3, 4)])]),
        ("t23*t34", "t23*t34", "q^-1*t24 + t2*t4 + t3*t234", [(Q, [(2, 3, 4, -3)])]),
        ("t12*t23*t34 (first form)", "t12*t23*t34",
         "q*t1*t4 + q^-1*t12*t24 + t2*t4*t12 + t3*t12*t234",
         [(q2, [(1, 2, 3, 4, -3, -2)]), (ONE, [(1, 3, 4, -3)]), (Q, [(2,), (1, 2, 3, 4, -3)])]),
        ("t13*t34", "t13*t34", "q^-1*t14 + t1*t4 + t3*t134", [(Q, [(1, 3, 4, -3)])]),
        ("t34*t123", "t34*t123", "q*t124 + t4*t12 + t3*t0", [(QBAR, [(1, 2, 3, 4, -3)])]),
        ("t12*t23*t34", "t12*t23*t34",
         "t3*t12*t234 + q^2*t2*t34*t123 - q^3*t2*t124 - q^-1*t3*t134 + q^-1*t12*t24"
         " + q^-1*t13*t34 + (1-q^2)*t2*t4*t12 - q^-2*t14 + (q-q^-1)*t1*t4 - q^2*t2*t3*t0",
         [(q2, [(1, 2, 3, 4, -3, -2)])]),
        ("t14*t34", "t14*t34", "q*t13 + t1*t3 + t4*t134", [(QBAR, [(1, -4, 3, 4)])]),
        ("t123*t234", "t123*t234", "q^-1*t14 + t1*t4 + t23*t0", [(Q, [(1, 2, 3, 4, -3, -2)])]),
        ("t123*t134", "t123*t134", "t2*t4 + t13*t0",
         [(Q, [(2, 3, 4, -3)]), (QBAR, [(1, 2, -1, 4)])]),
        ("t12*t14", "t12*t14", "q*t24 + t2*t4 + t1*t124", [(QBAR, [(1, 2, -1, 4)])]),
    ]
    return [CurveIdentity(f"id:{name}", P(lhs), P(rhs), _words(*curves))
            for name, lhs, rhs, curves in rows]


# Products with a non-generator factor, cleared by substituting the factor
# from a verified identity:
#   q  * t(1,2,3,-2)        = t12*t23 - q^-1*t13 - t1*t3 - t2*t123
#   q  * t(1,2,-4,3,4)      = t34*t124 - t4*t0 - q^-1*t123 - t3*t12
#   t(1,-4,3,4)             = q*(t14*t34 - q*t13 - t1*t3 - t4*t134)
#   q^2* t(1,2,3,4,-3,-2)   = t12*t23*t34 - (...)
_T1232 = "(t12*t23 - q^-1*t13 - t1*t3 - t2*t123)"
_T12434 = "(t34*t124 - t4*t0 - q^-1*t123 - t3*t12)"
_T1434 = "q*(t14*t34 - q*t13 - t1*t3 - t4*t134)"
_T123432 = (
    "(t12*t23*t34 - (t3*t12*t234 + q^2*t2*t34*t123 - q^3*t2*t124 - q^-1*t3*t134"
    " + q^-1*t12*t24 + q^-1*t13*t34 + (1-q^2)*t2*t4*t12 - q^-2*t14 + (q-q^-1)*t1*t4"
    " - q^2*t2*t3*t0))"
)
_CLEARED = (
    ("t(1,2,3,-2)*t13", _T1232 + "*t13",
     "q*(t123^2 + (q*t1*t23 + q^-1*t3*t12 + t1*t2*t3)*t123 + q^2*t23^2 + q^-2*t12^2"
     " + q*t2*t3*t23 + q^-1*t1*t2*t12 + t1^2 + t2^2 + t3^2 - A^2)"),
    ("t23*t(1,2,-4,3,4)", "t23*" + _T12434,
     "q*((q*t2*t34 + q^-1*t3*t24 + t2*t3*t4 + t234)*t0 + (q^2*t34 + q*t3*t4)*t134"
     " + (q^-1*t2*t4 + q^-2*t24)*t124 + A*t1 + t4*t14 + t2*t12 + t3*" + _T1434 + ")"),
    ("t14*t(1,2,3,4,-3,-2)", "t14*" + _T123432,
     "q^2*(t0^2 + (q^-1*t1*t234 + q*t4*t123 + t1*t4*t23)*t0 + q^2*t123^2 + q^-2*t234^2"
     " + q^-1*t4*t23*t234 + q*t1*t23*t123 + t23^2 + t1^2 + t4^2 - A^2)"),
)


@dataclass
class RelationCatalog:
    relations: list[Relation]
    identities: list[CurveIdentity] = field(default_factory=list)

    def by_kind(self, *kinds: str) -> list[Relation]:
        return [r for r in self.relations if r.kind in kinds]

    def get(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def names(self) -> list[str]:
        return [r.name for r in self.relations]

    def dumps(self) -> str:
        return "\n".join(json.dumps(r.to_record(), sort_keys=True) for r in self.relations) + "\n"

    @classmethod
    def loads(cls, text: str) -> "RelationCatalog":
        return cls([Relation.from_record(json.loads(line)) for line in text.splitlines() if line.strip()])


def _suffix(k: int) -> str:
    return f"/s{k}" if k else ""


def _orbit(name, kind, lhs_text, rhs_text, *, cyclic=True, printed=None, erratum="",
           mirrored=False, seen=None) -> list[Relation]:
    lhs, rhs = parse_expression(lhs_text), parse_expression(rhs_text)
    if mirrored:
        lhs, rhs = mirror(lhs), mirror(rhs)
    out = []
    for k in range(4 if cyclic else 1):
        pl, pr = permute(lhs, k), permute(rhs, k)
        key = dedup_key(pl - pr)
        if seen is not None:
            if key in seen:
                continue
            seen.add(key)
        prefix = "mirror:" if mirrored else ""
        out.append(Relation(f"{prefix}{name}{_suffix(k)}", pl, pr, kind, family=name, power=k,
                            mirrored=mirrored, printed=printed, erratum=erratum))
    return out


def build_catalog() -> RelationCatalog:
    rels: list[Relation] = []
    seen: set = set()
    for name, lhs, rhs in _COMMUTING:
        rels += _orbit(name, "commuting", lhs, rhs, seen=seen)
    for name, lhs, printed_rhs, fixed_rhs, cyclic, note in _REDUCTION:
        printed = (lhs, printed_rhs) if fixed_rhs else None
        rels += _orbit(f"red:{name}", "reduction", lhs, fixed_rhs or printed_rhs, cyclic=cyclic,
                       printed=printed, erratum=note, seen=seen)
        if name == _MIRRORED_FAMILY:
            rels += _orbit(f"red:{name}", "reduction", lhs, fixed_rhs or printed_rhs, cyclic=True,
                           printed=printed, erratum=note, mirrored=True, seen=seen)
    for c in CENTRAL:
        for g in GENERATORS:
            rels.append(Relation(
                f"central:{generator_name(c)}|{generator_name(g)}",
                GenPolynomial({(c, g): 1}), GenPolynomial({(g, c): 1}), "centrality"))
    for a in NONCENTRAL:
        for b in NONCENTRAL:
            if generator_rank(a) < generator_rank(b) and curves_commute(a, b):
                rels.append(Relation(
                    f"disjoint:{generator_name(a)}|{generator_name(b)}",
                    GenPolynomial({(b, a): 1}), GenPolynomial({(a, b): 1}), "disjoint",
                    derived=True))
    for name, lhs, rhs in _CLEARED:
        rels.append(Relation(f"cleared:{name}", parse_expression(lhs), parse_expression(rhs),
                             "cleared", derived=True))
    return RelationCatalog(rels, curve_identities())
