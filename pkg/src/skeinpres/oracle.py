"""Kauffman bracket state sum over stacked standard curves.

The diagram is cut at its crossings into arcs, each carrying the ray
letters it passes.  Crossings are smoothed one at a time; partial states
(the open arcs between unsmoothed crossings plus the loops closed so far)
are merged whenever they coincide, so the work tracks the number of
distinct partial states rather than ``2**crossings``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .geometry import DEFAULT_SCHEDULE, RAY_DEPTH, Diagram, OffsetSchedule, segment_intersection, stack
from .scalar import DELTA, ONE, ZERO, LaurentScalar
from .words import (
    Multicurve,
    Word,
    canonicalize,
    format_multicurve,
    free_reduce,
    invert,
    mc_canonicalize,
    multidegree,
    word_key,
)

__all__ = [
    "SkeinElement",
    "A_SMOOTHING_HALF_EXP",
    "loop_classify",
    "kauffman_resolve",
    "resolve_monomial",
]

# Weight of the A-smoothing is q^(A_SMOOTHING_HALF_EXP / 2); the B-smoothing
# gets the inverse.  Pinned by the t12*t23 calibration test.
A_SMOOTHING_HALF_EXP = -1


def _mc_key(mc: Multicurve):
    return (sum(len(w) for w in mc), len(mc), [word_key(w) for w in mc])


class SkeinElement:
    """A finite R-linear combination of multicurves."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Multicurve, LaurentScalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Multicurve, LaurentScalar] = {}
        for mc, c in items:
            c = LaurentScalar.coerce(c)
            acc[mc] = acc.get(mc, ZERO) + c
        self._terms = {mc: c for mc, c in acc.items() if c}

    @classmethod
    def multicurve(cls, words: Iterable[Sequence[int]], coeff=ONE) -> "SkeinElement":
        return cls({mc_canonicalize(words): LaurentScalar.coerce(coeff)})

    @property
    def terms(self) -> dict[Multicurve, LaurentScalar]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mc: Multicurve) -> LaurentScalar:
        return self._terms.get(mc, ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        acc = dict(self._terms)
        for mc, c in other._terms.items():
            acc[mc] = acc.get(mc, ZERO) + c
        return SkeinElement(acc)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement({mc: -c for mc, c in self._terms.items()})

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + (-other)

    def scale(self, c) -> "SkeinElement":
        c = LaurentScalar.coerce(c)
        return SkeinElement({mc: c * v for mc, v in self._terms.items()})

    __rmul__ = scale

    def disjoint_union(self, other: "SkeinElement") -> "SkeinElement":
        """Product of elements whose diagrams are disjoint in the plane."""
        acc: dict[Multicurve, LaurentScalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mc = mc_canonicalize(m1 + m2)
                acc[mc] = acc.get(mc, ZERO) + c1 * c2
        return SkeinElement(acc)

    def bar(self) -> "SkeinElement":
        return SkeinElement({mc: c.bar() for mc, c in self._terms.items()})

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: _mc_key(kv[0]))

    def max_multidegree(self, n: int = 4) -> tuple[int, ...]:
        md = [0] * n
        for mc in self._terms:
            for v, x in enumerate(multidegree(mc, n)):
                md[v] = max(md[v], x)
        return tuple(md)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"mc": [list(w) for w in mc], "coeff": c.to_json()} for mc, c in self.sorted_items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SkeinElement":
        return cls(
            (tuple(tuple(w) for w in t["mc"]), LaurentScalar.from_json(t["coeff"]))
            for t in data["terms"]
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "\n".join(f"({c}) * {format_multicurve(mc)}" for mc, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"SkeinElement({len(self._terms)} terms)"


# ---------------------------------------------------------------------------
# loop classification


def _ray_letters(p, q, n: int):
    """Signed ray letters met along segment p->q, with their parameters."""
    out = []
    for v in range(1, n + 1):
        hit = segment_intersection(p, q, (Fraction(v), Fraction(0)), (Fraction(v), -RAY_DEPTH))
        if hit is None:
            continue
        t, _, _ = hit
        dx = q[0] - p[0]
        if dx == 0:
            raise ValueError("segment runs along a ray")
        out.append((t, v if dx > 0 else -v))
    out.sort()
    return out


def loop_classify(vertices: Sequence, n: int = 4) -> Word:
    """Canonical word of a closed polyline (list of exact points)."""
    pts = [(Fraction(x), Fraction(y)) for x, y in vertices]
    letters = []
    for i in range(len(pts)):
        letters += [x for _, x in _ray_letters(pts[i], pts[(i + 1) % len(pts)], n)]
    return canonicalize(letters)


# ---------------------------------------------------------------------------
# arcs and half-edges

# half-edge slots at a crossing
_OVER_IN, _OVER_OUT, _UNDER_IN, _UNDER_OUT = 0, 1, 2, 3


def _segment_direction(curve, seg):
    vs = curve.vertices
    p, q = vs[seg], vs[(seg + 1) % len(vs)]
    return q[0] - p[0], q[1] - p[1]


def _cut_arcs(diagram: Diagram):
    """Static arcs keyed by half-edge, closed curves without crossings, and
    the smoothing pairs of every crossing."""
    n = diagram.n
    events: dict[int, list] = defaultdict(list)
    for ci, cr in enumerate(diagram.crossings):
        events[cr.over].append((cr.over_segment, cr.over_param, 1, ci, "over"))
        events[cr.under].append((cr.under_segment, cr.under_param, 1, ci, "under"))
    for k, curve in enumerate(diagram.curves):
        for seg, (p, q) in enumerate(curve.segments()):
            for t, letter in _ray_letters(p, q, n):
                events[k].append((seg, t, 0, letter, None))

    static: dict[int, tuple[int, Word]] = {}
    free_loops: list[Word] = []
    for k, curve in enumerate(diagram.curves):
        evs = sorted(events[k], key=lambda e: (e[0], e[1]))
        cross_pos = [i for i, e in enumerate(evs) if e[2] == 1]
        if not cross_pos:
            free_loops.append(canonicalize([e[3] for e in evs]))
            continue
        m = len(evs)
        for a, i in enumerate(cross_pos):
            j = cross_pos[(a + 1) % len(cross_pos)]
            letters = []
            idx = (i + 1) % m
            while idx != j:
                letters.append(evs[idx][3])
                idx = (idx + 1) % m
            ci, role = evs[i][3], evs[i][4]
            cj, role_j = evs[j][3], evs[j][4]
            start = 4 * ci + (_OVER_OUT if role == "over" else _UNDER_OUT)
            end = 4 * cj + (_OVER_IN if role_j == "over" else _UNDER_IN)
            word = free_reduce(letters)
            static[start] = (end, word)
            static[end] = (start, invert(word))

    pairs = []
    for ci, cr in enumerate(diagram.crossings):
        da = _segment_direction(diagram.curves[cr.over], cr.over_segment)
        db = _segment_direction(diagram.curves[cr.under], cr.under_segment)
        turn = da[0] * db[1] - da[1] * db[0]
        base = 4 * ci
        if turn > 0:
            ccw = (base + _OVER_OUT, base + _UNDER_OUT, base + _OVER_IN, base + _UNDER_IN)
        else:
            ccw = (base + _OVER_OUT, base + _UNDER_IN, base + _OVER_IN, base + _UNDER_OUT)
        a_pairs = ((ccw[1], ccw[2]), (ccw[3], ccw[0]))
        b_pairs = ((ccw[0], ccw[1]), (ccw[2], ccw[3]))
        pairs.append((a_pairs, b_pairs))
    return static, free_loops, pairs


def _crossing_order(n_cross: int, static) -> list[int]:
    """Greedy order keeping the frontier of open arcs small."""
    adj: dict[int, set[int]] = defaultdict(set)
    for he, (other, _) in static.items():
        a, b = he // 4, other // 4
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    done: list[int] = []
    done_set: set[int] = set()
    score = [0] * n_cross
    remaining = set(range(n_cross))
    while remaining:
        c = max(remaining, key=lambda x: (score[x], -x))
        remaining.discard(c)
        done.append(c)
        done_set.add(c)
        for nb in adj[c]:
            score[nb] += 1
    return done


def _join(word_a: Word, word_b: Word) -> Word:
    i = 0
    la = len(word_a)
    while i < la and i < len(word_b) and word_a[la - 1 - i] == -word_b[i]:
        i += 1
    return word_a[: la - i] + word_b[i:]


def _smooth(dyn: dict, static: dict, pairs, loops: list) -> None:
    """Apply one smoothing in place: ``dyn`` maps open half-edges to arcs."""
    for p, q in pairs:
        u, wu = dyn.pop(p) if p in dyn else static[p]
        if u == q:
            dyn.pop(q, None)
            loops.append(canonicalize(wu))
            continue
        v, wv = dyn.pop(q) if q in dyn else static[q]
        w = _join(invert(wu), wv)
        dyn[u] = (v, w)
        dyn[v] = (u, invert(w))


def _state_key(dyn: dict, loops: tuple) -> tuple:
    arcs = tuple(sorted((a, b, w) for a, (b, w) in dyn.items() if a < b))
    return arcs, loops


def _components(diagram: Diagram) -> list[list[int]]:
    parent = list(range(len(diagram.curves)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cr in diagram.crossings:
        parent[find(cr.over)] = find(cr.under)
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(len(diagram.curves)):
        groups[find(i)].append(i)
    return list(groups.values())


def _resolve_connected(diagram: Diagram, a_half_exp: int) -> SkeinElement:
    static, free_loops, pairs = _cut_arcs(diagram)
    order = _crossing_order(len(diagram.crossings), static)
    states: dict[tuple, LaurentScalar] = {((), ()): ONE}
    for c in order:
        a_pairs, b_pairs = pairs[c]
        nxt: dict[tuple, LaurentScalar] = {}
        for (arcs, loops), coeff in states.items():
            for smoothing, half_exp in ((a_pairs, a_half_exp), (b_pairs, -a_half_exp)):
                dyn = {}
                for a, b, w in arcs:
                    dyn[a] = (b, w)
                    dyn[b] = (a, invert(w))
                new_loops: list[Word] = []
                _smooth(dyn, static, smoothing, new_loops)
                c2 = coeff.shift(half_exp)
                kept = list(loops)
                for w in new_loops:
                    if w:
                        kept.append(w)
                    else:
                        c2 = c2 * DELTA
                key = _state_key(dyn, tuple(sorted(kept, key=word_key)))
                prev = nxt.get(key)
                total = c2 if prev is None else prev + c2
                if total:
                    nxt[key] = total
                else:
                    nxt.pop(key, None)
        states = nxt
    result: dict[Multicurve, LaurentScalar] = {}
    for (arcs, loops), coeff in states.items():
        assert not arcs, "unsmoothed arcs remain"
        mc = tuple(sorted(list(loops) + free_loops, key=word_key))
        result[mc] = result.get(mc, ZERO) + coeff
    return SkeinElement(result)


def kauffman_resolve(diagram: Diagram, a_half_exp: int | None = None) -> SkeinElement:
    """Exact Kauffman bracket expansion of a diagram in the multicurve basis."""
    if a_half_exp is None:
        a_half_exp = A_SMOOTHING_HALF_EXP
    result = SkeinElement({(): ONE})
    for group in _components(diagram):
        keep = set(group)
        remap = {old: new for new, old in enumerate(group)}
        sub = Diagram(
            diagram.n,
            tuple(diagram.curves[i] for i in group),
            tuple(
                type(cr)(cr.point, remap[cr.over], remap[cr.under], cr.over_segment,
                         cr.under_segment, cr.over_param, cr.under_param)
                for cr in diagram.crossings
                if cr.over in keep
            ),
            diagram.schedule,
        )
        result = result.disjoint_union(_resolve_connected(sub, a_half_exp))
    return result


def resolve_monomial(
    monomial: Sequence, n: int = 4, schedule: OffsetSchedule = DEFAULT_SCHEDULE
) -> SkeinElement:
    """Evaluate a product of standard curves, first factor on top."""
    if not monomial:
        return SkeinElement({(): ONE})
    return kauffman_resolve(stack(monomial, n, schedule))
