"""Exact planar realization of stacked standard curves.

Punctures sit at ``(v, 0)``; the ray below puncture ``v`` is the vertical
segment from ``(v, 0)`` down to ``(v, -RAY_DEPTH)``.  A standard curve for a
puncture set ``S`` is an axis-parallel polygon: its lower strand runs below
the x-axis under every puncture of ``S`` and bumps upward over the excluded
punctures strictly between ``min S`` and ``max S``; its upper strand runs
above the x-axis.  All coordinates are ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

__all__ = [
    "RAY_DEPTH",
    "GenericityError",
    "OffsetSchedule",
    "DEFAULT_SCHEDULE",
    "SCHEDULES",
    "PolylineCurve",
    "Crossing",
    "Diagram",
    "standard_curve",
    "stack",
    "segment_intersection",
]

Point = tuple[Fraction, Fraction]

RAY_DEPTH = Fraction(4)


class GenericityError(RuntimeError):
    """The layout violates transversality or general position."""


@dataclass(frozen=True)
class OffsetSchedule:
    """Per-level offsets.

    Level ``l`` draws all of its offsets from the open interval
    ``(base * ratio**l, base * ratio**(l-1))``, so every offset of level
    ``l + 1`` is smaller than every offset of level ``l``.  ``fractions``
    positions each named offset inside that interval.
    """

    base: Fraction = Fraction(9, 20)
    ratio: Fraction = Fraction(4, 5)
    # margin: horizontal overhang beyond min/max puncture; notch: half-width
    # of a bump; top/bump/bottom: heights of upper strand, bump, lower strand.
    fractions: tuple[tuple[str, Fraction], ...] = (
        ("margin", Fraction(1, 2)),
        ("notch", Fraction(1, 4)),
        ("top", Fraction(3, 4)),
        ("bump", Fraction(1, 3)),
        ("bottom", Fraction(3, 5)),
    )
    jitter: Fraction = Fraction(0)

    def __post_init__(self):
        if not (0 < self.base < Fraction(1, 2)):
            raise ValueError("base must lie in (0, 1/2)")
        if not (0 < self.ratio < 1):
            raise ValueError("ratio must lie in (0, 1)")
        fr = dict(self.fractions)
        if set(fr) != {"margin", "notch", "top", "bump", "bottom"}:
            raise ValueError("schedule needs margin, notch, top, bump, bottom")
        if any(not (0 < f < 1) for f in fr.values()):
            raise ValueError("fractions must lie strictly inside (0, 1)")
        if fr["margin"] == fr["notch"] or fr["top"] == fr["bump"]:
            raise ValueError("margin/notch and top/bump fractions must differ")
        if fr["bump"] >= fr["top"]:
            raise ValueError("bump must sit below the upper strand")

    def offsets(self, level: int) -> dict[str, Fraction]:
        if level < 1:
            raise ValueError("levels start at 1")
        hi = self.base * self.ratio ** (level - 1)
        lo = hi * self.ratio
        out = {}
        for name, f in self.fractions:
            f = f + self.jitter * (level % 3 - 1) * Fraction(1, 64)
            out[name] = lo + f * (hi - lo)
        return out

    def perturbed(self, attempt: int) -> "OffsetSchedule":
        return OffsetSchedule(self.base, self.ratio, self.fractions, Fraction(attempt, attempt + 7))


DEFAULT_SCHEDULE = OffsetSchedule()

SCHEDULES: tuple[OffsetSchedule, ...] = (
    DEFAULT_SCHEDULE,
    OffsetSchedule(Fraction(2, 5), Fraction(2, 3)),
    OffsetSchedule(
        Fraction(47, 100),
        Fraction(7, 10),
        (
            ("margin", Fraction(1, 5)),
            ("notch", Fraction(4, 5)),
            ("top", Fraction(1, 2)),
            ("bump", Fraction(1, 10)),
            ("bottom", Fraction(9, 10)),
        ),
    ),
    OffsetSchedule(
        Fraction(1, 3),
        Fraction(5, 6),
        (
            ("margin", Fraction(2, 3)),
            ("notch", Fraction(1, 3)),
            ("top", Fraction(9, 10)),
            ("bump", Fraction(7, 10)),
            ("bottom", Fraction(1, 7)),
        ),
    ),
    OffsetSchedule(
        Fraction(49, 100),
        Fraction(3, 5),
        (
            ("margin", Fraction(3, 7)),
            ("notch", Fraction(5, 7)),
            ("top", Fraction(2, 7)),
            ("bump", Fraction(1, 7)),
            ("bottom", Fraction(6, 7)),
        ),
    ),
)


@dataclass(frozen=True)
class PolylineCurve:
    vertices: tuple[Point, ...]
    level: int
    subset: frozenset[int] = frozenset()

    def segments(self):
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]


@dataclass(frozen=True)
class Crossing:
    point: Point
    over: int  # curve index (smaller level, i.e. higher in the stack)
    under: int
    over_segment: int
    under_segment: int
    over_param: Fraction
    under_param: Fraction


@dataclass(frozen=True)
class Diagram:
    n: int
    curves: tuple[PolylineCurve, ...]
    crossings: tuple[Crossing, ...]
    schedule: OffsetSchedule = field(default=DEFAULT_SCHEDULE, compare=False)


def _runs(values: list[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for v in values:
        if runs and runs[-1][1] == v - 1:
            runs[-1] = (runs[-1][0], v)
        else:
            runs.append((v, v))
    return runs


def standard_curve(
    subset, level: int, n: int = 4, schedule: OffsetSchedule = DEFAULT_SCHEDULE
) -> PolylineCurve:
    s = sorted(set(subset))
    if not s:
        raise ValueError("a standard curve needs a nonempty puncture set")
    if s[0] < 1 or s[-1] > n:
        raise ValueError(f"puncture set {s} out of range 1..{n}")
    off = schedule.offsets(level)
    lo, hi = s[0], s[-1]
    margin, notch = off["margin"], off["notch"]
    top, bump, bottom = off["top"], off["bump"], -off["bottom"]
    left, right = lo - margin, hi + margin
    pts: list[Point] = [(left, bottom)]
    excluded = [v for v in range(lo + 1, hi) if v not in s]
    for a, b in _runs(excluded):
        pts += [(a - notch, bottom), (a - notch, bump), (b + notch, bump), (b + notch, bottom)]
    pts += [(right, bottom), (right, top), (left, top)]
    return PolylineCurve(tuple((Fraction(x), Fraction(y)) for x, y in pts), level, frozenset(s))


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def segment_intersection(p1: Point, p2: Point, q1: Point, q2: Point):
    """Exact intersection of two closed segments.

    Returns ``None`` when disjoint, ``(t, u, point)`` for a single transverse
    intersection with parameters along each segment, and raises
    ``GenericityError`` for collinear overlaps.
    """
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    denom = _cross(rx, ry, sx, sy)
    qpx, qpy = q1[0] - p1[0], q1[1] - p1[1]
    if denom == 0:
        if _cross(qpx, qpy, rx, ry) != 0:
            return None
        # collinear: check overlap along r
        rr = rx * rx + ry * ry
        t0 = (qpx * rx + qpy * ry) / rr
        t1 = t0 + (sx * rx + sy * ry) / rr
        if max(t0, t1) < 0 or min(t0, t1) > 1:
            return None
        raise GenericityError("collinear overlapping segments")
    t = _cross(qpx, qpy, sx, sy) / denom
    u = _cross(qpx, qpy, rx, ry) / denom
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    return t, u, (p1[0] + t * rx, p1[1] + t * ry)


def _ray(v: int) -> tuple[Point, Point]:
    return (Fraction(v), Fraction(0)), (Fraction(v), -RAY_DEPTH)


def _check_curve(curve: PolylineCurve, n: int) -> None:
    for p, q in curve.segments():
        for v in range(1, n + 1):
            hit = segment_intersection(p, q, *_ray(v))
            if hit is None:
                continue
            t, u, pt = hit
            if pt == (v, 0) or not (0 < t < 1) or not (0 < u < 1):
                raise GenericityError(f"curve touches puncture {v} or its ray endpoint")


def _build(monomial, n: int, schedule: OffsetSchedule) -> Diagram:
    curves = tuple(
        standard_curve(s, level, n, schedule) for level, s in enumerate(monomial, start=1)
    )
    for c in curves:
        _check_curve(c, n)
    crossings = []
    seen_points = set()
    for i in range(len(curves)):
        segs_i = list(curves[i].segments())
        for j in range(i + 1, len(curves)):
            segs_j = list(curves[j].segments())
            for a, (p1, p2) in enumerate(segs_i):
                for b, (q1, q2) in enumerate(segs_j):
                    hit = segment_intersection(p1, p2, q1, q2)
                    if hit is None:
                        continue
                    t, u, pt = hit
                    if not (0 < t < 1 and 0 < u < 1):
                        raise GenericityError("intersection at a polyline vertex")
                    if pt[1] <= 0 and pt[0] == int(pt[0]) and 1 <= pt[0] <= n:
                        raise GenericityError("crossing lies on a ray")
                    if pt in seen_points:
                        raise GenericityError("triple point")
                    seen_points.add(pt)
                    crossings.append(Crossing(pt, i, j, a, b, t, u))
    return Diagram(n, curves, tuple(crossings), schedule)


MAX_RETRIES = 8


def stack(
    monomial: Sequence, n: int = 4, schedule: OffsetSchedule = DEFAULT_SCHEDULE
) -> Diagram:
    """Stack standard curves; the first factor is on top (level 1)."""
    monomial = [frozenset(s) for s in monomial]
    if not monomial:
        raise ValueError("cannot stack an empty monomial")
    last_error = None
    for attempt in range(MAX_RETRIES):
        sched = schedule if attempt == 0 else schedule.perturbed(attempt)
        try:
            return _build(monomial, n, sched)
        except GenericityError as exc:
            last_error = exc
    raise GenericityError(f"no generic layout after {MAX_RETRIES} attempts: {last_error}")
