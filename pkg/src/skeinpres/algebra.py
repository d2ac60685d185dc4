"""The free algebra on the standard generators and its evaluation map.

A generator is a sorted tuple of puncture indices, ``(1, 3)`` for ``t13``;
the full set ``(1, 2, 3, 4)`` is ``t0``.  A monomial is a tuple of
generators read left to right, i.e. top to bottom in the stack.
"""

from __future__ import annotations

import itertools
import threading
from typing import Iterable, Mapping, Sequence

from .geometry import DEFAULT_SCHEDULE, OffsetSchedule
from .oracle import SkeinElement, resolve_monomial
from .scalar import ONE, ZERO, LaurentScalar

__all__ = [
    "Generator",
    "Monomial",
    "N",
    "T0",
    "CENTRAL",
    "NONCENTRAL",
    "GENERATORS",
    "gen",
    "generator_name",
    "is_central",
    "monomial_multidegree",
    "reduced_part",
    "GenPolynomial",
    "evaluate",
    "equals",
    "mirror",
    "permute",
    "sigma",
    "clear_cache",
]

Generator = tuple[int, ...]
Monomial = tuple[Generator, ...]

N = 4
T0: Generator = (1, 2, 3, 4)
CENTRAL: tuple[Generator, ...] = ((1,), (2,), (3,), (4,), T0)
NONCENTRAL: tuple[Generator, ...] = (
    (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4),
)
GENERATORS: tuple[Generator, ...] = CENTRAL + NONCENTRAL
_RANK = {g: i for i, g in enumerate(GENERATORS)}


def gen(name: str | int | Iterable[int]) -> Generator:
    """``gen("t13")``, ``gen(13)`` and ``gen({1, 3})`` all give ``(1, 3)``."""
    if isinstance(name, str):
        body = name[1:] if name.startswith("t") else name
        if body == "0":
            return T0
        digits = tuple(int(ch) for ch in body)
    elif isinstance(name, int):
        digits = tuple(int(ch) for ch in str(name))
        if digits == (0,):
            return T0
    else:
        digits = tuple(sorted(set(name)))
    if not digits or list(digits) != sorted(set(digits)) or digits[0] < 1 or digits[-1] > N:
        raise ValueError(f"not a generator: {name!r}")
    return digits


def generator_name(g: Generator) -> str:
    return "t0" if g == T0 else "t" + "".join(map(str, g))


def is_central(g: Generator) -> bool:
    return len(g) == 1 or g == T0


def generator_rank(g: Generator) -> int:
    return _RANK[g]


def monomial_multidegree(m: Monomial, n: int = N) -> tuple[int, ...]:
    md = [0] * n
    for g in m:
        for v in g:
            md[v - 1] += 1
    return tuple(md)


def reduced_part(m: Monomial) -> Monomial:
    return tuple(g for g in m if not is_central(g))


def _monomial_text(m: Monomial) -> str:
    if not m:
        return "1"
    out = []
    for g, grp in itertools.groupby(m):
        k = len(list(grp))
        out.append(generator_name(g) + (f"^{k}" if k > 1 else ""))
    return "*".join(out)


class GenPolynomial:
    """Noncommutative polynomial over the Laurent ring in the generators."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, LaurentScalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, LaurentScalar] = {}
        for m, c in items:
            m = tuple(tuple(g) for g in m)
            acc[m] = acc.get(m, ZERO) + LaurentScalar.coerce(c)
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, m: Sequence, coeff=ONE) -> "GenPolynomial":
        return cls({tuple(gen(g) if not isinstance(g, tuple) else g for g in m): coeff})

    @classmethod
    def scalar(cls, c) -> "GenPolynomial":
        return cls({(): c})

    @property
    def terms(self) -> dict[Monomial, LaurentScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> LaurentScalar:
        return self._terms.get(m, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, GenPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(x) -> "GenPolynomial":
        if isinstance(x, GenPolynomial):
            return x
        return GenPolynomial.scalar(LaurentScalar.coerce(x))

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, ZERO) + c
        return GenPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return GenPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (LaurentScalar, int)):
            c = LaurentScalar.coerce(other)
            return GenPolynomial({m: c * v for m, v in self._terms.items()})
        other = self._coerce(other)
        acc: dict[Monomial, LaurentScalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                acc[m] = acc.get(m, ZERO) + c1 * c2
        return GenPolynomial(acc)

    def __rmul__(self, other):
        if isinstance(other, (LaurentScalar, int)):
            return self * other
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of generators are undefined")
        out = GenPolynomial.scalar(ONE)
        for _ in range(k):
            out = out * self
        return out

    def multidegree(self, n: int = N) -> tuple[int, ...]:
        md = [0] * n
        for m in self._terms:
            for v, x in enumerate(monomial_multidegree(m, n)):
                md[v] = max(md[v], x)
        return tuple(md)

    def sorted_items(self):
        return sorted(
            self._terms.items(), key=lambda kv: (len(kv[0]), [_RANK.get(g, 99) for g in kv[0]])
        )

    def to_json(self) -> list[dict]:
        return [{"coefficient": c.to_json(), "monomial": [list(g) for g in m]}
                for m, c in self.sorted_items()]

    @classmethod
    def from_json(cls, data) -> "GenPolynomial":
        return cls(
            (tuple(tuple(g) for g in t["monomial"]), LaurentScalar.from_json(t["coefficient"]))
            for t in data
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_items():
            mono = _monomial_text(m)
            if c == ONE:
                body, sign = mono, "+"
            elif c == -ONE:
                body, sign = mono, "-"
            elif len(c.items()) == 1:
                k, v = c.items()[0]
                sign = "-" if v < 0 else "+"
                sc = str(LaurentScalar.monomial(k, abs(v)))
                body = sc if not m else f"{sc}*{mono}"
            else:
                sign = "+"
                body = f"({c})" if not m else f"({c})*{mono}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"GenPolynomial({self})"


# ---------------------------------------------------------------------------
# evaluation

_cache: dict[tuple, SkeinElement] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def evaluate_monomial(m: Monomial, n: int = N, schedule: OffsetSchedule = DEFAULT_SCHEDULE):
    key = (m, n, schedule)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    value = resolve_monomial([set(g) for g in m], n, schedule)
    with _cache_lock:
        _cache[key] = value
    return value


def evaluate(p: GenPolynomial, n: int = N, schedule: OffsetSchedule = DEFAULT_SCHEDULE) -> SkeinElement:
    """Image of ``p`` in the multicurve basis."""
    acc: dict = {}
    for m, c in p.items():
        for mc, v in evaluate_monomial(m, n, schedule).terms.items():
            acc[mc] = acc.get(mc, ZERO) + c * v
    return SkeinElement(acc)


def equals(p: GenPolynomial, r: GenPolynomial, **kw) -> tuple[bool, SkeinElement]:
    residual = evaluate(p - r, **kw)
    return residual.is_zero(), residual


# ---------------------------------------------------------------------------
# symmetries


def mirror(p: GenPolynomial) -> GenPolynomial:
    """Reverse stacking order and conjugate ``q^(1/2) -> q^(-1/2)``."""
    return GenPolynomial({tuple(reversed(m)): c.bar() for m, c in p.items()})


def sigma(g: Generator, k: int = 1) -> Generator:
    """Relabel by the cyclic permutation 1->2->3->4->1, applied k times."""
    return tuple(sorted((v - 1 + k) % N + 1 for v in g))


def permute(p: GenPolynomial, k: int) -> GenPolynomial:
    return GenPolynomial({tuple(sigma(g, k) for g in m): c for m, c in p.items()})
