"""Exact arithmetic in the coefficient ring Z[q^(1/2), q^(-1/2)].

A scalar is stored as a map from half-exponents to nonzero integer
coefficients: the key ``k`` stands for ``q^(k/2)``.  Python integers are
arbitrary precision, so coefficient overflow cannot happen.
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["LaurentScalar", "ZERO", "ONE", "S", "Q", "QBAR", "ALPHA", "DELTA"]


class LaurentScalar:
    """Immutable Laurent polynomial in ``s = q^(1/2)`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for k, c in items:
            if not isinstance(k, int) or not isinstance(c, int):
                raise TypeError("half-exponents and coefficients must be integers")
            acc[k] = acc.get(k, 0) + c
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, items: tuple[tuple[int, int], ...]) -> "LaurentScalar":
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, half_exp: int, coeff: int = 1) -> "LaurentScalar":
        return cls._raw(((half_exp, coeff),) if coeff else ())

    @classmethod
    def coerce(cls, value: "LaurentScalar | int") -> "LaurentScalar":
        if isinstance(value, LaurentScalar):
            return value
        if isinstance(value, int):
            return cls.monomial(0, value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentScalar")

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_unit(self) -> bool:
        """Units of the ring are exactly ``±q^(k/2)``."""
        return len(self._terms) == 1 and self._terms[0][1] in (1, -1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentScalar.monomial(0, other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentScalar | int") -> "LaurentScalar":
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for k, c in other._terms:
            acc[k] = acc.get(k, 0) + c
        return LaurentScalar._raw(tuple(sorted((k, c) for k, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar._raw(tuple((k, -c) for k, c in self._terms))

    def __sub__(self, other: "LaurentScalar | int") -> "LaurentScalar":
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "LaurentScalar | int") -> "LaurentScalar":
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other: "LaurentScalar | int") -> "LaurentScalar":
        try:
            other = LaurentScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            (k2, c2), = other._terms
            return LaurentScalar._raw(tuple((k + k2, c * c2) for k, c in self._terms))
        if len(self._terms) == 1:
            return other * self
        acc: dict[int, int] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
        return LaurentScalar._raw(tuple(sorted((k, c) for k, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentScalar":
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units ±q^(k/2) can be raised to negative powers")
            (k, c), = self._terms
            return LaurentScalar.monomial(-k * (-n), c ** (-n))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, half_exp: int) -> "LaurentScalar":
        """Multiply by ``q^(half_exp/2)``."""
        if not half_exp:
            return self
        return LaurentScalar._raw(tuple((k + half_exp, c) for k, c in self._terms))

    def bar(self) -> "LaurentScalar":
        """The bar involution ``q^(1/2) -> q^(-1/2)``."""
        return LaurentScalar._raw(tuple((-k, c) for k, c in reversed(self._terms)))

    def evaluate(self, s_value):
        """Specialize ``q^(1/2)`` to ``s_value`` (exact for ints/Fractions)."""
        from fractions import Fraction

        s = Fraction(s_value)
        return sum((c * s**k for k, c in self._terms), Fraction(0))

    # -- display / serialization -------------------------------------------

    def to_json(self) -> list[list[int]]:
        return [[k, c] for k, c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentScalar":
        return cls((int(k), int(c)) for k, c in data)

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in reversed(self._terms):
            mono = _power_text(k)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _power_text(k: int) -> str:
    if k == 0:
        return "1"
    if k % 2 == 0:
        e = k // 2
        return "q" if e == 1 else f"q^{e}"
    return "s" if k == 1 else f"s^{k}"


ZERO = LaurentScalar()
ONE = LaurentScalar.monomial(0)
S = LaurentScalar.monomial(1)
Q = LaurentScalar.monomial(2)
QBAR = LaurentScalar.monomial(-2)
ALPHA = Q + QBAR
DELTA = -Q - QBAR
