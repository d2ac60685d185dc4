"""Exact computations in the Kauffman bracket skein algebra of the 5-punctured sphere."""

from .algebra import GenPolynomial, equals, evaluate, mirror, permute
from .oracle import SkeinElement, resolve_monomial
from .parser import ParseError, parse_expression
from .scalar import LaurentScalar

__version__ = "0.1.0"

__all__ = [
    "GenPolynomial",
    "LaurentScalar",
    "ParseError",
    "SkeinElement",
    "equals",
    "evaluate",
    "mirror",
    "parse_expression",
    "permute",
    "resolve_monomial",
]
