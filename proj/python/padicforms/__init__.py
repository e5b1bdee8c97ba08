"""Quadratic forms and polynomial symbols over p-adic fields.

Polynomials are passed as text such as "t^2 - 12*t + 27".  Every operation
returns its certificate as a dict; `verify` re-checks one.
"""

import json
from fractions import Fraction

from . import _core
from ._core import Error, ParseError, SCHEMA

__all__ = [
    "Error", "ParseError", "SCHEMA", "parse_poly", "format_poly", "newton", "slopes", "squareclass",
    "hilbert", "symbol", "check_mult", "check_recip", "isotropy", "construct_s", "predicate",
    "elliptic_point", "corpus", "verify",
]


def parse_poly(text):
    """Coefficients in ascending degree, as Fractions."""
    return [Fraction(c) for c in _core.parse_poly(text)]


format_poly = _core.format_poly


def _wrap(name):
    fn = getattr(_core, name)

    def call(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    call.__name__ = name
    call.__doc__ = fn.__doc__
    return call


newton = _wrap("newton")
slopes = _wrap("slopes")
squareclass = _wrap("squareclass")
hilbert = _wrap("hilbert")
symbol = _wrap("symbol")
check_mult = _wrap("check_mult")
check_recip = _wrap("check_recip")
isotropy = _wrap("isotropy")
construct_s = _wrap("construct_s")
predicate = _wrap("predicate")
elliptic_point = _wrap("elliptic_point")
corpus = _wrap("corpus")


def verify(certificate):
    """Accepts a certificate dict or its JSON text."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return json.loads(_core.verify(text))
