"""Exact Jack superpolynomials, their minimal coefficient and the identities behind it.

Superpartitions are passed as strings such as "(3,1,0;4,2,1)".  Coefficients are
AlphaRational values: exact rational functions of the Jack parameter alpha.
"""

from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import AlphaRational


def evaluate(r, alpha):
    """Value of an AlphaRational at a rational alpha, as a Fraction."""
    return Fraction(r._eval(str(Fraction(alpha))))


AlphaRational.__call__ = evaluate
