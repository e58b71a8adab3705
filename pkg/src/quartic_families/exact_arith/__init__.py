"""Exact integer, rational, polynomial and rational-function arithmetic.

Integers are Python ``int`` and rationals are ``fractions.Fraction``; both
are arbitrary precision.  This package adds the polynomial layers on top.
"""

from .multipoly import VARS, MultiPoly, collect, poly_arith, poly_pow, reconstruct
from .ratfunc import PoleError, RatFunc, eval_ratfunc, ratfunc_arith, substitute
from .upoly import poly_gcd

__all__ = [
    "VARS",
    "MultiPoly",
    "PoleError",
    "RatFunc",
    "collect",
    "eval_ratfunc",
    "poly_arith",
    "poly_gcd",
    "poly_pow",
    "ratfunc_arith",
    "reconstruct",
    "substitute",
]
