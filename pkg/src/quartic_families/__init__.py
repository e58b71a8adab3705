"""Parametric integer solutions of X^4 - Y^4 = R^2 - S^2.

Derives the three linear-transformation families symbolically, clears
denominators, generates and verifies tuples, and checks everything against
an exhaustive search.
"""

from .derivation import builtin_methods, compare_with_paper, derive_method, integer_family
from .oracle import EnumerationBounds, coverage_report, divisor_pairs, enumerate_solutions
from .solutions import SolutionTuple, canonicalize, check_tuple, generate, scale_tuple, trivial_family

__version__ = "0.1.0"

__all__ = [
    "EnumerationBounds",
    "SolutionTuple",
    "builtin_methods",
    "canonicalize",
    "check_tuple",
    "compare_with_paper",
    "coverage_report",
    "derive_method",
    "divisor_pairs",
    "enumerate_solutions",
    "generate",
    "integer_family",
    "scale_tuple",
    "trivial_family",
]
