"""Mechanized derivation of the parametric solution families."""

from .clearing import ClearingError, IntegerSolutionFamily, clear_denominators, minimal_lambda
from .fidelity import FidelityReport, PaperReference, compare_with_paper, load_paper_reference
from .pipeline import (
    DerivationError,
    DerivationTrace,
    PivotSolution,
    QuarticCoefficients,
    RationalSolutionFamily,
    build_family,
    derive,
    expand_equation,
    solve_linear_condition,
    solve_quadratic_condition,
    solve_root,
)
from .templates import (
    BuiltinMethod,
    LinearForm,
    SubstitutionPlan,
    TemplateError,
    TransformationTemplate,
    builtin_methods,
    get_method,
)

MODES = ("paper", "minimal")


def derive_method(number: int) -> RationalSolutionFamily:
    m = get_method(number)
    return derive(m.template, m.plan)


def integer_family(number: int, mode: str = "minimal", reduce_content: bool = False) -> IntegerSolutionFamily:
    """Derive built-in method ``number`` and clear denominators.

    ``minimal`` mode uses the smallest clearing factor; ``paper`` mode
    applies the one the published family uses. The CLI defaults to
    ``paper``.
    """
    m = get_method(number)
    fam = derive(m.template, m.plan)
    if mode == "paper":
        return clear_denominators(fam, m.paper_lambda, mode="paper", reduce_content=reduce_content)
    if mode == "minimal":
        return clear_denominators(fam, reduce_content=reduce_content)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


__all__ = [
    "BuiltinMethod",
    "ClearingError",
    "DerivationError",
    "DerivationTrace",
    "FidelityReport",
    "IntegerSolutionFamily",
    "LinearForm",
    "MODES",
    "PaperReference",
    "PivotSolution",
    "QuarticCoefficients",
    "RationalSolutionFamily",
    "SubstitutionPlan",
    "TemplateError",
    "TransformationTemplate",
    "build_family",
    "builtin_methods",
    "clear_denominators",
    "compare_with_paper",
    "derive",
    "derive_method",
    "expand_equation",
    "get_method",
    "integer_family",
    "load_paper_reference",
    "minimal_lambda",
    "solve_linear_condition",
    "solve_quadratic_condition",
    "solve_root",
]
