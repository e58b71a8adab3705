"""Linear transformation templates and the three built-in methods."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from ..exact_arith import MultiPoly, RatFunc
from ..exact_arith import upoly

COMPONENTS = ("X", "Y", "R", "S")
_PARAMS = {"p", "q", "u", "v"}


class TemplateError(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    """``slope * x + intercept`` with slope and intercept free of ``x`` and ``t``."""

    slope: MultiPoly
    intercept: MultiPoly

    def __str__(self):
        parts = []
        if not self.slope.is_zero():
            s = str(self.slope)
            parts.append("x" if s == "1" else f"({s})*x" if " " in s else f"{s}*x")
        if not self.intercept.is_zero() or not parts:
            parts.append(str(self.intercept))
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class TransformationTemplate:
    label: str
    forms: Dict[str, LinearForm]

    def __post_init__(self):
        if set(self.forms) != set(COMPONENTS):
            raise TemplateError(f"template needs exactly the forms {COMPONENTS}")
        for name, form in self.forms.items():
            for piece in (form.slope, form.intercept):
                extra = set(piece.variables()) - _PARAMS
                if extra:
                    raise TemplateError(f"form {name} mentions {sorted(extra)}; only p, q, u, v allowed")
        if all(f.slope.is_zero() for f in self.forms.values()):
            raise TemplateError("every slope is zero, the expansion would not depend on x")

    def expression(self, name: str) -> MultiPoly:
        form = self.forms[name]
        return form.slope * MultiPoly.var("x") + form.intercept


@dataclass(frozen=True)
class SubstitutionPlan:
    """``u -> t**u_exp``, ``v -> t**v_exp``; solve the linear condition for
    ``pivots[0]`` and then the quadratic condition for ``pivots[1]``."""

    u_exp: int
    v_exp: int
    pivots: Tuple[str, str] = ("p", "q")
    degenerate_roots: Tuple[Fraction, ...] = (Fraction(1), Fraction(-1))

    def __post_init__(self):
        if self.u_exp < 1 or self.v_exp < 1:
            raise ValueError("substitution exponents must be at least 1")
        a, b = self.pivots
        if a == b or not {a, b} <= {"p", "q"}:
            raise ValueError("pivots must be p and q in some order")

    def uv_bindings(self) -> Dict[str, MultiPoly]:
        return {"u": MultiPoly.var("t", self.u_exp), "v": MultiPoly.var("t", self.v_exp)}


@dataclass(frozen=True)
class BuiltinMethod:
    number: int
    template: TransformationTemplate
    plan: SubstitutionPlan
    # Product of the factors the published integer family was scaled by.
    paper_lambda: RatFunc = field(compare=False)

    @property
    def name(self) -> str:
        return f"method-{self.number}"


def _lin(slope, intercept) -> LinearForm:
    return LinearForm(_mp(slope), _mp(intercept))


def _mp(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(value)


def _product(*factors) -> RatFunc:
    out: upoly.UPoly = (1,)
    for f in factors:
        out = upoly.mul(out, f)
    return RatFunc(out)


def builtin_methods() -> list[BuiltinMethod]:
    p, q, u, v = (MultiPoly.var(n) for n in "pquv")
    m1 = TransformationTemplate(
        "method-1",
        {"X": _lin(p, u), "Y": _lin(q, -u), "R": _lin(1, v), "S": _lin(p, v)},
    )
    m2 = TransformationTemplate(
        "method-2",
        {"X": _lin(p, u), "Y": _lin(q, -u), "R": _lin(1, v), "S": _lin(p, -v)},
    )
    m3 = TransformationTemplate(
        "method-3",
        {"X": _lin(0, v), "Y": _lin(p, v), "R": _lin(q, u), "S": _lin(1, u)},
    )
    d2 = (2, 0, 12, 0, 27, 0, 27)
    return [
        BuiltinMethod(
            1, m1, SubstitutionPlan(1, 3),
            _product((3,), (2, 0, -15), (-10, 0, 36, 0, -27, 0, 27)),
        ),
        BuiltinMethod(2, m2, SubstitutionPlan(1, 3), _product(d2, d2)),
        BuiltinMethod(
            3, m3, SubstitutionPlan(3, 1),
            _product((0, 1), (2, 0, 3), (8, 0, 36, 0, 54, 0, 27)),
        ),
    ]


def get_method(number: int) -> BuiltinMethod:
    for m in builtin_methods():
        if m.number == number:
            return m
    raise ValueError(f"no built-in method {number}")
