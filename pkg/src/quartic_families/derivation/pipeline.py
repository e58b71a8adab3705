"""From a linear transformation template to a rational solution family.

The chain is: expand ``X^4 - Y^4 - R^2 + S^2`` in ``x``; kill the linear
coefficient by solving for the first pivot; kill the quadratic coefficient
by solving for the second pivot after deflating constant roots; take the
remaining root ``x = -beta/alpha``; plug everything back into the template.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from ..exact_arith import MultiPoly, RatFunc, collect, substitute, upoly
from ..exact_arith.multipoly import NVARS
from .templates import COMPONENTS, SubstitutionPlan, TemplateError, TransformationTemplate


class DerivationError(ArithmeticError):
    """A derivation step failed or a symbolic self-check did not vanish."""


@dataclass(frozen=True)
class QuarticCoefficients:
    """Coefficients of ``sign * (X^4 - Y^4 - R^2 + S^2)`` by power of ``x``.

    ``sign`` is chosen so the lexicographically leading term of ``alpha`` is
    positive; the equation ``= 0`` is unchanged by it.
    """

    alpha: MultiPoly
    beta: MultiPoly
    gamma: MultiPoly
    delta: MultiPoly
    constant: MultiPoly
    sign: int = 1

    def as_list(self) -> List[MultiPoly]:
        return [self.constant, self.delta, self.gamma, self.beta, self.alpha]


@dataclass(frozen=True)
class PivotSolution:
    """``variable = num / den`` with ``num``, ``den`` polynomials in the other pivot and ``t``."""

    variable: str
    num: MultiPoly
    den: MultiPoly

    def as_multipoly(self) -> MultiPoly:
        if self.den != 1:
            raise ValueError(f"{self} is not polynomial")
        return self.num

    def __str__(self):
        if self.den == 1:
            return f"{self.variable} = {self.num}"
        return f"{self.variable} = ({self.num})/({self.den})"


@dataclass(frozen=True)
class QuadraticSolution:
    q: RatFunc
    deflated_roots: Tuple[Fraction, ...]
    # Cleared condition and residual linear factor, coefficient lists in the
    # second pivot (each entry an ascending polynomial in t).
    condition: Tuple[upoly.UPoly, ...]
    residual: Tuple[upoly.UPoly, ...]


@dataclass
class DerivationTrace:
    quartic: QuarticCoefficients
    p_solution: PivotSolution
    p: RatFunc
    q: RatFunc
    x: RatFunc
    deflated_roots: Tuple[Fraction, ...]
    condition: Tuple[upoly.UPoly, ...] = ()
    residual: Tuple[upoly.UPoly, ...] = ()


@dataclass
class RationalSolutionFamily:
    label: str
    X: RatFunc
    Y: RatFunc
    R: RatFunc
    S: RatFunc
    trace: DerivationTrace | None = field(default=None, repr=False)

    def components(self) -> Dict[str, RatFunc]:
        return {"X": self.X, "Y": self.Y, "R": self.R, "S": self.S}

    def evaluate(self, t0) -> Tuple[Fraction, ...]:
        return tuple(f(t0) for f in (self.X, self.Y, self.R, self.S))

    def residual(self) -> RatFunc:
        return self.X ** 4 - self.Y ** 4 - self.R ** 2 + self.S ** 2


def expand_equation(tpl: TransformationTemplate) -> QuarticCoefficients:
    X, Y, R, S = (tpl.expression(c) for c in COMPONENTS)
    expr = X ** 4 - Y ** 4 - R ** 2 + S ** 2
    coeffs = collect(expr, "x")
    coeffs += [MultiPoly()] * (5 - len(coeffs))
    if not coeffs[0].is_zero():
        raise TemplateError(
            f"{tpl.label}: expansion has nonzero constant term {coeffs[0]}"
        )
    sign = 1
    for c in reversed(coeffs):
        if not c.is_zero():
            if c.leading_term()[1] < 0:
                sign = -1
            break
    if sign < 0:
        coeffs = [-c for c in coeffs]
    const, delta, gamma, beta, alpha = coeffs
    return QuarticCoefficients(alpha, beta, gamma, delta, const, sign)


def _monomial_gcd(polys) -> Tuple[int, ...]:
    low = None
    for poly in polys:
        for exp, _ in poly.items():
            low = exp if low is None else tuple(min(a, b) for a, b in zip(low, exp))
    return low or (0,) * NVARS


def _divide_monomial(poly: MultiPoly, exp: Tuple[int, ...]) -> MultiPoly:
    return MultiPoly({tuple(a - b for a, b in zip(e, exp)): c for e, c in poly.items()})


def solve_linear_condition(qc: QuarticCoefficients, plan: SubstitutionPlan) -> PivotSolution:
    pivot = plan.pivots[0]
    delta = substitute(qc.delta, plan.uv_bindings())
    parts = collect(delta, pivot)
    if len(parts) != 2:
        raise DerivationError(
            f"linear-term condition {delta} is not of degree 1 in {pivot}"
        )
    b, a = parts
    num, den = -b, a
    common = _monomial_gcd([num, den])
    num, den = _divide_monomial(num, common), _divide_monomial(den, common)
    if den.is_constant():
        num, den = num.scale_by(1 / den.constant_value()), MultiPoly.const(1)
    else:
        lc = den.leading_term()[1]
        num, den = num.scale_by(1 / lc), den.scale_by(1 / lc)
    if not (a * num + b * den).is_zero():
        raise DerivationError(f"back-substitution of {pivot} into the linear condition failed")
    return PivotSolution(pivot, num, den)


def _value_at(coeffs, c: Fraction) -> upoly.UPoly:
    acc: upoly.UPoly = ()
    for poly in reversed(coeffs):
        acc = upoly.add(upoly.scale(acc, c), poly)
    return acc


def _deflate(coeffs, c: Fraction):
    n = len(coeffs) - 1
    out = [()] * n
    out[n - 1] = coeffs[n]
    for k in range(n - 1, 0, -1):
        out[k - 1] = upoly.add(coeffs[k], upoly.scale(out[k], c))
    return out


def _trim_outer(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _normalize_factor(coeffs) -> Tuple[upoly.UPoly, ...]:
    flat = [c for poly in coeffs for c in poly]
    if not flat:
        return tuple(coeffs)
    scale = 1 / upoly.content(tuple(flat))
    if coeffs[-1][-1] < 0:
        scale = -scale
    return tuple(upoly.scale(poly, scale) for poly in coeffs)


def pivot_as_ratfunc(sol: PivotSolution, q: RatFunc, other: str) -> RatFunc:
    return _as_rf(substitute(sol.num, {other: q})) / _as_rf(substitute(sol.den, {other: q}))


def _as_rf(value) -> RatFunc:
    return value if isinstance(value, RatFunc) else RatFunc.from_multipoly(value)


def solve_quadratic_condition(
    qc: QuarticCoefficients, p_sol: PivotSolution, plan: SubstitutionPlan
) -> QuadraticSolution:
    first, second = plan.pivots
    gamma = substitute(qc.gamma, plan.uv_bindings())
    parts = collect(gamma, first)
    k = len(parts) - 1
    cleared = MultiPoly()
    for i, part in enumerate(parts):
        cleared = cleared + part * _mp_pow(p_sol.num, i) * _mp_pow(p_sol.den, k - i)
    extra = set(cleared.variables()) - {second, "t"}
    if extra:
        raise DerivationError(f"quadratic-term condition still mentions {sorted(extra)}")
    coeffs = _trim_outer(c.to_upoly("t") for c in collect(cleared, second))
    condition = _normalize_factor(coeffs)

    deflated: List[Fraction] = []
    changed = True
    while changed:
        changed = False
        for c in plan.degenerate_roots:
            c = Fraction(c)
            if len(coeffs) >= 2 and not _value_at(coeffs, c):
                coeffs = _deflate(coeffs, c)
                deflated.append(c)
                changed = True
    if len(coeffs) != 2:
        if not deflated and len(coeffs) > 2:
            raise DerivationError(
                "no degenerate-root candidate divides the quadratic-term condition"
            )
        raise DerivationError(
            f"residual factor has degree {len(coeffs) - 1} in {second}, expected 1"
        )
    c0, c1 = coeffs
    q = -RatFunc(c0) / RatFunc(c1)
    if q.is_constant():
        raise DerivationError(f"residual root {second} = {q} is constant in t; no family")
    return QuadraticSolution(q, tuple(deflated), condition, _normalize_factor(coeffs))


def _mp_pow(a: MultiPoly, n: int) -> MultiPoly:
    out = MultiPoly.const(1)
    for _ in range(n):
        out = out * a
    return out


def _bindings(plan: SubstitutionPlan, p: RatFunc, q: RatFunc) -> Dict[str, object]:
    first, second = plan.pivots
    out: Dict[str, object] = dict(plan.uv_bindings())
    out[first] = p
    out[second] = q
    return out


def _rf(poly: MultiPoly, bindings) -> RatFunc:
    return _as_rf(substitute(poly, bindings))


def solve_root(qc: QuarticCoefficients, p: RatFunc, q: RatFunc, plan: SubstitutionPlan) -> RatFunc:
    env = _bindings(plan, p, q)
    alpha, beta, gamma, delta = (_rf(c, env) for c in (qc.alpha, qc.beta, qc.gamma, qc.delta))
    if alpha.is_zero():
        raise DerivationError("x^4 coefficient vanishes identically; no nonzero root")
    x = -beta / alpha
    if not (alpha * x ** 4 + beta * x ** 3 + gamma * x ** 2 + delta * x).is_zero():
        raise DerivationError("root check failed: the quartic does not vanish at x(t)")
    return x


def build_family(
    tpl: TransformationTemplate,
    p: RatFunc,
    q: RatFunc,
    x: RatFunc,
    plan: SubstitutionPlan,
    trace: DerivationTrace | None = None,
) -> RationalSolutionFamily:
    env = _bindings(plan, p, q)
    comps = {}
    for name in COMPONENTS:
        form = tpl.forms[name]
        comps[name] = _rf(form.slope, env) * x + _rf(form.intercept, env)
    fam = RationalSolutionFamily(tpl.label, trace=trace, **comps)
    if not fam.residual().is_zero():
        raise DerivationError(f"{tpl.label}: X^4 - Y^4 - R^2 + S^2 does not vanish")
    return fam


def derive(tpl: TransformationTemplate, plan: SubstitutionPlan) -> RationalSolutionFamily:
    """Run the full chain and return the verified rational family with its trace."""
    qc = expand_equation(tpl)
    p_sol = solve_linear_condition(qc, plan)
    quad = solve_quadratic_condition(qc, p_sol, plan)
    p = pivot_as_ratfunc(p_sol, quad.q, plan.pivots[1])
    env = _bindings(plan, p, quad.q)
    if not (_rf(qc.delta, env).is_zero() and _rf(qc.gamma, env).is_zero()):
        raise DerivationError("linear or quadratic condition does not vanish after back-substitution")
    x = solve_root(qc, p, quad.q, plan)
    trace = DerivationTrace(qc, p_sol, p, quad.q, x, quad.deflated_roots, quad.condition, quad.residual)
    return build_family(tpl, p, quad.q, x, plan, trace)
