"""Turning a rational family into integer polynomials by weighted scaling.

If ``(X, Y, R, S)`` solves the equation then so does
``(lam*X, lam*Y, lam**2*R, lam**2*S)`` for any ``lam``, because both sides
pick up the factor ``lam**4``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Tuple

from ..exact_arith import RatFunc, upoly
from ..numtheory import factorize
from .pipeline import DerivationError, RationalSolutionFamily
from .templates import COMPONENTS

WEIGHTS = {"X": 1, "Y": 1, "R": 2, "S": 2}


class ClearingError(DerivationError):
    pass


IntPoly = Tuple[int, ...]


@dataclass(frozen=True)
class IntegerSolutionFamily:
    """``P_X = lam*X``, ``P_Y = lam*Y``, ``P_R = lam**2*R``, ``P_S = lam**2*S``."""

    method: str
    mode: str
    lam: RatFunc
    P_X: IntPoly
    P_Y: IntPoly
    P_R: IntPoly
    P_S: IntPoly

    def __post_init__(self):
        for name in COMPONENTS:
            poly = getattr(self, f"P_{name}")
            if any(not isinstance(c, int) for c in poly):
                raise ClearingError(f"P_{name} has non-integer coefficients")

    def components(self) -> Dict[str, IntPoly]:
        return {name: getattr(self, f"P_{name}") for name in COMPONENTS}

    def evaluate(self, t0: int) -> Tuple[int, int, int, int]:
        return tuple(upoly.evaluate(p, t0) for p in (self.P_X, self.P_Y, self.P_R, self.P_S))

    def identity_residual(self) -> IntPoly:
        lhs = upoly.sub(upoly.power(self.P_X, 4), upoly.power(self.P_Y, 4))
        rhs = upoly.sub(upoly.power(self.P_R, 2), upoly.power(self.P_S, 2))
        return upoly.sub(lhs, rhs)

    def identity_holds(self) -> bool:
        return not self.identity_residual()

    def to_json(self) -> dict:
        out = {"method": self.method, "mode": self.mode, "lambda": lambda_to_json(self.lam)}
        for name, poly in self.components().items():
            out[name] = dense(poly)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "IntegerSolutionFamily":
        lam = data["lambda"]
        if isinstance(lam, dict):
            lam_rf = RatFunc([int(c) for c in lam["num"]], [int(c) for c in lam["den"]])
        else:
            lam_rf = RatFunc([Fraction(c) for c in lam])
        polys = {f"P_{n}": upoly.trim([int(c) for c in data[n]]) for n in COMPONENTS}
        return cls(data["method"], data["mode"], lam_rf, **polys)


def dense(poly) -> list:
    return [int(c) for c in poly] or [0]


def lambda_to_json(lam: RatFunc):
    """Ascending integer coefficients, or ``{"num", "den"}`` if lam is not an integer polynomial."""
    if lam.is_polynomial():
        return dense(lam.num)
    return {"num": dense(lam.num), "den": dense(lam.den)}


def _half_multiplicity(den: IntPoly) -> IntPoly:
    out: IntPoly = (1,)
    for i, part in enumerate(upoly.squarefree_decomposition(den), start=1):
        out = upoly.mul(out, upoly.power(part, (i + 1) // 2))
    return out


def _minimal_scale(a: Fraction, b: Fraction) -> Fraction:
    """Least ``c > 0`` with ``c*a`` and ``c**2*b`` integers (``a``, ``b`` are contents)."""
    if a == 0:
        raise ClearingError("X and Y both vanish; scale is not determined")
    ratio = b / (a * a)
    m = 1
    if ratio.denominator > 1:
        for prime, e in Counter(factorize(ratio.denominator)).items():
            m *= prime ** ((e + 1) // 2)
    return Fraction(m) / a


def _scaled(fam: RationalSolutionFamily, lam: RatFunc) -> Dict[str, RatFunc]:
    return {n: f * lam ** WEIGHTS[n] for n, f in fam.components().items()}


def minimal_lambda(fam: RationalSolutionFamily) -> RatFunc:
    """Lowest-degree clearing factor with the least positive rational scale."""
    need = [fam.X.den, fam.Y.den, _half_multiplicity(fam.R.den), _half_multiplicity(fam.S.den)]
    lam: IntPoly = (1,)
    for d in need:
        if upoly.degree(d) >= 1:
            lam = upoly.poly_lcm(lam, d)
    lam_rf = RatFunc(lam)
    scaled = _scaled(fam, lam_rf)
    a = upoly.content(tuple(c for n in "XY" for c in scaled[n].as_polynomial()))
    b = upoly.content(tuple(c for n in "RS" for c in scaled[n].as_polynomial()))
    return lam_rf * _minimal_scale(a, b)


def admissible_content(polys: Dict[str, IntPoly]) -> int:
    """Largest ``g`` with ``g`` dividing P_X, P_Y and ``g**2`` dividing P_R, P_S."""
    a = 0
    for c in polys["X"] + polys["Y"]:
        a = gcd(a, c)
    b = 0
    for c in polys["R"] + polys["S"]:
        b = gcd(b, c)
    if a <= 1:
        return 1
    g = 1
    for prime, e in Counter(factorize(a)).items():
        f = 0
        while f < e and b % prime ** (2 * (f + 1)) == 0:
            f += 1
        g *= prime ** f
    return g


def clear_denominators(
    fam: RationalSolutionFamily,
    lam: RatFunc | None = None,
    *,
    mode: str | None = None,
    reduce_content: bool = False,
) -> IntegerSolutionFamily:
    """Integer family from ``fam``; ``lam=None`` selects the minimal clearing factor.

    The sign of the applied factor is chosen so that P_X has a positive
    leading coefficient.
    """
    if lam is None:
        lam = minimal_lambda(fam)
        mode = mode or "minimal"
    else:
        mode = mode or "explicit"
    if lam.is_zero():
        raise ClearingError("clearing factor is zero")
    polys: Dict[str, IntPoly] = {}
    for name, value in _scaled(fam, lam).items():
        if not value.is_polynomial():
            raise ClearingError(f"lambda = {lam} does not clear the denominator of {name}")
        polys[name] = value.num
    if reduce_content:
        g = admissible_content(polys)
        if g > 1:
            lam = lam * Fraction(1, g)
            polys = {n: tuple(c // g ** WEIGHTS[n] for c in p) for n, p in polys.items()}
    if upoly.lead(polys["X"]) < 0:
        lam = -lam
        polys["X"] = upoly.neg(polys["X"])
        polys["Y"] = upoly.neg(polys["Y"])
    out = IntegerSolutionFamily(fam.label, mode, lam, *(polys[n] for n in COMPONENTS))
    if not out.identity_holds():
        raise ClearingError(f"{fam.label}: P_X^4 - P_Y^4 - P_R^2 + P_S^2 is not zero")
    return out
