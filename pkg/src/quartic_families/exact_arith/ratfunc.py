"""Reduced univariate rational functions in ``t`` and polynomial substitution."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Sequence, Union

from . import upoly
from .multipoly import VARS, MultiPoly, Scalar, var_index


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class RatFunc:
    """``num / den`` with integer coefficients, in lowest terms.

    The denominator has positive leading coefficient and the gcd of the
    two polynomials (content included) is 1.  Zero is ``() / (1,)``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[Scalar], den: Sequence[Scalar] = (1,)):
        num_i, mn = upoly.to_integer(upoly.trim(num))
        den_i, md = upoly.to_integer(upoly.trim(den))
        if not den_i:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num_i:
            self.num, self.den = (), (1,)
            return
        num_i = upoly.scale(num_i, md)
        den_i = upoly.scale(den_i, mn)
        g = upoly.poly_gcd(num_i, den_i)
        if den_i[-1] < 0:
            g = upoly.neg(g)
        self.num = tuple(int(c) for c in upoly.exact_div(num_i, g))
        self.den = tuple(int(c) for c in upoly.exact_div(den_i, g))

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls((c,))

    @classmethod
    def t(cls, power: int = 1) -> "RatFunc":
        return cls(upoly.monomial(power))

    @classmethod
    def from_multipoly(cls, a: MultiPoly) -> "RatFunc":
        return cls(a.to_upoly("t"))

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_polynomial(self) -> upoly.UPoly:
        """Rational-coefficient polynomial, or ``ValueError`` if ``den`` is not constant."""
        if len(self.den) != 1:
            raise ValueError(f"{self} is not a polynomial")
        return upoly.scale(self.num, Fraction(1, self.den[0]))

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(upoly.add(self.num, other.num), self.den)
        n = upoly.add(upoly.mul(self.num, other.den), upoly.mul(other.num, self.den))
        return RatFunc(n, upoly.mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = upoly.neg(self.num), self.den
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(upoly.mul(self.num, other.num), upoly.mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(upoly.mul(self.num, other.den), upoly.mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero raised to a negative power")
            return RatFunc(upoly.power(self.den, -n), upoly.power(self.num, -n))
        return RatFunc(upoly.power(self.num, n), upoly.power(self.den, n))

    def __call__(self, t0: Scalar) -> Fraction:
        return eval_ratfunc(self, t0)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = upoly.format_poly(self.num)
        if self.den == (1,):
            return n
        d = upoly.format_poly(self.den)
        if len(self.den) > 1 or d.startswith("-"):
            d = f"({d})"
        return f"({n})/{d}"


def _coerce(value) -> RatFunc | None:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc.const(value)
    if isinstance(value, MultiPoly):
        return RatFunc.from_multipoly(value)
    return None


def ratfunc_arith(a: RatFunc, b, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** b
    raise ValueError(f"unsupported operation {op!r}")


def eval_ratfunc(a: RatFunc, t0: Scalar) -> Fraction:
    d = upoly.evaluate(a.den, t0)
    if d == 0:
        raise PoleError(f"{a} has a pole at t = {t0}")
    return Fraction(upoly.evaluate(a.num, t0)) / d


Binding = Union[RatFunc, MultiPoly, int, Fraction]


def substitute(a: MultiPoly, bindings: Mapping[str, Binding]):
    """Simultaneously replace variables of ``a`` by the given values.

    Returns a ``MultiPoly`` when every binding is polynomial, otherwise a
    reduced ``RatFunc`` in ``t`` (which then must be the only surviving
    variable).
    """
    idx: Dict[int, Binding] = {}
    for name, value in bindings.items():
        if isinstance(value, (int, Fraction)):
            value = MultiPoly.const(value)
        elif not isinstance(value, (MultiPoly, RatFunc)):
            raise TypeError(f"cannot bind {name!r} to {type(value).__name__}")
        idx[var_index(name)] = value
    if any(isinstance(v, RatFunc) for v in idx.values()):
        return _substitute_rational(a, idx)
    return _substitute_poly(a, idx)


def _substitute_poly(a: MultiPoly, idx: Dict[int, MultiPoly]) -> MultiPoly:
    powers: Dict[tuple, MultiPoly] = {}

    def power_of(i: int, e: int) -> MultiPoly:
        key = (i, e)
        if key not in powers:
            base = idx[i] if i in idx else MultiPoly.var(VARS[i])
            powers[key] = MultiPoly.const(1) if e == 0 else power_of(i, e - 1) * base
        return powers[key]

    out = MultiPoly()
    for exp, c in a.items():
        term = MultiPoly.const(c)
        for i, e in enumerate(exp):
            if e:
                term = term * power_of(i, e)
        out = out + term
    return out


def _substitute_rational(a: MultiPoly, idx: Dict[int, Binding]) -> RatFunc:
    if a.is_zero():
        return RatFunc(())
    t_i = var_index("t")
    rat: Dict[int, RatFunc] = {}
    for i, value in idx.items():
        if isinstance(value, MultiPoly):
            try:
                value = RatFunc.from_multipoly(value)
            except ValueError:
                raise ValueError(
                    f"binding for {VARS[i]!r} must be univariate in t when rational bindings are used"
                ) from None
        rat[i] = value
    for name in a.variables():
        i = var_index(name)
        if i not in rat and i != t_i:
            raise ValueError(f"variable {name!r} left unbound in a rational substitution")

    top = {i: max(exp[i] for exp, _ in a.items()) for i in rat}
    num_pow: Dict[tuple, upoly.UPoly] = {}
    den_pow: Dict[tuple, upoly.UPoly] = {}

    def cached(store, poly, i, e):
        if (i, e) not in store:
            store[(i, e)] = upoly.power(poly, e)
        return store[(i, e)]

    common: upoly.UPoly = (1,)
    for i, e in top.items():
        common = upoly.mul(common, cached(den_pow, rat[i].den, i, e))

    total: upoly.UPoly = ()
    for exp, c in a.items():
        term: upoly.UPoly = (c,)
        for i, e in enumerate(exp):
            if i in rat:
                term = upoly.mul(term, cached(num_pow, rat[i].num, i, e))
                term = upoly.mul(term, cached(den_pow, rat[i].den, i, top[i] - e))
            elif e:
                term = upoly.mul(term, upoly.monomial(e))
        total = upoly.add(total, term)
    return RatFunc(total, common)
