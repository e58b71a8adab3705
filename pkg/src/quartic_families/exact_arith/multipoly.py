"""Sparse multivariate polynomials over the rationals.

The variable universe is the closed ordered tuple ``VARS``; a polynomial
maps exponent vectors (one entry per variable) to nonzero ``Fraction``
coefficients.  The zero polynomial has no terms, so equal polynomials
always have equal term maps.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from . import upoly

VARS: Tuple[str, ...] = ("x", "p", "q", "u", "v", "t")
_INDEX = {name: i for i, name in enumerate(VARS)}
NVARS = len(VARS)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

MAX_POW = 8


def var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARS}") from None


class MultiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != NVARS:
                raise ValueError(f"exponent vector {exp} must have length {NVARS}")
            c = Fraction(c)
            if c:
                clean[tuple(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls({(0,) * NVARS: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        exp = [0] * NVARS
        exp[var_index(name)] = power
        return cls({tuple(exp): 1})

    @classmethod
    def from_upoly(cls, coeffs: Iterable[Scalar], name: str = "t") -> "MultiPoly":
        idx = var_index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            exp = [0] * NVARS
            exp[idx] = k
            terms[tuple(exp)] = c
        return cls(terms)

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * NVARS, Fraction(0))

    def variables(self) -> Tuple[str, ...]:
        used = [False] * NVARS
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(VARS, used) if u)

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = var_index(name)
        return max((exp[i] for exp in self._terms), default=-1)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        """Lexicographically largest term under the ``VARS`` order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms)
        return exp, self._terms[exp]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

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
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return MultiPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return poly_pow(self, n)

    def scale_by(self, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({e: v * c for e, v in self._terms.items()})

    def to_upoly(self, name: str = "t") -> upoly.UPoly:
        """Dense coefficients, assuming ``name`` is the only variable present."""
        idx = var_index(name)
        coeffs: Dict[int, Fraction] = {}
        for exp, c in self._terms.items():
            if any(e for i, e in enumerate(exp) if i != idx):
                raise ValueError(f"polynomial mentions variables other than {name!r}")
            coeffs[exp[idx]] = c
        if not coeffs:
            return ()
        return upoly.trim([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(value) -> MultiPoly | None:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.const(value)
    return None


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unsupported operation {op!r}")


def poly_pow(a: MultiPoly, n: int) -> MultiPoly:
    if not isinstance(n, int) or n < 0:
        raise ValueError("exponent must be a nonnegative integer")
    if n > MAX_POW:
        raise ValueError(f"exponent {n} exceeds the cap of {MAX_POW}")
    result = MultiPoly.const(1)
    for _ in range(n):
        result = result * a
    return result


def collect(a: MultiPoly, name: str) -> list[MultiPoly]:
    """Coefficients of ``a`` as a polynomial in ``name``, by ascending power.

    The zero polynomial collects to ``[0]``.
    """
    idx = var_index(name)
    buckets: Dict[int, Dict[Exponent, Fraction]] = {}
    for exp, c in a.items():
        k = exp[idx]
        rest = exp[:idx] + (0,) + exp[idx + 1:]
        buckets.setdefault(k, {})[rest] = c
    if not buckets:
        return [MultiPoly()]
    return [MultiPoly._raw(buckets.get(k, {})) for k in range(max(buckets) + 1)]


def reconstruct(coeffs: Iterable[MultiPoly], name: str) -> MultiPoly:
    """Horner evaluation of a coefficient list in ``name``; inverse of ``collect``."""
    v = MultiPoly.var(name)
    acc = MultiPoly()
    for c in reversed(list(coeffs)):
        acc = acc * v + c
    return acc
