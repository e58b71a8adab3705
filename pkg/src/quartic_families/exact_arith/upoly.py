"""Dense univariate polynomials stored as ascending coefficient tuples.

Coefficients are ``int`` or ``Fraction``.  Every function returns a trimmed
tuple (no trailing zeros); the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Tuple, Union

Number = Union[int, Fraction]
UPoly = Tuple[Number, ...]


def trim(a: Sequence[Number]) -> UPoly:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(_norm(c) for c in a[:n])


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def degree(a: UPoly) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(a) - 1


def lead(a: UPoly) -> Number:
    return a[-1] if a else 0


def add(a: UPoly, b: UPoly) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a: UPoly) -> UPoly:
    return tuple(-c for c in a)


def sub(a: UPoly, b: UPoly) -> UPoly:
    return add(a, neg(b))


def scale(a: UPoly, c: Number) -> UPoly:
    if c == 0:
        return ()
    return trim([x * c for x in a])


def mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def power(a: UPoly, n: int) -> UPoly:
    if n < 0:
        raise ValueError("negative exponent")
    result: UPoly = (1,)
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def monomial(deg: int, c: Number = 1) -> UPoly:
    return trim([0] * deg + [c])


def divmod_(a: UPoly, b: UPoly) -> Tuple[UPoly, UPoly]:
    """Quotient and remainder of ``a / b`` over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    if len(rem) <= db:
        return (), trim(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] / lb
        if c == 0:
            continue
        quot[k - db] = c
        for j, y in enumerate(b):
            rem[k - db + j] -= c * y
    return trim(quot), trim(rem[:db])


def exact_div(a: UPoly, b: UPoly) -> UPoly:
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def divides(b: UPoly, a: UPoly) -> bool:
    return not divmod_(a, b)[1]


def evaluate(a: UPoly, x: Number) -> Number:
    acc: Number = 0
    for c in reversed(a):
        acc = acc * x + c
    return _norm(acc) if isinstance(acc, Fraction) else acc


def derivative(a: UPoly) -> UPoly:
    return trim([i * c for i, c in enumerate(a)][1:])


def denominator_lcm(a: UPoly) -> int:
    out = 1
    for c in a:
        if isinstance(c, Fraction):
            out = lcm(out, c.denominator)
    return out


def to_integer(a: UPoly) -> Tuple[UPoly, int]:
    """Return ``(m * a, m)`` with ``m`` the least positive integer clearing denominators."""
    m = denominator_lcm(a)
    return tuple(int(c * m) for c in a), m


def content(a: UPoly) -> Fraction:
    """Positive rational content: ``a / content(a)`` is a primitive integer polynomial."""
    if not a:
        return Fraction(0)
    num = 0
    den = 1
    for c in a:
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    return Fraction(num, den)


def primitive(a: UPoly) -> UPoly:
    """Primitive integer associate of ``a`` with positive leading coefficient."""
    if not a:
        return ()
    c = content(a)
    if a[-1] < 0:
        c = -c
    return tuple(int(Fraction(x) / c) for x in a)


def monic(a: UPoly) -> UPoly:
    return scale(a, Fraction(1) / Fraction(a[-1]))


def _rational_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, divmod_(a, b)[1]
    return a


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> UPoly:
    """Greatest common divisor of two integer polynomials.

    The result is ``gcd(content(a), content(b))`` times the primitive gcd,
    with positive leading coefficient, so ``poly_gcd((0, 6), (0, 0, 4))``
    is ``(0, 2)``.
    """
    a, b = trim(a), trim(b)
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not a or not b:
        nz = a or b
        return scale(primitive(nz), content(nz))
    g = primitive(_rational_gcd(a, b))
    cont = gcd(int(content(a)), int(content(b)))
    return scale(g, cont)


def poly_lcm(a: UPoly, b: UPoly) -> UPoly:
    """Primitive least common multiple of two nonzero polynomials."""
    a, b = primitive(a), primitive(b)
    return primitive(exact_div(mul(a, b), primitive(_rational_gcd(a, b))))


def squarefree_decomposition(a: UPoly) -> list[UPoly]:
    """Yun's algorithm: ``[a1, a2, ...]`` with ``a = c * prod(ai ** i)``.

    Every ``ai`` is primitive and squarefree, and they are pairwise coprime.
    """
    if degree(a) < 1:
        return []
    a = primitive(a)
    da = derivative(a)
    g = primitive(_rational_gcd(a, da))
    b = exact_div(a, g)
    c = exact_div(da, g)
    d = sub(c, derivative(b))
    parts: list[UPoly] = []
    while degree(b) >= 1:
        f = primitive(_rational_gcd(b, d)) if d else primitive(b)
        parts.append(f)
        b = exact_div(b, f)
        c = exact_div(d, f)
        d = sub(c, derivative(b))
    while parts and parts[-1] == (1,):
        parts.pop()
    return parts


def format_poly(a: UPoly, var: str = "t") -> str:
    if not a:
        return "0"
    pieces = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
