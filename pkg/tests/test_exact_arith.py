from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quartic_families.exact_arith import (
    MultiPoly,
    PoleError,
    RatFunc,
    collect,
    eval_ratfunc,
    poly_arith,
    poly_gcd,
    poly_pow,
    ratfunc_arith,
    reconstruct,
    substitute,
)
from quartic_families.exact_arith import upoly

x, p, q, u, v, t = (MultiPoly.var(n) for n in "xpquvt")
T = sympy.Symbol("t")


# -- strategies ---------------------------------------------------------------

small_ints = st.integers(min_value=-5, max_value=5)


@st.composite
def multipolys(draw, names=("x", "p", "q")):
    n = draw(st.integers(min_value=0, max_value=4))
    out = MultiPoly()
    for _ in range(n):
        c = draw(st.fractions(min_value=-4, max_value=4, max_denominator=3))
        term = MultiPoly.const(c)
        for name in names:
            term = term * MultiPoly.var(name, draw(st.integers(0, 2)))
        out = out + term
    return out


int_polys = st.lists(small_ints, min_size=0, max_size=5).map(upoly.trim)
nonzero_int_polys = int_polys.filter(bool)


@st.composite
def ratfuncs(draw):
    return RatFunc(draw(int_polys), draw(nonzero_int_polys))


def to_sympy(poly):
    return sympy.Poly(list(reversed(poly)) or [0], T)


# -- poly_arith / poly_pow ----------------------------------------------------

def test_difference_of_squares():
    assert poly_arith(p + q, p - q, "mul") == p ** 2 - q ** 2


def test_binomial_power_constant_term():
    assert collect(poly_pow(p * x + u, 4), "x")[0] == u ** 4


def test_alpha_of_method_one():
    diff = poly_arith(poly_pow(p * x + u, 4), poly_pow(q * x - u, 4), "sub")
    assert collect(diff, "x")[4] == p ** 4 - q ** 4


def test_poly_pow_examples():
    assert poly_pow(x, 2) == MultiPoly.var("x", 2)
    assert poly_pow(q * x - u, 2) == q ** 2 * x ** 2 - 2 * q * u * x + u ** 2
    expected = (p ** 2 - 1) * x ** 2 + (2 * p * v - 2 * v) * x
    assert poly_pow(p * x + v, 2) - poly_pow(x + v, 2) == expected


def test_poly_pow_zero_and_cap():
    assert poly_pow(p + q, 0) == 1
    poly_pow(x + 1, 8)
    with pytest.raises(ValueError):
        poly_pow(x + 1, 9)
    with pytest.raises(ValueError):
        poly_pow(x, -1)


def test_unknown_op_rejected():
    with pytest.raises(ValueError):
        poly_arith(p, q, "div")


def test_zero_polynomial_has_no_terms():
    assert (p - p).terms == {}
    assert (p * 0).is_zero()
    assert MultiPoly({(0,) * 6: 0}) == MultiPoly()


@given(multipolys(), multipolys(), multipolys())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a - a == MultiPoly()


# -- collect ------------------------------------------------------------------

def test_collect_zero():
    assert collect(MultiPoly(), "x") == [MultiPoly()]


def test_collect_beta_of_method_one():
    expr = (p * x + u) ** 4 - (q * x - u) ** 4 - (x + v) ** 2 + (p * x + v) ** 2
    coeffs = collect(expr, "x")
    assert len(coeffs) == 5
    assert coeffs[0] == 0
    assert coeffs[3] == 4 * p ** 3 * u + 4 * q ** 3 * u
    assert coeffs[4] == p ** 4 - q ** 4


def test_collect_method_three_alpha():
    expr = v ** 4 - (p * x + v) ** 4 - (q * x + u) ** 2 + (x + u) ** 2
    # the raw expansion carries the opposite overall sign to p^4
    assert collect(expr, "x")[4] == -(p ** 4)


@given(multipolys(), st.sampled_from(["x", "p", "q"]))
def test_collect_reconstruct_round_trip(a, name):
    assert reconstruct(collect(a, name), name) == a


# -- substitute ---------------------------------------------------------------

def test_substitute_uv_into_delta():
    delta = 4 * p * u ** 3 + 4 * q * u ** 3 - 2 * v + 2 * p * v
    out = substitute(delta, {"u": t, "v": t ** 3})
    t3 = MultiPoly.var("t", 3)
    assert out == 4 * p * t3 + 4 * q * t3 - 2 * t3 + 2 * p * t3


def test_substitute_rational_binding():
    q_t = RatFunc((4, 0, -3), (2, 0, -15))
    assert substitute(q + 1, {"q": q_t}) == RatFunc((6, 0, -18), (2, 0, -15))


def test_substitute_to_zero():
    assert substitute(x, {"x": 0}) == MultiPoly()
    assert substitute(x, {"x": RatFunc(())}) == RatFunc(())


def test_substitute_unknown_variable():
    with pytest.raises(ValueError):
        substitute(x, {"w": 1})


def test_rational_substitution_needs_all_but_t_bound():
    with pytest.raises(ValueError):
        substitute(p + q, {"q": RatFunc((1,), (0, 1))})


def test_substitute_keeps_t():
    out = substitute(t * q, {"q": RatFunc((1,), (1, 1))})
    assert out == RatFunc((0, 1), (1, 1))


@given(multipolys(("p", "q", "t")), ratfuncs(), st.integers(-6, 6))
def test_substitution_commutes_with_evaluation(a, r, t0):
    assume(upoly.evaluate(r.den, t0) != 0)
    out = substitute(a, {"p": r, "q": 2})
    direct = Fraction(0)
    r0 = r(t0)
    for exp, c in a.items():
        direct += c * r0 ** exp[1] * 2 ** exp[2] * Fraction(t0) ** exp[5]
    assert out(t0) == direct


# -- RatFunc ------------------------------------------------------------------

def test_p_of_t_method_one():
    q_t = RatFunc((4, 0, -3), (2, 0, -15))
    p_t = substitute((1 - 2 * q) * Fraction(1, 3), {"q": q_t})
    assert p_t == RatFunc((-2, 0, -3), (2, 0, -15))


def test_trivial_ratfunc_ops():
    tt = RatFunc.t()
    assert ratfunc_arith(tt, tt, "div") == 1
    assert ratfunc_arith(RatFunc((1, 1), (0, 1)), 2, "pow") == RatFunc((1, 2, 1), (0, 0, 1))
    assert ratfunc_arith(tt, 1, "sub") == RatFunc((-1, 1))
    with pytest.raises(ZeroDivisionError):
        tt / RatFunc(())
    with pytest.raises(ZeroDivisionError):
        RatFunc((1,), ())


def test_sign_convention():
    r = RatFunc((1,), (0, -2))
    assert r.num == (-1,) and r.den == (0, 2)


def test_eval_examples():
    q_t = RatFunc((4, 0, -3), (2, 0, -15))
    assert eval_ratfunc(q_t, 1) == Fraction(-1, 13)
    assert eval_ratfunc(RatFunc((-1, 0, 1), (3, 1)), 1) == 0
    assert eval_ratfunc(RatFunc((-1, 0, 1), (3, 1)), -1) == 0


def test_pole_is_distinct_error():
    r = RatFunc((1,), (-1, 1))
    with pytest.raises(PoleError):
        r(1)
    assert issubclass(PoleError, ZeroDivisionError)
    assert not issubclass(PoleError, ValueError)


@given(ratfuncs())
def test_ratfunc_invariants(r):
    assert r.den and r.den[-1] > 0
    if r.num:
        assert poly_gcd(r.num, r.den) == (1,)
    else:
        assert r.den == (1,)
    assert RatFunc(r.num, r.den) == r


@given(ratfuncs(), ratfuncs(), st.integers(-8, 8))
@settings(max_examples=200)
def test_evaluation_commutes_with_arithmetic(a, b, t0):
    assume(upoly.evaluate(a.den, t0) != 0 and upoly.evaluate(b.den, t0) != 0)
    assert (a + b)(t0) == a(t0) + b(t0)
    assert (a - b)(t0) == a(t0) - b(t0)
    assert (a * b)(t0) == a(t0) * b(t0)
    if b(t0) != 0:
        assert (a / b)(t0) == a(t0) / b(t0)


def test_rational_coefficients_are_cleared():
    r = RatFunc((Fraction(1, 2), Fraction(1, 3)), (Fraction(5, 6),))
    assert r == RatFunc((3, 2), (5,))


# -- poly_gcd -----------------------------------------------------------------

def test_gcd_examples():
    assert poly_gcd((-1, 0, 1), (-1, 1)) == (-1, 1)
    assert poly_gcd((0, 6), (0, 0, 4)) == (0, 2)
    with pytest.raises(ValueError):
        poly_gcd((), ())
    assert poly_gcd((0, -3), ()) == (0, 3)


@given(nonzero_int_polys, nonzero_int_polys, nonzero_int_polys)
@settings(max_examples=200)
def test_gcd_divides_and_matches_sympy(a, b, c):
    a, b = upoly.mul(a, c), upoly.mul(b, c)
    g = poly_gcd(a, b)
    assert not upoly.divmod_(a, g)[1]
    assert not upoly.divmod_(b, g)[1]
    assert g[-1] > 0
    ref = sympy.gcd(to_sympy(a), to_sympy(b))
    ref_coeffs = tuple(int(c) for c in reversed(ref.all_coeffs()))
    if ref_coeffs[-1] < 0:
        ref_coeffs = upoly.neg(ref_coeffs)
    assert g == ref_coeffs


@given(st.lists(nonzero_int_polys.filter(lambda f: len(f) > 1), min_size=1, max_size=3))
def test_squarefree_decomposition_matches_sympy(factors):
    a = (1,)
    for i, f in enumerate(factors, start=1):
        a = upoly.mul(a, upoly.power(f, i))
    parts = upoly.squarefree_decomposition(a)
    rebuilt = (1,)
    for i, f in enumerate(parts, start=1):
        rebuilt = upoly.mul(rebuilt, upoly.power(f, i))
    assert upoly.primitive(rebuilt) == upoly.primitive(a)
    _, ref = sympy.sqf_list(to_sympy(a))
    expected = {k: upoly.primitive(tuple(int(c) for c in reversed(f.all_coeffs()))) for f, k in ref}
    got = {i: f for i, f in enumerate(parts, start=1) if f != (1,)}
    assert got == expected


def test_large_integer_decimal_round_trip():
    n = -(10 ** 60) - 123456789
    assert int(str(n)) == n
    assert Fraction(str(Fraction(n, 7))) == Fraction(n, 7)
