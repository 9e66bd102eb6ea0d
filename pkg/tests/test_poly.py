import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdpconv.finite_field import GF
from mdpconv.poly import Poly, poly_gcd, poly_xgcd


def P(F, *coeffs):
    return Poly(F, coeffs)


def brute_gcd(a: Poly, b: Poly) -> Poly:
    """Highest-degree monic common divisor, by enumeration."""
    F = a.field
    top = int(min(a.degree, b.degree))
    for d in range(top, -1, -1):
        for tail in itertools.product(range(F.q), repeat=d):
            g = Poly(F, list(tail) + [1])
            if g.divides(a) and g.divides(b):
                return g
    raise AssertionError("unreachable: 1 divides everything")


def test_zero_polynomial_degree():
    F = GF(3)
    z = Poly.zero(F)
    assert z.degree == -math.inf
    assert z.is_zero() and not z
    assert P(F, 0, 0, 0) == z


def test_gcd_examples():
    F2, F3 = GF(2), GF(3)
    assert poly_gcd(P(F2, 1, 0, 1), P(F2, 1, 1)) == P(F2, 1, 1)
    assert poly_gcd(P(F3, 1, 1), P(F3, 2, 1)) == P(F3, 1)
    p = P(F3, 2, 0, 2)
    assert poly_gcd(p, Poly.zero(F3)) == p.monic() == P(F3, 1, 0, 1)
    assert poly_gcd(Poly.zero(F3), Poly.zero(F3)).is_zero()


def test_divmod_and_exact_division():
    F = GF(5)
    a, b = P(F, 1, 2, 3, 4), P(F, 2, 1)
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree
    assert (a * b).exact_div(b) == a
    with pytest.raises(ArithmeticError):
        a.exact_div(b)
    with pytest.raises(ZeroDivisionError):
        divmod(a, Poly.zero(F))


def test_evaluation():
    F = GF(7)
    p = P(F, 3, 0, 1)  # 3 + z^2
    assert [p(x) for x in range(7)] == [(3 + x * x) % 7 for x in range(7)]


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        P(GF(2), 1) + P(GF(3), 1)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([GF(2), GF(3), GF(2, 2)]), st.data())
def test_gcd_matches_enumeration(F, data):
    coeffs = st.lists(st.integers(0, F.q - 1), min_size=1, max_size=5)
    a, b = Poly(F, data.draw(coeffs)), Poly(F, data.draw(coeffs))
    if a.is_zero() or b.is_zero():
        return
    assert poly_gcd(a, b) == brute_gcd(a, b)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([GF(2), GF(5), GF(3, 2)]), st.data())
def test_ring_laws_and_bezout(F, data):
    coeffs = st.lists(st.integers(0, F.q - 1), max_size=6)
    a, b, c = (Poly(F, data.draw(coeffs)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly.zero(F)
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g
    assert g == poly_gcd(a, b)
    if not g.is_zero():
        assert g.divides(a) and g.divides(b)
