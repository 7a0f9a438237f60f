"""Exact polynomial arithmetic, q-analogues, cyclotomics, residues."""

import math
import random

import pytest

from csieve.qpoly import (ONE, ZERO, ResiduePoly, cyclotomic, evaluate_at_root,
                          has_period, monomial, normalize, orbit_gf, poly_add,
                          poly_divexact, poly_divmod, poly_mul, poly_reverse,
                          poly_text, q_binomial, q_factorial, q_int,
                          q_multichoose, q_multinomial, reduce, refold,
                          substitute_q_inverse)


def test_poly_basics():
    assert normalize([1, 0, 2, 0, 0]) == (1, 0, 2)
    assert poly_add((1, 2), (3,)) == (4, 2)
    assert poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert poly_mul(ZERO, (5, 5)) == ZERO
    assert monomial(3, 2) == (0, 0, 0, 2)
    assert poly_reverse((0, 1, 2)) == (2, 1)


def test_poly_divmod():
    # (q^2 - 1) = (q - 1)(q + 1)
    assert poly_divexact((-1, 0, 1), (-1, 1)) == (1, 1)
    q, r = poly_divmod((1, 1, 1), (0, 1))
    assert q == (1, 1) and r == (1,)
    with pytest.raises(ValueError):
        poly_divexact((1, 1, 1), (0, 1))
    with pytest.raises(ValueError):
        poly_divmod((1,), (2,))    # non-monic divisor


def test_poly_text():
    assert poly_text((0,)) == "0"
    assert poly_text((1, 0, 2, -1)) == "1 + 2*q^2 - q^3"
    assert poly_text((0, 1)) == "q"


def test_q_int_and_factorial():
    assert q_int(0) == ZERO
    assert q_int(3) == (1, 1, 1)
    assert q_factorial(3) == poly_mul((1, 1), (1, 1, 1))
    assert sum(q_factorial(4)) == 24


def test_q_binomial():
    assert q_binomial(4, 2) == (1, 1, 2, 1, 1)
    assert q_binomial(5, 0) == ONE
    assert q_binomial(3, 5) == ZERO
    # specialization at q = 1
    for a in range(8):
        for b in range(a + 1):
            assert sum(q_binomial(a, b)) == math.comb(a, b)
    # symmetry
    assert q_binomial(7, 3) == q_binomial(7, 4)


def test_q_multinomial_and_multichoose():
    assert q_multinomial(3, (2, 1)) == (1, 1, 1)
    assert sum(q_multinomial(8, (2, 0, 2, 0, 4))) == 420
    assert q_multichoose(0, 0) == ONE
    assert q_multichoose(0, 3) == ZERO
    assert q_multichoose(2, 2) == q_binomial(3, 2)


def test_cyclotomic():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    # the product over divisors of 12 recovers q^12 - 1
    prod = ONE
    for d in range(1, 13):
        if 12 % d == 0:
            prod = poly_mul(prod, cyclotomic(d))
    assert prod == (-1,) + (0,) * 11 + (1,)


def test_residue_arithmetic():
    f = reduce((1, 2, 3, 4, 5), 3)     # fold onto q^0..q^2
    assert f == ResiduePoly(3, (5, 7, 3))
    assert f.shift(1) == ResiduePoly(3, (3, 5, 7))
    assert f.shift(-1) == f.shift(2)
    g = ResiduePoly.from_terms(3, {-1: 2, 4: 1})
    assert g == ResiduePoly(3, (0, 1, 2))
    assert (f + g - g) == f
    assert (f * 2).coefficient_sum() == 2 * f.coefficient_sum()
    # multiplication wraps exponents
    q = ResiduePoly.from_terms(3, {1: 1})
    assert (q * q * q) == ResiduePoly.constant(3, 1)


def test_refold_and_q_inverse():
    f = ResiduePoly(6, (1, 2, 3, 4, 5, 6))
    assert refold(f, 3) == ResiduePoly(3, (5, 7, 9))
    with pytest.raises(ValueError):
        refold(f, 4)
    g = substitute_q_inverse(f)
    assert g == ResiduePoly(6, (1, 6, 5, 4, 3, 2))
    assert substitute_q_inverse(g) == f


def test_orbit_gf():
    assert orbit_gf(6, 3) == ResiduePoly(6, (1, 0, 1, 0, 1, 0))
    assert orbit_gf(4, 1) == ResiduePoly.constant(4, 1)
    assert orbit_gf(4, 4) == ResiduePoly(4, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        orbit_gf(6, 4)


def test_has_period():
    f = ResiduePoly(6, (1, 0, 1, 0, 1, 0))
    assert has_period(f, 2)
    assert has_period(f, 4)
    assert not has_period(f, 1)
    assert has_period(f, 6)


def test_evaluate_at_root_known_values():
    n = 4
    f = reduce(q_binomial(4, 2), n)      # CSP polynomial for 2-subsets of [4]
    assert evaluate_at_root(f, 0) == 6
    assert evaluate_at_root(f, 1) == 0
    assert evaluate_at_root(f, 2) == 2
    assert evaluate_at_root(f, 3) == 0


def test_evaluate_at_root_non_integer():
    # q alone at a primitive root is not an integer
    f = ResiduePoly.from_terms(3, {1: 1})
    assert evaluate_at_root(f, 1) is None
    assert evaluate_at_root(f, 0) == 1


def test_evaluate_at_root_against_complex_arithmetic():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 10)
        coeffs = tuple(rng.randint(-4, 4) for _ in range(n))
        f = ResiduePoly(n, coeffs)
        for k in range(n):
            omega = complex(math.cos(2 * math.pi * k / n),
                            math.sin(2 * math.pi * k / n))
            approx = sum(c * omega ** i for i, c in enumerate(coeffs))
            exact = evaluate_at_root(f, k)
            if exact is None:
                assert abs(approx.imag) > 1e-9 or abs(approx.real - round(approx.real)) > 1e-9
            else:
                assert abs(approx - exact) < 1e-6
