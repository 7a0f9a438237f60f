"""Closed forms for counts and maj generating functions against brute force."""

import pytest

from csieve.formulas import (count_w_alpha_delta, feasible_deltas, flatten,
                             is_nonempty, macmahon_check, maj_gf_mod_n, params,
                             period_g_check, tilde_maj_gf,
                             tilde_maj_gf_alternative, vandermonde_check,
                             verify_flex_maj_equidistribution,
                             verify_flex_universal, verify_formula_vs_oracle,
                             verify_main_theorem)
from csieve.qpoly import ResiduePoly, monomial, poly_mul, reduce
from csieve.words import enumerate_by_content_cdt, maj


def test_params_derived_quantities():
    p = params(*flatten((2, 0, 2, 0, 4), (0, 0, 2, 0, 2)))
    assert (p.alpha, p.delta) == ((2, 2, 4), (0, 2, 2))
    assert (p.n, p.k, p.m) == (8, 4, 3)
    assert p.d == 4


def test_params_eta():
    p = params((2, 2), (0, 2))
    # eta = n - alpha_1 + C(k,2) + sum C(delta_l, 2) = 2 + 1 + 1
    assert p.eta == 4


def test_flatten():
    assert flatten((2, 0, 2), (0, 0, 1)) == ((2, 2), (0, 1))
    assert flatten((2, 0, 2), (0,)) == ((2, 2), (0, 0))
    # a positive delta over an absent letter survives so emptiness is seen
    assert flatten((2, 0, 2), (0, 1, 1)) == ((2, 0, 2), (0, 1, 1))


def test_is_nonempty_matches_enumeration():
    for alpha in [(2, 2), (3, 1), (1, 1), (2, 1, 1), (1, 1, 2)]:
        for delta in feasible_deltas(alpha):
            assert list(enumerate_by_content_cdt(alpha, delta))
    # the multichoose factor vanishes when a letter has no run to land in
    assert not is_nonempty((1, 1), (0, 0))
    assert not list(enumerate_by_content_cdt((1, 1), (0, 0)))
    assert is_nonempty((1, 1), (0, 1))
    assert not is_nonempty((2, 2), (1, 1))     # delta_1 must be 0
    assert not is_nonempty((2, 2), (0, 3))     # delta_2 > alpha_2


def test_count_golden():
    assert count_w_alpha_delta((2, 2), (0, 2)) == 2
    assert count_w_alpha_delta((4, 2, 3), (0, 2, 1)) == 324
    assert count_w_alpha_delta((1, 1), (0, 0)) == 0
    # 324 = (9/4) * 144 leaves
    assert 324 * 4 == 9 * 144


def test_tilde_gf_golden():
    # W_{(2,2),(0,2)} ending in 1 is just 2121, with maj = 1 + 3
    assert tilde_maj_gf((2, 2), (0, 2)) == monomial(4)
    assert tilde_maj_gf((1, 1), (0, 0)) == ()


def test_tilde_gf_alternative_form_agrees():
    for alpha in [(2, 2), (3, 1, 1), (2, 2, 2), (4, 2, 3)]:
        for delta in feasible_deltas(alpha):
            # the pair (shift, poly) encodes q^shift * poly
            shift, poly = tilde_maj_gf_alternative(alpha, delta)
            assert poly_mul(monomial(max(-shift, 0)), tilde_maj_gf(alpha, delta)) \
                == poly_mul(monomial(max(shift, 0)), poly)


def test_maj_gf_mod_n_golden():
    # W_{(2,2),(0,2)} = {1212, 2121}: maj GF q^2 + q^4 == q^2 + 1 mod q^4-1
    assert maj_gf_mod_n((2, 2), (0, 2)) == ResiduePoly(4, (1, 0, 1, 0))


def test_inv_does_not_give_the_csp():
    # on {1212, 2121} the maj GF q^2 + q^4 sieves but the inv GF q + q^3
    # does not (it evaluates to -2 at omega_4^2 where 2 words are fixed)
    from csieve.actions import check_csp
    from csieve.formulas import brute_gf, rotation_action
    from csieve.words import inv
    words = ((1, 2, 1, 2), (2, 1, 2, 1))
    assert check_csp(rotation_action(words), brute_gf(words, 4, maj)).holds
    assert not check_csp(rotation_action(words), brute_gf(words, 4, inv)).holds


def test_verify_formula_vs_oracle_instances():
    for alpha, delta in [((2, 2), (0, 2)), ((3, 1, 1), (0, 1, 0)),
                         ((4, 2, 3), (0, 2, 1)), ((1, 1), (0, 0))]:
        assert verify_formula_vs_oracle(alpha, delta).holds


def test_verify_main_theorem_instances():
    assert verify_main_theorem((2, 2), (0, 2)).holds
    # the running example's class, letters compressed to 1, 2, 3
    assert verify_main_theorem(*flatten((2, 0, 2, 0, 4), (0, 0, 2, 0, 2))).holds


def test_vandermonde_golden():
    assert vandermonde_check((2, 2)).holds
    assert vandermonde_check((2, 2, 4)).holds


def test_period_g():
    assert period_g_check((2, 2), (0, 2)).holds
    assert period_g_check((4, 2, 3), (0, 2, 1)).holds


def test_macmahon_small():
    assert macmahon_check((2, 2)).holds
    assert macmahon_check((1, 2, 1)).holds


def test_flex_checks():
    assert verify_flex_maj_equidistribution((2, 2), (0, 2)).holds
    assert verify_flex_universal((1, 5, 5, 3, 1, 5, 5, 3)).holds
    assert verify_flex_universal((1, 1, 1)).holds


def test_maj_gf_division_is_exact():
    # the closed form divides by alpha_1 after reduction; an inexact
    # division would be a hard fault rather than a wrong answer
    for alpha, delta in [((4, 2, 3), (0, 2, 1)), ((3, 3), (0, 3))]:
        maj_gf_mod_n(alpha, delta)     # must not raise


def test_params_validation():
    with pytest.raises(ValueError):
        params((2, 0), (0, 0))       # alpha must be strong
    with pytest.raises(ValueError):
        params((2, 2), (0,))         # length mismatch
