"""Arithmetic kernel: winding weights, divisor identities, cyclotomic exactness."""

import cmath
import math
import random
from fractions import Fraction as F

import pytest

from torusloop.arith import (
    ArithCache,
    chebyshev_T,
    divisors,
    gamma_dm,
    gamma_dm_cospoly,
    gamma_v,
    gamma_via_mobius_inversion,
    gamma_via_totient_form,
    gcd_conv,
    lambda_fsz,
    lambda_fsz_cospoly,
    lambda_prime_form,
    ramanujan_sum,
    totient,
    verify_master,
    verify_s1_s2,
)
from torusloop.cyclo import CycloField, cospoly_eval, cospoly_to_cyclo


def test_gcd_conventions():
    assert gcd_conv(4, 6) == 2
    assert gcd_conv(5, 0) == 5
    assert gcd_conv(0, 5) == 5
    assert gcd_conv(0, 0) == 0


def test_arith_cache_definitional():
    assert ArithCache(60).selfcheck()


def test_chebyshev_small():
    assert chebyshev_T(0, F(7, 3)) == 1
    assert chebyshev_T(1, F(7, 3)) == F(7, 3)
    # T_3(x) = 4x^3 - 3x at x = 1/2 gives -1 = cos(pi)
    assert chebyshev_T(3, F(1, 2)) == 4 * F(1, 2) ** 3 - 3 * F(1, 2) == -1
    for k in range(8):
        theta = 0.8347
        assert math.isclose(chebyshev_T(k, math.cos(theta)), math.cos(k * theta),
                            abs_tol=1e-12)


def test_ramanujan_sum_definition():
    for q in range(1, 13):
        for m in range(-6, 13):
            direct = sum(cmath.exp(2j * math.pi * k * m / q)
                         for k in range(1, q + 1) if math.gcd(k, q) == 1)
            assert abs(direct.imag) < 1e-9
            assert round(direct.real) == ramanujan_sum(q, m)
            assert abs(direct.real - ramanujan_sum(q, m)) < 1e-9


def test_gamma_v_single_term():
    alpha = 1.37
    assert math.isclose(gamma_v(1, 0, alpha, 0), alpha / 2, abs_tol=1e-12)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 6])
@pytest.mark.parametrize("v", [0, 1])
def test_gamma_v_even_in_d(d, v):
    alpha = 0.62
    for m in range(0, 2 * d):
        assert math.isclose(gamma_v(d, m, alpha, v), gamma_v(-d, m, alpha, v),
                            abs_tol=1e-12)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("v", [0, 1])
def test_resummation_identity_on_synthetic_data(d, v):
    """sum_x (1+(-1)^{x+v}) T_{gcd(d,x)}(a/2) M_x = sum_m gamma_v(d,m) Y_m
    with Y_m = sum_x w^{-x} M_x, w = exp(i pi m / d), for arbitrary M_x."""
    rng = random.Random(20240 + d + 10 * v)
    alpha = 1.234
    M = [rng.uniform(-2, 2) for _ in range(2 * d)]
    lhs = sum((1 + (-1) ** ((x + v) % 2)) * chebyshev_T(gcd_conv(d, x), alpha / 2) * M[x]
              for x in range(2 * d))
    rhs = 0j
    for m in range(2 * d):
        Y = sum(cmath.exp(-1j * math.pi * m * x / d) * M[x] for x in range(2 * d))
        rhs += gamma_v(d, m, alpha, v) * Y
    assert abs(lhs - rhs) < 1e-10


def test_gamma_dm_hand_values():
    g = 0.77
    assert math.isclose(gamma_dm(1, 0, g), math.cos(g), abs_tol=1e-12)
    assert math.isclose(gamma_dm(2, 1, g), 0.5 * (math.cos(2 * g) - math.cos(g)),
                        abs_tol=1e-12)


def test_gamma_dm_depends_on_gcd_of_m():
    g = 1.9
    for d in range(1, 16):
        for m in range(1, 2 * d):
            assert math.isclose(gamma_dm(d, m, g), gamma_dm(d, math.gcd(m, d), g),
                                abs_tol=1e-11)


def test_gamma_dm_cospoly_matches_float():
    for d in range(1, 21):
        for m in range(0, d + 1):
            for g in (0.0, 0.3, 2.6):
                assert math.isclose(cospoly_eval(gamma_dm_cospoly(d, m), g),
                                    gamma_dm(d, m, g), abs_tol=1e-11)


def test_lambda_hand_values():
    e0 = 0.41
    assert math.isclose(lambda_fsz(1, 1, e0), 2 * math.cos(math.pi * e0), abs_tol=1e-12)
    # (1/2) Lambda(2,2) = (cos 2g - cos g)/2 at g = pi e0
    g = math.pi * e0
    assert math.isclose(0.5 * lambda_fsz(2, 2, e0),
                        0.5 * (math.cos(2 * g) - math.cos(g)), abs_tol=1e-12)


def test_lambda_two_forms_agree():
    for M in range(1, 25):
        for N in divisors(M):
            for e0 in (0.0, 0.37, 1.0):
                direct = 2.0 * cospoly_eval(lambda_fsz_cospoly(M, N), math.pi * e0)
                assert math.isclose(direct, lambda_prime_form(M, N, e0), abs_tol=1e-11)


def test_gamma_equals_half_lambda():
    for d in range(1, 31):
        for m in range(1, d + 1):
            n = d // math.gcd(m, d)
            for g in (0.0, 0.3, 1.0, 2.6, math.pi - 0.1):
                lhs = gamma_dm(d, m, g)
                rhs = 0.5 * lambda_fsz(d, n, g / math.pi)
                assert abs(lhs - rhs) < 1e-10


def test_gamma_equals_half_lambda_exact_cospoly():
    # the identity holds term-by-term in the cosine basis
    for d in range(1, 25):
        for m in range(1, d + 1):
            assert gamma_dm_cospoly(d, m) == lambda_fsz_cospoly(d, d // math.gcd(m, d))


def test_s1_s2_small_and_medium():
    assert verify_s1_s2(1, 10)
    assert verify_s1_s2(6, 20)
    for d in range(1, 13):
        assert verify_s1_s2(d, 25)


def test_master_identity():
    assert verify_master(1, 1)
    assert verify_master(2, 4)
    assert verify_master(6, 35)
    for a in range(1, 11):
        for l in range(1, 51):
            assert verify_master(a, l)


def test_sum_lambda_restructuring():
    # sum_{k=1..n} Gamma_{k d/n, d} = sum_{r|n} phi(n/r) Gamma_{r d/n, d}
    g = 0.44
    for d in (4, 6, 12, 18):
        for n in divisors(d):
            lhs = sum(gamma_dm(d, k * d // n, g) for k in range(1, n + 1))
            rhs = sum(totient(n // r) * gamma_dm(d, r * d // n, g) for r in divisors(n))
            assert math.isclose(lhs, rhs, abs_tol=1e-10)


def test_mobius_inversion_forms_reproduce_gamma():
    g = 0.91
    for d in range(1, 31):
        for n in divisors(d):
            ref = gamma_dm(d, d // n, g)
            assert math.isclose(gamma_via_mobius_inversion(d, n, g), ref, abs_tol=1e-10)
            assert math.isclose(gamma_via_totient_form(d, n, g), ref, abs_tol=1e-10)


def test_cyclotomic_polys():
    assert cyclo_coeffs(1) == (F(-1), F(1))
    assert cyclo_coeffs(2) == (F(1), F(1))
    assert cyclo_coeffs(6) == (F(1), F(-1), F(1))
    assert cyclo_coeffs(10) == (F(1), F(-1), F(1), F(-1), F(1))


def cyclo_coeffs(m):
    from torusloop.cyclo import cyclotomic_poly
    return cyclotomic_poly(m)


def test_cyclo_cosine_arithmetic():
    fld = CycloField(10)  # gamma = 2 pi /5
    c1 = fld.cos_pi_multiple(2, 5)
    c2 = fld.cos_pi_multiple(4, 5)
    # cos(2pi/5) + cos(4pi/5) = -1/2, cos(2pi/5)*cos(4pi/5) = -1/4
    assert c1 + c2 == F(-1, 2)
    assert c1 * c2 == F(-1, 4)
    assert math.isclose(float(c1), math.cos(2 * math.pi / 5), abs_tol=1e-12)


def test_cospoly_to_cyclo_degenerate_angles():
    # gamma = 0: every cosine is 1
    val = cospoly_to_cyclo({1: F(2), 3: F(-1, 2)}, 0, 1)
    assert val == F(3, 2)
    # gamma = pi/3: cos k gamma cycles through 1/2, -1/2, -1 ...
    val = cospoly_to_cyclo({1: F(1), 2: F(1)}, 1, 3)
    assert val == 0
