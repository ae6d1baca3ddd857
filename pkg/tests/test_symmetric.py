import itertools
import random
from fractions import Fraction as F

import pytest

from bchl.ct_engine import GenericityError
from bchl.ring import LaurentPoly, ParameterPoint, dominance_le, pad
from bchl.sampling import sample_application_point, sample_symmetric_point
from bchl.signed_perms import SignedPermutation, apply_signed_perm, enumerate_bn
from bchl.symmetric import (
    antisymmetrized_sum,
    application_closed_form,
    application_integral,
    decompose_monomial_basis,
    delta_bc,
    k_polynomial,
    k_polynomial_via_rational_sum,
    norm_constant,
    r_term,
    symmetric_inner_product,
    u_factor,
    u_prime_factor,
    v_lambda,
    v_lambda_plus,
)

PS = ParameterPoint.symmetric(F(1, 3), F(1, 5), F(-2, 7), F(2, 9), F(-3, 11), a=F(3, 8), b=F(-1, 6))


def partitions_padded(max_part, n, weight_max=None):
    out = []
    for mu in itertools.product(range(max_part, -1, -1), repeat=n):
        if all(mu[i] >= mu[i + 1] for i in range(n - 1)):
            if weight_max is None or sum(mu) <= weight_max:
                out.append(mu)
    return out


# -- normalization scalars ----------------------------------------------------


def test_v_lambda_examples():
    assert v_lambda((0,), 1, PS) == 1 - PS.a * PS.b
    e4 = PS.t0 * PS.t1 * PS.t2 * PS.t3
    assert v_lambda((1,), 1, PS) == 1 - e4
    t = PS.t
    assert v_lambda((2, 2), 2, PS) == (1 - t) * (1 - t**2) / (1 - t) ** 2


def test_v_lambda_factorization():
    # v = v_plus * v_{0^{m0}}
    for lam, n in [((2, 1, 0), 3), ((1, 1, 0), 3), ((3, 0, 0), 3), ((2, 2), 2)]:
        lam_p = pad(lam, n)
        m0 = lam_p.count(0)
        zero_block = v_lambda((0,) * m0, m0, PS)
        assert v_lambda(lam_p, n, PS) == v_lambda_plus(lam_p, n, PS) * zero_block


def test_u_factors():
    a, b = PS.a, PS.b
    num, den = u_factor(0, 0, 1, PS)
    assert num == LaurentPoly(1, {(0,): F(1), (-1,): -(a + b), (-2,): a * b})
    assert den.monomial == (-2,) and den.gamma == 1
    num3, _ = u_factor(3, 0, 1, PS)
    assert num3.max_degree(0) == 3 and num3.min_degree(0) == -1
    up = u_prime_factor(0, 0, 1, PS)
    assert up == LaurentPoly(1, {(1,): F(1), (0,): -(a + b), (-1,): a * b})


# -- the antisymmetric denominator ---------------------------------------------


def test_delta_bc_small():
    assert delta_bc(1) == LaurentPoly(1, {(1,): F(1), (-1,): F(-1)})
    z1 = LaurentPoly.variable(2, 0)
    z2 = LaurentPoly.variable(2, 1)
    z1i = LaurentPoly.variable(2, 0, -1)
    z2i = LaurentPoly.variable(2, 1, -1)
    expected = (z1 - z1i) * (z2 - z2i) * (z1i - z2 - z2i + z1)
    assert delta_bc(2) == expected


def test_delta_bc_leading_and_antisymmetry():
    for n in (1, 2, 3):
        d = delta_bc(n)
        rho = tuple(range(n, 0, -1))
        assert d.coefficient(rho) == 1
        assert max(d.terms) == rho
    d2 = delta_bc(2)
    for w in enumerate_bn(2):
        assert apply_signed_perm(w, d2) == d2.scale(w.sign())


# -- the polynomials ------------------------------------------------------------


def test_k_zero_partition_is_one():
    for n in (1, 2, 3):
        assert k_polynomial((0,) * n, n, PS) == LaurentPoly.one(n)


def test_k_one_variable_closed_form():
    t0, t1, t2, t3 = PS.quadruple
    e1 = t0 + t1 + t2 + t3
    e3 = t0 * t1 * t2 + t0 * t1 * t3 + t0 * t2 * t3 + t1 * t2 * t3
    e4 = t0 * t1 * t2 * t3
    expected = LaurentPoly(1, {(1,): F(1), (-1,): F(1), (0,): (e3 - e1) / (1 - e4)})
    assert k_polynomial((1,), 1, PS) == expected


def test_k_matches_rational_sum_oracle():
    for lam, n in [((1,), 1), ((2,), 1), ((3,), 1), ((1, 0), 2), ((1, 1), 2), ((2, 1), 2)]:
        assert k_polynomial(lam, n, PS) == k_polynomial_via_rational_sum(lam, n, PS)


def test_k_invariance():
    for lam, n in [((2, 1), 2), ((1, 1, 0), 3), ((2, 1, 1), 3)]:
        K = k_polynomial(lam, n, PS)
        for w in enumerate_bn(n):
            assert apply_signed_perm(w, K) == K


def test_k_triangular_and_monic():
    for n in (1, 2, 3):
        for lam in partitions_padded(4, n, weight_max=4):
            dec = decompose_monomial_basis(k_polynomial(lam, n, PS))
            assert dec[lam] == 1
            assert all(dominance_le(mu, lam) for mu in dec)


def test_k_scaling_independence():
    alt = ParameterPoint.symmetric(PS.t, PS.t0, PS.t1, PS.t2, PS.t3, a=F(1, 13), b=F(5, 9))
    for lam, n in [((1,), 1), ((2, 1), 2), ((1, 1, 0), 3)]:
        assert k_polynomial(lam, n, PS) == k_polynomial(lam, n, alt)


def test_v_lambda_is_leading_coefficient():
    for lam, n in [((1,), 1), ((2, 1), 2), ((1, 1), 2)]:
        lam = pad(lam, n)
        S = antisymmetrized_sum(lam, n, PS)
        rho = tuple(range(n, 0, -1))
        target = tuple(l + r for l, r in zip(lam, rho))
        assert S.coefficient(target) == v_lambda(lam, n, PS)


def test_degenerate_normalization_raises():
    # force v_lambda = 0 via ab = 1
    bad = ParameterPoint.symmetric(F(1, 3), F(1, 5), F(-2, 7), F(2, 9), F(-3, 11), a=F(2), b=F(1, 2))
    with pytest.raises(GenericityError):
        k_polynomial((0,), 1, bad)


# -- monomial decomposition ------------------------------------------------------


def test_decompose_orbit_sum():
    from bchl.ring import monomial_orbit_sum

    m = monomial_orbit_sum((2, 1), 2)
    assert decompose_monomial_basis(m) == {(2, 1): F(1)}


def test_decompose_rejects_noninvariant():
    with pytest.raises(ValueError):
        decompose_monomial_basis(LaurentPoly.monomial(2, (1, 0)))


def test_k2_support():
    dec = decompose_monomial_basis(k_polynomial((2, 0), 2, PS))
    assert dec[(2, 0)] == 1
    assert set(dec) <= {(2, 0), (1, 1), (1, 0), (0, 0)}


# -- orthogonality, norms ---------------------------------------------------------


def test_norm_zero_partition_is_constant_term():
    from bchl.ct_engine import symmetric_ct

    for n in (1, 2):
        assert norm_constant((0,) * n, n, PS) == symmetric_ct(n, PS)


def test_norm_no_zero_parts():
    assert norm_constant((2, 1), 2, PS) == 1 / v_lambda_plus((2, 1), 2, PS)


def test_orthogonality_small_sweep():
    rng = random.Random(10)
    ps = sample_symmetric_point(rng)
    parts = partitions_padded(2, 2)
    polys = {lam: k_polynomial(lam, 2, ps) for lam in parts}
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            ip = symmetric_inner_product(polys[lam], polys[mu], 2, ps)
            expected = norm_constant(lam, 2, ps) if lam == mu else F(0)
            assert ip == expected, (lam, mu)


def test_inner_product_direct_route_agrees():
    K1 = k_polynomial((1, 0), 2, PS)
    K2 = k_polynomial((2, 0), 2, PS)
    for f, g in [(K1, K1), (K1, K2)]:
        assert symmetric_inner_product(f, g, 2, PS) == symmetric_inner_product(
            f, g, 2, PS, method="direct"
        )


# -- the specialization integral ---------------------------------------------------


def test_application_odd_part_vanishing():
    s, a, b = F(1, 2), F(1, 5), F(-2, 7)
    assert application_integral((1,), 1, s, a, b) == 0
    assert application_integral((2, 1), 2, s, a, b) == 0


def test_application_even_partition_value():
    s, a, b = F(1, 2), F(1, 5), F(-2, 7)
    t = s * s
    val = application_integral((2,), 1, s, a, b)
    closed = application_closed_form((2,), 1, s, a, b)
    assert val == closed != 0
    # first factor of the closed form is t/(1+t) at |lam| = 2, l = 1
    weight_side = ParameterPoint.symmetric(t, s, -s, a, b)
    poly_side = ParameterPoint.symmetric(t * t, a, b, t * a, t * b, a=a, b=b)
    expected = (
        t
        / (1 + t)
        * norm_constant((2,), 1, weight_side)
        * v_lambda_plus((2,), 1, weight_side)
        / v_lambda_plus((2,), 1, poly_side)
    )
    assert val == expected


def test_application_zero_partition():
    from bchl.ct_engine import symmetric_ct

    s, a, b = F(1, 3), F(2, 7), F(-1, 4)
    weight_side = ParameterPoint.symmetric(s * s, s, -s, a, b)
    for n in (1, 2):
        assert application_integral((0,) * n, n, s, a, b) == symmetric_ct(n, weight_side)


def test_application_random_points():
    rng = random.Random(11)
    for _ in range(2):
        s, a, b = sample_application_point(rng)
        for lam, n in [((1,), 1), ((2,), 1), ((3,), 1), ((2, 2), 2), ((3, 1), 2)]:
            assert application_integral(lam, n, s, a, b) == application_closed_form(lam, n, s, a, b)
