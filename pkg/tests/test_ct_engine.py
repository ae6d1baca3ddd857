import random
from fractions import Fraction as F

import pytest

from bchl.ct_engine import (
    DenominatorFactor,
    FactoredIntegrand,
    GenericityError,
    build_density,
    constant_term,
    ct_quadrature,
    inner_product_0,
    integrands_equal,
    nonsymmetric_ct,
    nonsymmetric_ct_closed_form,
    normalize,
    symmetric_ct,
    symmetric_ct_closed_form,
    symmetric_invariant_ct,
    v_zero_scaling,
)
from bchl.ring import LaurentPoly, ModulusError, ParameterPoint
from bchl.sampling import sample_nonsymmetric_point, sample_symmetric_point

PN = ParameterPoint.nonsymmetric(F(1, 3), F(1, 5), F(-2, 7), F(2, 9), F(-3, 11))
PS = ParameterPoint.symmetric(F(1, 3), F(1, 5), F(-2, 7), F(2, 9), F(-3, 11))


# -- density construction ------------------------------------------------------


def test_density_all_zero_parameters():
    p0 = ParameterPoint.nonsymmetric(F(1, 3), 0, 0, 0, 0)
    dens = build_density("nonsymmetric", 1, p0)
    assert dens.denominators == ()
    assert dens.numerator == LaurentPoly(1, {(0,): F(1), (2,): F(-1)})


def test_symmetric_density_n1_structure():
    dens = build_density("symmetric", 1, PS)
    assert dens.scalar == F(1, 2)
    assert len(dens.denominators) == 8
    gammas = sorted(d.gamma for d in dens.denominators)
    assert gammas == sorted(list(PS.quadruple) * 2)


def test_nonsymmetric_density_n2_factor_count():
    # per variable: (1-az)(1-bz)(1-cz)(1-dz)(1-c/z)(1-d/z); cross: (1-t z1 z2^{+-1})
    dens = build_density("nonsymmetric", 2, PN)
    assert len(dens.denominators) == 14
    cross = [d for d in dens.denominators if sum(1 for x in d.monomial if x) == 2]
    assert len(cross) == 2


def test_density_modulus_check():
    bad = ParameterPoint.nonsymmetric(F(4, 3), F(1, 5), F(-2, 7), F(2, 9), F(-3, 11))
    with pytest.raises(ModulusError):
        build_density("nonsymmetric", 1, bad)


# -- constant terms ------------------------------------------------------------


def test_nonsymmetric_ct_n1_closed_form():
    a, b, c, d = PN.quadruple
    expected = (1 - a * b * c * d) / (
        (1 - a * c) * (1 - b * c) * (1 - c * d) * (1 - a * d) * (1 - b * d)
    )
    assert nonsymmetric_ct(1, PN) == expected
    assert nonsymmetric_ct_closed_form(1, PN) == expected


def test_closed_forms_match_engine():
    rng = random.Random(0)
    for _ in range(3):
        pn = sample_nonsymmetric_point(rng)
        ps = sample_symmetric_point(rng)
        for n in (1, 2, 3):
            assert nonsymmetric_ct(n, pn) == nonsymmetric_ct_closed_form(n, pn)
            assert symmetric_ct(n, ps) == symmetric_ct_closed_form(n, ps)


def test_symmetric_direct_route_small_rank():
    rng = random.Random(1)
    for _ in range(3):
        ps = sample_symmetric_point(rng)
        for n in (1, 2):
            assert symmetric_ct(n, ps, method="direct") == symmetric_ct_closed_form(n, ps)


def test_symmetric_ab_zero_specialization():
    # with the first two density parameters zero, the symmetric form equals
    # the nonsymmetric one divided by the t-factorial product
    ps = ParameterPoint.symmetric(F(1, 3), 0, 0, F(2, 9), F(-3, 11))
    t = ps.t
    ratio = F(1)
    for j in range(1, 3):
        ratio *= (1 - t) / (1 - t**j)
    assert symmetric_ct_closed_form(2, ps) == nonsymmetric_ct_closed_form(2, ps) * ratio
    assert symmetric_ct(2, ps) == symmetric_ct_closed_form(2, ps)


def test_positive_degree_and_no_poles_vanishes():
    z3 = LaurentPoly.monomial(1, (3,))
    assert constant_term(FactoredIntegrand.from_poly(z3)) == 0
    guarded = FactoredIntegrand(1, 1, (z3,), (DenominatorFactor(F(1, 5), (1,)),))
    assert constant_term(guarded) == 0


def test_plain_coefficient_extraction():
    f = LaurentPoly(2, {(0, 0): F(7), (1, -1): F(3), (-2, 2): F(5)})
    assert constant_term(FactoredIntegrand.from_poly(f)) == 7


def test_residue_recurrence():
    t, a, b, c, d = PN.t, PN.t0, PN.t1, PN.t2, PN.t3

    def I(n, cc, dd):
        return nonsymmetric_ct(n, ParameterPoint.nonsymmetric(t, a, b, cc, dd))

    for n in (2, 3):
        lhs = I(n, c, d)
        rhs = c / ((1 - a * c) * (1 - b * c) * (1 - d * c) * (c - d)) * I(n - 1, t * c, d)
        rhs += d / ((1 - a * d) * (1 - b * d) * (1 - c * d) * (d - c)) * I(n - 1, c, t * d)
        assert lhs == rhs


def test_elimination_order_independence():
    for kind, point in (("nonsymmetric", PN), ("symmetric", PS)):
        dens = build_density(kind, 2, point)
        assert constant_term(dens, (0, 1)) == constant_term(dens, (1, 0))


def test_pole_collision_detected():
    # two identical denominator factors form a double pole
    f = DenominatorFactor(F(1, 3), (-1,))
    I = FactoredIntegrand(1, 1, (LaurentPoly.one(1),), (f, f))
    with pytest.raises(GenericityError):
        constant_term(I)


def test_unit_modulus_cancellation():
    # (1 - z^2) / (1 - z^{-2}) = -z^2: constant term 0
    num = LaurentPoly(1, {(0,): F(1), (2,): F(-1)})
    I = FactoredIntegrand(1, 1, (num,), (DenominatorFactor(F(1), (-2,)),))
    assert constant_term(I) == 0
    bad = FactoredIntegrand(1, 1, (LaurentPoly.one(1),), (DenominatorFactor(F(1), (-1,)),))
    with pytest.raises(GenericityError):
        constant_term(bad)


def test_even_square_factor_split():
    # 1/(1 - t^2 z^{-2}) has inside poles at +-t; constant term is 1/(1-t^2)
    t = F(1, 3)
    I = FactoredIntegrand(1, 1, (LaurentPoly.one(1),), (DenominatorFactor(t * t, (-2,)),))
    assert constant_term(I) == 1 / (1 - t * t)


def test_invariant_route_matches_direct():
    rng = random.Random(2)
    from bchl.symmetric import k_polynomial

    for _ in range(2):
        ps = sample_symmetric_point(rng)
        K = k_polynomial((1, 0), 2, ps)
        direct = constant_term(
            FactoredIntegrand(
                2,
                build_density("symmetric", 2, ps).scalar,
                (K, K) + build_density("symmetric", 2, ps).numerator_factors,
                build_density("symmetric", 2, ps).denominators,
            )
        )
        routed = symmetric_invariant_ct((K, K), 2, ps)
        assert direct == routed


def test_scaling_factor_value():
    t = PS.t
    ab = PS.t0 * PS.t1
    assert v_zero_scaling(2, PS) == (1 + t) * (1 - ab) * (1 - ab * t)
    # consistency with the two closed forms
    assert symmetric_ct_closed_form(2, PS) == nonsymmetric_ct_closed_form(2, PS) / v_zero_scaling(2, PS)


# -- inner product plumbing ----------------------------------------------------


def test_inner_product_unit_operands():
    for n in (1, 2):
        val = inner_product_0(LaurentPoly.one(n), LaurentPoly.one(n), PN)
        assert val == nonsymmetric_ct_closed_form(n, PN)


def test_inner_product_monomial_twist():
    # twist direction: <z^mu, z^nu> integrates z^{mu-nu} against the weight
    f = LaurentPoly.monomial(2, (1, 0))
    g = LaurentPoly.monomial(2, (0, 1))
    direct = inner_product_0(f, g, PN)
    dens = build_density("nonsymmetric", 2, PN)
    by_hand = constant_term(
        FactoredIntegrand(
            2,
            dens.scalar,
            (LaurentPoly.monomial(2, (1, -1)),) + dens.numerator_factors,
            dens.denominators,
        )
    )
    assert direct == by_hand


# -- quadrature ----------------------------------------------------------------


def test_quadrature_constant():
    val = ct_quadrature(FactoredIntegrand.from_poly(LaurentPoly.one(2)), 32)
    assert abs(val - 1) < 1e-14


def test_quadrature_laurent_polynomial_exactness():
    rng = random.Random(3)
    for _ in range(5):
        terms = {
            tuple(rng.randint(-4, 4) for _ in range(2)): F(rng.randint(-5, 5))
            for _ in range(4)
        }
        f = LaurentPoly(2, terms)
        val = ct_quadrature(FactoredIntegrand.from_poly(f), 32)
        assert abs(val - complex(f.constant_coefficient())) < 1e-12


def test_quadrature_matches_engine_on_density():
    dens = build_density("nonsymmetric", 1, PN)
    exact = constant_term(dens)
    assert abs(ct_quadrature(dens, 64) - complex(exact)) < 1e-10


def test_quadrature_guards():
    with pytest.raises(ValueError):
        ct_quadrature(FactoredIntegrand.from_poly(LaurentPoly.one(1)), 8)


# -- structural identity between the two densities -----------------------------


def test_r_term_identity_connects_densities():
    import math

    from bchl.signed_perms import SignedPermutation
    from bchl.symmetric import r_term

    for n in (1, 2, 3):
        R = r_term((0,) * n, SignedPermutation.identity(n), n, PS)
        sym_dens = build_density("symmetric", n, PS)
        combined = FactoredIntegrand(
            n,
            R.scalar * sym_dens.scalar * 2**n * math.factorial(n),
            R.numerator_factors + sym_dens.numerator_factors,
            R.denominators + sym_dens.denominators,
        )
        assert integrands_equal(combined, build_density("nonsymmetric", n, PS))
