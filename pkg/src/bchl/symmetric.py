"""The symmetric Hall-Littlewood family of type BC.

The polynomials are indexed by partitions and built by antisymmetrization:
sum the signed hyperoctahedral images of a product of univariate and
cross-pair factors, divide exactly by the fundamental antisymmetric Laurent
polynomial, and scale by the monic normalization v_lambda.  The raw
rational-function sum over the group is kept as an independent small-rank
oracle, and the per-element summands are exposed in factored form for the
residue engine.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ct_engine import (
    DenominatorFactor,
    FactoredIntegrand,
    GenericityError,
    build_density,
    constant_term,
    symmetric_ct_closed_form,
    symmetric_invariant_ct,
)
from .ring import (
    LaurentPoly,
    ParameterPoint,
    exact_laurent_divide,
    is_partition,
    multiplicity,
    nonzero_length,
    pad,
)
from .signed_perms import SignedPermutation, apply_signed_perm, enumerate_bn


def _check_partition(lam, n: int):
    lam = pad(lam, n)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


# ---------------------------------------------------------------------------
# normalization scalars
# ---------------------------------------------------------------------------


def v_lambda(lam, n: int, params: ParameterPoint) -> Fraction:
    """The full monic normalization, including the zero-part scaling block."""
    lam = _check_partition(lam, n)
    t = params.t
    e4 = params.t0 * params.t1 * params.t2 * params.t3
    m0 = multiplicity(lam, 0)
    out = Fraction(1)
    for i in set(lam):
        for j in range(1, multiplicity(lam, i) + 1):
            out *= (1 - t**j) / (1 - t)
    for i in range(1, multiplicity(lam, 1) + 1):
        out *= 1 - e4 * t ** (i - 1 + 2 * m0)
    ab = params.a * params.b
    for i in range(1, m0 + 1):
        out *= 1 - ab * t ** (i - 1)
    return out


def v_lambda_plus(lam, n: int, params: ParameterPoint) -> Fraction:
    """The nonzero-part block of v_lambda (independent of the scaling pair)."""
    lam = _check_partition(lam, n)
    t = params.t
    e4 = params.t0 * params.t1 * params.t2 * params.t3
    m0 = multiplicity(lam, 0)
    out = Fraction(1)
    for i in set(lam):
        if i >= 1:
            for j in range(1, multiplicity(lam, i) + 1):
                out *= (1 - t**j) / (1 - t)
    for i in range(1, multiplicity(lam, 1) + 1):
        out *= 1 - e4 * t ** (i - 1 + 2 * m0)
    return out


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------


def delta_bc(n: int) -> LaurentPoly:
    """The fundamental antisymmetric Laurent polynomial, leading term
    z1^n z2^{n-1} ... zn."""
    out = LaurentPoly.one(n)
    for i in range(n):
        out = out * (LaurentPoly.variable(n, i) - LaurentPoly.variable(n, i, -1))
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (
                LaurentPoly.variable(n, i, -1)
                - LaurentPoly.variable(n, j)
                - LaurentPoly.variable(n, j, -1)
                + LaurentPoly.variable(n, i)
            )
    return out


def u_prime_factor(part: int, var: int, n: int, params: ParameterPoint) -> LaurentPoly:
    """Cleared univariate factor: z(1-a/z)(1-b/z) at a zero part, otherwise
    z^{k+1} times the four-parameter product."""
    z = LaurentPoly.variable(n, var)
    zinv = LaurentPoly.variable(n, var, -1)
    one = LaurentPoly.one(n)
    if part < 0:
        raise ValueError("parts must be non-negative")
    if part == 0:
        return z * (one - zinv.scale(params.a)) * (one - zinv.scale(params.b))
    out = LaurentPoly.variable(n, var, part + 1)
    for tk in params.quadruple:
        out = out * (one - zinv.scale(tk))
    return out


def u_factor(part: int, var: int, n: int, params: ParameterPoint):
    """Univariate factor as (numerator, denominator factor (1 - z^-2))."""
    z = LaurentPoly.variable(n, var)
    zinv = LaurentPoly.variable(n, var, -1)
    one = LaurentPoly.one(n)
    mono = [0] * n
    mono[var] = -2
    den = DenominatorFactor(Fraction(1), tuple(mono))
    if part == 0:
        num = (one - zinv.scale(params.a)) * (one - zinv.scale(params.b))
    else:
        num = LaurentPoly.variable(n, var, part)
        for tk in params.quadruple:
            num = num * (one - zinv.scale(tk))
    return num, den


def _cross_cleared(n: int, t: Fraction) -> LaurentPoly:
    """prod_{i<j} (1 - t/(z_i z_j)) (z_i - t z_j), expanded."""
    out = LaurentPoly.one(n)
    one = LaurentPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            mono = [0] * n
            mono[i] = mono[j] = -1
            f1 = one - LaurentPoly.monomial(n, mono, t)
            f2 = LaurentPoly.variable(n, i) - LaurentPoly.variable(n, j).scale(t)
            out = out * f1 * f2
    return out


# ---------------------------------------------------------------------------
# the polynomials
# ---------------------------------------------------------------------------


def k_polynomial(lam, n: int, params: ParameterPoint) -> LaurentPoly:
    """The monic invariant family member indexed by the partition lam.

    Antisymmetrized product route: every group summand is a Laurent
    polynomial, the sum is divisible by delta_bc exactly, and the quotient
    is scaled by 1/v_lambda.
    """
    lam = _check_partition(lam, n)
    v = v_lambda(lam, n, params)
    if not v:
        raise GenericityError("v_lambda vanishes at this parameter point")
    core = _cross_cleared(n, params.t)
    for i in range(n):
        core = core * u_prime_factor(lam[i], i, n, params)
    total = LaurentPoly.zero(n)
    for w in enumerate_bn(n):
        total = total + apply_signed_perm(w, core).scale(w.sign())
    quotient = exact_laurent_divide(total, delta_bc(n))
    return quotient.scale(1 / v)


def antisymmetrized_sum(lam, n: int, params: ParameterPoint) -> LaurentPoly:
    """The signed group sum itself; equals v_lambda * K * delta_bc."""
    lam = _check_partition(lam, n)
    core = _cross_cleared(n, params.t)
    for i in range(n):
        core = core * u_prime_factor(lam[i], i, n, params)
    total = LaurentPoly.zero(n)
    for w in enumerate_bn(n):
        total = total + apply_signed_perm(w, core).scale(w.sign())
    return total


def _base_term_factored(lam, n: int, params: ParameterPoint) -> FactoredIntegrand:
    """The identity-permutation summand, in factored rational form."""
    one = LaurentPoly.one(n)
    nums = []
    dens = []
    for i in range(n):
        num, den = u_factor(lam[i], i, n, params)
        nums.append(num)
        dens.append(den)
    t = params.t
    for i in range(n):
        for j in range(i + 1, n):
            for sj in (1, -1):
                mono = [0] * n
                mono[i] = -1
                mono[j] = sj
                nums.append(one - LaurentPoly.monomial(n, mono, t))
                dens.append(DenominatorFactor(Fraction(1), tuple(mono)))
    return FactoredIntegrand(n, 1, nums, dens)


def r_term(lam, w: SignedPermutation, n: int, params: ParameterPoint) -> FactoredIntegrand:
    """The w-summand of the group sum, as a factored rational expression."""
    lam = _check_partition(lam, n)
    return _base_term_factored(lam, n, params).apply_signed_perm(w)


def k_polynomial_via_rational_sum(lam, n: int, params: ParameterPoint) -> LaurentPoly:
    """Independent oracle: sum the rational summands over a common
    denominator and divide.  Exponential in n; intended for n <= 2."""
    lam = _check_partition(lam, n)
    v = v_lambda(lam, n, params)
    if not v:
        raise GenericityError("v_lambda vanishes at this parameter point")
    base = _base_term_factored(lam, n, params)
    universal = LaurentPoly.one(n)
    for i in range(n):
        mono = [0] * n
        mono[i] = -2
        universal = universal * (LaurentPoly.one(n) - LaurentPoly.monomial(n, mono, 1))
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    mono = [0] * n
                    mono[i], mono[j] = si, sj
                    universal = universal * (LaurentPoly.one(n) - LaurentPoly.monomial(n, mono, 1))
    total = LaurentPoly.zero(n)
    for w in enumerate_bn(n):
        term = base.apply_signed_perm(w)
        num = LaurentPoly.one(n)
        for f in term.numerator_factors:
            num = num * f
        den = LaurentPoly.one(n)
        for d in term.denominators:
            den = den * d.as_poly(n)
        total = total + num * exact_laurent_divide(universal, den)
    return exact_laurent_divide(total, universal).scale(1 / v)


# ---------------------------------------------------------------------------
# monomial decomposition
# ---------------------------------------------------------------------------


def is_bn_invariant(f: LaurentPoly) -> bool:
    n = f.n
    for i in range(n - 1):
        if f.exchange_variables(i, i + 1) != f:
            return False
    return n == 0 or f.invert_variable(n - 1) == f


def decompose_monomial_basis(f: LaurentPoly) -> dict:
    """Write an invariant f as a combination of monomial orbit sums.

    Returns {partition: coefficient}.  Raises if f is not invariant.
    """
    from .ring import monomial_orbit_sum

    if not is_bn_invariant(f):
        raise ValueError("polynomial is not hyperoctahedrally invariant")
    n = f.n
    out = {}
    rem = f
    while not rem.is_zero:
        exps = max(rem.terms)
        if not is_partition(exps):
            raise AssertionError("leading exponent of an invariant is dominant")
        c = rem.terms[exps]
        out[exps] = c
        rem = rem - monomial_orbit_sum(exps, n).scale(c)
    return out


# ---------------------------------------------------------------------------
# norms, inner products, and the specialization integral
# ---------------------------------------------------------------------------


def norm_constant(lam, n: int, params: ParameterPoint) -> Fraction:
    """N_lambda: the squared norm of the family member indexed by lam."""
    lam = _check_partition(lam, n)
    m0 = multiplicity(lam, 0)
    vplus = v_lambda_plus(lam, n, params)
    if not vplus:
        raise GenericityError("v_lambda_plus vanishes at this parameter point")
    if m0 == 0:
        return 1 / vplus
    return symmetric_ct_closed_form(m0, params) / vplus


def symmetric_inner_product(f: LaurentPoly, g: LaurentPoly, n: int, params: ParameterPoint,
                            method: str = "via-nonsymmetric") -> Fraction:
    """Integral of f*g against the symmetric weight (both invariant)."""
    if method == "via-nonsymmetric":
        return symmetric_invariant_ct((f, g), n, params)
    if method == "direct":
        dens = build_density("symmetric", n, params)
        return constant_term(
            FactoredIntegrand(n, dens.scalar, (f, g) + dens.numerator_factors, dens.denominators)
        )
    raise ValueError(f"unknown method {method!r}")


def application_params(s, a, b) -> tuple[ParameterPoint, ParameterPoint]:
    """(polynomial-side, weight-side) points for the specialization integral.

    With t = s^2, the polynomial is taken at (t^2; a, b; a, b, ta, tb) and
    the weight at (t; s, -s, a, b); s plays the role of an exact square root
    of t.
    """
    s, a, b = Fraction(s), Fraction(a), Fraction(b)
    t = s * s
    poly_side = ParameterPoint.symmetric(t * t, a, b, t * a, t * b, a=a, b=b)
    weight_side = ParameterPoint.symmetric(t, s, -s, a, b)
    return poly_side, weight_side


def application_integral(lam, n: int, s, a, b) -> Fraction:
    """Integral of the (t^2; a,b,ta,tb)-specialized polynomial against the
    (t; +-sqrt(t), a, b) weight."""
    lam = _check_partition(lam, n)
    poly_side, weight_side = application_params(s, a, b)
    K = k_polynomial(lam, n, poly_side)
    return symmetric_invariant_ct((K,), n, weight_side)


def application_closed_form(lam, n: int, s, a, b) -> Fraction:
    """Vanishes unless every part is even; the even case is an explicit
    product of norm and normalization factors."""
    lam = _check_partition(lam, n)
    if any(x % 2 for x in lam):
        return Fraction(0)
    s, a, b = Fraction(s), Fraction(a), Fraction(b)
    t = s * s
    poly_side, weight_side = application_params(s, a, b)
    l = nonzero_length(lam)
    out = s ** sum(lam) / (1 + t) ** l
    out *= norm_constant(lam, n, weight_side)
    out *= v_lambda_plus(lam, n, weight_side)
    out /= v_lambda_plus(lam, n, poly_side)
    return out
