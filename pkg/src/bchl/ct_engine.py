"""Exact torus constant terms via iterated one-variable residues.

An integrand is kept in factored form: a rational scalar, a list of Laurent
polynomial numerator factors, and a multiset of denominator factors, each of
the shape (1 - gamma * z^m) with gamma a nonzero rational and m a nonzero
integer exponent vector.  The constant term over the n-torus (coefficient of
z^0, equal to the Haar integral) is computed by eliminating one variable at
a time: with the remaining variables held on the torus, the poles of a
denominator factor in the active variable z_v lie at a rational multiple of
a monomial in the other variables, so "inside the unit circle" is decided by
comparing |gamma| with 1 exactly.  The integral is then the sum of residues
at the inside poles, each of which is again a factored integrand in one
variable fewer, plus the residue at z_v = 0 extracted from a truncated
series expansion.

Parameters are assumed generic: every inside pole must be simple and no
pole may sit exactly on the torus unless the corresponding factor cancels
into the numerator.  Violations raise GenericityError rather than being
repaired.

A floating-point quadrature on a uniform torus grid is provided as an
independent cross-check of the exact engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .ring import (
    ExpVec,
    InexactDivisionError,
    LaurentPoly,
    ModulusError,
    ParameterPoint,
    exact_laurent_divide,
)


class GenericityError(ValueError):
    """A denominator, pole separation, or recursion coefficient degenerated."""


@dataclass(frozen=True)
class DenominatorFactor:
    """The factor (1 - gamma * z^monomial)."""

    gamma: Fraction
    monomial: ExpVec

    def __post_init__(self):
        if not self.gamma:
            raise ValueError("gamma must be nonzero")
        if not any(self.monomial):
            raise ValueError("monomial must be nonzero")

    def as_poly(self, n: int) -> LaurentPoly:
        return LaurentPoly(n, {(0,) * n: Fraction(1), self.monomial: -self.gamma})

    def describe(self) -> str:
        mono = "*".join(f"z{i + 1}^{k}" for i, k in enumerate(self.monomial) if k)
        return f"(1 - {self.gamma}*{mono})"


class FactoredIntegrand:
    """scalar * prod(numerator_factors) / prod(1 - gamma_k z^{m_k})."""

    __slots__ = ("n", "scalar", "numerator_factors", "denominators")

    def __init__(self, n, scalar, numerator_factors, denominators):
        self.n = n
        self.scalar = Fraction(scalar)
        self.numerator_factors = tuple(numerator_factors)
        self.denominators = tuple(denominators)

    @staticmethod
    def from_poly(numerator: LaurentPoly, denominators=(), scalar=1) -> "FactoredIntegrand":
        return FactoredIntegrand(numerator.n, scalar, (numerator,), denominators)

    @property
    def numerator(self) -> LaurentPoly:
        """The expanded numerator, scalar included."""
        out = LaurentPoly.constant(self.n, self.scalar)
        for f in self.numerator_factors:
            out = out * f
        return out

    def __mul__(self, other: "FactoredIntegrand") -> "FactoredIntegrand":
        if self.n != other.n:
            raise ValueError("variable-count mismatch")
        return FactoredIntegrand(
            self.n,
            self.scalar * other.scalar,
            self.numerator_factors + other.numerator_factors,
            self.denominators + other.denominators,
        )

    def apply_signed_perm(self, w) -> "FactoredIntegrand":
        from .signed_perms import apply_signed_perm

        return FactoredIntegrand(
            self.n,
            self.scalar,
            tuple(apply_signed_perm(w, f) for f in self.numerator_factors),
            tuple(
                DenominatorFactor(d.gamma, w.act_on_exponents(d.monomial))
                for d in self.denominators
            ),
        )


def integrands_equal(a: FactoredIntegrand, b: FactoredIntegrand) -> bool:
    """Equality as rational functions, by cross multiplication."""
    left = a.numerator
    for d in b.denominators:
        left = left * d.as_poly(a.n)
    right = b.numerator
    for d in a.denominators:
        right = right * d.as_poly(b.n)
    return left == right


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------


def _cancel_unit_factor(n, scalar, num_factors, dfac: DenominatorFactor):
    """Divide the factored numerator by dfac exactly; raise if impossible."""
    binom = dfac.as_poly(n)
    for idx, f in enumerate(num_factors):
        try:
            q = exact_laurent_divide(f, binom)
        except InexactDivisionError:
            continue
        out = list(num_factors)
        if q.is_constant():
            out.pop(idx)
            scalar = scalar * q.constant_coefficient()
        else:
            out[idx] = q
        return scalar, out
    # fall back to dividing the fully expanded numerator
    total = LaurentPoly.constant(n, scalar)
    for f in num_factors:
        total = total * f
    try:
        q = exact_laurent_divide(total, binom)
    except InexactDivisionError:
        raise GenericityError(
            f"pole of {dfac.describe()} lies on the unit torus and does not cancel"
        )
    return Fraction(1), [q]


def _sqrt_fraction(q: Fraction):
    """Exact square root of a positive rational, or None."""
    if q <= 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _split_even_factor(d: DenominatorFactor):
    """Split (1 - s^2 z^{2m}) into (1 - s z^m)(1 + s z^m) when possible."""
    if any(x % 2 for x in d.monomial):
        return None
    s = _sqrt_fraction(d.gamma)
    if s is None:
        return None
    half = tuple(x // 2 for x in d.monomial)
    return [DenominatorFactor(s, half), DenominatorFactor(-s, half)]


def normalize(I: FactoredIntegrand) -> FactoredIntegrand:
    """Fold constant denominator factors, split even squares, and cancel
    unit-modulus factors into the numerator."""
    scalar = I.scalar
    nums = list(I.numerator_factors)
    keep = []
    stack = list(I.denominators)
    while stack:
        d = stack.pop()
        if not any(d.monomial):
            val = 1 - d.gamma
            if not val:
                raise GenericityError(f"denominator factor {d.describe()} vanishes")
            scalar /= val
            continue
        split = _split_even_factor(d)
        if split is not None:
            stack.extend(split)
            continue
        if abs(d.gamma) == 1:
            scalar, nums = _cancel_unit_factor(I.n, scalar, nums, d)
        else:
            keep.append(d)
    # constant numerator factors fold into the scalar
    kept_nums = []
    for f in nums:
        if f.is_zero:
            return FactoredIntegrand(I.n, 0, (), ())
        if f.is_constant():
            scalar *= f.constant_coefficient()
        else:
            kept_nums.append(f)
    if not scalar:
        return FactoredIntegrand(I.n, 0, (), ())
    return FactoredIntegrand(I.n, scalar, kept_nums, keep)


# ---------------------------------------------------------------------------
# the elimination step
# ---------------------------------------------------------------------------


def _zero_off(mono: ExpVec, v: int) -> ExpVec:
    out = list(mono)
    out[v] = 0
    return tuple(out)


def _series_pieces_cap(pieces, target):
    """Multiply v-degree-indexed series pieces, returning coeff at `target`.

    Each piece is a dict {v-degree: LaurentPoly coefficient}.  Degrees above
    what can still reach `target` are discarded as the product is folded.
    """
    mins = [min(p) for p in pieces]
    suffix = [0] * (len(pieces) + 1)
    for i in range(len(pieces) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mins[i]
    acc = None
    for i, piece in enumerate(pieces):
        cap = target - (suffix[i + 1] if i + 1 <= len(pieces) else 0)
        if acc is None:
            acc = {d: c for d, c in piece.items() if d <= cap}
        else:
            nxt: dict = {}
            for d1, c1 in acc.items():
                for d2, c2 in piece.items():
                    d = d1 + d2
                    if d > cap:
                        continue
                    prod = c1 * c2
                    if d in nxt:
                        nxt[d] = nxt[d] + prod
                    else:
                        nxt[d] = prod
            acc = nxt
        if not acc:
            return None
    return acc.get(target)


def _residue_at_zero(I: FactoredIntegrand, v: int, relevant, passthrough):
    """Residue of I/z_v at z_v = 0, as a factored integrand over the rest."""
    n = I.n
    shift = sum(-d.monomial[v] for d in relevant if d.monomial[v] < 0)
    minsum = sum(f.min_degree(v) for f in I.numerator_factors)
    if minsum - 1 + shift >= 0:
        return None
    target = -shift  # need [z_v^target] of the series product below
    series_cap = target - minsum  # series pieces start at degree 0

    pieces = []
    for f in I.numerator_factors:
        piece: dict = {}
        for e, c in f.terms.items():
            d = e[v]
            mono = LaurentPoly.monomial(n, _zero_off(e, v), c)
            piece[d] = piece[d] + mono if d in piece else mono
        pieces.append(piece)

    prefactor = LaurentPoly.constant(n, 1)
    for d in relevant:
        e = d.monomial[v]
        if e > 0:
            # 1/(1 - g z^e M) = sum_j (g M)^j z^{ej}
            base = LaurentPoly.monomial(n, _zero_off(d.monomial, v), d.gamma)
            step = e
        else:
            # 1/(1 - g z^{-k} M) = z^k * (-gM)^{-1} * sum_j (gM)^{-j} z^{kj}
            base = LaurentPoly.monomial(
                n, tuple(-x for x in _zero_off(d.monomial, v)), 1 / d.gamma
            )
            prefactor = prefactor * base.scale(-1)
            step = -e
        piece, powr, j = {}, LaurentPoly.one(n), 0
        while j * step <= series_cap:
            piece[j * step] = powr
            powr = powr * base
            j += 1
        pieces.append(piece)

    if pieces:
        coeff = _series_pieces_cap(pieces, target)
    else:
        coeff = LaurentPoly.one(n) if target == 0 else None
    if coeff is None or coeff.is_zero:
        return None
    return FactoredIntegrand(n, I.scalar, (coeff * prefactor,), passthrough)


def _eliminate(I: FactoredIntegrand, order) -> Fraction:
    if not I.scalar:
        return Fraction(0)
    if not order:
        for f in I.numerator_factors:
            if not f.is_constant():
                raise AssertionError("variables left over after elimination")
        if I.denominators:
            raise AssertionError("denominator factors left over after elimination")
        total = I.scalar
        for f in I.numerator_factors:
            total *= f.constant_coefficient()
        return total

    v, rest = order[0], order[1:]
    relevant, passthrough = [], []
    for d in I.denominators:
        (relevant if d.monomial[v] else passthrough).append(d)

    # classify poles in z_v; inside ones must be simple and rational
    inside = []
    for k, d in enumerate(relevant):
        e = d.monomial[v]
        g = d.gamma
        if abs(g) == 1:
            raise AssertionError("unit-modulus factor survived normalization")
        if e < 0 and abs(g) < 1:
            if e != -1:
                raise GenericityError(
                    f"inside pole of {d.describe()} has order {-e} in z{v + 1}"
                )
            inside.append((k, g, _zero_off(d.monomial, v), 1))
        elif e > 0 and abs(g) > 1:
            if e != 1:
                raise GenericityError(
                    f"inside pole of {d.describe()} has order {e} in z{v + 1}"
                )
            mono = tuple(-x for x in _zero_off(d.monomial, v))
            inside.append((k, 1 / g, mono, -1))

    seen = {}
    for k, alpha, mono, _ in inside:
        key = (alpha, mono)
        if key in seen:
            raise GenericityError(
                f"pole collision in z{v + 1}: {relevant[seen[key]].describe()} and "
                f"{relevant[k].describe()} vanish together (non-generic parameters)"
            )
        seen[key] = k

    total = Fraction(0)
    for k0, alpha, mono, sigma in inside:
        nums = [f.substitute(v, alpha, mono) for f in I.numerator_factors]
        if any(f.is_zero for f in nums):
            continue
        scalar = I.scalar * sigma
        new_factors = list(passthrough)
        for k, d in enumerate(relevant):
            if k == k0:
                continue
            e = d.monomial[v]
            gamma2 = d.gamma * alpha**e
            mono2 = tuple(
                x + e * m for x, m in zip(_zero_off(d.monomial, v), mono)
            )
            if not any(mono2):
                val = 1 - gamma2
                if not val:
                    raise GenericityError(
                        f"pole collision in z{v + 1}: {d.describe()} vanishes at the "
                        f"pole of {relevant[k0].describe()} (non-generic parameters)"
                    )
                scalar /= val
            else:
                new_factors.append(DenominatorFactor(gamma2, mono2))
        branch = normalize(FactoredIntegrand(I.n, scalar, nums, new_factors))
        total += _eliminate(branch, rest)

    zero_branch = _residue_at_zero(I, v, relevant, passthrough)
    if zero_branch is not None:
        total += _eliminate(normalize(zero_branch), rest)
    return total


def constant_term(I: FactoredIntegrand, order=None) -> Fraction:
    """Exact constant term (torus integral) of a factored integrand."""
    I = normalize(I)
    if order is None:
        order = tuple(range(I.n))
    else:
        order = tuple(order)
        if sorted(order) != list(range(I.n)):
            raise ValueError("order must be a permutation of the variables")
    return _eliminate(I, order)


# ---------------------------------------------------------------------------
# densities
# ---------------------------------------------------------------------------


def _density_factor(factors, gamma, n, mono):
    if gamma:
        factors.append(DenominatorFactor(gamma, tuple(mono)))


def build_density(kind: str, n: int, params: ParameterPoint) -> FactoredIntegrand:
    """The torus weight of the given kind as a factored integrand.

    kind "symmetric": the 1/(2^n n!)-normalized weight with numerator
    factors (1 - z_i^{+-2}) and (1 - z_i^{+-1} z_j^{+-1}), denominator
    factors (1 - t_k z_i^{+-1}) and (1 - t z_i^{+-1} z_j^{+-1}).

    kind "nonsymmetric": numerator factors (1 - z_i^2) and
    (1 - z_i z_j^{+-1}); denominator factors (1 - a z_i), (1 - b z_i),
    (1 - c z_i^{+-1}), (1 - d z_i^{+-1}) and (1 - t z_i z_j^{+-1}).

    Parameters equal to zero drop their factors; nonzero ones must satisfy
    |x| < 1.
    """
    nums = []
    dens: list[DenominatorFactor] = []

    def e(i, k, j=None, l=0):
        out = [0] * n
        out[i] = k
        if j is not None:
            out[j] = l
        return out

    if kind == "symmetric":
        params.require_unit_moduli(("t", "t0", "t1", "t2", "t3"))
        scalar = Fraction(1, 2**n * math.factorial(n))
        for i in range(n):
            nums.append(LaurentPoly(n, {tuple(e(i, 0)): Fraction(1), tuple(e(i, 2)): Fraction(-1)}))
            nums.append(LaurentPoly(n, {tuple(e(i, 0)): Fraction(1), tuple(e(i, -2)): Fraction(-1)}))
            for tk in params.quadruple:
                _density_factor(dens, tk, n, e(i, 1))
                _density_factor(dens, tk, n, e(i, -1))
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        nums.append(
                            LaurentPoly(n, {tuple(e(i, 0)): Fraction(1), tuple(e(i, si, j, sj)): Fraction(-1)})
                        )
                        _density_factor(dens, params.t, n, e(i, si, j, sj))
        return FactoredIntegrand(n, scalar, nums, dens)

    if kind == "nonsymmetric":
        params.require_unit_moduli(("t", "t0", "t1", "t2", "t3"))
        a, b, c, d = params.quadruple
        for i in range(n):
            nums.append(LaurentPoly(n, {tuple(e(i, 0)): Fraction(1), tuple(e(i, 2)): Fraction(-1)}))
            _density_factor(dens, a, n, e(i, 1))
            _density_factor(dens, b, n, e(i, 1))
            for x in (c, d):
                _density_factor(dens, x, n, e(i, 1))
                _density_factor(dens, x, n, e(i, -1))
        for i in range(n):
            for j in range(i + 1, n):
                for sj in (1, -1):
                    nums.append(
                        LaurentPoly(n, {tuple(e(i, 0)): Fraction(1), tuple(e(i, 1, j, sj)): Fraction(-1)})
                    )
                    _density_factor(dens, params.t, n, e(i, 1, j, sj))
        return FactoredIntegrand(n, 1, nums, dens)

    raise ValueError(f"unknown density kind {kind!r}")


def v_zero_scaling(n: int, params: ParameterPoint) -> Fraction:
    """The scalar relating the two weights: integrating a hyperoctahedrally
    invariant function against the symmetric weight equals integrating it
    against the nonsymmetric weight divided by this factor."""
    t = params.t
    ab = params.t0 * params.t1
    out = Fraction(1)
    for j in range(1, n + 1):
        out *= (1 - t**j) / (1 - t)
    for i in range(1, n + 1):
        out *= 1 - ab * t ** (i - 1)
    return out


def symmetric_invariant_ct(factors, n: int, params: ParameterPoint, order=None) -> Fraction:
    """Integral of prod(factors) * symmetric weight, for invariant products.

    Routed through the nonsymmetric weight, whose residue cascade stays
    inside the rationals for any parameter point.  Exact, and cross-checked
    against direct elimination in the test suite.
    """
    dens = build_density("nonsymmetric", n, params)
    I = FactoredIntegrand(
        n, dens.scalar, tuple(factors) + dens.numerator_factors, dens.denominators
    )
    return constant_term(I, order) / v_zero_scaling(n, params)


def symmetric_ct(n: int, params: ParameterPoint, method: str = "via-nonsymmetric") -> Fraction:
    """Exact torus integral of the symmetric weight.

    The default routes through the nonsymmetric weight (see
    `symmetric_invariant_ct`), which stays pole-simple and rational for any
    generic point.  method "direct" eliminates the symmetric density itself;
    it is exact for n <= 2 but for n >= 3 its residue cascade produces
    confluent reciprocal pole pairs and fails with GenericityError, so it is
    kept only as an independent cross-check at small rank.
    """
    if method == "direct":
        return constant_term(build_density("symmetric", n, params))
    if method == "via-nonsymmetric":
        return symmetric_invariant_ct((), n, params)
    raise ValueError(f"unknown method {method!r}")


def nonsymmetric_ct(n: int, params: ParameterPoint) -> Fraction:
    return constant_term(build_density("nonsymmetric", n, params))


def nonsymmetric_ct_closed_form(n: int, params: ParameterPoint) -> Fraction:
    """Product formula for the nonsymmetric constant term."""
    a, b, c, d = params.quadruple
    t = params.t
    out = Fraction(1)
    for i in range(n):
        ti = t**i
        for pair in (a * c, b * c, c * d, a * d, b * d):
            out /= 1 - ti * pair
    for j in range(n - 1, 2 * n - 1):
        out *= 1 - t**j * a * b * c * d
    return out


def symmetric_ct_closed_form(n: int, params: ParameterPoint) -> Fraction:
    """Product formula for the symmetric constant term."""
    a, b, c, d = params.quadruple
    t = params.t
    out = Fraction(1)
    for i in range(n):
        ti = t**i
        for pair in (a * c, b * c, c * d, a * d, b * d, a * b):
            out /= 1 - ti * pair
    for j in range(n):
        out *= 1 - t ** (2 * n - 2 - j) * a * b * c * d
    for j in range(1, n + 1):
        out *= (1 - t) / (1 - t**j)
    return out


# ---------------------------------------------------------------------------
# inner products
# ---------------------------------------------------------------------------


def bar_iota(g_builder, params: ParameterPoint) -> LaurentPoly:
    """Materialize the conjugate of g: rebuild at the inverted parameter
    point and reverse all exponents.  A plain polynomial is treated as a
    parameter-independent family (e.g. a monomial)."""
    if isinstance(g_builder, LaurentPoly):
        return g_builder.invert_all_variables()
    return g_builder(params.inverted()).invert_all_variables()


def inner_product_0(f: LaurentPoly, g_builder, params: ParameterPoint) -> Fraction:
    """The q=0 inner product: constant term of f * conj(g) * weight."""
    n = f.n
    density = build_density("nonsymmetric", n, params)
    gbar = bar_iota(g_builder, params)
    return constant_term(
        FactoredIntegrand(n, density.scalar, (f, gbar) + density.numerator_factors, density.denominators)
    )


# ---------------------------------------------------------------------------
# quadrature cross-check
# ---------------------------------------------------------------------------


def ct_quadrature(I: FactoredIntegrand, grid_size: int) -> complex:
    """Trapezoidal approximation of the torus integral on an N^n grid.

    For integrands analytic in an annulus around the torus the error decays
    geometrically in N; for Laurent polynomials of degree < N it is exact to
    rounding.
    """
    if grid_size < 32:
        raise ValueError("grid_size must be at least 32")
    n = I.n
    if n > 3:
        raise ValueError("quadrature oracle supports n <= 3 only")
    theta = 2.0j * np.pi * np.arange(grid_size) / grid_size
    line = np.exp(theta)
    zs = np.meshgrid(*([line] * n), indexing="ij") if n > 1 else [line]

    def mono_val(exps):
        out = np.ones_like(zs[0])
        for z, k in zip(zs, exps):
            if k:
                out = out * z**k
        return out

    vals = np.full_like(zs[0], complex(I.scalar))
    for f in I.numerator_factors:
        acc = np.zeros_like(zs[0])
        for e, c in f.terms.items():
            acc = acc + complex(c) * mono_val(e)
        vals = vals * acc
    for d in I.denominators:
        vals = vals / (1.0 - complex(d.gamma) * mono_val(d.monomial))
    return complex(vals.mean())
