"""Verification suites: each one checks a family of exact identities at
seeded random parameter points and returns a JSON-ready report.

Report schema:
    {"suite": name, "seed": seed,
     "checks": [{"name": ..., "status": "pass"|"fail", "lhs": ..., "rhs": ...}, ...]}
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import nonsymmetric as nsym
from . import symmetric as sym
from .ct_engine import (
    build_density,
    constant_term,
    inner_product_0,
    nonsymmetric_ct,
    nonsymmetric_ct_closed_form,
    symmetric_ct,
    symmetric_ct_closed_form,
)
from .ring import (
    LaurentPoly,
    ParameterPoint,
    comp_prec,
    dominance_le,
    fraction_str,
    multiplicity,
    pad,
)
from .sampling import (
    distinct_fractions,
    sample_application_point,
    sample_nonsymmetric_point,
    sample_symmetric_point,
)
from .signed_perms import enumerate_bn, stat_c, stat_n


class Report:
    def __init__(self, suite: str, seed: int):
        self.data = {"suite": suite, "seed": seed, "checks": []}

    def check(self, name: str, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.data["checks"].append(
            {
                "name": name,
                "status": "pass" if ok else "fail",
                "lhs": _render(lhs),
                "rhs": _render(rhs),
            }
        )
        return ok

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.data["checks"])


def _render(x) -> str:
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, LaurentPoly):
        return x.format_text()
    return str(x)


def _partitions_with(max_part: int, n: int):
    """All partitions padded to length n with parts <= max_part."""
    out = []
    for mu in itertools.product(range(max_part, -1, -1), repeat=n):
        if all(mu[i] >= mu[i + 1] for i in range(n - 1)):
            out.append(mu)
    return out


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_constant_terms(seed: int, n_max: int = 3, points: int = 3) -> dict:
    rng = random.Random(seed)
    rep = Report("constant-terms", seed)
    for k in range(points):
        pn = sample_nonsymmetric_point(rng)
        ps = sample_symmetric_point(rng)
        for n in range(1, n_max + 1):
            rep.check(
                f"nonsymmetric ct n={n} point {k}",
                nonsymmetric_ct(n, pn),
                nonsymmetric_ct_closed_form(n, pn),
            )
            rep.check(
                f"symmetric ct n={n} point {k}",
                symmetric_ct(n, ps),
                symmetric_ct_closed_form(n, ps),
            )
            if n <= 2:
                rep.check(
                    f"symmetric ct direct-route n={n} point {k}",
                    symmetric_ct(n, ps, method="direct"),
                    symmetric_ct_closed_form(n, ps),
                )
    # residue recurrence in the last parameter pair
    t, a, b, c, d = pn.t, pn.t0, pn.t1, pn.t2, pn.t3

    def I(n, cc, dd):
        return nonsymmetric_ct(n, ParameterPoint.nonsymmetric(t, a, b, cc, dd))

    for n in (2, 3):
        if n > n_max:
            continue
        lhs = I(n, c, d)
        rhs = c / ((1 - a * c) * (1 - b * c) * (1 - d * c) * (c - d)) * I(n - 1, t * c, d) + d / (
            (1 - a * d) * (1 - b * d) * (1 - c * d) * (d - c)
        ) * I(n - 1, c, t * d)
        rep.check(f"residue recurrence n={n}", lhs, rhs)
    return rep.data


def suite_statistics(seed: int, m_max: int = 5) -> dict:
    rng = random.Random(seed)
    rep = Report("statistics", seed)
    for m in range(1, m_max + 1):
        for k in range(3):
            (t,) = distinct_fractions(rng, 1)
            lhs = sum((t ** stat_n(w) for w in enumerate_bn(m) if all(e == 1 for e in w.eps)), Fraction(0))
            rhs = Fraction(1)
            for j in range(1, m + 1):
                rhs *= (1 - t**j) / (1 - t)
            rep.check(f"inversion generating function m={m} point {k}", lhs, rhs)
    for m in range(1, min(m_max, 4) + 1):
        for m0 in (0, 1, 2):
            t, t0, t1, t2, t3, a, b = distinct_fractions(rng, 7)
            e4 = t0 * t1 * t2 * t3
            ones = (1,) * m
            lhs = Fraction(0)
            for w in enumerate_bn(m):
                c, n0, n1 = stat_c(ones, w)
                lhs += t ** stat_n(w) * t ** (2 * c) * (-e4 * t ** (2 * m0)) ** len(n1)
            rhs = Fraction(1)
            for j in range(1, m + 1):
                rhs *= (1 - t**j) / (1 - t) * (1 - e4 * t ** (j - 1 + 2 * m0))
            rep.check(f"one-part statistic sum m={m} m0={m0}", lhs, rhs)
            zeros = (0,) * m
            lhs0 = Fraction(0)
            for w in enumerate_bn(m):
                c, n0, n1 = stat_c(zeros, w)
                lhs0 += t ** stat_n(w) * t ** (2 * c) * (-a * b) ** len(n0)
            rhs0 = Fraction(1)
            for j in range(1, m + 1):
                rhs0 *= (1 - t**j) / (1 - t) * (1 - a * b * t ** (j - 1))
            rep.check(f"zero-part statistic sum m={m}", lhs0, rhs0)
    return rep.data


def suite_triangularity(seed: int, n_max: int = 3, weight_max: int = 5) -> dict:
    rng = random.Random(seed)
    rep = Report("triangularity", seed)
    ps = sample_symmetric_point(rng, scaling_distinct=True)
    ps2 = sample_symmetric_point(rng, scaling_distinct=True)
    alt = ParameterPoint.symmetric(ps.t, ps.t0, ps.t1, ps.t2, ps.t3, a=ps2.a, b=ps2.b)
    for n in range(1, n_max + 1):
        for lam in _partitions_with(weight_max, n):
            if sum(lam) > weight_max:
                continue
            K = sym.k_polynomial(lam, n, ps)
            dec = sym.decompose_monomial_basis(K)
            rep.check(f"monic lam={lam} n={n}", dec.get(lam), Fraction(1))
            rep.check(
                f"dominance support lam={lam} n={n}",
                all(dominance_le(mu, lam) for mu in dec),
                True,
            )
            rep.check(
                f"scaling independence lam={lam} n={n}",
                K == sym.k_polynomial(lam, n, alt),
                True,
            )
    return rep.data


def suite_symmetric_orthogonality(seed: int, n: int = 2, max_part: int = 2, points: int = 1) -> dict:
    rng = random.Random(seed)
    rep = Report("symmetric-orthogonality", seed)
    for k in range(points):
        ps = sample_symmetric_point(rng)
        parts = _partitions_with(max_part, n)
        polys = {lam: sym.k_polynomial(lam, n, ps) for lam in parts}
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                ip = sym.symmetric_inner_product(polys[lam], polys[mu], n, ps)
                expected = sym.norm_constant(lam, n, ps) if lam == mu else Fraction(0)
                rep.check(f"<K_{lam}, K_{mu}> point {k}", ip, expected)
    return rep.data


def suite_hecke(seed: int, n: int = 3, trials: int = 10) -> dict:
    rng = random.Random(seed)
    rep = Report("hecke", seed)
    pn = sample_nonsymmetric_point(rng)
    out = nsym.verify_hecke_relations(n, pn, trials=trials, seed=rng.randrange(10**6))
    rep.check(f"relations n={n} ({out['checked']} checks)", out["failures"], [])
    return rep.data


def suite_nonsym_orthogonality(seed: int, n: int = 2, bound: int = 2) -> dict:
    rng = random.Random(seed)
    rep = Report("nonsym-orthogonality", seed)
    pn = sample_nonsymmetric_point(rng)
    box = list(itertools.product(range(-1, bound + 1), repeat=n))
    # triangularity and word independence
    for mu in box:
        E = nsym.e_composition(mu, n, pn)
        rep.check(f"monic mu={mu}", E.coefficient(mu), Fraction(1))
        rep.check(
            f"triangular mu={mu}",
            all(comp_prec(nu, mu) for nu in E.terms if nu != mu),
            True,
        )
        alt = nsym.e_composition(mu, n, pn, word=nsym.geodesic_word(mu, prefer_large=True))
        rep.check(f"word independence mu={mu}", E, alt)
    # monomial orthogonality for partitions
    for lam in _partitions_with(bound + 1, n):
        E = nsym.e_partition(lam, n, pn)
        for nu in itertools.product(range(-bound - 1, bound + 2), repeat=n):
            if comp_prec(nu, lam):
                rep.check(
                    f"<E_{lam}, z^{nu}> = 0",
                    inner_product_0(E, LaurentPoly.monomial(n, nu), pn),
                    Fraction(0),
                )
        m0 = multiplicity(pad(lam, n), 0)
        builder = lambda pp, lam=lam: nsym.e_partition(lam, n, pp)
        rep.check(
            f"norm lam={lam}",
            inner_product_0(E, builder, pn),
            nonsymmetric_ct_closed_form(m0, pn),
        )
    # one-sided full orthogonality: mu prec lam
    polys = {mu: nsym.e_composition(mu, n, pn) for mu in box}
    for lam in box:
        for mu in box:
            if mu != lam and comp_prec(mu, lam):
                builder = lambda pp, mu=mu: nsym.e_composition(mu, n, pp)
                rep.check(
                    f"<E_{lam}, E_{mu}> = 0 (mu prec lam)",
                    inner_product_0(polys[lam], builder, pn),
                    Fraction(0),
                )
    return rep.data


def suite_application(seed: int, n_max: int = 2, weight_max: int = 4) -> dict:
    rng = random.Random(seed)
    rep = Report("application", seed)
    s, a, b = sample_application_point(rng)
    for n in range(1, n_max + 1):
        for lam in _partitions_with(weight_max, n):
            if sum(lam) > weight_max:
                continue
            val = sym.application_integral(lam, n, s, a, b)
            closed = sym.application_closed_form(lam, n, s, a, b)
            kind = "even" if closed else "odd-part vanishing"
            rep.check(f"specialized integral lam={lam} n={n} ({kind})", val, closed)
    return rep.data


SUITES = {
    "constant-terms": suite_constant_terms,
    "statistics": suite_statistics,
    "triangularity": suite_triangularity,
    "symmetric-orthogonality": suite_symmetric_orthogonality,
    "hecke": suite_hecke,
    "nonsym-orthogonality": suite_nonsym_orthogonality,
    "application": suite_application,
}


def run_suite(name: str, seed: int, **kwargs) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](seed, **kwargs)
