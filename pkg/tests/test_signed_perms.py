import itertools
import random
from fractions import Fraction as F

import pytest

from bchl.sampling import distinct_fractions
from bchl.signed_perms import (
    SignedPermutation,
    bn_order,
    enumerate_bn,
    negative_sets,
    special_subsets,
    stat_c,
    stat_n,
)


def test_enumeration_counts():
    assert len(list(enumerate_bn(1))) == 2
    assert len(list(enumerate_bn(2))) == 8
    assert len(list(enumerate_bn(3))) == 48 == bn_order(3)


def test_enumeration_no_duplicates():
    for n in (1, 2, 3, 4):
        elems = list(enumerate_bn(n))
        assert len(set(elems)) == len(elems) == bn_order(n)


def test_enumeration_range_check():
    with pytest.raises(ValueError):
        list(enumerate_bn(0))


def test_stat_n_identity_and_reversal():
    assert stat_n(SignedPermutation.identity(4)) == 0
    # order-reversing word z4 z3 z2 z1: every pair is inverted
    rev = SignedPermutation((3, 2, 1, 0), (1, 1, 1, 1))
    assert stat_n(rev) == 6


def test_stat_n_ignores_signs():
    rng = random.Random(0)
    elems = list(enumerate_bn(3))
    for _ in range(20):
        w = rng.choice(elems)
        unsigned = SignedPermutation(w.rho, (1,) * 3)
        assert stat_n(w) == stat_n(unsigned)


def test_inversion_generating_function():
    # sum of t^{n(w)} over the unsigned subgroup is the t-factorial
    rng = random.Random(1)
    for m in (2, 3, 4, 5):
        for t in distinct_fractions(rng, 5):
            total = sum(
                (t ** stat_n(w) for w in enumerate_bn(m) if all(e == 1 for e in w.eps)),
                F(0),
            )
            expected = F(1)
            for j in range(1, m + 1):
                expected *= (1 - t**j) / (1 - t)
            assert total == expected


def test_stat_c_all_positive_signs():
    for w in enumerate_bn(2):
        if all(e == 1 for e in w.eps):
            c, n0, n1 = stat_c((1, 0), w)
            assert c == 0 and n0 == () and n1 == ()


def test_negative_sets_positions():
    # lam = (2, 1, 0): variable 1 is the one-part slot, variable 2 the zero-part slot
    w = SignedPermutation((0, 1, 2), (-1, -1, -1))
    n0, n1 = negative_sets((2, 1, 0), w)
    assert n0 == (2,) and n1 == (1,)


def test_one_part_statistic_identity():
    # with external zero-multiplicity shift: matches the product formula
    rng = random.Random(2)
    for m in (1, 2, 3, 4):
        for m0 in (0, 1, 2):
            t, t0, t1, t2, t3 = distinct_fractions(rng, 5)
            e4 = t0 * t1 * t2 * t3
            lam = (1,) * m
            lhs = F(0)
            for w in enumerate_bn(m):
                c, n0, n1 = stat_c(lam, w)
                lhs += t ** stat_n(w) * t ** (2 * c) * (-e4 * t ** (2 * m0)) ** len(n1)
            rhs = F(1)
            for j in range(1, m + 1):
                rhs *= (1 - t**j) / (1 - t) * (1 - e4 * t ** (j - 1 + 2 * m0))
            assert lhs == rhs, (m, m0)


def test_zero_part_statistic_identity():
    rng = random.Random(3)
    for m in (1, 2, 3, 4):
        t, a, b = distinct_fractions(rng, 3)
        lam = (0,) * m
        lhs = F(0)
        for w in enumerate_bn(m):
            c, n0, n1 = stat_c(lam, w)
            lhs += t ** stat_n(w) * t ** (2 * c) * (-a * b) ** len(n0)
        rhs = F(1)
        for j in range(1, m + 1):
            rhs *= (1 - t**j) / (1 - t) * (1 - a * b * t ** (j - 1))
        assert lhs == rhs, m


def test_special_subsets_forced():
    p_set, b_set = special_subsets((3, 2), 2)
    assert len(p_set) == 1
    w = p_set[0]
    assert w.rho == (0, 1) and w.eps == (1, 1)
    assert len(b_set) == 1
    assert b_set[0].eps == (-1, -1)


def test_special_subsets_zero_partition():
    p_set, _ = special_subsets((0, 0), 2)
    assert len(p_set) == 8


def test_special_subsets_cardinality_formula():
    # |P| = 2^{m0+m1} * prod_i m_i! over all distinct parts
    import math

    for lam, n in [((1, 1, 0), 3), ((2, 2, 0), 3), ((1, 0, 0), 3), ((2, 1), 2)]:
        lam_p = lam + (0,) * (n - len(lam))
        p_set, _ = special_subsets(lam_p, n)
        m = {i: lam_p.count(i) for i in set(lam_p)}
        expected = 2 ** (m.get(0, 0) + m.get(1, 0))
        for i, mult in m.items():
            expected *= math.factorial(mult)
        assert len(p_set) == expected, lam


def test_sign_is_multiplicative():
    rng = random.Random(4)
    elems = list(enumerate_bn(3))
    for _ in range(25):
        w1, w2 = rng.choice(elems), rng.choice(elems)
        assert (w1 @ w2).sign() == w1.sign() * w2.sign()
    for w in elems:
        assert (w @ w.inverse()) == SignedPermutation.identity(3)
