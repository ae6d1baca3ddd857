"""The nonsymmetric family at the Hall-Littlewood level of type BC.

For a partition index the polynomial is an explicit product; arbitrary
integer compositions are reached from the dominant representative through
the degree-preserving Hecke operators T_1..T_n of the Noumi polynomial
representation, one simple reflection at a time:

    T_i E_lam = p_i(lam) E_lam + q_i(lam) E_{s_i lam}.

The coefficient tables p_i, q_i are rational in the five parameters; a
step is legal whenever its q does not vanish, which holds generically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .ct_engine import GenericityError
from .ring import (
    LaurentPoly,
    ParameterPoint,
    dominant_weight,
    exact_laurent_divide,
    is_partition,
    pad,
)


# ---------------------------------------------------------------------------
# partition case
# ---------------------------------------------------------------------------


def e_partition(lam, n: int, params: ParameterPoint) -> LaurentPoly:
    """prod over nonzero parts of z_i^{k}(1 - c/z_i)(1 - d/z_i), expanded."""
    lam = pad(lam, n)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    c, d = params.c, params.d
    out = LaurentPoly.one(n)
    one = LaurentPoly.one(n)
    for i, k in enumerate(lam):
        if k > 0:
            zinv = LaurentPoly.variable(n, i, -1)
            out = out * LaurentPoly.variable(n, i, k) * (one - zinv.scale(c)) * (one - zinv.scale(d))
    return out


# ---------------------------------------------------------------------------
# Hecke operators (Noumi representation, q-free indices only)
# ---------------------------------------------------------------------------


def hecke_t(i: int, f: LaurentPoly, params: ParameterPoint) -> LaurentPoly:
    """Apply T_i (1 <= i <= n) to f.

    For i < n:  T_i f = t f + (x_{i+1} - t x_i) * (f^{s_i} - f)/(x_{i+1} - x_i);
    for i = n:  T_n f = -ab f + (1 - a x_n)(1 - b x_n) * (f^{s_n} - f)/(1 - x_n^2).
    Both divisions are exact because the numerators are antisymmetric under
    the respective reflection.
    """
    n = f.n
    if not 1 <= i <= n:
        raise ValueError(f"Hecke index {i} out of range 1..{n}")
    if i < n:
        swapped = f.exchange_variables(i - 1, i)
        diff = swapped - f
        if diff.is_zero:
            return f.scale(params.t)
        denom = LaurentPoly.variable(n, i) - LaurentPoly.variable(n, i - 1)
        quot = exact_laurent_divide(diff, denom)
        mult = LaurentPoly.variable(n, i) - LaurentPoly.variable(n, i - 1).scale(params.t)
        return f.scale(params.t) + mult * quot
    a, b = params.a, params.b
    flipped = f.invert_variable(n - 1)
    diff = flipped - f
    if diff.is_zero:
        return f.scale(-a * b)
    denom = LaurentPoly.one(n) - LaurentPoly.variable(n, n - 1, 2)
    quot = exact_laurent_divide(diff, denom)
    one = LaurentPoly.one(n)
    zn = LaurentPoly.variable(n, n - 1)
    mult = (one - zn.scale(a)) * (one - zn.scale(b))
    return f.scale(-a * b) + mult * quot


# ---------------------------------------------------------------------------
# recursion coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompositionStats:
    n_lambda: int
    r_lambda: int


def composition_stats(lam, i: int) -> CompositionStats:
    """The two statistics entering the recursion tables at index i.

    n_lambda = -#{l < i : lam_l in {-1, 0}} - 2#{l > i+1 : lam_l = 0} - 1
    r_lambda = m_{-1}(lam) + m_0(lam) - 1
    """
    lam = tuple(lam)
    n = len(lam)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    before = sum(1 for l in range(i - 1) if lam[l] in (-1, 0))
    after = sum(1 for l in range(i + 1, n) if lam[l] == 0)
    n_lam = -before - 2 * after - 1
    r_lam = sum(1 for x in lam if x in (-1, 0)) - 1
    return CompositionStats(n_lam, r_lam)


def pq_coefficients(lam, i: int, params: ParameterPoint) -> tuple[Fraction, Fraction]:
    """(p_i(lam), q_i(lam)) from the case tables of the recursion."""
    lam = tuple(lam)
    n = len(lam)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    t = params.t
    a, b, c, d = params.a, params.b, params.c, params.d
    abcd = a * b * c * d

    if i == n:
        ln = lam[-1]
        if ln in (1, -1):
            # Exponent statistic shared by the pair (..,1) <-> (..,-1): the
            # count of entries -1 or 0 strictly before the last position.
            # Derived from the Hecke action and pinned independently by the
            # Gram-orthogonality construction in the test suite.
            te = t ** sum(1 for x in lam[:-1] if x in (-1, 0))
        if ln < -1:
            return -a * b - 1, -a * b
        if ln == -1:
            return -a * b - 1 + abcd * te, -a * b
        if ln == 0:
            return -a * b, Fraction(0)
        if ln == 1:
            return -abcd * te, (1 - c * d * te) * (1 - abcd * te)
        return Fraction(0), Fraction(1)  # ln > 1

    x, y = lam[i - 1], lam[i]
    if x == y:
        return t, Fraction(0)
    if x < y:
        if (x, y) == (-1, 0):
            nl = composition_stats(lam, i).n_lambda
            den = abcd - t**nl
            if not den:
                raise GenericityError(f"abcd - t^{nl} vanishes in p_{i}({lam})")
            return (1 - t) * t**nl / den, t
        return t - 1, t
    if (x, y) == (0, -1):
        nl = composition_stats(lam, i).n_lambda
        den = abcd - t**nl
        if not den:
            raise GenericityError(f"abcd - t^{nl} vanishes in p_{i}({lam})")
        p = (t - 1) * abcd / den
        q = 1 - (1 - t) ** 2 * abcd * t ** (nl - 1) / den**2
        return p, q
    return Fraction(0), Fraction(1)


# ---------------------------------------------------------------------------
# words from the dominant representative
# ---------------------------------------------------------------------------


def _apply_s(mu, i: int):
    mu = list(mu)
    if i == len(mu):
        mu[-1] = -mu[-1]
    else:
        mu[i - 1], mu[i] = mu[i], mu[i - 1]
    return tuple(mu)


def straightening_word(mu) -> list[int]:
    """Indices i with s_{i_k}...s_{i_1} mu = mu+ (applied left to right).

    Sign-fix first (flip a negative last entry), then the smallest strict
    ascent; every step changes the composition, so the reversed word is a
    legal recursion path from mu+ down to mu.
    """
    cur = tuple(mu)
    n = len(cur)
    word = []
    while True:
        if cur[-1] < 0:
            word.append(n)
            cur = _apply_s(cur, n)
            continue
        asc = next((k for k in range(n - 1) if cur[k] < cur[k + 1]), None)
        if asc is None:
            break
        word.append(asc + 1)
        cur = _apply_s(cur, asc + 1)
    assert cur == dominant_weight(mu)
    return word


def geodesic_word(mu, prefer_large: bool = False) -> list[int]:
    """A shortest word from mu+ to mu via breadth-first search, returned in
    the same applied-to-mu convention as `straightening_word`.

    Exponential in n; used to exercise word independence at small rank.
    """
    mu = tuple(mu)
    n = len(mu)
    start = dominant_weight(mu)
    indices = range(n, 0, -1) if prefer_large else range(1, n + 1)
    parent = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == mu:
            break
        for i in indices:
            nxt = _apply_s(cur, i)
            if nxt != cur and nxt not in parent:
                parent[nxt] = (cur, i)
                queue.append(nxt)
    if mu not in parent:
        raise AssertionError("composition not reachable from its dominant weight")
    path = []
    cur = mu
    while parent[cur] is not None:
        prev, i = parent[cur]
        path.append(i)
        cur = prev
    # path holds the labels from mu back to mu+, which is exactly the
    # applied-to-mu order.
    return path


def e_composition(mu, n: int, params: ParameterPoint, word=None) -> LaurentPoly:
    """The family member indexed by an arbitrary composition.

    Starting from the dominant representative, repeatedly solve
    E_{s_i lam} = (T_i E_lam - p_i(lam) E_lam) / q_i(lam) along the given
    word (default: the canonical straightening word).  The result is
    independent of the word; a vanishing q_i raises GenericityError.
    """
    mu = pad(mu, n)
    if word is None:
        word = straightening_word(mu)
    cur = dominant_weight(mu)
    poly = e_partition(cur, n, params)
    for i in reversed(word):
        nxt = _apply_s(cur, i)
        if nxt == cur:
            raise ValueError(f"word step s_{i} fixes {cur}")
        p, q = pq_coefficients(cur, i, params)
        if not q:
            raise GenericityError(f"q_{i}({cur}) vanishes at this parameter point")
        poly = (hecke_t(i, poly, params) - poly.scale(p)).scale(1 / q)
        cur = nxt
    if cur != mu:
        raise AssertionError("word does not connect the dominant weight to mu")
    return poly


# ---------------------------------------------------------------------------
# relation checks
# ---------------------------------------------------------------------------


def _random_poly(rng, n: int) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        e = tuple(rng.randint(-2, 2) for _ in range(n))
        terms[e] = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
    return LaurentPoly(n, terms)


def verify_hecke_relations(n: int, params: ParameterPoint, trials: int = 10, seed: int = 0) -> dict:
    """Check the braid, commutation, and quadratic relations of T_1..T_n on
    random Laurent polynomials.  Returns {"checked": k, "failures": [...]}.
    """
    import random

    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    t, a, b = params.t, params.a, params.b
    checked = 0
    failures = []

    def check(name, ok):
        nonlocal checked
        checked += 1
        if not ok:
            failures.append(name)

    T = lambda i, f: hecke_t(i, f, params)
    for trial in range(trials):
        f = _random_poly(rng, n)
        for i in range(1, n):
            quad = T(i, T(i, f)) - T(i, f).scale(t - 1) - f.scale(t)
            check(f"(T_{i}+1)(T_{i}-t) trial {trial}", quad.is_zero)
        quad_n = T(n, T(n, f)) + T(n, f).scale(1 + a * b) + f.scale(a * b)
        check(f"(T_{n}+1)(T_{n}+ab) trial {trial}", quad_n.is_zero)
        for i in range(1, n - 1):
            braid = T(i, T(i + 1, T(i, f))) - T(i + 1, T(i, T(i + 1, f)))
            check(f"T_{i}T_{i+1}T_{i}=T_{i+1}T_{i}T_{i+1} trial {trial}", braid.is_zero)
        if n >= 2:
            i = n - 1
            lhs4 = T(i, T(n, T(i, T(n, f))))
            rhs4 = T(n, T(i, T(n, T(i, f))))
            check(f"length-4 braid at {i},{n} trial {trial}", (lhs4 - rhs4).is_zero)
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                comm = T(i, T(j, f)) - T(j, T(i, f))
                check(f"T_{i}T_{j}=T_{j}T_{i} trial {trial}", comm.is_zero)
    return {"checked": checked, "failures": failures}
