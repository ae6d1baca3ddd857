"""Exact arithmetic core: rationals, parameter points, compositions,
and multivariate Laurent polynomials.

Coefficients are `fractions.Fraction` throughout; exponent vectors are
fixed-length integer tuples (negative entries allowed).  Everything is
immutable after construction and all operations are pure, so every object
in this module is safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

ExpVec = tuple[int, ...]


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent division that was expected to be exact is not."""


class ModulusError(ValueError):
    """Raised when a parameter violates the |x| < 1 constraint of an integral."""


def fraction_str(q: Fraction) -> str:
    """Canonical fraction string: lowest terms, no '/1' suffix."""
    return str(q)


def parse_fraction(s: str) -> Fraction:
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# compositions and partitions
# ---------------------------------------------------------------------------
#
# Compositions are plain integer tuples; partitions are weakly decreasing
# tuples of non-negative integers.  All helpers treat the tuple length as the
# ambient rank n (trailing zeros are significant for multiplicity counts).


def is_partition(mu) -> bool:
    mu = tuple(mu)
    return all(x >= 0 for x in mu) and all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1))


def pad(mu, n: int) -> ExpVec:
    mu = tuple(mu)
    if len(mu) > n:
        raise ValueError(f"composition {mu} longer than n={n}")
    return mu + (0,) * (n - len(mu))


def weight(mu) -> int:
    return sum(mu)


def nonzero_length(lam) -> int:
    """Number of nonzero parts, l(lambda)."""
    return sum(1 for x in lam if x != 0)


def multiplicity(lam, k: int) -> int:
    """m_k(lambda): number of parts equal to k."""
    return sum(1 for x in lam if x == k)


def dominant_weight(mu) -> ExpVec:
    """The unique partition in the signed-permutation orbit of mu (mu+)."""
    return tuple(sorted((abs(x) for x in mu), reverse=True))


def dominance_le(mu, lam) -> bool:
    """Dominance order: every prefix sum of mu is bounded by that of lam."""
    if len(mu) != len(lam):
        raise ValueError("length mismatch")
    s, t = 0, 0
    for x, y in zip(mu, lam):
        s += x
        t += y
        if s > t:
            return False
    return True


def dominance_lt(mu, lam) -> bool:
    return tuple(mu) != tuple(lam) and dominance_le(mu, lam)


def lex_le(mu, lam) -> bool:
    """Reverse lexicographic: mu = lam or the first nonzero lam_i - mu_i is positive."""
    for x, y in zip(mu, lam):
        if y != x:
            return y > x
    return True


def comp_prec(mu, lam) -> bool:
    """The composition order: compare dominant rearrangements first, then dominance."""
    mu, lam = tuple(mu), tuple(lam)
    if mu == lam:
        return False
    mp, lp = dominant_weight(mu), dominant_weight(lam)
    if mp == lp:
        return dominance_le(mu, lam)
    return dominance_lt(mp, lp)


# ---------------------------------------------------------------------------
# parameter points
# ---------------------------------------------------------------------------


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ParameterPoint:
    """Exact rational values for (t; t0..t3) plus the scaling pair (a, b).

    The six-parameter symmetric family uses all of (t; a, b; t0..t3); the
    five-parameter nonsymmetric family identifies (a, b, c, d) = (t0..t3),
    with c and d exposed as aliases.  Zero entries are legal and simply drop
    the factors they govern; nonzero entries must satisfy |x| < 1 whenever
    the point is used to build a torus density (`require_unit_moduli`).
    Inverted points (every nonzero entry replaced by its reciprocal) are
    representable and exempt from the modulus constraint.
    """

    t: Fraction
    t0: Fraction
    t1: Fraction
    t2: Fraction
    t3: Fraction
    a: Fraction
    b: Fraction

    @staticmethod
    def symmetric(t, t0, t1, t2, t3, a=None, b=None) -> "ParameterPoint":
        """Six-parameter mode; the scaling pair defaults to (t0, t1)."""
        t0, t1 = _frac(t0), _frac(t1)
        a = t0 if a is None else _frac(a)
        b = t1 if b is None else _frac(b)
        return ParameterPoint(_frac(t), t0, t1, _frac(t2), _frac(t3), a, b)

    @staticmethod
    def nonsymmetric(t, a, b, c, d) -> "ParameterPoint":
        """Five-parameter mode: (t0..t3) mirrors (a, b, c, d)."""
        a, b = _frac(a), _frac(b)
        return ParameterPoint(_frac(t), a, b, _frac(c), _frac(d), a, b)

    @property
    def c(self) -> Fraction:
        return self.t2

    @property
    def d(self) -> Fraction:
        return self.t3

    @property
    def quadruple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.t0, self.t1, self.t2, self.t3)

    def inverted(self) -> "ParameterPoint":
        """Reciprocal of every nonzero entry (zero entries stay zero)."""
        inv = lambda x: 1 / x if x else x
        return ParameterPoint(*(inv(getattr(self, f)) for f in ("t", "t0", "t1", "t2", "t3", "a", "b")))

    def require_unit_moduli(self, fields=("t", "t0", "t1", "t2", "t3")) -> None:
        for f in fields:
            x = getattr(self, f)
            if abs(x) >= 1:
                raise ModulusError(f"parameter {f}={x} must have |{f}| < 1")


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """A Laurent polynomial in n variables with Fraction coefficients.

    Stored as a mapping from exponent vectors (length-n int tuples) to
    nonzero coefficients.  Treat instances as immutable.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "LaurentPoly":
        return LaurentPoly(n)

    @staticmethod
    def constant(n: int, value) -> "LaurentPoly":
        value = _frac(value)
        return LaurentPoly(n, {(0,) * n: value} if value else {})

    @staticmethod
    def one(n: int) -> "LaurentPoly":
        return LaurentPoly.constant(n, 1)

    @staticmethod
    def monomial(n: int, exps, coeff=1) -> "LaurentPoly":
        coeff = _frac(coeff)
        e = tuple(exps)
        if len(e) != n:
            raise ValueError("exponent vector has wrong length")
        return LaurentPoly(n, {e: coeff} if coeff else {})

    @staticmethod
    def variable(n: int, v: int, power: int = 1) -> "LaurentPoly":
        """z_v**power with v zero-based."""
        e = [0] * n
        e[v] = power
        return LaurentPoly.monomial(n, e)

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_coefficient(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.n in self.terms)

    def min_degree(self, v: int) -> int:
        """Smallest exponent of z_v appearing (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return min(e[v] for e in self.terms)

    def max_degree(self, v: int) -> int:
        if not self.terms:
            return 0
        return max(e[v] for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.n, other)
        if self.n != other.n:
            raise ValueError("variable-count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly(self.n)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly(self.n)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        if self.n != other.n:
            raise ValueError("variable-count mismatch")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e)
                s = ca * cb if s is None else s + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = LaurentPoly(self.n)
        r.terms = out
        return r

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "LaurentPoly":
        c = _frac(c)
        r = LaurentPoly(self.n)
        if c:
            r.terms = {e: c * v for e, v in self.terms.items()}
        return r

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- exponent transformations --------------------------------------------

    def map_exponents(self, fn) -> "LaurentPoly":
        out: dict = {}
        for e, c in self.terms.items():
            e2 = fn(e)
            s = out.get(e2)
            s = c if s is None else s + c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        r = LaurentPoly(self.n)
        r.terms = out
        return r

    def exchange_variables(self, i: int, j: int) -> "LaurentPoly":
        """Swap z_i and z_j (zero-based)."""

        def swap(e):
            l = list(e)
            l[i], l[j] = l[j], l[i]
            return tuple(l)

        return self.map_exponents(swap)

    def invert_variable(self, v: int) -> "LaurentPoly":
        """Substitute z_v -> 1/z_v."""

        def flip(e):
            l = list(e)
            l[v] = -l[v]
            return tuple(l)

        return self.map_exponents(flip)

    def invert_all_variables(self) -> "LaurentPoly":
        return self.map_exponents(lambda e: tuple(-x for x in e))

    def substitute(self, v: int, alpha: Fraction, mono: ExpVec) -> "LaurentPoly":
        """Substitute z_v -> alpha * z^mono (mono must have zero v-entry)."""
        out: dict = {}
        for e, c in self.terms.items():
            k = e[v]
            c2 = c * alpha**k
            e2 = list(e)
            e2[v] = 0
            if k:
                e2 = [x + k * m for x, m in zip(e2, mono)]
            e2 = tuple(e2)
            s = out.get(e2)
            s = c2 if s is None else s + c2
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        r = LaurentPoly(self.n)
        r.terms = out
        return r

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exp": list(e), "coeff": fraction_str(c)} for e, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "LaurentPoly":
        n = int(d["n"])
        terms = {tuple(t["exp"]): parse_fraction(t["coeff"]) for t in d["terms"]}
        return LaurentPoly(n, terms)

    def format_text(self, names=None) -> str:
        """Human-readable rendering, e.g. 'z1^2 - 8/15*z1 + 1/15'."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"z{i + 1}" for i in range(self.n)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k != 0
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({self.n}, {self.format_text()})"


# ---------------------------------------------------------------------------
# exact Laurent division
# ---------------------------------------------------------------------------


def _content_shift(f: LaurentPoly) -> ExpVec:
    """Per-variable minimum exponent over the support."""
    its = iter(f.terms)
    lo = list(next(its))
    for e in its:
        for i, x in enumerate(e):
            if x < lo[i]:
                lo[i] = x
    return tuple(lo)


def exact_laurent_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return q with q*g = f, exactly, in the Laurent ring.

    Both operands are shifted by their content monomials to ordinary
    polynomials and reduced against the lexicographically leading term of g;
    a nonzero remainder raises InexactDivisionError.
    """
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.n != g.n:
        raise ValueError("variable-count mismatch")
    if f.is_zero:
        return LaurentPoly.zero(f.n)

    fs = _content_shift(f)
    gs = _content_shift(g)
    rem = {tuple(x - s for x, s in zip(e, fs)): c for e, c in f.terms.items()}
    gnorm = {tuple(x - s for x, s in zip(e, gs)): c for e, c in g.terms.items()}
    glead = max(gnorm)
    glc = gnorm[glead]
    gtail = [(e, c) for e, c in gnorm.items() if e != glead]

    shift = tuple(a - b for a, b in zip(fs, gs))
    q: dict = {}
    while rem:
        rlead = max(rem)
        diff = tuple(a - b for a, b in zip(rlead, glead))
        if any(d < 0 for d in diff):
            raise InexactDivisionError("nonzero remainder in exact Laurent division")
        coeff = rem.pop(rlead) / glc
        q[tuple(a + b for a, b in zip(diff, shift))] = coeff
        for e, c in gtail:
            e2 = tuple(a + b for a, b in zip(diff, e))
            s = rem.get(e2, Fraction(0)) - coeff * c
            if s:
                rem[e2] = s
            else:
                rem.pop(e2, None)
    return LaurentPoly(f.n, q)


def laurent_divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    try:
        exact_laurent_divide(f, g)
        return True
    except InexactDivisionError:
        return False


# ---------------------------------------------------------------------------
# hyperoctahedral monomial orbit sums
# ---------------------------------------------------------------------------


def monomial_orbit_sum(lam, n: int) -> LaurentPoly:
    """m_lambda: the sum of z^mu over the distinct signed permutations of lam.

    Each orbit element carries coefficient one, so the sum is monic at z^lam.
    """
    lam = pad(lam, n)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    orbit = set()
    for perm in set(itertools.permutations(lam)):
        support = [i for i, x in enumerate(perm) if x != 0]
        for signs in itertools.product((1, -1), repeat=len(support)):
            e = list(perm)
            for i, s in zip(support, signs):
                e[i] *= s
            orbit.add(tuple(e))
    return LaurentPoly(n, {e: Fraction(1) for e in orbit})
