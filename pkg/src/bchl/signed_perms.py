"""The hyperoctahedral group B_n of signed permutations.

An element is a permutation rho of {0..n-1} together with a sign for each
slot; it rewrites the variable word as z_{rho(0)}^{eps(0)} ... and acts on
Laurent monomials accordingly.  Statistics used by the monicity and norm
identities of the type-BC Hall-Littlewood family live here too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .ring import LaurentPoly, pad


@dataclass(frozen=True)
class SignedPermutation:
    rho: tuple[int, ...]  # slot i displays variable rho[i] (zero-based)
    eps: tuple[int, ...]  # sign carried by slot i, +1 or -1

    def __post_init__(self):
        n = len(self.rho)
        if sorted(self.rho) != list(range(n)) or len(self.eps) != n:
            raise ValueError("invalid signed permutation data")
        if any(s not in (1, -1) for s in self.eps):
            raise ValueError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.rho)

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple(range(n)), (1,) * n)

    def __matmul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (self @ other)(f) = self(other(f))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        rho = tuple(self.rho[other.rho[i]] for i in range(self.n))
        eps = tuple(self.eps[other.rho[i]] * other.eps[i] for i in range(self.n))
        return SignedPermutation(rho, eps)

    def inverse(self) -> "SignedPermutation":
        rho = [0] * self.n
        eps = [1] * self.n
        for i, v in enumerate(self.rho):
            rho[v] = i
            eps[v] = self.eps[i]
        return SignedPermutation(tuple(rho), tuple(eps))

    def position_of(self, v: int) -> int:
        """Slot at which variable v appears in the word."""
        return self.rho.index(v)

    def sign_on_variable(self, v: int) -> int:
        return self.eps[self.position_of(v)]

    def sign(self) -> int:
        """Determinant of the signed permutation matrix."""
        inv = 0
        r = self.rho
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if r[i] > r[j]:
                    inv += 1
        s = -1 if inv % 2 else 1
        for e in self.eps:
            s *= e
        return s

    def act_on_exponents(self, exps) -> tuple[int, ...]:
        """Image exponent vector of the monomial z^exps."""
        out = [0] * self.n
        for i, e in enumerate(exps):
            out[self.rho[i]] = self.eps[i] * e
        return tuple(out)


def apply_signed_perm(w: SignedPermutation, f: LaurentPoly) -> LaurentPoly:
    """Permute and sign-invert the variables of f according to w."""
    if w.n != f.n:
        raise ValueError("size mismatch between permutation and polynomial")
    return f.map_exponents(w.act_on_exponents)


def enumerate_bn(n: int):
    """All 2^n n! elements, deterministically ordered.

    Order is lexicographic in (one-line word, sign vector with +1 first).
    """
    if not 1 <= n <= 8:
        raise ValueError("n out of range (1..8)")
    for rho in itertools.permutations(range(n)):
        for eps in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(rho, eps)


def bn_order(n: int) -> int:
    out = 2**n
    for k in range(2, n + 1):
        out *= k
    return out


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------


def stat_n(w: SignedPermutation) -> int:
    """Count pairs i < j whose variables appear out of order in the word."""
    pos = [0] * w.n
    for slot, v in enumerate(w.rho):
        pos[v] = slot
    count = 0
    for i in range(w.n):
        for j in range(i + 1, w.n):
            if pos[j] < pos[i]:
                count += 1
    return count


def negative_sets(lam, w: SignedPermutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(N0, N1): variables with sign -1 sitting at zero-part / one-part slots.

    lam must be a partition padded to w.n; part-1 positions are
    n-m0-m1 .. n-m0-1 and part-0 positions are n-m0 .. n-1 (zero-based).
    """
    n = w.n
    lam = pad(lam, n)
    m0 = sum(1 for x in lam if x == 0)
    m1 = sum(1 for x in lam if x == 1)
    n0, n1 = [], []
    for v in range(n):
        if w.sign_on_variable(v) == -1:
            if n - m0 <= v:
                n0.append(v)
            elif n - m0 - m1 <= v:
                n1.append(v)
    return tuple(n0), tuple(n1)


def stat_c(lam, w: SignedPermutation) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """c_lambda(w) together with the sets (N0, N1) it counts over."""
    n0, n1 = negative_sets(lam, w)
    neg = set(n0) | set(n1)
    pos = [0] * w.n
    for slot, v in enumerate(w.rho):
        pos[v] = slot
    c = 0
    for i in range(w.n):
        if i not in neg:
            continue
        for j in range(i + 1, w.n):
            if pos[i] < pos[j]:
                c += 1
    return c, n0, n1


def special_subsets(lam, n: int):
    """(P, B): the permutations fixing z^lam with constrained signs.

    Both lists require the underlying permutation to preserve the exponent
    pattern (lam[rho(i)] = lam[i]); P additionally forces sign +1 on every
    variable at a slot with part >= 2, while B forces sign -1 there.
    """
    lam = pad(lam, n)
    hi = sum(1 for x in lam if x >= 2)
    p_set, b_set = [], []
    for w in enumerate_bn(n):
        if any(lam[w.rho[i]] != lam[i] for i in range(n)):
            continue
        signs = [w.sign_on_variable(v) for v in range(hi)]
        if all(s == 1 for s in signs):
            p_set.append(w)
        if all(s == -1 for s in signs):
            b_set.append(w)
    return p_set, b_set


def sum_over_sn(n: int, term) -> Fraction:
    """Sum term(w) over the subgroup of unsigned permutations."""
    total = Fraction(0)
    for rho in itertools.permutations(range(n)):
        total += term(SignedPermutation(rho, (1,) * n))
    return total
