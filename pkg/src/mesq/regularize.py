"""Regularization: T-polynomials, decomposition of H^1 words, the rho map.

Every element of H^1 is uniquely a polynomial (for stuffle or shuffle)
in z_1 with coefficients in H^0.  The decomposition is computed by
induction on the number of leading z_1 letters: for w = z_1^a u with
u in H^0, the product z_1 * (z_1^(a-1) u) equals a*w plus words with
fewer leading ones, which solves for w.

Lifting a homomorphism f on H^0 through the decomposition gives its
T-polynomial extension to H^1; applied to the zeta symbol map this
yields the stuffle and shuffle regularized multiple zeta values.
The rho map compares the two regularizations.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from functools import lru_cache

from .hopf import apply_map, product_z
from .mzv import MzvElem
from .words import H1, FreePoly, check_index, subspace_of


def _is_zero(c) -> bool:
    z = getattr(c, "is_zero", None)
    if z is not None:
        return z
    return not c


class TPoly:
    """Polynomial in the regularization variable T over an arbitrary ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return TPoly(out)

    def __neg__(self) -> "TPoly":
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def scale(self, c) -> "TPoly":
        return TPoly([c * a for a in self.coeffs])

    def shift(self, n: int = 1) -> "TPoly":
        if not self.coeffs:
            return self
        first = self.coeffs[0]
        zero = first * 0 if not isinstance(first, (int, float, complex)) else 0
        return TPoly([zero] * n + self.coeffs)

    def map(self, fn) -> "TPoly":
        return TPoly([fn(c) for c in self.coeffs])

    def coeff(self, j):
        return self.coeffs[j] if j < len(self.coeffs) else None

    def eval_at(self, t):
        """Horner evaluation; coefficients must multiply with t's type."""
        total = None
        for c in reversed(self.coeffs):
            total = c if total is None else total * t + c
        if total is None:
            return 0
        return total

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            tv = "" if j == 0 else ("T" if j == 1 else f"T^{j}")
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            parts.append(cs if not tv else f"{cs}*{tv}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TPoly({self})"


def tpoly_mul(p: TPoly, q: TPoly, mul=operator.mul) -> TPoly:
    """Product of T-polynomials with a caller-supplied coefficient product."""
    if p.is_zero or q.is_zero:
        return TPoly([])
    out = [None] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            v = mul(a, b)
            out[i + j] = v if out[i + j] is None else out[i + j] + v
    return TPoly([c for c in out])


def _leading_ones(w) -> int:
    n = 0
    for k in w:
        if k != 1:
            break
        n += 1
    return n


@lru_cache(maxsize=None)
def _reg_word(w, mode) -> TPoly:
    a = _leading_ones(w)
    if a == 0:
        return TPoly([FreePoly.term(w)])
    wp = w[1:]
    p = product_z((1,), wp, mode)
    q = p - FreePoly.term(w, a)
    res = _reg_word(wp, mode).shift(1) - reg_decompose(q, mode)
    return res.scale(Fraction(1, a))


def reg_decompose(w, mode: str) -> TPoly:
    """Decompose an H^1 element as a T-polynomial with H^0 coefficients.

    Substituting z_1^(bullet j) for T^j and multiplying out with the
    chosen product reproduces the input exactly.
    """
    if mode not in ("stuffle", "shuffle"):
        raise ValueError(f"unknown mode: {mode!r}")
    if isinstance(w, tuple):
        check_index(w)
        return _reg_word(w, mode)
    if not isinstance(w, FreePoly):
        raise TypeError(f"expected index word or FreePoly, got {type(w)}")
    out = TPoly([])
    for word, c in w._terms.items():
        if subspace_of(word) not in ("H2", "H0", "H1"):
            raise ValueError(f"word not in H^1: {word}")
        out = out + _reg_word(word, mode).scale(c)
    return out


def reconstruct(p: TPoly, mode: str) -> FreePoly:
    """Inverse of reg_decompose: sum_j c_j bullet z_1^(bullet j)."""
    out = FreePoly.zero()
    z1pow = FreePoly.one()
    for j, c in enumerate(p.coeffs):
        if j > 0:
            z1pow = product_z(z1pow, FreePoly.term((1,)), mode)
        if _is_zero(c):
            continue
        out = out + apply_map(lambda w: product_z(FreePoly.term(w), z1pow, mode), c)
    return out


def lift_map(f, mode: str):
    """Lift a homomorphism on H^0 to H^1 with values in R[T]."""

    def lifted(w) -> TPoly:
        dec = reg_decompose(w, mode)
        return dec.map(lambda c: apply_map(f, c))

    return lifted


@lru_cache(maxsize=None)
def zeta_reg(w, mode: str) -> TPoly:
    """Stuffle or shuffle regularized multiple zeta value as MzvElem[T]."""
    dec = reg_decompose(w, mode)
    return dec.map(lambda c: apply_map(MzvElem.zeta, c) + MzvElem.zero())


def _weak_compositions(total, parts):
    """All tuples of `parts` integers >= 1 summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def antipode_mzv_combination(idx) -> TPoly:
    """Shuffle-regularized zeta combination from the antipode relation.

    For an index (k_1,...,k_r) of weight k, sums over slots j and
    redistributions (l_i)_{i != j} of weight k - 1 the products
    (-1)^e_j * prod binom(l_i-1, k_i-1) * zeta_sh(prefix) *
    zeta_sh(reversed suffix); the result vanishes identically for
    every index except the single-letter (1).
    """
    check_index(idx)
    r = len(idx)
    k = sum(idx)
    total = TPoly([])
    for j in range(1, r + 1):
        others = idx[:j - 1] + idx[j:]
        for ls in _weak_compositions(k - 1, r - 1):
            pre, post = ls[:j - 1], ls[j - 1:]
            coef = Fraction(1)
            for li, ki in zip(ls, others):
                if li < ki:
                    coef = 0
                    break
                coef *= math.comb(li - 1, ki - 1)
            if not coef:
                continue
            ej = sum(pre) + idx[j - 1]
            term = tpoly_mul(zeta_reg(pre, "shuffle"),
                             zeta_reg(post[::-1], "shuffle"))
            total = total + term.scale(Fraction((-1) ** ej) * coef)
    return total


# ---------------------------------------------------------------------------
# the rho map


@lru_cache(maxsize=None)
def rho_matrix(max_degree: int = 8):
    """rho(T^n) for n = 0..max_degree, read off the generating identity.

    The exponential generating series exp(T u + sum_{n>=2} (-1)^n/n
    zeta(n) u^n) is expanded with exact MzvElem[T] coefficients; the
    u^n coefficient times n! is rho(T^n).
    """
    deg = max_degree
    # Q[n] = u^n coefficient of the exponent, as a TPoly over MzvElem
    q = [TPoly([]) for _ in range(deg + 1)]
    if deg >= 1:
        q[1] = TPoly([MzvElem.zero(), MzvElem.one()])
    for n in range(2, deg + 1):
        q[n] = TPoly([MzvElem.zeta((n,), Fraction((-1) ** n, n))])
    # P = exp(Q), truncated at u^deg
    p = [TPoly([]) for _ in range(deg + 1)]
    p[0] = TPoly([MzvElem.one()])
    term = list(p)
    for j in range(1, deg + 1):
        nxt = [TPoly([]) for _ in range(deg + 1)]
        for i1 in range(deg + 1):
            if term[i1].is_zero:
                continue
            for i2 in range(1, deg + 1 - i1):
                if q[i2].is_zero:
                    continue
                nxt[i1 + i2] = nxt[i1 + i2] + tpoly_mul(term[i1], q[i2])
        term = [t.scale(Fraction(1, j)) for t in nxt]
        for n in range(deg + 1):
            p[n] = p[n] + term[n]
        if all(t.is_zero for t in term):
            break
    return tuple(p[n].scale(Fraction(math.factorial(n))) for n in range(deg + 1))


def rho_apply(p: TPoly) -> TPoly:
    """Apply rho to a T-polynomial with MzvElem coefficients."""
    if p.is_zero:
        return p
    mat = rho_matrix(max(8, p.degree))
    out = TPoly([])
    for j, c in enumerate(p.coeffs):
        if _is_zero(c):
            continue
        out = out + mat[j].map(lambda m: c * m)
    return out
