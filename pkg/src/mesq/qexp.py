"""Symbolic q-series and Fourier expansions of multiple Eisenstein series.

QSeries is a truncated q-expansion with MzvElem coefficients.  The
building blocks are the multiple divisor generating series g (and its
E-scaled variant ghat) and the monotangent Lipschitz expansions.  A
multitangent with all entries >= 2 reduces to a zeta-linear combination
of monotangents; applied blockwise to the ordered-sum expansion this
expresses ghat* on H^2 through ghat, and convolving with the zeta symbol
map yields the Fourier expansion of the multiple Eisenstein series.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .mzv import DEFAULT_CONFIG, MzvElem, NumericConfig
from .words import check_index, subspace_of


class QSeries:
    """q-expansion truncated at order nmax, with MzvElem coefficients."""

    __slots__ = ("nmax", "const", "_coeffs")

    def __init__(self, nmax: int, const=None, coeffs=None):
        if nmax < 1:
            raise ValueError("nmax must be >= 1")
        self.nmax = nmax
        self.const = const if const is not None else MzvElem.zero()
        d = {}
        if coeffs:
            for n, c in coeffs.items():
                if 1 <= n <= nmax and c:
                    d[n] = c
        self._coeffs = d

    @classmethod
    def constant(cls, c, nmax: int) -> "QSeries":
        if isinstance(c, (int, Fraction)):
            c = MzvElem.rational(c)
        return cls(nmax, const=c)

    def coeff(self, n: int) -> MzvElem:
        if n == 0:
            return self.const
        if not 1 <= n <= self.nmax:
            raise IndexError(f"coefficient {n} beyond truncation {self.nmax}")
        return self._coeffs.get(n, MzvElem.zero())

    def __add__(self, other: "QSeries") -> "QSeries":
        nmax = min(self.nmax, other.nmax)
        d = {n: c for n, c in self._coeffs.items() if n <= nmax}
        for n, c in other._coeffs.items():
            if n <= nmax:
                d[n] = d.get(n, MzvElem.zero()) + c
        return QSeries(nmax, self.const + other.const, d)

    def __neg__(self) -> "QSeries":
        return QSeries(self.nmax, -self.const,
                       {n: -c for n, c in self._coeffs.items()})

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MzvElem)):
            return self.scale(other)
        nmax = min(self.nmax, other.nmax)
        d = {}
        for n1, c1 in list(self._coeffs.items()) + [(0, self.const)]:
            if n1 > nmax or not c1:
                continue
            for n2, c2 in list(other._coeffs.items()) + [(0, other.const)]:
                n = n1 + n2
                if n == 0 or n > nmax or not c2:
                    continue
                d[n] = d.get(n, MzvElem.zero()) + c1 * c2
        return QSeries(nmax, self.const * other.const, d)

    def scale(self, c) -> "QSeries":
        if isinstance(c, (int, Fraction)):
            c = MzvElem.rational(c)
        return QSeries(self.nmax, c * self.const,
                       {n: c * a for n, a in self._coeffs.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.nmax != other.nmax or self.const != other.const:
            return False
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self.coeff(n) == other.coeff(n) for n in keys)

    def truncate(self, nmax: int) -> "QSeries":
        return QSeries(min(nmax, self.nmax), self.const,
                       {n: c for n, c in self._coeffs.items() if n <= nmax})

    def items(self):
        return sorted(self._coeffs.items())

    def __str__(self):
        parts = [f"({self.const})"] if self.const else []
        for n, c in self.items():
            parts.append(f"({c})*q^{n}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"QSeries(nmax={self.nmax}, {self})"


# ---------------------------------------------------------------------------
# divisor-sum series and monotangents


@lru_cache(maxsize=None)
def _g_fractions(idx, nmax: int):
    """Exact coefficients of g(idx): sum over m_1 > ... > m_r > 0, n_i > 0
    of prod n_i^(k_i - 1)/(k_i - 1)! at q^(sum m_i n_i)."""
    r = len(idx)
    # S[j] accumulates the inner sum for positions j..r with m_j < current m
    S = [[Fraction(0)] * (nmax + 1) for _ in range(r + 2)]
    S[r + 1][0] = Fraction(1)
    fact = [Fraction(1, math.factorial(k - 1)) for k in idx]
    for m in range(1, nmax + 1):
        for j in range(1, r + 1):
            kj = idx[j - 1]
            inner = S[j + 1]
            tgt = S[j]
            for t in range(1, nmax // m + 1):
                c = Fraction(t ** (kj - 1)) * fact[j - 1]
                base = m * t
                for s in range(0, nmax - base + 1):
                    if inner[s]:
                        tgt[base + s] += c * inner[s]
    return tuple(S[1])


def g_series(idx, nmax: int, hat: bool = False) -> QSeries:
    """Multiple divisor generating series; hat=True scales by E^weight."""
    check_index(idx)
    if not idx:
        return QSeries.constant(1, nmax)
    fracs = _g_fractions(tuple(idx), nmax)
    e = sum(idx) if hat else 0
    coeffs = {n: MzvElem.e_power(e, c) for n, c in enumerate(fracs) if n and c}
    return QSeries(nmax, coeffs=coeffs)


def ghat_series(idx, nmax: int) -> QSeries:
    return g_series(idx, nmax, hat=True)


def monotangent_series(k: int, m: int, nmax: int) -> QSeries:
    """Lipschitz expansion of the weight-k monotangent at m*tau.

    Coefficient of q^(m d) is E^k d^(k-1)/(k-1)!.  Weight 1 has no
    expansion of this shape and is rejected; its contributions must
    cancel upstream.
    """
    if k < 2:
        raise ValueError("monotangent expansion requires weight >= 2")
    if m < 1:
        raise ValueError("m must be >= 1")
    fact = Fraction(1, math.factorial(k - 1))
    coeffs = {}
    for d in range(1, nmax // m + 1):
        coeffs[m * d] = MzvElem.e_power(k, Fraction(d ** (k - 1)) * fact)
    return QSeries(nmax, coeffs=coeffs)


# ---------------------------------------------------------------------------
# multitangent reduction


class ReductionError(ArithmeticError):
    """Raised when the weight-one coefficient fails to vanish numerically."""


def _reduction_terms(idx):
    """All (l, MzvElem) contributions of the monotangent reduction,
    including the weight-one slot."""
    r = len(idx)
    k = sum(idx)
    out = {}
    for j in range(1, r + 1):
        others = [idx[i] for i in range(r) if i != j - 1]
        ranges = [range(ki, k + 1) for ki in others]
        for ls in itertools.product(*ranges):
            lj = k - sum(ls)
            if lj < 1:
                continue
            full = list(ls[: j - 1]) + [lj] + list(ls[j - 1:])
            sign = (-1) ** (sum(full[: j - 1]) + idx[j - 1] + k)
            coef = Fraction(1)
            for li, ki in zip(ls, others):
                coef *= math.comb(li - 1, ki - 1)
            if not coef:
                continue
            left = tuple(full[: j - 1])
            right = tuple(reversed(full[j:]))
            term = MzvElem.zeta(left) * MzvElem.zeta(right) * (sign * coef)
            out[lj] = out.get(lj, MzvElem.zero()) + term
    return {l: c for l, c in out.items() if c}


@lru_cache(maxsize=None)
def multitangent_reduce(idx, tol: float = 1e-8):
    """Write a multitangent (all entries >= 2) over monotangents.

    Returns {l: MzvElem} with l >= 2.  The weight-one coefficient is
    evaluated numerically and must vanish; it is then dropped.
    """
    check_index(idx)
    if not idx:
        raise ValueError("empty index has no monotangent reduction")
    if subspace_of(idx) != "H2":
        raise ValueError(f"index not in H^2 (needs all entries >= 2): {idx}")
    terms = _reduction_terms(idx)
    psi1 = terms.pop(1, MzvElem.zero())
    dev = abs(psi1.eval(NumericConfig(tolerance=max(tol, 1e-10))))
    if dev > tol:
        raise ReductionError(
            f"weight-one monotangent coefficient does not vanish for {idx}: "
            f"|coeff| = {dev:.3e}")
    return terms


def _compositions(idx):
    """Splittings of idx into nonempty consecutive blocks."""
    r = len(idx)
    for cuts in itertools.product([False, True], repeat=r - 1):
        blocks = []
        start = 0
        for i, cut in enumerate(cuts):
            if cut:
                blocks.append(idx[start:i + 1])
                start = i + 1
        blocks.append(idx[start:])
        yield blocks


@lru_cache(maxsize=None)
def gstar_terms(idx):
    """ghat*(idx) as {ghat index: MzvElem coefficient}, for idx in H^2.

    Each composition block is a multitangent; after reduction the
    ordered sums over m_1 > ... > m_j collapse into ghat series.
    """
    check_index(idx)
    if not idx:
        return {(): MzvElem.one()}
    if subspace_of(idx) != "H2":
        raise ValueError(f"index not in H^2: {idx}")
    out = {}
    for blocks in _compositions(idx):
        reduced = [multitangent_reduce(b) for b in blocks]
        for choice in itertools.product(*(sorted(r.items()) for r in reduced)):
            gidx = tuple(l for l, _ in choice)
            coef = MzvElem.one()
            for _, c in choice:
                coef = coef * c
            out[gidx] = out.get(gidx, MzvElem.zero()) + coef
    return {g: c for g, c in out.items() if c}


def gstar_series(idx, nmax: int):
    """Symbolic ghat* combination and its numeric q-expansion."""
    terms = gstar_terms(idx)
    qs = QSeries.constant(0, nmax)
    for gidx, c in sorted(terms.items()):
        qs = qs + ghat_series(gidx, nmax).scale(c)
    return terms, qs


# ---------------------------------------------------------------------------
# Fourier expansion


@dataclass(frozen=True)
class FourierExpansion:
    """zeta(k) + sum alpha * zeta(left) * ghat(right) + ghat(k)."""

    index: tuple
    middle: tuple = field(default_factory=tuple)  # (alpha, zeta_idx, g_idx)

    def q_series(self, nmax: int) -> QSeries:
        qs = QSeries.constant(MzvElem.zeta(self.index), nmax)
        for alpha, zidx, gidx in self.middle:
            c = MzvElem.zeta(zidx, alpha)
            qs = qs + ghat_series(gidx, nmax).scale(c)
        qs = qs + ghat_series(self.index, nmax)
        return qs

    def to_json(self):
        return {
            "index": list(self.index),
            "zeta_term": list(self.index),
            "middle": [
                {"alpha": a, "zeta_index": list(z), "g_index": list(g)}
                for a, z, g in self.middle
            ],
            "g_term": list(self.index),
        }

    def __str__(self):
        def z(idx):
            return "zeta(" + ",".join(map(str, idx)) + ")"

        def gh(idx):
            return "ghat(" + ",".join(map(str, idx)) + ")"

        parts = [z(self.index)]
        for a, zi, gi in self.middle:
            pre = "" if a == 1 else f"{a}*"
            parts.append(f"{pre}{z(zi)}*{gh(gi)}")
        parts.append(gh(self.index))
        return " + ".join(parts)


@lru_cache(maxsize=None)
def fourier_expansion(idx) -> FourierExpansion:
    """Structured Fourier expansion of the multiple Eisenstein series."""
    check_index(idx)
    if not idx or subspace_of(idx) != "H2":
        raise ValueError(f"index not in H^2: {idx}")
    r = len(idx)
    total = {}
    for i in range(r + 1):
        u, v = idx[:i], idx[i:]
        zv = MzvElem.zeta(v)
        for gidx, c in gstar_terms(u).items():
            total[gidx] = total.get(gidx, MzvElem.zero()) + c * zv
    total = {g: c for g, c in total.items() if c}
    if total.get((), MzvElem.zero()) != MzvElem.zeta(idx):
        raise AssertionError("constant part is not the zeta symbol")
    if total.get(idx, MzvElem.zero()) != MzvElem.one():
        raise AssertionError("pure ghat part does not have coefficient 1")
    middle = []
    for gidx, c in sorted(total.items()):
        if gidx == () or gidx == idx:
            continue
        for (zidx, e), coef in c.items():
            if e != 0:
                raise AssertionError(f"unexpected E power in middle term {gidx}")
            if coef.denominator != 1:
                raise AssertionError(
                    f"non-integer alpha {coef} at zeta{zidx}*ghat{gidx}")
            middle.append((int(coef), zidx, gidx))
    return FourierExpansion(idx, tuple(sorted(middle, key=lambda t: (t[2], t[1]))))
