"""Complex-arithmetic evaluation of truncated and regularized objects.

Truncated sums (multiple Hurwitz zeta, multitangents, lattice Eisenstein
sums) are computed by a cumulative-sum dynamic program over the summation
points in increasing order; the strict ordering of the nested indices
becomes an exclusive prefix sum.  Limits of truncated sums are taken with
Richardson extrapolation over doubling cutoffs (the tails admit 1/N
expansions) or, when non-admissible inner entries introduce logarithms,
with a Hurwitz-zeta tail correction followed by iterated Aitken steps.

Regularized objects (zeta*, Psi*, ghat*, G*) are built from these through
the regularization decomposition and convolution products.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .mzv import DEFAULT_CONFIG, EvalError, NumericConfig
from .qexp import QSeries
from .regularize import reg_decompose, zeta_reg
from .words import FreePoly, check_index, subspace_of

TWO_PI_I = 2j * math.pi
EULER_GAMMA = 0.5772156649015328606


class DomainError(ArithmeticError):
    """A summand denominator vanished (pole on the summation range)."""


class ConvergenceError(ArithmeticError):
    """An adaptive limit failed to stabilize within its budget."""


@dataclass(frozen=True)
class EvalContext:
    """Evaluation parameters for truncated and regularized sums."""

    tau: complex = 1j
    N: int = 10 ** 4
    M: int = 40
    tolerance: float = 1e-8
    T_value: complex = 0.0
    adaptive: bool = True

    def __post_init__(self):
        if complex(self.tau).imag <= 0:
            raise ValueError("tau must lie in the upper half-plane")
        if self.N < 1 or self.M < 1:
            raise ValueError("cutoffs must be >= 1")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")

    def q_value(self) -> complex:
        return cmath.exp(2j * math.pi * complex(self.tau))


DEFAULT_CONTEXT = EvalContext()


def _nested_sum(lams: np.ndarray, idx) -> complex:
    """Sum of prod lam_i^(-k_i) over strictly decreasing tuples.

    `lams` must be listed in increasing order of the underlying total
    order; the outermost exponent k_1 attaches to the largest point.
    """
    if not idx:
        return 1.0 + 0j
    if np.any(np.abs(lams) < 1e-12):
        raise DomainError("pole on the summation range")
    t = lams ** float(-idx[-1])
    for k in reversed(idx[:-1]):
        excl = np.concatenate(([0], np.cumsum(t)[:-1]))
        t = lams ** float(-k) * excl
    return complex(np.sum(t))


def hurwitz_trunc(idx, x, N: int) -> complex:
    """Truncated multiple Hurwitz zeta: N > n_1 > ... > n_r > 0."""
    check_index(idx)
    if N < 1:
        raise ValueError("N must be >= 1")
    if not idx:
        return 1.0 + 0j
    lams = complex(x) + np.arange(1, N, dtype=float)
    return _nested_sum(lams, idx)


def zeta_minus_trunc(idx, x, N: int) -> complex:
    """Negative-range truncation: 0 > n_1 > ... > n_r > -N."""
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    lams = complex(x) + np.arange(-N + 1, 0, dtype=float)
    return _nested_sum(lams, idx)


def C_map(idx, x) -> complex:
    """The middle convolution factor: 1, x^-k, or 0 by depth."""
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    if len(idx) == 1:
        if x == 0:
            raise DomainError("C requires x != 0 in depth one")
        return complex(x) ** (-idx[0])
    return 0j


def multitangent_trunc(idx, x, N: int) -> complex:
    """Truncated multitangent: N > n_1 > ... > n_r > -N."""
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    lams = complex(x) + np.arange(-N + 1, N, dtype=float)
    return _nested_sum(lams, idx)


def mes_trunc(idx, tau, M: int, N: int) -> complex:
    """Truncated multiple Eisenstein series over Z_M tau + Z_N, order >."""
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    tau = complex(tau)
    blocks = [np.arange(1, N, dtype=float)]
    for m in range(1, M):
        blocks.append(m * tau + np.arange(-N + 1, N, dtype=float))
    lams = np.concatenate(blocks)
    return _nested_sum(lams, idx)


def ghat_trunc(idx, tau, M: int, N: int) -> complex:
    """Truncated ghat_{M,N}: ordered sums of truncated multitangent blocks.

    Sums over compositions idx = w_1 ... w_j and M > m_1 > ... > m_j > 0
    of the product of Psi_N(w_i; m_i tau).
    """
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    tau = complex(tau)
    total = 0j
    for blocks in _compositions(idx):
        j = len(blocks)
        if j > M - 1:
            continue
        vals = [[multitangent_trunc(b, m * tau, N) for m in range(1, M)]
                for b in blocks]
        t = np.array(vals[-1], dtype=complex)
        for bi in range(j - 2, -1, -1):
            excl = np.concatenate(([0], np.cumsum(t)[:-1]))
            t = np.array(vals[bi], dtype=complex) * excl
        total += complex(np.sum(t))
    return total


def convolve_values(factors, w) -> complex:
    """Sum over all splittings of w into len(factors) blocks (blocks may
    be empty) of the product of factor values; factors map word -> value."""
    if len(factors) == 1:
        return factors[0](w)
    head, rest = factors[0], factors[1:]
    total = 0j
    for i in range(len(w) + 1):
        total += head(w[:i]) * convolve_values(rest, w[i:])
    return total


# ---------------------------------------------------------------------------
# extrapolated limits


def richardson(values):
    """Richardson extrapolation for cutoffs doubling between samples."""
    rows = [list(values)]
    for j in range(1, len(values)):
        prev = rows[-1]
        fac = 2.0 ** j
        rows.append([(fac * prev[i + 1] - prev[i]) / (fac - 1)
                     for i in range(len(prev) - 1)])
    return rows[-1][0]


def _aitken(seq):
    cur = list(seq)
    while len(cur) >= 3:
        nxt = []
        for i in range(len(cur) - 2):
            d1 = cur[i + 1] - cur[i]
            d2 = cur[i + 2] - cur[i + 1]
            den = d2 - d1
            if abs(den) < 1e-300:
                nxt.append(cur[i + 2])
            else:
                nxt.append(cur[i + 2] - d2 * d2 / den)
        cur = nxt
    return cur[-1]


def multitangent_value(idx, x, N: int = 10 ** 4, levels: int = 4) -> complex:
    """lim_N of the truncated multitangent, Richardson over doubling N."""
    if not idx:
        return 1.0 + 0j
    if subspace_of(idx) != "H2":
        raise ValueError(f"limit requires all entries >= 2: {idx}")
    ns = [max(8, N >> (levels - 1 - j)) for j in range(levels)]
    return richardson([multitangent_trunc(idx, x, n) for n in ns])


def mes_value(idx, ctx: EvalContext = DEFAULT_CONTEXT, levels: int = 4) -> complex:
    """Multiple Eisenstein series via N-extrapolated lattice truncation.

    The M tail decays like q^M and is negligible at the default cutoffs;
    the N tail has a 1/N expansion, removed by Richardson extrapolation
    when ctx.adaptive is set.
    """
    if not ctx.adaptive:
        return mes_trunc(idx, ctx.tau, ctx.M, ctx.N)
    ns = [max(8, ctx.N >> (levels - 1 - j)) for j in range(levels)]
    return richardson([mes_trunc(idx, ctx.tau, ctx.M, n) for n in ns])


def _hurwitz_tail(k: int, a: complex, terms: int = 40) -> complex:
    """sum_{n>=0} (a+n)^-k by Euler-Maclaurin; a away from (-inf, 0]."""
    s = sum((a + n) ** (-k) for n in range(terms))
    b = a + terms
    s += b ** (1 - k) / (k - 1) + 0.5 * b ** (-k) + k * b ** (-k - 1) / 12.0
    s -= k * (k + 1) * (k + 2) * b ** (-k - 3) / 720.0
    return s


_hurwitz_limit_cache = {}


def hurwitz_limit(idx, x, tol: float = 1e-10) -> complex:
    """lim_N zeta_N(idx; x) for an admissible index.

    Partial sums are corrected by the depth-one Hurwitz tail with the
    inner partial sum frozen; the remaining error is a combination of
    log(N)^p / N^m terms (p bounded by the number of 1-entries), fitted
    and removed by least squares over doubling cutoffs.
    """
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    if idx[0] < 2:
        raise ValueError(f"non-admissible index: {idx}")
    key = (idx, complex(x))
    if key in _hurwitz_limit_cache:
        return _hurwitz_limit_cache[key]
    xs = complex(x)
    pmax = sum(1 for k in idx if k == 1) + 1
    ns = [500 * 2 ** j for j in range(9)]
    vals, rows = [], []
    for n in ns:
        v = hurwitz_trunc(idx, xs, n)
        v += hurwitz_trunc(idx[1:], xs, n) * _hurwitz_tail(idx[0], xs + n)
        vals.append(v)
        # basis in the shifted cutoff n + x, whose powers actually carry
        # the tail expansion; a plain 1/n basis picks up x^p coefficients
        b = n + xs
        ln = cmath.log(b)
        rows.append([1.0] + [ln ** p / b for p in range(pmax + 1)]
                    + [ln ** p / b ** 2 for p in range(pmax + 1)])
    sol, *_ = np.linalg.lstsq(np.array(rows), np.array(vals), rcond=None)
    out = complex(sol[0])
    _hurwitz_limit_cache[key] = out
    return out


# ---------------------------------------------------------------------------
# regularized maps


_zeta_star_cache = {}


def zeta_star(idx, x, tol: float = 1e-10) -> complex:
    """Stuffle regularized multiple Hurwitz zeta zeta*(idx; x).

    Admissible coefficients of the regularization decomposition are
    evaluated as limits; T is specialized to zeta*(1; x), the telescoped
    series -(psi(x+1) + gamma).
    """
    check_index(idx)
    key = (idx, complex(x))
    if key in _zeta_star_cache:
        return _zeta_star_cache[key]
    dec = reg_decompose(idx, "stuffle")
    tval = -(complex(mpmath.digamma(complex(x) + 1)) + EULER_GAMMA)
    total = 0j
    tp = 1.0 + 0j
    for j, c in enumerate(dec.coeffs):
        if j > 0:
            tp *= tval
        if not c:
            continue
        coeff = sum(float(a) * hurwitz_limit(w, x, tol)
                    for w, a in c._terms.items())
        total += coeff * tp
    _zeta_star_cache[key] = total
    return total


def zeta_minus_star(idx, x, tol: float = 1e-10) -> complex:
    """Reflection extension: (-1)^weight zeta*(reversed idx; -x)."""
    check_index(idx)
    return (-1) ** sum(idx) * zeta_star(idx[::-1], -complex(x), tol)


def psi_star(idx, x, tol: float = 1e-10) -> complex:
    """Stuffle regularized multitangent: zeta* conv C conv zeta^-*."""
    check_index(idx)
    r = len(idx)
    total = 0j
    for i in range(r + 1):
        for j in range(i, r + 1):
            mid = idx[i:j]
            if len(mid) >= 2:
                continue
            total += (zeta_star(idx[:i], x, tol) * C_map(mid, x)
                      * zeta_minus_star(idx[j:], x, tol))
    return total


_gstar_cache = {}


def ghat1_value(tau, tol: float = 1e-12) -> complex:
    """ghat*(z_1) = -2 pi i * sum_{m,n >= 1} q^(mn), truncated at tol."""
    q = cmath.exp(2j * math.pi * complex(tau))
    if abs(q) >= 1:
        raise DomainError("need |q| < 1")
    nmax = max(4, int(math.log(tol) / math.log(abs(q))) + 2)
    total = 0j
    for n in range(1, nmax + 1):
        qn = q ** n
        total += qn / (1 - qn)
    return -TWO_PI_I * total


def gstar_numeric(idx, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Regularized ghat*(idx; tau).

    For H^0 words: adaptive limit in M of the iterated convolution of
    the regularized multitangents.  For words with leading ones: the
    regularization lift with T mapped to ghat*(z_1; tau).
    """
    check_index(idx)
    if not idx:
        return 1.0 + 0j
    key = (idx, complex(ctx.tau), ctx.tolerance)
    if key in _gstar_cache:
        return _gstar_cache[key]
    if idx[0] >= 2:
        out = _gstar_h0(idx, ctx)
    else:
        dec = reg_decompose(idx, "stuffle")
        tval = ghat1_value(ctx.tau, min(ctx.tolerance * 1e-2, 1e-12))
        out = 0j
        tp = 1.0 + 0j
        for j, c in enumerate(dec.coeffs):
            if j > 0:
                tp *= tval
            if not c:
                continue
            coeff = sum(float(a) * _gstar_h0(w, ctx)
                        for w, a in c._terms.items())
            out += coeff * tp
    _gstar_cache[key] = out
    return out


def _compositions(idx):
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


def _gstar_h0(idx, ctx: EvalContext) -> complex:
    """M-limit of the blockwise Psi* expansion for idx in H^0.

    Every composition's first block starts with an entry >= 2 and decays
    like q^(m_1); the m_1-range is cut where the decay bound (with a
    (2 pi)^weight prefactor) drops below the tolerance, then a doubling
    check confirms stabilization.  Summing far past that point would
    only accumulate the noise floor of the regularized block values.
    """
    if not idx:
        return 1.0 + 0j
    key = (idx, complex(ctx.tau), ctx.tolerance, "h0")
    if key in _gstar_cache:
        return _gstar_cache[key]
    tau = complex(ctx.tau)
    decay = 2 * math.pi * tau.imag
    wt = sum(idx)
    m_hi = int((wt * math.log(2 * math.pi) + math.log(100.0 / ctx.tolerance))
               / decay) + 2
    m_cap = max(12, ctx.M)
    if m_hi > m_cap:
        raise ConvergenceError(
            f"ghat* needs M ~ {m_hi} > budget {m_cap} for {idx} "
            f"(Im tau = {tau.imag:g})")
    psi_vals = {}

    def psi(block, m):
        k = (block, m)
        if k not in psi_vals:
            psi_vals[k] = psi_star(block, m * tau, ctx.tolerance * 1e-2)
        return psi_vals[k]

    def partial(mh):
        total = 0j
        for blocks in _compositions(idx):
            j = len(blocks)
            # ordered sum over m_1 > ... > m_j >= 1, m_1 <= mh
            vals = [[psi(b, m) for m in range(1, mh + 1)] for b in blocks]
            t = np.array(vals[-1], dtype=complex)
            for bi in range(j - 2, -1, -1):
                excl = np.concatenate(([0], np.cumsum(t)[:-1]))
                t = np.array(vals[bi], dtype=complex) * excl
            total += complex(np.sum(t))
        return total

    total = partial(m_hi)
    if ctx.adaptive:
        check = partial(m_hi + 2)
        if abs(check - total) > ctx.tolerance:
            raise ConvergenceError(
                f"ghat* did not stabilize at M = {m_hi} for {idx}")
        total = check
    _gstar_cache[key] = total
    return total


def _zeta_reg_value(idx, ctx: EvalContext) -> complex:
    """Stuffle regularized MZV at T -> ctx.T_value."""
    cfg = NumericConfig(tolerance=max(ctx.tolerance, 1e-12))
    tp = zeta_reg(idx, "stuffle")
    total = 0j
    t = 1.0 + 0j
    for j, c in enumerate(tp.coeffs):
        if j > 0:
            t *= complex(ctx.T_value)
        if c:
            total += c.eval(cfg) * t
    return total


def mes_star(idx, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Stuffle regularized multiple Eisenstein series G* = ghat* conv zeta*."""
    check_index(idx)
    total = 0j
    for i in range(len(idx) + 1):
        total += gstar_numeric(idx[:i], ctx) * _zeta_reg_value(idx[i:], ctx)
    return total


def mes_star_poly(p: FreePoly, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Linear extension of mes_star to FreePoly arguments."""
    return sum(float(c) * mes_star(w, ctx) for w, c in p._terms.items())


# ---------------------------------------------------------------------------
# q-series evaluation


def qseries_eval(qs: QSeries, tau, cfg: NumericConfig = DEFAULT_CONFIG) -> complex:
    """Evaluate a QSeries at tau; fails if the tail bound exceeds tolerance."""
    q = cmath.exp(2j * math.pi * complex(tau))
    tail = abs(q) ** (qs.nmax + 1) / max(1e-300, 1 - abs(q))
    if tail > cfg.tolerance:
        raise EvalError(
            f"truncation tail {tail:.2e} exceeds tolerance {cfg.tolerance}")
    total, err = (qs.const.eval_with_error() if qs.const else (0j, 0.0))
    for n, c in qs.items():
        v, e = c.eval_with_error()
        total += v * q ** n
        err += e * abs(q) ** n
    if err + tail > cfg.tolerance:
        raise EvalError(
            f"cannot certify tolerance {cfg.tolerance} (estimate {err + tail:.2e})")
    return total


def g_value(idx, q: float, mmax: int = 5000) -> float:
    """Float evaluation of the q-series g(idx) at real 0 < q < 1.

    The m-sums run over m <= mmax; each depth slot contributes
    sum_n n^(k-1) q^(mn) / (k-1)!, truncated at machine precision.
    Used for the q -> 1 analogue checks, where (1-q)^weight * g(idx)
    approaches zeta(idx).
    """
    check_index(idx)
    if not 0 < q < 1:
        raise ValueError("need 0 < q < 1")
    if not idx:
        return 1.0
    ms = np.arange(1, mmax + 1, dtype=float)
    qm = q ** ms
    nmax = max(2, int(math.log(1e-18) / math.log(q)) + 1)

    def slot(k):
        # sum_n n^(k-1) x^n / (k-1)! elementwise in x = q^m
        out = np.zeros_like(qm)
        term = np.array(qm)
        for n in range(1, nmax + 1):
            contrib = n ** (k - 1) * term
            out += contrib
            if contrib[0] < 1e-20 * max(out[0], 1.0):
                break
            term *= qm
        return out / math.factorial(k - 1)

    t = slot(idx[-1])
    for k in reversed(idx[:-1]):
        excl = np.concatenate(([0], np.cumsum(t)[:-1]))
        t = slot(k) * excl
    return float(np.sum(t))


def monotangent_from_q(k: int, x, tol: float = 1e-12) -> complex:
    """Monotangent Psi(k; x) via the Lipschitz expansion, k >= 2."""
    if k < 2:
        raise ValueError("Lipschitz expansion needs k >= 2")
    q = cmath.exp(2j * math.pi * complex(x))
    if abs(q) >= 1:
        raise DomainError("need Im(x) > 0")
    nmax = max(4, int(math.log(tol) / math.log(abs(q))) + 2)
    total = 0j
    for d in range(1, nmax + 1):
        total += d ** (k - 1) * q ** d
    return (-TWO_PI_I) ** k / math.factorial(k - 1) * total
