"""Verification suites: each runs an identity set and reports deviations.

Suites return a list of CheckResult rows (check name, max deviation,
threshold).  Exact algebraic identities report a deviation of 0.0 when
they hold; numeric identities report the worst absolute deviation seen.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import hopf, numeric, qexp
from .mzv import MzvElem, NumericConfig
from .regularize import antipode_mzv_combination, rho_apply, zeta_reg
from .words import FreePoly, subspace_of


@dataclass
class CheckResult:
    suite: str
    name: str
    deviation: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.threshold

    def row(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (f"[{status}] {self.suite}/{self.name}: "
                f"max deviation {self.deviation:.3e} (threshold {self.threshold:.0e})")


def index_words(max_weight, min_entry=1):
    """All index words of weight <= max_weight with entries >= min_entry."""
    out = []
    for w in range(min_entry, max_weight + 1):
        for r in range(1, w // min_entry + 1):
            for c in itertools.product(range(min_entry, w + 1), repeat=r):
                if sum(c) == w:
                    out.append(c)
    return out


def _exact(flag: bool) -> float:
    return 0.0 if flag else 1.0


# ---------------------------------------------------------------------------


def suite_hopf(max_weight: int = 5, **_):
    """Coassociativity, antipode inverse, antipode word relation; exact."""
    words = [w for w in index_words(max_weight) if max(w) <= 3]
    results = []

    ok = True
    for w in words:
        left = {}
        right = {}
        for u, v in hopf.coproduct(w):
            for u1, u2 in hopf.coproduct(u):
                left[(u1, u2, v)] = left.get((u1, u2, v), 0) + 1
            for v1, v2 in hopf.coproduct(v):
                right[(u, v1, v2)] = right.get((u, v1, v2), 0) + 1
        ok &= left == right
    results.append(CheckResult("hopf", "coassociativity", _exact(ok), 0.0))

    for rule in (hopf.TRIVIAL, hopf.STUFFLE):
        ok = True
        for w in words:
            # (S * id)(w) must be the counit: 0 for nonempty w
            acc = FreePoly.zero()
            for u, v in hopf.coproduct(w):
                acc = acc + hopf.quasi_shuffle(hopf.antipode_word(u, rule),
                                               FreePoly.term(v), rule)
            ok &= not acc
        results.append(CheckResult(
            "hopf", f"antipode-inverse[{rule.name}]", _exact(ok), 0.0))

    ok = all(not hopf.antipode_word_relation(w) for w in words)
    results.append(CheckResult("hopf", "antipode-word-relation", _exact(ok), 0.0))

    ok = True
    for w in words:
        ok &= hopf.antipode_word(w, hopf.STUFFLE) == \
            hopf.antipode_word_recursive(w, hopf.STUFFLE)
        ok &= hopf.antipode_word(w, hopf.TRIVIAL) == \
            hopf.antipode_word_recursive(w, hopf.TRIVIAL)
    results.append(CheckResult("hopf", "antipode-closed-form", _exact(ok), 0.0))
    return results


def suite_trunc_identities(max_weight: int = 6, seed: int = 7, n_samples: int = 50, **_):
    """Finite-sum factorizations and homomorphisms at small cutoffs."""
    rng = random.Random(seed)
    tau = (1 + 4j) / 5
    x = 0.3 + 0.9j
    words = index_words(max_weight)

    def rand_word():
        return rng.choice(words)

    dev_psi = dev_mes = dev_refl = dev_hom = 0.0
    for _i in range(n_samples):
        w = rand_word()
        M = rng.randint(2, 8)
        N = rng.randint(2, 8)

        lhs = numeric.multitangent_trunc(w, x, N)
        rhs = numeric.convolve_values(
            [lambda u: numeric.hurwitz_trunc(u, x, N),
             lambda u: numeric.C_map(u, x),
             lambda u: numeric.zeta_minus_trunc(u, x, N)], w)
        dev_psi = max(dev_psi, abs(lhs - rhs) / max(abs(lhs), 1e-30))

        lhs = numeric.mes_trunc(w, tau, M, N)
        rhs = numeric.convolve_values(
            [lambda u: numeric.ghat_trunc(u, tau, M, N),
             lambda u: numeric.hurwitz_trunc(u, 0, N)], w)
        dev_mes = max(dev_mes, abs(lhs - rhs) / max(abs(lhs), 1e-30))

        lhs = numeric.zeta_minus_trunc(w, x, N)
        rhs = (-1) ** sum(w) * numeric.hurwitz_trunc(w[::-1], -x, N)
        dev_refl = max(dev_refl, abs(lhs - rhs))

        v = rand_word()
        if sum(w) + sum(v) <= max_weight:
            prod = hopf.stuffle(w, v)
            lhs = sum(complex(c) * numeric.hurwitz_trunc(u, x, N)
                      for u, c in prod._terms.items())
            rhs = numeric.hurwitz_trunc(w, x, N) * numeric.hurwitz_trunc(v, x, N)
            dev_hom = max(dev_hom, abs(lhs - rhs))

    return [
        CheckResult("trunc-identities", "psi-factorization", dev_psi, 1e-12),
        CheckResult("trunc-identities", "mes-factorization", dev_mes, 1e-12),
        CheckResult("trunc-identities", "zeta-minus-reflection", dev_refl, 1e-14),
        CheckResult("trunc-identities", "stuffle-homomorphism", dev_hom, 1e-12),
    ]


def suite_reduction(max_weight: int = 6, tolerance: float = 1e-6, **_):
    """Multitangent reduction vs extrapolated truncated sums at tau = i."""
    cfg = NumericConfig(tolerance=1e-7)
    dev = 0.0
    for idx in index_words(max_weight, min_entry=2):
        red = qexp.multitangent_reduce(idx)
        val = sum(c.eval(cfg) * numeric.monotangent_from_q(k, 1j)
                  for k, c in red.items())
        ref = numeric.multitangent_value(idx, 1j, N=10 ** 4)
        dev = max(dev, abs(val - ref))
    return [CheckResult("reduction", f"H2-weight<={max_weight}", dev, tolerance)]


def suite_reg_rho(max_weight: int = 4, tolerance: float = 1e-6, **_):
    """rho(zeta*) = zeta_shuffle coefficientwise in T, numerically."""
    cfg = NumericConfig(tolerance=tolerance / 10)
    dev = 0.0
    for w in index_words(max_weight):
        lhs = rho_apply(zeta_reg(w, "stuffle"))
        rhs = zeta_reg(w, "shuffle")
        diff = lhs - rhs
        for c in diff.coeffs:
            if c:
                dev = max(dev, abs(c.eval(cfg)))
    return [CheckResult("reg-rho", f"H1-weight<={max_weight}", dev, tolerance)]


def suite_gstar(max_weight: int = 5, tolerance: float = 1e-6, tau=1j, **_):
    """ghat* harmonic homomorphism and symbolic/numeric agreement."""
    ctx = numeric.EvalContext(tau=tau)
    cfg = NumericConfig(tolerance=1e-7)
    words = index_words(max_weight - 1)

    dev_hom = 0.0
    for u in words:
        for v in words:
            if sum(u) + sum(v) > max_weight or u > v:
                continue
            lhs = sum(float(c) * numeric.gstar_numeric(w, ctx)
                      for w, c in hopf.stuffle(u, v)._terms.items())
            rhs = numeric.gstar_numeric(u, ctx) * numeric.gstar_numeric(v, ctx)
            dev_hom = max(dev_hom, abs(lhs - rhs))

    dev_sym = 0.0
    for idx in index_words(max_weight, min_entry=2):
        _, qs = qexp.gstar_series(idx, 40)
        sv = numeric.qseries_eval(qs, tau, cfg)
        dev_sym = max(dev_sym, abs(sv - numeric.gstar_numeric(idx, ctx)))

    return [
        CheckResult("gstar", "stuffle-homomorphism", dev_hom, tolerance),
        CheckResult("gstar", "symbolic-vs-numeric[H2]", dev_sym, tolerance),
    ]


def suite_fourier(max_weight: int = 5, tolerance: float = 1e-5, tau=1j, **_):
    """Fourier q-expansion vs extrapolated lattice truncation on H^2."""
    ctx = numeric.EvalContext(tau=tau)
    cfg = NumericConfig(tolerance=1e-6)
    dev = 0.0
    for idx in index_words(max_weight, min_entry=2):
        fe = qexp.fourier_expansion(idx)
        qv = numeric.qseries_eval(fe.q_series(30), tau, cfg)
        mv = numeric.mes_value(idx, ctx)
        dev = max(dev, abs(qv - mv))
    mstar_dev = 0.0
    for idx in index_words(min(max_weight, 5), min_entry=2):
        mstar_dev = max(mstar_dev, abs(numeric.mes_star(idx, ctx)
                                       - numeric.mes_value(idx, ctx)))
    return [
        CheckResult("fourier", f"qexp-vs-lattice[H2,w<={max_weight}]", dev, tolerance),
        CheckResult("fourier", "mes-star-restriction", mstar_dev, tolerance),
    ]


def suite_antipode_mzv(max_weight: int = 5, tolerance: float = 1e-6, **_):
    """The regularized-zeta antipode combinations vanish.

    The single-letter word (1) is excluded: its combination degenerates
    to the empty redistribution and equals -1 identically.
    """
    cfg = NumericConfig(tolerance=tolerance / 10)
    dev = 0.0
    for idx in index_words(max_weight):
        if idx == (1,):
            continue
        tp = antipode_mzv_combination(idx)
        for c in tp.coeffs:
            if c:
                dev = max(dev, abs(c.eval(cfg)))
    return [CheckResult("antipode-mzv", f"weight<={max_weight}", dev, tolerance)]


SUITES = {
    "hopf": suite_hopf,
    "trunc-identities": suite_trunc_identities,
    "reduction": suite_reduction,
    "reg-rho": suite_reg_rho,
    "gstar": suite_gstar,
    "fourier": suite_fourier,
    "antipode-mzv": suite_antipode_mzv,
}


def run_suite(name: str, **kwargs):
    if name not in SUITES:
        raise KeyError(f"unknown suite: {name!r} (have {sorted(SUITES)})")
    kwargs = {k: v for k, v in kwargs.items() if v is not None}
    return SUITES[name](**kwargs)
