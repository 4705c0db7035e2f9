import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from mesq import hopf, numeric
from mesq.mzv import NumericConfig, mzv_value
from mesq.numeric import (C_map, DomainError, EvalContext, convolve_values,
                          g_value, ghat_trunc, gstar_numeric, hurwitz_limit,
                          hurwitz_trunc, mes_star, mes_trunc, mes_value,
                          monotangent_from_q, multitangent_trunc,
                          multitangent_value, psi_star, qseries_eval,
                          zeta_minus_trunc, zeta_star)

words = st.lists(st.integers(1, 4), min_size=1, max_size=3).map(tuple)
CTX = EvalContext(tau=1j)


def test_hurwitz_trunc_tiny_cases():
    assert hurwitz_trunc((2,), 0, 3) == pytest.approx(1.25)
    assert hurwitz_trunc((1, 1), 0, 3) == pytest.approx(0.5)
    assert hurwitz_trunc((), 0, 5) == 1


def test_c_map():
    assert C_map((), 2.0) == 1
    assert C_map((3,), 2.0) == pytest.approx(0.125)
    assert C_map((3, 2), 2.0) == 0
    with pytest.raises(DomainError):
        C_map((2,), 0)


def test_zeta_minus_single_term():
    assert zeta_minus_trunc((2,), 1j, 2) == pytest.approx(1 / (1j - 1) ** 2)


def test_pole_detection():
    with pytest.raises(DomainError):
        hurwitz_trunc((2,), -3, 10)
    with pytest.raises(DomainError):
        multitangent_trunc((2,), 4, 10)


@given(words, st.integers(2, 9))
@settings(max_examples=30, deadline=None)
def test_reflection_identity(w, n):
    x = 0.3 + 0.7j
    lhs = zeta_minus_trunc(w, x, n)
    rhs = (-1) ** sum(w) * hurwitz_trunc(w[::-1], -x, n)
    assert lhs == pytest.approx(rhs, abs=1e-14)


@given(words, st.integers(2, 8), st.integers(2, 8))
@settings(max_examples=30, deadline=None)
def test_finite_factorizations(w, m, n):
    x = 0.2 + 0.8j
    tau = (1 + 4j) / 5
    lhs = multitangent_trunc(w, x, n)
    rhs = convolve_values([lambda u: hurwitz_trunc(u, x, n),
                           lambda u: C_map(u, x),
                           lambda u: zeta_minus_trunc(u, x, n)], w)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-15)
    lhs = mes_trunc(w, tau, m, n)
    rhs = convolve_values([lambda u: ghat_trunc(u, tau, m, n),
                           lambda u: hurwitz_trunc(u, 0, n)], w)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-15)


def test_ghat_trunc_matches_hopf_convolution():
    tau = (1 + 4j) / 5
    m, n = 5, 6
    maps = [(lambda mm: (lambda u: multitangent_trunc(u, mm * tau, n)))(mm)
            for mm in range(m - 1, 0, -1)]
    conv = hopf.convolve_many(maps)
    for w in [(3, 2), (2, 1, 1), (1, 2)]:
        assert ghat_trunc(w, tau, m, n) == pytest.approx(conv(w), rel=1e-13)


def test_mes_trunc_m1_is_zeta_trunc():
    w = (3, 2)
    assert mes_trunc(w, 1j, 1, 9) == pytest.approx(hurwitz_trunc(w, 0, 9))


def test_hurwitz_limit_matches_mzv():
    for idx in [(2,), (3,), (2, 1), (3, 2), (2, 1, 1)]:
        assert hurwitz_limit(idx, 0) == pytest.approx(mzv_value(idx), abs=1e-10)


def test_zeta_star_telescoped_value():
    # zeta*(1; 1) = -1 by telescoping
    assert zeta_star((1,), 1) == pytest.approx(-1, abs=1e-12)


def test_zeta_star_homomorphism():
    x = 0.3 + 0.4j
    u, v = (1,), (2,)
    prod = hopf.stuffle(u, v)
    lhs = sum(complex(c) * zeta_star(w, x) for w, c in prod._terms.items())
    assert lhs == pytest.approx(zeta_star(u, x) * zeta_star(v, x), abs=1e-9)


def test_psi_star_depth_one_is_cotangent():
    for x in [0.3, 0.7, 0.25 + 0.5j]:
        expected = math.pi / cmath.tan(math.pi * x)
        assert psi_star((1,), x) == pytest.approx(expected, abs=1e-10)


def test_monotangent_lipschitz_vs_lattice():
    x = 0.25 + 0.5j
    for k in [2, 3, 4]:
        lhs = monotangent_from_q(k, x)
        rhs = multitangent_value((k,), x, N=4096)
        assert lhs == pytest.approx(rhs, abs=1e-9)


def test_reduction_vs_extrapolated_lattice():
    cfg = NumericConfig(tolerance=1e-7)
    from mesq.qexp import multitangent_reduce
    red = multitangent_reduce((3, 2))
    val = sum(c.eval(cfg) * monotangent_from_q(k, 1j) for k, c in red.items())
    assert val == pytest.approx(multitangent_value((3, 2), 1j), abs=1e-9)


def test_gstar_h2_matches_symbolic_series():
    from mesq.qexp import gstar_series
    cfg = NumericConfig(tolerance=1e-7)
    for idx in [(2,), (3, 2), (2, 2)]:
        _, qs = gstar_series(idx, 40)
        assert gstar_numeric(idx, CTX) == pytest.approx(
            qseries_eval(qs, 1j, cfg), abs=1e-8)


def test_gstar_z1_series():
    q = math.exp(-2 * math.pi)
    direct = -2j * math.pi * sum(q ** (m * n) for m in range(1, 40)
                                 for n in range(1, 40))
    assert gstar_numeric((1,), CTX) == pytest.approx(direct, abs=1e-12)


def test_mes_star_restriction_and_homomorphism():
    for idx in [(2,), (3, 2)]:
        assert mes_star(idx, CTX) == pytest.approx(mes_value(idx, CTX), abs=1e-7)
    prod = hopf.stuffle((2,), (3,))
    lhs = sum(float(c) * mes_star(w, CTX) for w, c in prod._terms.items())
    assert lhs == pytest.approx(mes_star((2,), CTX) * mes_star((3,), CTX),
                                abs=1e-7)


def test_qseries_eval_tail_bound():
    from mesq.mzv import EvalError
    from mesq.qexp import ghat_series
    qs = ghat_series((2,), 3)
    with pytest.raises(EvalError):
        qseries_eval(qs, 0.01j, NumericConfig(tolerance=1e-10))


def test_q_analogue_values():
    q = 0.995
    assert (1 - q) ** 2 * g_value((2,), q) == pytest.approx(
        mzv_value((2,)), rel=0.05)


def test_context_validation():
    with pytest.raises(ValueError):
        EvalContext(tau=1.0)
    with pytest.raises(ValueError):
        EvalContext(tolerance=-1)
