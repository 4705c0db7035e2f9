from fractions import Fraction

import pytest

from mesq.mzv import MzvElem, NumericConfig
from mesq.qexp import (QSeries, ReductionError, _reduction_terms,
                       fourier_expansion, g_series, ghat_series, gstar_series,
                       gstar_terms, monotangent_series, multitangent_reduce)

CFG = NumericConfig(tolerance=1e-7)


def sigma(p, n):
    return sum(d ** p for d in range(1, n + 1) if n % d == 0)


def test_g_depth_one_is_divisor_sum():
    qs = g_series((2,), 10)
    for n in range(1, 11):
        assert qs.coeff(n) == MzvElem.rational(sigma(1, n))
    qs = g_series((1,), 10)
    for n in range(1, 11):
        assert qs.coeff(n) == MzvElem.rational(sigma(0, n))


def test_g_depth_two_leading_coefficient():
    # smallest configuration for (2,1): m=(2,1), n=(1,1) -> q^3
    qs = g_series((2, 1), 8)
    assert not qs.coeff(1)
    assert not qs.coeff(2)
    assert qs.coeff(3) == MzvElem.rational(1)


def test_ghat_scales_by_E_powers():
    qs = ghat_series((2,), 6)
    assert qs.coeff(3) == MzvElem.e_power(2, 4)  # E^2 * sigma_1(3)


def test_qseries_ring():
    a = g_series((2,), 12)
    b = g_series((3,), 12)
    assert a * b == b * a
    assert (a + b) - b == a
    assert a * QSeries.constant(1, 12) == a


def test_monotangent_series_rejects_weight_one():
    with pytest.raises(ValueError):
        monotangent_series(1, 1, 10)


def test_reduction_depth_two_examples():
    red = multitangent_reduce((3, 2))
    assert red == {2: MzvElem.zeta((3,), 3), 3: MzvElem.zeta((2,))}
    red = multitangent_reduce((2, 2))
    assert red == {2: MzvElem.zeta((2,), 2)}


def test_reduction_weight_one_coefficient_vanishes():
    for idx in [(3, 2), (2, 2), (2, 2, 2), (4, 3)]:
        psi1 = _reduction_terms(idx).get(1, MzvElem.zero())
        assert abs(psi1.eval(CFG)) < 1e-8


def test_reduction_requires_h2():
    with pytest.raises(ValueError):
        multitangent_reduce((2, 1))


def test_gstar_depth_two_example():
    terms = gstar_terms((3, 2))
    assert terms == {(2,): MzvElem.zeta((3,), 3),
                     (3,): MzvElem.zeta((2,)),
                     (3, 2): MzvElem.one()}


def test_gstar_harmonic_product_in_q_coefficients():
    # ghat*(2)ghat*(3) = ghat*(2,3) + ghat*(3,2) + ghat*(5)
    n = 20
    _, a = gstar_series((2,), n)
    _, b = gstar_series((3,), n)
    _, c23 = gstar_series((2, 3), n)
    _, c32 = gstar_series((3, 2), n)
    _, c5 = gstar_series((5,), n)
    lhs = a * b
    rhs = c23 + c32 + c5
    diff = lhs - rhs
    cfg = NumericConfig(tolerance=1e-6)
    for m, coeff in diff.items():
        assert abs(coeff.eval(cfg)) < 1e-8, m


def test_fourier_golden_32():
    fe = fourier_expansion((3, 2))
    alphas = {(tuple(z), tuple(g)): a for a, z, g in fe.middle}
    assert alphas == {((3,), (2,)): 3, ((2,), (3,)): 2}
    assert str(fe) == ("zeta(3,2) + 3*zeta(3)*ghat(2) + 2*zeta(2)*ghat(3)"
                       " + ghat(3,2)")


def test_fourier_22():
    fe = fourier_expansion((2, 2))
    alphas = {(tuple(z), tuple(g)): a for a, z, g in fe.middle}
    assert alphas == {((2,), (2,)): 3}


def test_fourier_constant_term_is_zeta():
    for idx in [(2,), (4,), (3, 2), (2, 2, 2)]:
        qs = fourier_expansion(idx).q_series(5)
        assert qs.const == MzvElem.zeta(idx)


def test_fourier_requires_h2():
    with pytest.raises(ValueError):
        fourier_expansion((1, 2))
