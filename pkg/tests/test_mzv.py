import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mesq.mzv import (EvalError, MzvElem, NumericConfig, is_admissible,
                      mzv_eq_numeric, mzv_value)
from mesq.numeric import hurwitz_trunc

admissible = st.tuples(st.integers(2, 5)).flatmap(
    lambda h: st.lists(st.integers(1, 4), max_size=3).map(lambda t: h + tuple(t)))


def test_known_depth_one_values():
    assert mzv_value((2,)) == pytest.approx(math.pi ** 2 / 6, abs=1e-13)
    assert mzv_value((4,)) == pytest.approx(math.pi ** 4 / 90, abs=1e-13)
    assert mzv_value((6,)) == pytest.approx(math.pi ** 6 / 945, abs=1e-12)


def test_euler_relation():
    # zeta(2,1) = zeta(3)
    assert mzv_value((2, 1)) == pytest.approx(mzv_value((3,)), abs=1e-13)


def test_value_against_truncated_sum():
    # independent route: raw truncation with a crude integral tail bound
    n = 20000
    direct = hurwitz_trunc((3, 2), 0, n).real
    assert abs(mzv_value((3, 2)) - direct) < 2e-4
    assert mzv_value((3, 2)) == pytest.approx(0.22881039760335, abs=1e-12)


def test_admissibility():
    assert is_admissible(())
    assert is_admissible((2, 1, 1))
    assert not is_admissible((1, 2))
    with pytest.raises(ValueError):
        MzvElem.zeta((1, 2))


def test_ring_stuffle_normalization():
    z2 = MzvElem.zeta((2,))
    prod = z2 * z2
    assert prod == MzvElem.zeta((2, 2), 2) + MzvElem.zeta((4,))


def test_ring_axioms_small():
    a = MzvElem.zeta((2,)) + MzvElem.rational(Fraction(1, 2))
    b = MzvElem.zeta((3,)) - MzvElem.e_power(1)
    c = MzvElem.zeta((2, 1))
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero


def test_numeric_equality_oracle():
    # zeta(2)*zeta(3) = zeta(2,3)+zeta(3,2)+zeta(5) numerically
    lhs = MzvElem.zeta((2,)) * MzvElem.zeta((3,))
    rhs = (MzvElem.zeta((2, 3)) + MzvElem.zeta((3, 2)) + MzvElem.zeta((5,)))
    assert mzv_eq_numeric(lhs, rhs, NumericConfig(tolerance=1e-10))
    assert not mzv_eq_numeric(lhs, rhs + MzvElem.rational(1))


def test_eval_certification_failure():
    # a huge coefficient makes the rounding bound exceed the tolerance
    elem = MzvElem.zeta((2,), Fraction(10 ** 12))
    with pytest.raises(EvalError):
        elem.eval(NumericConfig(tolerance=1e-12))


@given(admissible, admissible)
@settings(max_examples=25, deadline=None)
def test_product_matches_numeric(u, v):
    prod = MzvElem.zeta(u) * MzvElem.zeta(v)
    val = prod.eval(NumericConfig(tolerance=1e-6))
    assert val.real == pytest.approx(mzv_value(u) * mzv_value(v), rel=1e-9)


def test_json_schema():
    elem = MzvElem.zeta((3, 2), Fraction(1, 2)) + MzvElem.e_power(2, 3)
    js = elem.to_json()
    assert js == [
        {"index": [], "e": 2, "coeff": "3/1"},
        {"index": [3, 2], "e": 0, "coeff": "1/2"},
    ]
