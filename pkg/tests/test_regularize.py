from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mesq.hopf import product_z
from mesq.mzv import MzvElem, NumericConfig
from mesq.regularize import (TPoly, antipode_mzv_combination, reconstruct,
                             reg_decompose, rho_apply, rho_matrix, tpoly_mul,
                             zeta_reg)
from mesq.words import FreePoly

h1_words = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)
modes = st.sampled_from(["stuffle", "shuffle"])


def test_tpoly_basics():
    p = TPoly([Fraction(1), Fraction(0), Fraction(2)])
    q = TPoly([Fraction(-1), Fraction(3)])
    assert (p + q).coeffs == [0, 3, 2]
    assert p.degree == 2
    assert tpoly_mul(p, q).coeffs == [-1, 3, -2, 6]
    assert not TPoly([Fraction(0)])


def test_reg_examples_both_modes():
    # z1 z2 = T.z2 - z2z1 - z3 (stuffle) and T.z2 - 2 z2z1 (shuffle)
    st_dec = reg_decompose((1, 2), "stuffle")
    assert st_dec.coeffs[1] == FreePoly.term((2,))
    assert st_dec.coeffs[0] == -FreePoly.term((2, 1)) - FreePoly.term((3,))
    sh_dec = reg_decompose((1, 2), "shuffle")
    assert sh_dec.coeffs[1] == FreePoly.term((2,))
    assert sh_dec.coeffs[0] == FreePoly.term((2, 1), -2)


def test_admissible_words_are_degree_zero():
    dec = reg_decompose((3, 1, 2), "stuffle")
    assert dec.degree == 0
    assert dec.coeffs[0] == FreePoly.term((3, 1, 2))


@given(h1_words, modes)
@settings(max_examples=50, deadline=None)
def test_decompose_reconstruct_roundtrip(w, mode):
    dec = reg_decompose(w, mode)
    assert reconstruct(dec, mode) == FreePoly.term(w)
    # coefficients lie in H^0
    for c in dec.coeffs:
        for word in c._terms:
            assert not word or word[0] >= 2


@given(h1_words, h1_words)
@settings(max_examples=20, deadline=None)
def test_zeta_reg_is_stuffle_homomorphism(u, v):
    lhs = tpoly_mul(zeta_reg(u, "stuffle"), zeta_reg(v, "stuffle"))
    rhs = TPoly([])
    for w, c in product_z(u, v, "stuffle")._terms.items():
        rhs = rhs + zeta_reg(w, "stuffle").map(lambda m: m * c)
    diff = lhs - rhs
    cfg = NumericConfig(tolerance=1e-7)
    assert all(abs(c.eval(cfg)) < 1e-7 for c in diff.coeffs if c)


def test_zeta_reg_examples():
    # zeta*(1,2) = T zeta(2) - zeta(2,1) - zeta(3)
    tp = zeta_reg((1, 2), "stuffle")
    assert tp.coeffs[1] == MzvElem.zeta((2,))
    assert tp.coeffs[0] == -(MzvElem.zeta((2, 1)) + MzvElem.zeta((3,)))
    # zeta_sh(1,2) = T zeta(2) - 2 zeta(2,1)
    tp = zeta_reg((1, 2), "shuffle")
    assert tp.coeffs[0] == MzvElem.zeta((2, 1), -2)


def test_rho_on_low_powers():
    mat = rho_matrix(3)
    assert mat[0] == TPoly([MzvElem.one()])
    assert mat[1] == TPoly([MzvElem.zero(), MzvElem.one()])
    # rho(T^2) = T^2 + zeta(2), rho(T^3) = T^3 + 3 zeta(2) T - 2 zeta(3)
    assert mat[2] == TPoly([MzvElem.zeta((2,)), MzvElem.zero(), MzvElem.one()])
    assert mat[3] == TPoly([MzvElem.zeta((3,), -2), MzvElem.zeta((2,), 3),
                            MzvElem.zero(), MzvElem.one()])


@given(h1_words)
@settings(max_examples=30, deadline=None)
def test_rho_compares_regularizations(w):
    lhs = rho_apply(zeta_reg(w, "stuffle"))
    rhs = zeta_reg(w, "shuffle")
    diff = lhs - rhs
    cfg = NumericConfig(tolerance=1e-8)
    assert all(abs(c.eval(cfg)) < 1e-8 for c in diff.coeffs if c)


def test_antipode_combination_vanishes():
    for idx in [(2,), (1, 1), (2, 1), (1, 2), (3, 1), (1, 1, 1), (2, 2)]:
        assert antipode_mzv_combination(idx).is_zero


def test_antipode_combination_degenerate_single_one():
    # the single-letter word (1) degenerates to the empty redistribution
    tp = antipode_mzv_combination((1,))
    assert tp.coeffs == [MzvElem.rational(-1)]
