from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mesq import hopf
from mesq.words import FreePoly

words = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(tuple)
rules = st.sampled_from([hopf.TRIVIAL, hopf.STUFFLE])


def test_stuffle_product_example():
    p = hopf.stuffle((2,), (3,))
    assert p._terms == {(2, 3): 1, (3, 2): 1, (5,): 1}


def test_shuffle_product_examples():
    p = hopf.shuffle_z((2,), (3,))
    assert p._terms == {(2, 3): 1, (3, 2): 3, (4, 1): 6}
    q = hopf.shuffle_xy("xy", "xxy")
    assert q._terms == {"xyxxy": 1, "xxyxy": 3, "xxxyy": 6}


@given(words, words, rules)
def test_quasi_shuffle_commutative(w, v, rule):
    assert hopf.quasi_shuffle_words(w, v, rule) == hopf.quasi_shuffle_words(v, w, rule)


@given(words, words, words, rules)
@settings(max_examples=40, deadline=None)
def test_quasi_shuffle_associative(u, v, w, rule):
    lhs = hopf.quasi_shuffle(hopf.quasi_shuffle_words(u, v, rule),
                             FreePoly.term(w), rule)
    rhs = hopf.quasi_shuffle(FreePoly.term(u),
                             hopf.quasi_shuffle_words(v, w, rule), rule)
    assert lhs == rhs


@given(words)
def test_coproduct_coassociative(w):
    left = sorted((u1, u2, v) for u, v in hopf.coproduct(w)
                  for u1, u2 in hopf.coproduct(u))
    right = sorted((u, v1, v2) for u, v in hopf.coproduct(w)
                   for v1, v2 in hopf.coproduct(v))
    assert left == right


@given(words.filter(bool), rules)
@settings(max_examples=60, deadline=None)
def test_antipode_is_convolution_inverse(w, rule):
    acc = FreePoly.zero()
    for u, v in hopf.coproduct(w):
        acc = acc + hopf.quasi_shuffle(hopf.antipode_word(u, rule),
                                       FreePoly.term(v), rule)
    assert not acc


def test_antipode_stuffle_example():
    # S(z1 z2) = z2 z1 + z3 in the harmonic algebra
    assert hopf.antipode_word((1, 2), hopf.STUFFLE)._terms == {(2, 1): 1, (3,): 1}


@given(words.filter(bool))
def test_antipode_closed_form_matches_recursion(w):
    assert hopf.antipode_word(w, hopf.TRIVIAL) == \
        hopf.antipode_word_recursive(w, hopf.TRIVIAL)
    assert hopf.antipode_word(w, hopf.TRIVIAL)._terms == \
        {w[::-1]: Fraction(-1) ** len(w)}


@given(st.text(alphabet="xy", min_size=1, max_size=6))
def test_antipode_word_relation(w):
    assert not hopf.antipode_word_relation(w)


def test_convolution_of_numeric_maps():
    # convolving the truncated-zeta map with itself against the stuffle
    # square: (f*f)(w) over the coproduct equals sum of both orders + diag
    from mesq.numeric import hurwitz_trunc

    f = lambda u: hurwitz_trunc(u, 0.25, 12)
    fg = hopf.convolve(f, f)
    w = (2, 1)
    direct = sum(f(u) * f(v) for u, v in hopf.coproduct(w))
    assert fg(w) == pytest.approx(direct)
