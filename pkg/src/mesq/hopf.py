"""Quasi-shuffle products, deconcatenation coproduct, antipode, convolution.

The quasi-shuffle product is parametrized by a DiamondRule, a commutative
associative product on letters.  Two presets exist: TRIVIAL (a<>b = 0,
giving the shuffle product on xy-words) and STUFFLE (z_a <> z_b = z_{a+b}).
The shuffle product on index words goes through the xy-encoding.

Linear maps into a commutative ring are plain callables word -> value with
the convention f(()) == 1; `convolve` composes them through the coproduct.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .words import FreePoly, Word, decode_xy, encode_xy


class DiamondRule:
    """Commutative associative product on letters.

    `combine(a, b)` takes two single-letter words and returns a
    single-letter word or None (product zero).  Word-level products and
    antipodes are cached on the instance; caches are semantically
    invisible and safe under concurrent lookup (dict get/set of
    immutable values).
    """

    def __init__(self, name: str, combine):
        self.name = name
        self.combine = combine
        self._product_cache = {}
        self._antipode_cache = {}

    def __repr__(self):
        return f"DiamondRule({self.name})"


TRIVIAL = DiamondRule("trivial", lambda a, b: None)
STUFFLE = DiamondRule("stuffle", lambda a, b: (a[0] + b[0],))


def _prepend(letter, poly: FreePoly) -> FreePoly:
    return FreePoly({letter + w: c for w, c in poly._terms.items()})


def quasi_shuffle_words(w: Word, v: Word, rule: DiamondRule) -> FreePoly:
    """Quasi-shuffle product of two words of the same alphabet."""
    if not w:
        return FreePoly.term(v)
    if not v:
        return FreePoly.term(w)
    cached = rule._product_cache.get((w, v))
    if cached is not None:
        return cached
    a, wr = w[:1], w[1:]
    b, vr = v[:1], v[1:]
    out = _prepend(a, quasi_shuffle_words(wr, v, rule)) \
        + _prepend(b, quasi_shuffle_words(w, vr, rule))
    d = rule.combine(a, b)
    if d is not None:
        out = out + _prepend(d, quasi_shuffle_words(wr, vr, rule))
    rule._product_cache[(w, v)] = out
    rule._product_cache[(v, w)] = out
    return out


def quasi_shuffle(p, q, rule: DiamondRule) -> FreePoly:
    """Bilinear extension of quasi_shuffle_words to FreePoly inputs."""
    if isinstance(p, (tuple, str)):
        p = FreePoly.term(p)
    if isinstance(q, (tuple, str)):
        q = FreePoly.term(q)
    out = FreePoly.zero()
    for w, cw in p._terms.items():
        for v, cv in q._terms.items():
            out = out + quasi_shuffle_words(w, v, rule) * (cw * cv)
    return out


def stuffle(p, q) -> FreePoly:
    """Harmonic product of index words / polynomials."""
    return quasi_shuffle(p, q, STUFFLE)


def shuffle_xy(p, q) -> FreePoly:
    """Shuffle product of xy-words / polynomials."""
    return quasi_shuffle(p, q, TRIVIAL)


def _decode_poly(p: FreePoly) -> FreePoly:
    return FreePoly({decode_xy(w): c for w, c in p._terms.items()})


def shuffle_z(p, q) -> FreePoly:
    """Shuffle product of index words, computed in xy-coordinates."""
    if isinstance(p, tuple):
        p = FreePoly.term(p)
    if isinstance(q, tuple):
        q = FreePoly.term(q)
    pe = FreePoly({encode_xy(w): c for w, c in p._terms.items()})
    qe = FreePoly({encode_xy(w): c for w, c in q._terms.items()})
    return _decode_poly(quasi_shuffle(pe, qe, TRIVIAL))


def product_z(p, q, mode: str) -> FreePoly:
    """Stuffle or shuffle product of index words, selected by mode."""
    if mode == "stuffle":
        return stuffle(p, q)
    if mode == "shuffle":
        return shuffle_z(p, q)
    raise ValueError(f"unknown mode: {mode!r}")


def coproduct(w: Word):
    """All deconcatenation splits of w, in left-to-right order."""
    return [(w[:i], w[i:]) for i in range(len(w) + 1)]


def antipode_word(w: Word, rule: DiamondRule) -> FreePoly:
    """Antipode of a word in the quasi-shuffle Hopf algebra.

    For the trivial diamond the closed form (-1)^r * reverse(w) is used;
    otherwise the convolution-inverse recursion
    S(w) = -sum_{uv=w, u != w} S(u) *_d v.
    """
    if not w:
        return FreePoly.one()
    if rule is TRIVIAL:
        rev = w[::-1]
        return FreePoly.term(rev, Fraction(-1) ** len(w))
    return antipode_word_recursive(w, rule)


def antipode_word_recursive(w: Word, rule: DiamondRule) -> FreePoly:
    """Antipode via the Hopf recursion, for any diamond rule."""
    if not w:
        return FreePoly.one()
    cached = rule._antipode_cache.get(w)
    if cached is not None:
        return cached
    out = FreePoly.term(w, -1)
    for i in range(1, len(w)):
        su = antipode_word_recursive(w[:i], rule)
        out = out - quasi_shuffle(su, FreePoly.term(w[i:]), rule)
    rule._antipode_cache[w] = out
    return out


def antipode(p, rule: DiamondRule) -> FreePoly:
    """Linear extension of the antipode."""
    if isinstance(p, (tuple, str)):
        p = FreePoly.term(p)
    out = FreePoly.zero()
    for w, c in p._terms.items():
        out = out + antipode_word(w, rule) * c
    return out


def _scale(c: Fraction, val):
    if isinstance(val, (int, float, complex)):
        return float(c) * val
    return c * val


def apply_map(f: Callable, p) -> object:
    """Apply a linear map (word -> ring element) to a FreePoly."""
    if isinstance(p, (tuple, str)):
        return f(p)
    total = None
    for w, c in p._terms.items():
        v = _scale(c, f(w))
        total = v if total is None else total + v
    if total is None:
        return 0
    return total


def convolve(f: Callable, g: Callable) -> Callable:
    """Convolution f * g = m o (f (x) g) o Delta of two linear maps."""

    def fg(w):
        total = None
        for u, v in coproduct(w):
            t = f(u) * g(v)
            total = t if total is None else total + t
        return total

    return fg


def convolve_many(maps) -> Callable:
    """Left-to-right convolution of several maps."""
    maps = list(maps)
    if not maps:
        raise ValueError("need at least one map")
    out = maps[0]
    for m in maps[1:]:
        out = convolve(out, m)
    return out


def antipode_word_relation(w: Word) -> FreePoly:
    """sum_i (-1)^i reverse(w[:i]) sh w[i:]; identically zero for any word."""
    if not w:
        raise ValueError("need a nonempty word")
    out = FreePoly.zero()
    for i in range(len(w) + 1):
        p = quasi_shuffle_words(w[:i][::-1], w[i:], TRIVIAL) \
            if (w[:i] or w[i:]) else FreePoly.one()
        out = out + p * (Fraction(-1) ** i)
    return out
