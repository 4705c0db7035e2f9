"""Words over the index alphabet {z_k} and the two-letter alphabet {x, y}.

An index word is a tuple of positive integers (k_1, ..., k_r); the empty
tuple is the empty word.  An xy-word is a string over "xy".  The two are
related by the encoding z_k <-> x^(k-1) y, which identifies index words
with xy-words ending in y.

FreePoly is a finite rational linear combination of words, the basic
container for quasi-shuffle computations.  All arithmetic is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

ZWord = tuple
XYWord = str
Word = Union[ZWord, XYWord]

# subspace tags, from smallest to largest
H2 = "H2"
H0 = "H0"
H1 = "H1"
H = "H"


def is_index_word(w) -> bool:
    return isinstance(w, tuple) and all(isinstance(k, int) and k >= 1 for k in w)


def check_index(w):
    if not is_index_word(w):
        raise ValueError(f"not an index word: {w!r}")


def weight(w: Word) -> int:
    """Total weight: sum of entries for index words, length for xy-words."""
    if isinstance(w, tuple):
        return sum(w)
    return len(w)


def depth(w: ZWord) -> int:
    check_index(w)
    return len(w)


def weight_depth(w: ZWord):
    check_index(w)
    return sum(w), len(w)


def encode_xy(w: ZWord) -> XYWord:
    """z_{k_1} ... z_{k_r}  ->  x^(k_1-1) y ... x^(k_r-1) y."""
    check_index(w)
    return "".join("x" * (k - 1) + "y" for k in w)


def decode_xy(s: XYWord) -> ZWord:
    """Inverse of encode_xy; rejects xy-words not ending in y."""
    if not isinstance(s, str) or not set(s) <= {"x", "y"}:
        raise ValueError(f"not an xy-word: {s!r}")
    if s and not s.endswith("y"):
        raise ValueError(f"xy-word does not end in y (not in H^1): {s!r}")
    out = []
    run = 0
    for c in s:
        if c == "x":
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


def subspace_of(w: Word) -> str:
    """Smallest of H2 < H0 < H1 < H containing the word."""
    if isinstance(w, str):
        if w and not w.endswith("y"):
            return H
        w = decode_xy(w)
    check_index(w)
    if not w or all(k >= 2 for k in w):
        return H2
    if w[0] >= 2:
        return H0
    return H1


def word_key(w: Word):
    """Sort key: weight-graded, then lexicographic."""
    return (weight(w), tuple(w) if isinstance(w, tuple) else w)


def word_str(w: Word) -> str:
    if not w:
        return "1"
    if isinstance(w, str):
        return w
    return "".join(f"z{k}" for k in w)


_Z_LETTERS = re.compile(r"^(?:\s*z(\d+)\s*)+$")


def parse_word(text: str) -> Word:
    """Parse "3,2", "z3 z2", "z3z2", "xxy" or "1" into a word."""
    s = text.strip()
    if s == "1" or s == "":
        return ()
    if set(s) <= {"x", "y"}:
        return s
    if _Z_LETTERS.match(s):
        return tuple(int(m) for m in re.findall(r"z(\d+)", s))
    try:
        entries = tuple(int(p) for p in s.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word: {text!r}") from None
    if any(k < 1 for k in entries):
        raise ValueError(
            f"index entries must be >= 1 (H^1 requires k_i >= 1): {text!r}")
    return entries


class FreePoly:
    """Finite rational linear combination of words; zero terms never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    c0 = d.get(w)
                    c = c if c0 is None else c0 + c
                    if c:
                        d[w] = c
                    else:
                        del d[w]
        self._terms = d

    @classmethod
    def term(cls, w: Word, c=1) -> "FreePoly":
        p = cls.__new__(cls)
        c = Fraction(c)
        p._terms = {w: c} if c else {}
        return p

    @classmethod
    def zero(cls) -> "FreePoly":
        p = cls.__new__(cls)
        p._terms = {}
        return p

    @classmethod
    def one(cls) -> "FreePoly":
        return cls.term((), 1)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: "FreePoly") -> "FreePoly":
        d = dict(self._terms)
        for w, c in other._terms.items():
            c0 = d.get(w)
            s = c if c0 is None else c0 + c
            if s:
                d[w] = s
            else:
                del d[w]
        out = FreePoly.__new__(FreePoly)
        out._terms = d
        return out

    def __neg__(self) -> "FreePoly":
        out = FreePoly.__new__(FreePoly)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __mul__(self, c) -> "FreePoly":
        c = Fraction(c)
        out = FreePoly.__new__(FreePoly)
        out._terms = {} if not c else {w: a * c for w, a in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __truediv__(self, c) -> "FreePoly":
        return self * (Fraction(1) / Fraction(c))

    def __eq__(self, other):
        return isinstance(other, FreePoly) and self._terms == other._terms

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            ws = word_str(w)
            if c == 1:
                term = ws
            elif c == -1:
                term = f"-{ws}"
            elif w == ():
                term = str(c)
            else:
                term = f"{c}*{ws}"
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self):
        return f"FreePoly({self})"
