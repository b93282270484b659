"""
The simple-braid alphabet: one letter ``r(a)`` for every nontrivial Coxeter
element ``a``, together with a formal inverse ``D^-1`` of the Garside letter
``D = r(w0)``.

Words are plain tuples of :class:`ATLetter`.  They are ordered by total weight
(the sum of the Coxeter lengths of their letters, ``D^-1`` weighing as much as
``D``) and then letter by letter.  Letters are ordered with ``D^-1`` first, then
longer elements before shorter ones, then lexicographically by canonical word.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .coxeter import (
    CoxeterElement,
    GroupSpec,
    complement,
    enumerate_elements,
    left_descents,
    longest_element,
    nf_reduce,
    right_descents,
)

__all__ = [
    "ATLetter",
    "ATWord",
    "CanonicalBraid",
    "Ordering",
    "gen",
    "delta",
    "delta_inv",
    "alphabet",
    "letter_compare",
    "word_compare",
    "word_key",
    "weight",
    "from_artin",
    "format_word",
    "parse_word",
    "is_left_weighted",
]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class ATLetter:
    """A letter ``r(elem)`` of the alphabet, or ``D^-1`` when ``elem`` is None."""

    __slots__ = ("spec", "elem", "key", "weight", "_hash")

    def __init__(self, spec: GroupSpec, elem: CoxeterElement | None):
        if elem is not None:
            if elem.spec != spec:
                raise ValueError(f"spec mismatch: {elem.spec} vs {spec}")
            if elem.is_identity:
                raise ValueError("the identity element is not a letter")
            self.key = (1, -elem.length, elem.nf)
            self.weight = elem.length
        else:
            self.key = (0,)
            self.weight = spec.longest_length
        self.spec = spec
        self.elem = elem
        self._hash = hash((spec, self.key))

    @property
    def is_delta_inv(self) -> bool:
        return self.elem is None

    @property
    def is_delta(self) -> bool:
        return self.elem is not None and self.weight == self.spec.longest_length

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ATLetter):
            return NotImplemented
        return self.key == other.key and self.spec == other.spec

    def __lt__(self, other: ATLetter) -> bool:
        return letter_compare(self, other) is Ordering.LT

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ATLetter({self.spec}, {format_letter(self)})"

    def __getstate__(self):
        return (self.spec, self.elem)

    def __setstate__(self, state):
        self.__init__(*state)


ATWord = tuple  # tuple[ATLetter, ...]


def gen(elem: CoxeterElement) -> ATLetter:
    return ATLetter(elem.spec, elem)


@lru_cache(maxsize=None)
def delta(spec: GroupSpec) -> ATLetter:
    return ATLetter(spec, longest_element(spec))


@lru_cache(maxsize=None)
def delta_inv(spec: GroupSpec) -> ATLetter:
    return ATLetter(spec, None)


def alphabet(spec: GroupSpec, cap: int | None = None) -> list[ATLetter]:
    """All letters of X (without ``D^-1``), sorted increasingly."""
    letters = [gen(e) for e in enumerate_elements(spec, cap) if not e.is_identity]
    letters.sort(key=lambda x: x.key)
    return letters


def _check_pair(a, b) -> None:
    if a.spec != b.spec:
        raise ValueError(f"spec mismatch: {a.spec} vs {b.spec}")


def letter_compare(a: ATLetter, b: ATLetter) -> Ordering:
    """
    >>> spec = GroupSpec("A", 2)
    >>> s1, s2 = (gen(g) for g in spec.generators())
    >>> letter_compare(s1, s2), letter_compare(delta(spec), s1)
    (<Ordering.LT: -1>, <Ordering.LT: -1>)
    >>> letter_compare(delta_inv(spec), delta(spec))
    <Ordering.LT: -1>
    """
    _check_pair(a, b)
    return Ordering((a.key > b.key) - (a.key < b.key))


def weight(u: Iterable[ATLetter]) -> int:
    return sum(x.weight for x in u)


def word_key(u: Sequence[ATLetter]) -> tuple:
    """Sort key realising the weight-then-lexicographic order on words."""
    return (weight(u), tuple(x.key for x in u))


def word_compare(u: Sequence[ATLetter], v: Sequence[ATLetter]) -> Ordering:
    letters = (*u, *v)
    for x in letters[1:]:
        _check_pair(x, letters[0])
    ku, kv = word_key(u), word_key(v)
    return Ordering((ku > kv) - (ku < kv))


def from_artin(spec: GroupSpec, word: Iterable[int]) -> ATWord:
    """Rewrite a signed Artin word: ``+i -> r(s_i)``, ``-i -> r(E_i) D^-1``."""
    out = []
    for i in word:
        if isinstance(i, bool) or not isinstance(i, int) or i == 0 or abs(i) > spec.n:
            raise ValueError(f"Artin letter {i!r} out of range ±1..±{spec.n}")
        s = spec.generator(abs(i))
        if i > 0:
            out.append(gen(s))
        else:
            out.append(gen(complement(s)))
            out.append(delta_inv(spec))
    return tuple(out)


def is_left_weighted(a: CoxeterElement, b: CoxeterElement) -> bool:
    """Every left descent of ``b`` is a right descent of ``a``."""
    return left_descents(b) <= right_descents(a)


# -- text encoding -----------------------------------------------------------

def format_letter(x: ATLetter, delta_as_d: bool = False) -> str:
    if x.elem is None:
        return "D^-1"
    if delta_as_d and x.is_delta:
        return "D"
    return "[" + " ".join(map(str, x.elem.nf)) + "]"


def format_word(u: Sequence[ATLetter], delta_as_d: bool = False) -> str:
    """Render a word as ``[1 2]·D^-1·[2]``; the empty word renders as ``1``."""
    if not u:
        return "1"
    return "·".join(format_letter(x, delta_as_d) for x in u)


_TOKEN = re.compile(r"\s*(\[[\d\s]*\]|D\^-1|D)\s*(?:·|\*|$)")


def parse_word(spec: GroupSpec, text: str) -> ATWord:
    """Inverse of :func:`format_word`."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse AT word at {text[pos:]!r}")
        tok = m.group(1)
        if tok == "D^-1":
            out.append(delta_inv(spec))
        elif tok == "D":
            out.append(delta(spec))
        else:
            elem = nf_reduce(spec, [int(t) for t in tok[1:-1].split()])
            out.append(ATLetter(spec, elem))
        pos = m.end()
    return tuple(out)


# -- canonical braids --------------------------------------------------------

@dataclass(frozen=True)
class CanonicalBraid:
    """``D^k a_1 ... a_s`` with a left-weighted tail free of 1 and ``w0``."""

    spec: GroupSpec
    k: int
    tail: tuple[CoxeterElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple(self.tail))
        w0len = self.spec.longest_length
        for a in self.tail:
            if a.spec != self.spec:
                raise ValueError(f"spec mismatch: {a.spec} vs {self.spec}")
            if a.is_identity or a.length == w0len:
                raise ValueError("tail factors must differ from 1 and w0")
        for a, b in zip(self.tail, self.tail[1:]):
            if not is_left_weighted(a, b):
                raise ValueError(f"pair {list(a.nf)}, {list(b.nf)} is not left-weighted")

    def letters(self) -> ATWord:
        d = delta(self.spec) if self.k >= 0 else delta_inv(self.spec)
        return (d,) * abs(self.k) + tuple(gen(a) for a in self.tail)

    def to_json(self) -> dict:
        return {"k": self.k, "tail": [list(a.nf) for a in self.tail]}

    @classmethod
    def from_json(cls, spec: GroupSpec, data: dict) -> CanonicalBraid:
        return cls(spec, int(data["k"]), tuple(nf_reduce(spec, w) for w in data["tail"]))

    def __str__(self):
        tail = "·".join("[" + " ".join(map(str, a.nf)) + "]" for a in self.tail)
        head = f"D^{self.k}" if self.k else ""
        return "·".join(p for p in (head, tail) if p) or "1"
