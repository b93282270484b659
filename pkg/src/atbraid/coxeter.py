"""
Finite Coxeter groups of type A_n (the symmetric group S_{n+1}) and B_n (the
hyperoctahedral group of signed permutations of {1..n}).

Elements are stored in one-line notation: ``perm[j-1]`` is the image of ``j``.
Products compose as maps, ``(u * v)(j) = u(v(j))``, so right multiplication by
the generator ``s_i`` acts on positions and left multiplication acts on values.

Generators:

- type A: ``s_i`` (1 <= i <= n) is the transposition ``(i, i+1)``;
- type B: ``s_i`` (i < n) swaps ``i`` and ``i+1``, ``s_n`` negates ``n``.

The canonical word of an element is its lexicographically least reduced word
(letters ordered ``s_1 < s_2 < ... < s_n``), i.e. the shortlex-minimal word.
For type A these words are exactly the products ``s_{1 i_1} s_{2 i_2} ...
s_{n i_n}`` with ``s_{ji} = s_j s_{j-1} ... s_i``; for type B they are
``s_{1 i_1} ... s_{n-1, i_{n-1}} s_{n j_1} ... s_{n j_k}`` with increasing
``j``'s.  :func:`is_normal_word` checks these block patterns directly.

>>> spec = GroupSpec("A", 2)
>>> nf_reduce(spec, [2, 1, 2]).nf
(1, 2, 1)
>>> longest_element(GroupSpec("B", 2)).nf
(1, 2, 1, 2)
"""
from __future__ import annotations

import enum
import itertools
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Family",
    "GroupSpec",
    "CoxeterElement",
    "CapExceeded",
    "nf_reduce",
    "multiply",
    "perp",
    "longest_element",
    "flip",
    "complement",
    "inverse",
    "breadth",
    "left_descents",
    "right_descents",
    "enumerate_elements",
    "is_normal_word",
    "normal_blocks",
    "DEFAULT_ENUMERATION_CAP",
]

#: Largest group order :func:`enumerate_elements` will materialize by default.
DEFAULT_ENUMERATION_CAP = int(os.environ.get("ATBRAID_ENUM_CAP", 50_000))


class CapExceeded(ValueError):
    """Raised when a computation would exceed a configured size cap."""


class Family(str, enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class GroupSpec:
    """A finite Coxeter group of type A_n or B_n, ``n`` simple generators."""

    family: Family
    n: int

    def __post_init__(self):
        try:
            family = Family(self.family.upper())
        except (AttributeError, ValueError):
            raise ValueError(f"unknown family {self.family!r}; expected 'A' or 'B'") from None
        object.__setattr__(self, "family", family)
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError(f"rank must be an int, got {type(self.n).__name__}")
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")
        if family is Family.B and self.n < 2:
            raise ValueError("type B needs rank >= 2")

    @property
    def degree(self) -> int:
        """Number of points permuted: n+1 for type A, n for type B."""
        return self.n + 1 if self.family is Family.A else self.n

    @property
    def order(self) -> int:
        if self.family is Family.A:
            return math.factorial(self.n + 1)
        return 2**self.n * math.factorial(self.n)

    @property
    def longest_length(self) -> int:
        n = self.n
        return n * (n + 1) // 2 if self.family is Family.A else n * n

    def identity(self) -> CoxeterElement:
        return CoxeterElement(self, tuple(range(1, self.degree + 1)))

    def generator(self, i: int) -> CoxeterElement:
        check_index(self, i)
        perm = list(range(1, self.degree + 1))
        if self.family is Family.B and i == self.n:
            perm[-1] = -perm[-1]
        else:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return CoxeterElement(self, tuple(perm))

    def generators(self) -> list[CoxeterElement]:
        return [self.generator(i) for i in range(1, self.n + 1)]

    def __str__(self):
        return f"{self.family.value}{self.n}"


def check_index(spec: GroupSpec, i) -> None:
    if isinstance(i, bool) or not isinstance(i, int):
        raise TypeError(f"generator index must be an int, got {i!r}")
    if not 1 <= i <= spec.n:
        raise ValueError(f"generator index {i} out of range 1..{spec.n} for {spec}")


def _root_height(spec: GroupSpec, value: int) -> int:
    # A linear functional positive exactly on the positive roots, evaluated at
    # e_value (with e_{-k} = -e_k).  Simple roots: e_i - e_{i+1}, and e_n in type B.
    m = spec.degree + 1
    return m - value if value > 0 else -(m + value)


class CoxeterElement:
    """An immutable group element; hashable, compared by its permutation."""

    __slots__ = ("spec", "perm", "_hash", "_nf", "_length")

    def __init__(self, spec: GroupSpec, perm: Sequence[int]):
        self.spec = spec
        self.perm = tuple(perm)
        self._hash = hash((spec, self.perm))
        self._nf = None
        self._length = None

    @classmethod
    def from_perm(cls, spec: GroupSpec, perm: Sequence[int]) -> CoxeterElement:
        """Build an element from one-line notation, validating it."""
        perm = tuple(perm)
        d = spec.degree
        if len(perm) != d:
            raise ValueError(f"expected {d} entries, got {len(perm)}")
        if spec.family is Family.A:
            ok = sorted(perm) == list(range(1, d + 1))
        else:
            ok = sorted(abs(x) for x in perm) == list(range(1, d + 1))
        if not ok:
            raise ValueError(f"{perm} is not a {'signed ' if spec.family is Family.B else ''}permutation")
        return cls(spec, perm)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self._hash == other._hash and self.perm == other.perm and self.spec == other.spec

    def __hash__(self):
        return self._hash

    def __mul__(self, other: CoxeterElement) -> CoxeterElement:
        return multiply(self, other)

    def __repr__(self):
        return f"CoxeterElement({self.spec}, nf={list(self.nf)})"

    def __getstate__(self):
        return (self.spec, self.perm)

    def __setstate__(self, state):
        self.__init__(*state)

    @property
    def length(self) -> int:
        """Coxeter length: the number of positive roots sent to negative roots."""
        if self._length is None:
            spec, p = self.spec, self.perm
            h = [_root_height(spec, x) for x in p]
            count = 0
            for i, j in itertools.combinations(range(len(h)), 2):
                if h[i] < h[j]:
                    count += 1
                if spec.family is Family.B and h[i] + h[j] < 0:
                    count += 1
            if spec.family is Family.B:
                count += sum(1 for x in p if x < 0)
            self._length = count
        return self._length

    @property
    def nf(self) -> tuple[int, ...]:
        """The canonical (shortlex-least reduced) word, as generator indices."""
        if self._nf is None:
            word = []
            w = self
            while True:
                desc = left_descents(w)
                if not desc:
                    break
                i = min(desc)
                word.append(i)
                w = multiply(self.spec.generator(i), w)
            self._nf = tuple(word)
        return self._nf

    @property
    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.perm, 1))

    @property
    def is_longest(self) -> bool:
        return self.length == self.spec.longest_length

    def to_json(self) -> dict:
        return {"family": self.spec.family.value, "n": self.spec.n, "word": list(self.nf)}

    @classmethod
    def from_json(cls, data: dict) -> CoxeterElement:
        spec = GroupSpec(data["family"], int(data["n"]))
        return nf_reduce(spec, data["word"])


def _same_spec(a: CoxeterElement, b: CoxeterElement) -> None:
    if a.spec != b.spec:
        raise ValueError(f"spec mismatch: {a.spec} vs {b.spec}")


def multiply(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    _same_spec(a, b)
    pa = a.perm
    if a.spec.family is Family.A:
        return CoxeterElement(a.spec, tuple(pa[x - 1] for x in b.perm))
    return CoxeterElement(a.spec, tuple(pa[x - 1] if x > 0 else -pa[-x - 1] for x in b.perm))


def inverse(a: CoxeterElement) -> CoxeterElement:
    out = [0] * len(a.perm)
    for i, x in enumerate(a.perm, 1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return CoxeterElement(a.spec, tuple(out))


def right_descents(a: CoxeterElement) -> frozenset[int]:
    """Generators ``s_i`` with ``length(a * s_i) < length(a)``."""
    spec, p = a.spec, a.perm
    h = [_root_height(spec, x) for x in p]
    out = {i for i in range(1, len(p)) if h[i - 1] < h[i]}
    if spec.family is Family.B and p[-1] < 0:
        out.add(spec.n)
    return frozenset(out)


def left_descents(a: CoxeterElement) -> frozenset[int]:
    """Generators ``s_i`` with ``length(s_i * a) < length(a)``."""
    return right_descents(inverse(a))


def nf_reduce(spec: GroupSpec, word: Iterable[int]) -> CoxeterElement:
    """Evaluate a word in the simple generators and return the group element."""
    w = spec.identity()
    for i in word:
        check_index(spec, i)
        w = multiply(w, spec.generator(i))
    return w


@lru_cache(maxsize=None)
def longest_element(spec: GroupSpec) -> CoxeterElement:
    if spec.family is Family.A:
        return CoxeterElement(spec, tuple(range(spec.degree, 0, -1)))
    return CoxeterElement(spec, tuple(-x for x in range(1, spec.degree + 1)))


def perp(a: CoxeterElement, b: CoxeterElement) -> bool:
    """Length additivity: ``length(a*b) == length(a) + length(b)``."""
    return multiply(a, b).length == a.length + b.length


def flip(a: CoxeterElement) -> CoxeterElement:
    """The diagram automorphism ``s_i -> s_{n+1-i}`` (type A); identity in type B.

    In type A it is conjugation by the longest element.
    """
    if a.spec.family is Family.B:
        return a
    w0 = longest_element(a.spec)
    return multiply(multiply(w0, a), w0)


def complement(a: CoxeterElement) -> CoxeterElement:
    """The unique ``E`` with ``a * E == w0`` and ``length(a) + length(E) == length(w0)``."""
    return multiply(inverse(a), longest_element(a.spec))


def normal_blocks(spec: GroupSpec, word: Sequence[int]) -> list[tuple[int, int]] | None:
    """Split a word into its ``s_{ji}`` blocks, as ``(j, i)`` pairs.

    Returns ``None`` when the word does not have the normal-form block pattern.

    >>> normal_blocks(GroupSpec("A", 2), (1, 2, 1))
    [(1, 1), (2, 1)]
    >>> normal_blocks(GroupSpec("B", 2), (1, 2, 1, 2))
    [(1, 1), (2, 1), (2, 2)]
    >>> normal_blocks(GroupSpec("A", 2), (2, 1, 2)) is None
    True
    """
    word = tuple(word)
    n = spec.n
    if spec.family is Family.A:
        head, rest = word, ()
        top = n
    else:
        cut = word.index(n) if n in word else len(word)
        head, rest = word[:cut], word[cut:]
        top = n - 1
    blocks = []
    pos = 0
    last = 0
    while pos < len(head):
        j = head[pos]
        if not (last < j <= top):
            return None
        k = pos + 1
        while k < len(head) and head[k] == head[k - 1] - 1:
            k += 1
        blocks.append((j, head[k - 1]))
        last = j
        pos = k
    last_i = 0
    pos = 0
    while pos < len(rest):
        k = pos + 1
        while k < len(rest) and rest[k] == rest[k - 1] - 1:
            k += 1
        i = rest[k - 1]
        if rest[pos] != n or i <= last_i:
            return None
        blocks.append((n, i))
        last_i = i
        pos = k
    return blocks


def is_normal_word(spec: GroupSpec, word: Sequence[int]) -> bool:
    """Whether ``word`` matches the canonical block pattern for ``spec``."""
    return normal_blocks(spec, word) is not None


def breadth(a: CoxeterElement) -> int:
    """Number of nonempty ``s_{ji}`` blocks in the canonical word (type A)."""
    if a.spec.family is not Family.A:
        raise ValueError("breadth is defined for type A only")
    return len(normal_blocks(a.spec, a.nf))


def enumerate_elements(spec: GroupSpec, cap: int | None = None) -> list[CoxeterElement]:
    """Every group element exactly once, in increasing (length, canonical word) order."""
    cap = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if spec.order > cap:
        raise CapExceeded(f"|{spec}| = {spec.order} exceeds enumeration cap {cap}")
    return list(_enumerate_cached(spec))


@lru_cache(maxsize=16)
def _enumerate_cached(spec: GroupSpec) -> tuple[CoxeterElement, ...]:
    d = spec.degree
    if spec.family is Family.A:
        perms: Iterator[tuple[int, ...]] = itertools.permutations(range(1, d + 1))
    else:
        perms = (
            tuple(s * x for s, x in zip(signs, p))
            for p in itertools.permutations(range(1, d + 1))
            for signs in itertools.product((1, -1), repeat=d)
        )
    elems = [CoxeterElement(spec, p) for p in perms]
    elems.sort(key=lambda e: (e.length, e.nf))
    return tuple(elems)
