"""
Ground truth kept independent of the rewriting code.

* :func:`coxeter_bfs` walks the Cayley graph of the finite Coxeter group with
  its own permutation model and records the lexicographically first geodesic
  of every element.
* :func:`positive_equal` decides equality of positive braid words by
  searching over single applications of the defining relations, stripping
  one common leading letter at a time (the monoid is cancellative).
* :func:`artin_equal` reduces equality of signed words to the positive case:
  inverse letters become complement words followed by ``D^-1`` (one ``D^-1``
  per reduced run of inverse letters), the formal ``D^-1`` letters are
  pushed to the left through the flip ``σ_j -> σ_{n+1-j}`` (type A; nothing to
  do in type B), and both sides are padded by the same power of ``D``.

Before any search, :func:`artin_equal` discards pairs separated by a necessary
invariant (exponent sum, Coxeter projection, the Artin action on a free
group).  Those invariants can only certify inequality; an ``equal`` answer
always comes from an explicit chain of relation rewrites.
"""
from __future__ import annotations

import heapq
import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .coxeter import CapExceeded, Family, GroupSpec

__all__ = [
    "OracleLimitExceeded",
    "PositiveWord",
    "coxeter_bfs",
    "braid_relations",
    "positive_equal",
    "to_positive",
    "artin_equal",
    "coxeter_projection",
    "free_action",
    "free_reduce",
    "DEFAULT_STATE_CAP",
]

#: Visited-set size at which :func:`positive_equal` gives up.
DEFAULT_STATE_CAP = int(os.environ.get("ATBRAID_ORACLE_STATES", 2_000_000))


class OracleLimitExceeded(RuntimeError):
    """The search space exceeded its cap; no answer is given."""


@dataclass(frozen=True)
class PositiveWord:
    spec: GroupSpec
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i in self.letters:
            if not 1 <= i <= self.spec.n:
                raise ValueError(f"generator {i} out of range 1..{self.spec.n}")


def _act(spec: GroupSpec, perm: tuple, i: int) -> tuple:
    # right multiplication by s_i in one-line notation
    p = list(perm)
    if spec.family is Family.B and i == spec.n:
        p[-1] = -p[-1]
    else:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def coxeter_projection(spec: GroupSpec, word: Iterable[int]) -> tuple:
    """Permutation image of a (signed) Artin word under ``σ_i -> s_i``."""
    d = spec.n + 1 if spec.family is Family.A else spec.n
    perm = tuple(range(1, d + 1))
    for i in word:
        perm = _act(spec, perm, abs(i))
    return perm


@lru_cache(maxsize=16)
def _bfs(spec: GroupSpec) -> dict:
    d = spec.n + 1 if spec.family is Family.A else spec.n
    start = tuple(range(1, d + 1))
    geo = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        w = geo[p]
        for i in range(1, spec.n + 1):
            q = _act(spec, p, i)
            if q not in geo:
                geo[q] = w + (i,)
                queue.append(q)
    return geo


def coxeter_bfs(spec: GroupSpec, cap: int = 50_000) -> dict[tuple, tuple[int, ...]]:
    """Map each element (one-line notation) to its lexicographically first geodesic."""
    if spec.order > cap:
        raise CapExceeded(f"|{spec}| = {spec.order} exceeds BFS cap {cap}")
    return dict(_bfs(spec))


@lru_cache(maxsize=64)
def braid_relations(spec: GroupSpec) -> tuple[tuple[tuple, tuple], ...]:
    """Defining relations of the positive monoid, both orientations."""
    n = spec.n
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            rels.append(((i, j), (j, i)))
    top = n - 1 if spec.family is Family.A else n - 2
    for i in range(1, top + 1):
        rels.append(((i, i + 1, i), (i + 1, i, i + 1)))
    if spec.family is Family.B:
        rels.append(((n, n - 1, n, n - 1), (n - 1, n, n - 1, n)))
    return tuple(rels) + tuple((r, l) for l, r in rels)


def _neighbours(word: tuple, rels) -> Iterable[tuple]:
    L = len(word)
    for lhs, rhs in rels:
        k = len(lhs)
        first = lhs[0]
        for p in range(L - k + 1):
            if word[p] == first and word[p:p + k] == lhs:
                yield word[:p] + rhs + word[p + k:]


def positive_equal(
    spec: GroupSpec,
    u: Sequence[int] | PositiveWord,
    v: Sequence[int] | PositiveWord,
    max_states: int | None = None,
) -> bool:
    """Whether two positive words are equal in the positive braid monoid.

    The monoid is cancellative, so ``u = v`` holds exactly when some word
    equivalent to ``u`` starts with the first letter of ``v`` and the two
    remainders are equal.  Each round searches the rewrite class of ``u`` for
    such a word and strips one letter.  A search that exceeds ``max_states``
    visited words raises :class:`OracleLimitExceeded` rather than guess.
    """
    u = tuple(u.letters if isinstance(u, PositiveWord) else u)
    v = tuple(v.letters if isinstance(v, PositiveWord) else v)
    PositiveWord(spec, u), PositiveWord(spec, v)
    if len(u) != len(v):
        return False
    if coxeter_projection(spec, u) != coxeter_projection(spec, v):
        return False
    if free_action(spec, u) != free_action(spec, v):
        return False
    cap = DEFAULT_STATE_CAP if max_states is None else max_states
    rels = braid_relations(spec)
    u, v = _cancel_ends(u, v)
    while u:
        if u[0] != v[0]:
            found = _find_with_prefix(u, v[0], rels, cap)
            if found is None:
                return False
            u = found
        u, v = _cancel_ends(u[1:], v[1:])
    return True


def _find_with_prefix(word: tuple, first: int, rels, cap: int) -> tuple | None:
    # best-first search of the rewrite class, preferring early occurrences of `first`
    def score(w):
        try:
            return w.index(first)
        except ValueError:
            return len(w)

    seen = {word}
    heap = [(score(word), 0, word)]
    tick = 0
    while heap:
        _, _, w = heapq.heappop(heap)
        for x in _neighbours(w, rels):
            if x in seen:
                continue
            if x[0] == first:
                return x
            seen.add(x)
            if len(seen) > cap:
                raise OracleLimitExceeded(f"positive_equal visited more than {cap} words")
            tick += 1
            heapq.heappush(heap, (score(x), tick, x))
    return None


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    """Cancel adjacent ``i, -i`` pairs."""
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _sigma_images(i: int) -> dict[int, tuple[int, ...]]:
    # Artin's action of sigma_i on the free generators x_i, x_{i+1} and their inverses
    a, b = i, i + 1
    return {
        a: (a, b, -a),
        b: (a,),
        -a: (a, -b, -a),
        -b: (-a,),
    }


def _sigma_inv_images(i: int) -> dict[int, tuple[int, ...]]:
    a, b = i, i + 1
    return {
        a: (b,),
        b: (-b, a, b),
        -a: (-b,),
        -b: (-b, -a, b),
    }


def free_action(spec: GroupSpec, word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Images of the free generators under the braid's action.

    Type B braids act through ``s_n -> σ_n^2`` into the type A braid group on
    ``n + 1`` strands.  Equal braids give equal images, so a mismatch proves
    inequality.
    """
    m = spec.n + 1
    letters: list[int] = []
    for x in word:
        if spec.family is Family.B and abs(x) == spec.n:
            letters.extend((x, x))
        else:
            letters.append(x)
    images = [(j,) for j in range(1, m + 1)]
    for x in reversed(letters):
        sub = _sigma_images(x) if x > 0 else _sigma_inv_images(-x)
        images = [
            free_reduce([y for c in img for y in sub.get(c, (c,))]) for img in images
        ]
    return tuple(images)


def _cancel_ends(u: tuple, v: tuple) -> tuple[tuple, tuple]:
    # the positive monoid is cancellative on both sides
    i = 0
    while i < len(u) and i < len(v) and u[i] == v[i]:
        i += 1
    u, v = u[i:], v[i:]
    j = 0
    while j < len(u) and j < len(v) and u[-1 - j] == v[-1 - j]:
        j += 1
    return u[:len(u) - j], v[:len(v) - j]


def _flip_index(spec: GroupSpec, i: int) -> int:
    return spec.n + 1 - i if spec.family is Family.A else i


def _longest_word(spec: GroupSpec) -> tuple[int, ...]:
    d = spec.n + 1 if spec.family is Family.A else spec.n
    w0 = tuple(reversed(range(1, d + 1))) if spec.family is Family.A else tuple(-x for x in range(1, d + 1))
    return _bfs(spec)[w0]


def _reduced_chunks(spec: GroupSpec, word: Sequence[int]) -> list[tuple[int, ...]]:
    # greedy split into pieces that are reduced words of the Coxeter group
    geo = _bfs(spec)
    chunks: list[list[int]] = []
    for x in word:
        if chunks:
            trial = chunks[-1] + [x]
            if len(geo[coxeter_projection(spec, trial)]) == len(trial):
                chunks[-1] = trial
                continue
        chunks.append([x])
    return [tuple(c) for c in chunks]


def to_positive(spec: GroupSpec, word: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Write a signed word as ``D^-m · P`` with ``P`` positive; returns ``(m, P)``.

    A run of inverse letters is the inverse of a positive word ``Q``.  ``Q`` is
    cut into reduced pieces ``q``, and each ``q^-1`` becomes ``E_q · D^-1``
    where ``E_q`` is a reduced word of ``q^-1 w0``: two reduced words of one
    Coxeter element are equal as positive braids, so ``q E_q = D``.
    """
    geo = _bfs(spec)
    dword = _longest_word(spec)
    word = tuple(word)
    for i in word:
        if i == 0 or abs(i) > spec.n:
            raise ValueError(f"Artin letter {i} out of range ±1..±{spec.n}")
    tokens: list = []
    p = 0
    while p < len(word):
        if word[p] > 0:
            tokens.append(word[p])
            p += 1
            continue
        q = p
        while q < len(word) and word[q] < 0:
            q += 1
        positive = tuple(-x for x in reversed(word[p:q]))
        # (Q1 ... Qt)^-1 = Qt^-1 ... Q1^-1
        for chunk in reversed(_reduced_chunks(spec, positive)):
            inv_then_w0 = tuple(reversed(chunk)) + dword
            tokens.extend(geo[coxeter_projection(spec, inv_then_w0)])
            tokens.append(None)
        p = q
    # moving every D^-1 to the front flips a letter once per D^-1 on its right
    m = 0
    out: list[int] = []
    flips_to_right = 0
    for t in reversed(tokens):
        if t is None:
            flips_to_right += 1
            m += 1
        else:
            out.append(_flip_index(spec, t) if flips_to_right % 2 else t)
    out.reverse()
    return m, tuple(out)


def artin_equal(spec: GroupSpec, u: Sequence[int], v: Sequence[int], max_states: int | None = None) -> bool:
    """Whether two signed Artin words denote the same braid."""
    u, v = free_reduce(u), free_reduce(v)
    if u == v:
        return True
    if sum(1 if i > 0 else -1 for i in u) != sum(1 if i > 0 else -1 for i in v):
        return False
    if coxeter_projection(spec, u) != coxeter_projection(spec, v):
        return False
    if free_action(spec, u) != free_action(spec, v):
        return False
    mu, pu = to_positive(spec, u)
    mv, pv = to_positive(spec, v)
    dword = _longest_word(spec)
    top = max(mu, mv)
    return positive_equal(spec, dword * (top - mu) + pu, dword * (top - mv) + pv, max_states)
