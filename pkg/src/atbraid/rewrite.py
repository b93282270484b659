"""
Normalization of words over the simple-braid alphabet.

Two routes compute the same canonical braid ``D^k a_1 ... a_s``:

* :func:`normalize` rewrites with the five rule families below until the word
  is irreducible, keeping a trace of every step;
* :func:`normalize_fast` builds the left-greedy form factor by factor using
  :func:`greedy_pair` and the flip automorphism.

The rule families, for nontrivial Coxeter elements and ``a ⊥ b`` meaning
``|ab| = |a| + |b|``:

====  ======================================  =================================
R1    ``r(a) r(b) -> r(ab)``                  ``a ⊥ b``
R2    ``r(a) r(bc) -> r(ab) r(c)``            ``a ⊥ b``, ``b ⊥ c``
R3    ``r(a) D^e -> D^e r(a')``               ``a != w0``, ``e = ±1``
R4    ``r(ab) r(cm) -> D r(a') r(m)``         ``bc = w0``, ``a ⊥ b``, ``c ⊥ m``
R5    ``D^e D^-e -> 1``
====  ======================================  =================================

``a'`` is the flip of ``a`` (type A) or ``a`` itself (type B, where ``D`` is
central).  Type B admits R4 only with ``a = 1`` or ``m = 1``.  Instances of R4
with ``a = 1`` coincide with R2 (or, when also ``m = 1``, with R1) instances and
are left to those families; instances with ``a b = w0`` are excluded because
they would not decrease the word.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .alphabet import (
    ATLetter,
    CanonicalBraid,
    delta,
    delta_inv,
    format_word,
    from_artin,
    gen,
    word_key,
)
from .coxeter import (
    CoxeterElement,
    Family,
    GroupSpec,
    complement,
    flip,
    inverse,
    left_descents,
    longest_element,
    multiply,
)

__all__ = [
    "RuleFamily",
    "RewriteRule",
    "TraceStep",
    "RewriteTrace",
    "ATSystem",
    "at_system",
    "RuleSystem",
    "reduce_word",
    "normalize",
    "normalize_positive",
    "normalize_fast",
    "greedy_pair",
    "prefix_meet",
    "prefixes",
    "evaluate",
    "normal_form",
]


class RuleFamily(str, enum.Enum):
    """Rule families; R* act on AT words, C* on Coxeter generator words."""

    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"


# Tie-break among families applicable at the same position.
PRIORITY = {
    RuleFamily.R5: 0,
    RuleFamily.R3: 1,
    RuleFamily.R4: 2,
    RuleFamily.R1: 3,
    RuleFamily.R2: 4,
    RuleFamily.C1: 0,
    RuleFamily.C2: 1,
    RuleFamily.C3: 2,
    RuleFamily.C4: 3,
}


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: tuple
    family: RuleFamily
    spec: GroupSpec | None = None

    def __str__(self):
        if self.lhs and isinstance(self.lhs[0], ATLetter):
            return f"{self.family.value}: {format_word(self.lhs)} -> {format_word(self.rhs)}"
        show = lambda w: " ".join(f"s{i}" for i in w) or "1"
        return f"{self.family.value}: {show(self.lhs)} -> {show(self.rhs)}"


@dataclass(frozen=True)
class TraceStep:
    position: int
    family: RuleFamily
    before: tuple
    after: tuple

    def __str__(self):
        return (
            f"pos={self.position} rule={self.family.value} "
            f"{format_word(self.before)} -> {format_word(self.after)}"
        )


@dataclass
class RewriteTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def replay(self, word: Sequence) -> tuple:
        """Re-apply the recorded steps to ``word``; checks each window matches."""
        w = list(word)
        for st in self.steps:
            i, L = st.position, len(st.before)
            if tuple(w[i:i + L]) != tuple(st.before):
                raise ValueError(f"trace step {st} does not match the word")
            w[i:i + L] = st.after
        return tuple(w)

    def lines(self) -> list[str]:
        return [str(s) for s in self.steps]


# -- Coxeter helpers ---------------------------------------------------------

def _left_mul_gen(i: int, a: CoxeterElement) -> CoxeterElement:
    return multiply(a.spec.generator(i), a)


def prefix_meet(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    """Greatest common prefix of ``a`` and ``b`` in the (right) weak order."""
    m = a.spec.identity()
    while True:
        common = left_descents(a) & left_descents(b)
        if not common:
            return m
        s = min(common)
        m = multiply(m, a.spec.generator(s))
        a, b = _left_mul_gen(s, a), _left_mul_gen(s, b)


def prefixes(a: CoxeterElement) -> list[CoxeterElement]:
    """All ``p`` with ``a = p * q`` and ``|a| = |p| + |q|``, identity included."""
    seen = {a.spec.identity(): a}
    frontier = [a.spec.identity()]
    while frontier:
        nxt = []
        for p in frontier:
            rest = seen[p]
            for s in left_descents(rest):
                q = multiply(p, a.spec.generator(s))
                if q not in seen:
                    seen[q] = _left_mul_gen(s, rest)
                    nxt.append(q)
        frontier = nxt
    return list(seen)


def greedy_pair(spec: GroupSpec, a: CoxeterElement, b: CoxeterElement) -> tuple[CoxeterElement, CoxeterElement]:
    """Left-weighted refactorization ``(head, tail)`` of the simple pair ``a·b``.

    Moves the largest possible prefix of ``b`` onto ``a``; ``tail`` may be 1.
    """
    if a.spec != spec or b.spec != spec:
        raise ValueError("spec mismatch")
    m = prefix_meet(complement(a), b)
    return multiply(a, m), multiply(inverse(m), b)


# -- rule systems ------------------------------------------------------------

_CACHE_LIMIT = 200_000


@lru_cache(maxsize=64)
def at_system(spec: GroupSpec, system: str = "full", r4_trivial: bool = True) -> ATSystem:
    """Shared (memoizing) rule matcher for ``spec``."""
    return ATSystem(spec, system, r4_trivial)


class ATSystem:
    """The AT rule families, matched lazily (no alphabet is materialized).

    ``system`` is ``"full"`` (R1-R5) or ``"positive"`` (R1, R2 only).  With
    ``r4_trivial=False`` the type-A R4 instances with ``m = 1`` are omitted.
    """

    max_lhs = 2

    def __init__(self, spec: GroupSpec, system: str = "full", r4_trivial: bool = True):
        if system not in ("full", "positive"):
            raise ValueError(f"unknown system {system!r}")
        self.spec = spec
        self.system = system
        self.r4_trivial = r4_trivial
        self.w0 = longest_element(spec)
        self.D = delta(spec)
        self.Dinv = delta_inv(spec)
        self._first_cache: dict = {}
        self._inst_cache: dict = {}

    # R4 instances at the pair (x, y), as (beta, alpha, mu) triples.
    def _r4(self, x: CoxeterElement, y: CoxeterElement):
        spec, w0 = self.spec, self.w0
        if x.length == spec.longest_length:
            return []
        out = []
        xinv = inverse(x)
        for binv in prefixes(xinv):
            if binv.is_identity or binv == xinv:
                continue
            beta = inverse(binv)
            gamma = multiply(binv, w0)
            mu = multiply(inverse(gamma), y)
            if mu.length != y.length - gamma.length:
                continue
            alpha = multiply(x, binv)
            if spec.family is Family.B and not mu.is_identity:
                continue
            if spec.family is Family.A and not self.r4_trivial and mu.is_identity:
                continue
            out.append((beta, alpha, mu))
        return out

    def _r4_rhs(self, alpha, mu) -> tuple:
        rhs = [self.D, gen(flip(alpha))]
        if not mu.is_identity:
            rhs.append(gen(mu))
        return tuple(rhs)

    def instances(self, word: Sequence[ATLetter], i: int) -> list[tuple[int, RuleFamily, tuple]]:
        """Every rule instance whose left side starts at ``word[i]``, by priority."""
        if i + 1 >= len(word):
            return []
        key = (word[i], word[i + 1])
        hit = self._inst_cache.get(key)
        if hit is None:
            if len(self._inst_cache) > _CACHE_LIMIT:
                self._inst_cache.clear()
            hit = self._inst_cache[key] = self._pair_instances(*key)
        return hit

    def first(self, word: Sequence[ATLetter], i: int):
        """The deterministic choice at ``i``: highest-priority family, least rhs."""
        if i + 1 >= len(word):
            return None
        key = (word[i], word[i + 1])
        try:
            return self._first_cache[key]
        except KeyError:
            pass
        if len(self._first_cache) > _CACHE_LIMIT:
            self._first_cache.clear()
        hit = self._first_cache[key] = self._pair_first(*key)
        return hit

    def _pair_instances(self, x: ATLetter, y: ATLetter) -> list:
        out = []
        if self.system == "full":
            if (x.is_delta and y.is_delta_inv) or (x.is_delta_inv and y.is_delta):
                out.append((2, RuleFamily.R5, ()))
            if (y.is_delta or y.is_delta_inv) and x.elem is not None and not x.is_delta:
                out.append((2, RuleFamily.R3, (y, gen(flip(x.elem)))))
            if x.elem is not None and y.elem is not None:
                r4 = [(2, RuleFamily.R4, self._r4_rhs(a, m)) for _, a, m in self._r4(x.elem, y.elem)]
                out.extend(sorted(set(r4), key=lambda t: word_key(t[2])))
        if x.elem is None or y.elem is None:
            return out
        a, b = x.elem, y.elem
        ab = multiply(a, b)
        if ab.length == a.length + b.length:
            out.append((2, RuleFamily.R1, (gen(ab),)))
        r2 = []
        for beta in prefixes(prefix_meet(complement(a), b)):
            if beta.is_identity or beta == b:
                continue
            r2.append((2, RuleFamily.R2, (gen(multiply(a, beta)), gen(multiply(inverse(beta), b)))))
        out.extend(sorted(r2, key=lambda t: word_key(t[2])))
        return out

    def _pair_first(self, x: ATLetter, y: ATLetter):
        if self.system == "full":
            if (x.is_delta and y.is_delta_inv) or (x.is_delta_inv and y.is_delta):
                return 2, RuleFamily.R5, ()
            if (y.is_delta or y.is_delta_inv) and x.elem is not None and not x.is_delta:
                return 2, RuleFamily.R3, (y, gen(flip(x.elem)))
            if x.elem is not None and y.elem is not None:
                r4 = [self._r4_rhs(a, m) for _, a, m in self._r4(x.elem, y.elem)]
                if r4:
                    return 2, RuleFamily.R4, min(r4, key=word_key)
        if x.elem is None or y.elem is None:
            return None
        a, b = x.elem, y.elem
        ab = multiply(a, b)
        if ab.length == a.length + b.length:
            return 2, RuleFamily.R1, (gen(ab),)
        m = prefix_meet(complement(a), b)
        if not m.is_identity:
            return 2, RuleFamily.R2, (gen(multiply(a, m)), gen(multiply(inverse(m), b)))
        return None


class RuleSystem:
    """An explicit finite list of rules over any hashable letters."""

    def __init__(self, rules: Iterable[RewriteRule]):
        self.rules = list(rules)
        self.by_lhs: dict[tuple, list[RewriteRule]] = {}
        for r in self.rules:
            self.by_lhs.setdefault(tuple(r.lhs), []).append(r)
        for lst in self.by_lhs.values():
            lst.sort(key=lambda r: (PRIORITY[r.family], _rhs_key(r.rhs)))
        self.lengths = sorted({len(k) for k in self.by_lhs})
        self.max_lhs = max(self.lengths, default=1)

    def instances(self, word: Sequence, i: int) -> list[tuple[int, RuleFamily, tuple]]:
        out = []
        for L in self.lengths:
            rules = self.by_lhs.get(tuple(word[i:i + L])) if i + L <= len(word) else None
            if rules:
                out.extend((L, r.family, tuple(r.rhs)) for r in rules)
        out.sort(key=lambda t: PRIORITY[t[1]])
        return out

    def first(self, word: Sequence, i: int):
        best = None
        for L in self.lengths:
            if i + L > len(word):
                break
            rules = self.by_lhs.get(tuple(word[i:i + L]))
            if rules:
                r = rules[0]
                if best is None or PRIORITY[r.family] < PRIORITY[best[1]]:
                    best = (L, r.family, tuple(r.rhs))
        return best


def _rhs_key(rhs: tuple):
    if rhs and isinstance(rhs[0], ATLetter):
        return word_key(rhs)
    return (len(rhs), rhs)


def reduce_word(
    system,
    word: Sequence,
    *,
    rng: random.Random | None = None,
    trace: RewriteTrace | None = None,
    max_steps: int = 1_000_000,
) -> tuple:
    """Rewrite ``word`` to an irreducible word.

    Without ``rng`` the leftmost redex is rewritten first, using the system's
    deterministic choice; with ``rng`` a uniformly random redex position and a
    uniformly random rule instance there are chosen at every step.
    """
    w = list(word)
    steps = 0
    if rng is None:
        i = 0
        while i < len(w):
            hit = system.first(w, i)
            if hit is None:
                i += 1
                continue
            L, fam, rhs = hit
            if trace is not None:
                trace.steps.append(TraceStep(i, fam, tuple(w[i:i + L]), tuple(rhs)))
            w[i:i + L] = rhs
            i = max(0, i - system.max_lhs + 1)
            steps += 1
            if steps > max_steps:
                raise RuntimeError(f"no normal form after {max_steps} rewrite steps")
        return tuple(w)
    while True:
        cands = [i for i in range(len(w)) if system.first(w, i) is not None]
        if not cands:
            return tuple(w)
        i = rng.choice(cands)
        L, fam, rhs = rng.choice(system.instances(w, i))
        if trace is not None:
            trace.steps.append(TraceStep(i, fam, tuple(w[i:i + L]), tuple(rhs)))
        w[i:i + L] = rhs
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"no normal form after {max_steps} rewrite steps")


def _to_canonical(spec: GroupSpec, word: Sequence[ATLetter]) -> CanonicalBraid:
    k = 0
    j = 0
    while j < len(word) and (word[j].is_delta or word[j].is_delta_inv):
        k += 1 if word[j].is_delta else -1
        j += 1
    tail = word[j:]
    if any(x.is_delta or x.is_delta_inv for x in tail):
        raise ValueError(f"word {format_word(word)} has an interior D letter")
    return CanonicalBraid(spec, k, tuple(x.elem for x in tail))


def _check_letters(spec: GroupSpec, u: Sequence[ATLetter]) -> None:
    for x in u:
        if not isinstance(x, ATLetter):
            raise TypeError(f"expected ATLetter, got {type(x).__name__}")
        if x.spec != spec:
            raise ValueError(f"letter from {x.spec} in a {spec} word")


def normalize(
    spec: GroupSpec,
    u: Sequence[ATLetter],
    *,
    rng: random.Random | None = None,
    r4_trivial: bool = True,
) -> tuple[CanonicalBraid, RewriteTrace]:
    """Canonical form of ``u`` by rewriting with R1-R5, plus the rewrite trace."""
    _check_letters(spec, u)
    trace = RewriteTrace()
    w = reduce_word(at_system(spec, "full", r4_trivial), u, rng=rng, trace=trace)
    return _to_canonical(spec, w), trace


def normalize_positive(spec: GroupSpec, u: Sequence[ATLetter], *, rng: random.Random | None = None) -> CanonicalBraid:
    """Canonical form of a positive word, rewriting with R1 and R2 only."""
    _check_letters(spec, u)
    if any(x.is_delta_inv for x in u):
        raise ValueError("positive normalization got a D^-1 letter")
    w = reduce_word(at_system(spec, "positive"), u, rng=rng)
    return _to_canonical(spec, w)


def _sweep(factors: list[CoxeterElement]) -> None:
    spec = factors[0].spec
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            a, b = factors[j], factors[j + 1]
            if a.is_identity or b.is_identity:
                continue
            h, t = greedy_pair(spec, a, b)
            if h != a:
                factors[j], factors[j + 1] = h, t
                changed = True
        factors[:] = [f for f in factors if not f.is_identity]


def normalize_fast(spec: GroupSpec, u: Sequence[ATLetter]) -> CanonicalBraid:
    """Canonical form of ``u`` by left-greedy factor recombination."""
    _check_letters(spec, u)
    w0len = spec.longest_length
    k = 0
    factors: list[CoxeterElement] = []
    for x in u:
        if x.is_delta_inv:
            k -= 1
            factors = [flip(f) for f in factors]
            continue
        factors.append(x.elem)
        _sweep(factors)
        while factors and factors[0].length == w0len:
            k += 1
            factors.pop(0)
    return CanonicalBraid(spec, k, tuple(factors))


def evaluate(spec: GroupSpec, c: CanonicalBraid) -> list[int]:
    """Signed Artin word of a canonical braid."""
    dword = list(longest_element(spec).nf)
    if c.k >= 0:
        out = dword * c.k
    else:
        out = [-i for i in reversed(dword)] * (-c.k)
    for a in c.tail:
        out.extend(a.nf)
    return out


def normal_form(spec: GroupSpec, artin_word: Iterable[int], method: str = "fast") -> CanonicalBraid:
    """Canonical form of a signed Artin word; ``method`` is "fast" or "rewrite"."""
    u = from_artin(spec, artin_word)
    if method == "fast":
        return normalize_fast(spec, u)
    if method == "rewrite":
        return normalize(spec, u)[0]
    raise ValueError(f"unknown method {method!r}")
