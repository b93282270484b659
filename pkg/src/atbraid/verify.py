"""
Exhaustive check that a finite rewriting system has only trivial compositions.

All relations here are binomials ``lhs = rhs`` with unit coefficients, so the
composition of two rules at an ambiguity ``w`` is the pair of words obtained by
rewriting ``w`` with either rule.  It is trivial exactly when both words reduce
to the same irreducible word under the system being tested.

Rule sets are enumerated explicitly over the finite alphabet, so every function
here is bounded by the group-order cap of :func:`enumerate_elements`.
"""
from __future__ import annotations

import enum
import os
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .alphabet import ATLetter, delta, delta_inv, format_word, gen
from .coxeter import (
    CapExceeded,
    Family,
    GroupSpec,
    enumerate_elements,
    flip,
    inverse,
    longest_element,
    multiply,
)
from .rewrite import RewriteRule, RuleFamily, RuleSystem, reduce_word

__all__ = [
    "AmbiguityKind",
    "Ambiguity",
    "CompositionReport",
    "SYSTEMS",
    "DEFAULT_VERIFY_CAP",
    "at_rules",
    "coxeter_rules",
    "enumerate_rules",
    "find_ambiguities",
    "iter_ambiguities",
    "check_composition",
    "verify_rules",
    "verify_basis",
    "shortlex_key",
]

SYSTEMS = ("positive", "full", "coxeter")

#: Default group-order cap for verification (A3 has 24 elements, B3 has 48).
DEFAULT_VERIFY_CAP = int(os.environ.get("ATBRAID_VERIFY_CAP", 48))


class AmbiguityKind(str, enum.Enum):
    INTERSECTION = "intersection"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """An overlap of two left sides.

    Intersection: ``w = f.lhs + b = a + g.lhs`` with the two left sides sharing
    at least one letter.  Inclusion: ``w = f.lhs = a + g.lhs + b``.
    """

    kind: AmbiguityKind
    f: RewriteRule
    g: RewriteRule
    w: tuple
    a: tuple
    b: tuple

    def __post_init__(self):
        if self.kind is AmbiguityKind.INTERSECTION:
            ok = (
                self.w == tuple(self.f.lhs) + self.b == self.a + tuple(self.g.lhs)
                and len(self.f.lhs) + len(self.g.lhs) > len(self.w)
                and self.a and self.b
            )
        else:
            ok = self.w == tuple(self.f.lhs) == self.a + tuple(self.g.lhs) + self.b
        if not ok:
            raise ValueError(f"inconsistent {self.kind.value} ambiguity")

    @property
    def families(self) -> tuple[RuleFamily, RuleFamily]:
        return (self.f.family, self.g.family)

    def sides(self) -> tuple[tuple, tuple]:
        """The two one-step rewrites of ``w``."""
        if self.kind is AmbiguityKind.INTERSECTION:
            return tuple(self.f.rhs) + self.b, self.a + tuple(self.g.rhs)
        return tuple(self.f.rhs), self.a + tuple(self.g.rhs) + self.b


@dataclass
class CompositionReport:
    system: str
    spec: GroupSpec
    total_rules: int = 0
    total_ambiguities: int = 0
    rules_by_family: dict = field(default_factory=dict)
    ambiguities_by_kind: dict = field(default_factory=dict)
    family_pairs: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0
    parts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0 and all(p.ok for p in self.parts)

    def to_json(self) -> dict:
        out = {
            "system": self.system,
            "type": self.spec.family.value.lower(),
            "n": self.spec.n,
            "rules": self.total_rules,
            "ambiguities": self.total_ambiguities,
            "rules_by_family": self.rules_by_family,
            "ambiguities_by_kind": self.ambiguities_by_kind,
            "family_pairs": self.family_pairs,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
        }
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


def _check_cap(spec: GroupSpec, cap: int | None) -> None:
    cap = DEFAULT_VERIFY_CAP if cap is None else cap
    if spec.order > cap:
        raise CapExceeded(f"|{spec}| = {spec.order} exceeds verification cap {cap}")


def shortlex_key(word: Sequence[int]) -> tuple:
    """Deg-lex key on generator words with ``s_1 < s_2 < ...``."""
    return (len(word), tuple(word))


# -- rule enumeration --------------------------------------------------------

def at_rules(
    spec: GroupSpec,
    system: str = "full",
    *,
    r4_trivial: bool = True,
    cap: int | None = None,
) -> list[RewriteRule]:
    """Every concrete instance of the AT rule families.

    Duplicate ``(lhs, rhs)`` pairs are kept once, under the first family that
    produces them in the order R1, R2, R3, R4, R5.
    """
    if system not in ("positive", "full"):
        raise ValueError(f"unknown AT system {system!r}")
    _check_cap(spec, cap)
    elems = [e for e in enumerate_elements(spec) if not e.is_identity]
    w0 = longest_element(spec)
    N = spec.longest_length
    D, Dinv = delta(spec), delta_inv(spec)
    letter = {e: gen(e) for e in elems}
    length = {e: e.length for e in elems}
    identity = spec.identity()
    length[identity] = 0
    prod = {}
    for a in elems:
        for b in elems:
            prod[a, b] = multiply(a, b)

    def perp(a, b):
        return length[prod[a, b]] == length[a] + length[b]

    rules: dict[tuple, RewriteRule] = {}

    def add(lhs, rhs, fam):
        key = (lhs, rhs)
        if key not in rules:
            rules[key] = RewriteRule(lhs, rhs, fam, spec)

    right_of = {a: [b for b in elems if perp(a, b)] for a in elems}
    for a in elems:
        for b in right_of[a]:
            add((letter[a], letter[b]), (letter[prod[a, b]],), RuleFamily.R1)
    for a in elems:
        for b in right_of[a]:
            ab = letter[prod[a, b]]
            for c in right_of[b]:
                add((letter[a], letter[prod[b, c]]), (ab, letter[c]), RuleFamily.R2)
    if system == "full":
        for a in elems:
            if a == w0:
                continue
            for d in (D, Dinv):
                add((letter[a], d), (d, letter[flip(a)]), RuleFamily.R3)
        left_of = {b: [a for a in elems if perp(a, b)] for b in elems}
        for beta in elems:
            if beta == w0:
                continue
            gamma = multiply(inverse(beta), w0)
            for alpha in left_of[beta]:
                ab = prod[alpha, beta]
                if length[ab] == N:
                    continue
                for mu in [identity] + right_of[gamma]:
                    if spec.family is Family.B and not mu.is_identity:
                        continue
                    if spec.family is Family.A and not r4_trivial and mu.is_identity:
                        continue
                    gm = gamma if mu.is_identity else prod[gamma, mu]
                    rhs = [D, letter[flip(alpha)]] + ([] if mu.is_identity else [letter[mu]])
                    add((letter[ab], letter[gm]), tuple(rhs), RuleFamily.R4)
        add((D, Dinv), (), RuleFamily.R5)
        add((Dinv, D), (), RuleFamily.R5)
    return list(rules.values())


def _s_block(j: int, i: int) -> tuple[int, ...]:
    # s_{ji} = s_j s_{j-1} ... s_i, empty when i = j + 1
    return tuple(range(j, i - 1, -1))


def coxeter_rules(spec: GroupSpec) -> list[RewriteRule]:
    """Generator-level rules whose irreducible words are the canonical words.

    Type A uses ``s_i s_i -> 1``, ``s_j s_i -> s_i s_j`` (j-1 > i) and
    ``s_{ji} s_j -> s_{j-1} s_{ji}`` (i < j <= n); type B restricts the last
    family to ``j <= n-1`` and adds ``s_{nj} s_{ni} -> s_{n-1} s_{ni} s_{n,j+1}``
    for ``i <= j <= n-1``.
    """
    n = spec.n
    out = [RewriteRule((i, i), (), RuleFamily.C1, spec) for i in range(1, n + 1)]
    out += [
        RewriteRule((j, i), (i, j), RuleFamily.C2, spec)
        for j in range(1, n + 1)
        for i in range(1, j - 1)
    ]
    top = n if spec.family is Family.A else n - 1
    out += [
        RewriteRule(_s_block(j, i) + (j,), (j - 1,) + _s_block(j, i), RuleFamily.C3, spec)
        for j in range(1, top + 1)
        for i in range(1, j)
    ]
    if spec.family is Family.B:
        out += [
            RewriteRule(_s_block(n, j) + _s_block(n, i), (n - 1,) + _s_block(n, i) + _s_block(n, j + 1), RuleFamily.C4, spec)
            for j in range(1, n)
            for i in range(1, j + 1)
        ]
    return out


def enumerate_rules(
    spec: GroupSpec,
    system: str = "full",
    coxeter: bool = False,
    *,
    r4_trivial: bool = True,
    cap: int | None = None,
) -> list[RewriteRule]:
    """Rules of ``system`` ("positive", "full" or "coxeter").

    With ``coxeter=True`` the generator-level rules are appended to an AT
    system; the two alphabets are disjoint so no ambiguity mixes them.
    """
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}; expected one of {SYSTEMS}")
    if system == "coxeter":
        _check_cap(spec, cap)
        return coxeter_rules(spec)
    rules = at_rules(spec, system, r4_trivial=r4_trivial, cap=cap)
    if coxeter:
        rules += coxeter_rules(spec)
    return rules


# -- ambiguities -------------------------------------------------------------

def iter_ambiguities(rules: Sequence[RewriteRule]) -> Iterator[Ambiguity]:
    """All intersection and inclusion ambiguities among ``rules``, each once."""
    by_prefix: dict[tuple, list[RewriteRule]] = defaultdict(list)
    by_lhs: dict[tuple, list[int]] = defaultdict(list)
    for idx, g in enumerate(rules):
        lhs = tuple(g.lhs)
        by_lhs[lhs].append(idx)
        for k in range(1, len(lhs)):
            by_prefix[lhs[:k]].append(g)
    for idx, f in enumerate(rules):
        fl = tuple(f.lhs)
        # intersections: a proper suffix of f.lhs is a proper prefix of g.lhs
        for k in range(1, len(fl)):
            for g in by_prefix.get(fl[len(fl) - k:], ()):
                gl = tuple(g.lhs)
                yield Ambiguity(AmbiguityKind.INTERSECTION, f, g, fl + gl[k:], fl[:len(fl) - k], gl[k:])
        # inclusions: g.lhs is a factor of f.lhs
        for i in range(len(fl)):
            for j in range(i + 1, len(fl) + 1):
                for gi in by_lhs.get(fl[i:j], ()):
                    if (i, j) == (0, len(fl)) and gi <= idx:
                        continue
                    yield Ambiguity(AmbiguityKind.INCLUSION, f, rules[gi], fl, fl[:i], fl[j:])


def find_ambiguities(rules: Sequence[RewriteRule]) -> list[Ambiguity]:
    return list(iter_ambiguities(rules))


class _Reducer:
    """Memoized deterministic reduction under a fixed rule set."""

    def __init__(self, system: RuleSystem):
        self.system = system
        self.memo: dict[tuple, tuple] = {}

    def __call__(self, word: tuple) -> tuple:
        out = self.memo.get(word)
        if out is None:
            out = self.memo[word] = reduce_word(self.system, word)
        return out


def check_composition(amb: Ambiguity, rules, _reducer: _Reducer | None = None) -> tuple[bool, tuple[tuple, tuple]]:
    """Reduce both sides of the composition; trivial iff they coincide.

    ``rules`` is a list of rules or a prebuilt :class:`RuleSystem`.
    """
    if _reducer is None:
        system = rules if isinstance(rules, RuleSystem) else RuleSystem(rules)
        _reducer = _Reducer(system)
    left, right = amb.sides()
    nl, nr = _reducer(left), _reducer(right)
    return nl == nr, (nl, nr)


def _show(word: tuple) -> str:
    if word and isinstance(word[0], ATLetter):
        return format_word(word)
    return " ".join(f"s{i}" for i in word) or "1"


def verify_rules(spec: GroupSpec, rules: Sequence[RewriteRule], system: str = "custom", max_failures: int = 50) -> CompositionReport:
    """Check every composition of ``rules`` is trivial modulo ``rules``."""
    t0 = time.perf_counter()
    report = CompositionReport(system, spec, total_rules=len(rules))
    for r in rules:
        report.rules_by_family[r.family.value] = report.rules_by_family.get(r.family.value, 0) + 1
    reducer = _Reducer(RuleSystem(rules))
    n_fail = 0
    for amb in iter_ambiguities(rules):
        report.total_ambiguities += 1
        kind = amb.kind.value
        report.ambiguities_by_kind[kind] = report.ambiguities_by_kind.get(kind, 0) + 1
        pair = f"{amb.f.family.value}^{amb.g.family.value}"
        report.family_pairs[pair] = report.family_pairs.get(pair, 0) + 1
        ok, (nl, nr) = check_composition(amb, None, reducer)
        if not ok:
            n_fail += 1
            if len(report.failures) < max_failures:
                report.failures.append({
                    "kind": kind,
                    "f": str(amb.f),
                    "g": str(amb.g),
                    "w": _show(amb.w),
                    "normal_forms": [_show(nl), _show(nr)],
                })
    report.failure_count = n_fail
    report.seconds = time.perf_counter() - t0
    return report


def verify_basis(
    spec: GroupSpec,
    system: str = "full",
    coxeter: bool = False,
    *,
    r4_trivial: bool = True,
    cap: int | None = None,
) -> CompositionReport:
    """Enumerate the rules of ``system`` and check all their compositions.

    With ``coxeter=True`` (AT systems only) the generator-level Coxeter system
    is checked too and attached as a second part of the report.
    """
    rules = enumerate_rules(spec, system, r4_trivial=r4_trivial, cap=cap)
    report = verify_rules(spec, rules, system)
    if coxeter and system != "coxeter":
        report.parts.append(verify_rules(spec, coxeter_rules(spec), "coxeter"))
    return report
