"""
Acceptance suites shared by ``atbraid selftest`` and the test-suite.

Every suite returns a :class:`SuiteResult`; a failing suite carries the first
offending case as ``witness``.  Corpus sizes default to the acceptance levels
and can be scaled down for quick runs.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .alphabet import CanonicalBraid, alphabet, from_artin, is_left_weighted
from .coxeter import (
    Family,
    GroupSpec,
    complement,
    enumerate_elements,
    is_normal_word,
    longest_element,
    multiply,
    nf_reduce,
    perp,
)
from .oracle import (
    artin_equal,
    braid_relations,
    coxeter_bfs,
    coxeter_projection,
    positive_equal,
)
from .rewrite import RuleFamily, evaluate, normalize, normalize_fast
from .verify import at_rules, verify_basis, verify_rules

__all__ = [
    "SuiteResult",
    "REQUIRED_FAMILY_PAIRS",
    "SUITES",
    "random_signed_word",
    "random_relator",
    "suite_positive_basis",
    "suite_full_basis",
    "suite_type_b_basis",
    "suite_normal_form_counts",
    "suite_delta_flip",
    "suite_complements",
    "suite_word_problem",
    "suite_embedding",
    "suite_properties",
    "suite_census",
    "mutated_basis_report",
    "run_all",
]

#: Family pairs that must occur among the overlaps of the full type-A system.
REQUIRED_FAMILY_PAIRS = (
    "R1^R1", "R1^R2", "R1^R3", "R1^R4",
    "R2^R1", "R2^R2", "R2^R3", "R2^R4",
    "R3^R5",
    "R4^R1", "R4^R2", "R4^R3", "R4^R4",
    "R5^R5",
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    witness: object = None
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ", ".join(f"{k}={v}" for k, v in self.detail.items() if not isinstance(v, (dict, list)))
        out = f"[{status}] {self.name} ({self.seconds:.1f}s) {extra}".rstrip()
        if not self.passed and self.witness is not None:
            out += f"\n    witness: {self.witness}"
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witness": None if self.witness is None else str(self.witness),
            "seconds": round(self.seconds, 3),
        }


def _timed(name: str):
    def wrap(fn: Callable[..., SuiteResult]):
        def run(*args, **kw):
            t0 = time.perf_counter()
            res = fn(*args, **kw)
            res.name = name
            res.seconds = time.perf_counter() - t0
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# -- corpus helpers ----------------------------------------------------------

def random_signed_word(spec: GroupSpec, rng: random.Random, max_len: int, positive: bool = False) -> list[int]:
    length = rng.randint(0, max_len)
    if positive:
        return [rng.randint(1, spec.n) for _ in range(length)]
    return [rng.randint(1, spec.n) * rng.choice((1, -1)) for _ in range(length)]


def random_relator(spec: GroupSpec, rng: random.Random) -> list[int]:
    """A cyclic rotation of a defining relator or of ``x x^-1``, possibly inverted."""
    rels = braid_relations(spec)
    if rng.random() < 0.25:
        g = rng.randint(1, spec.n) * rng.choice((1, -1))
        return [g, -g]
    lhs, rhs = rng.choice(rels)
    r = list(lhs) + [-x for x in reversed(rhs)]
    k = rng.randrange(len(r))
    r = r[k:] + r[:k]
    if rng.random() < 0.5:
        r = [-x for x in reversed(r)]
    return r


def _exponent_sum(word) -> int:
    return sum(1 if x > 0 else -1 for x in word)


def _nf(spec, word) -> CanonicalBraid:
    return normalize(spec, from_artin(spec, word))[0]


# -- basis verification ------------------------------------------------------

@_timed("positive basis (type A, n=2,3)")
def suite_positive_basis(ns=(2, 3)) -> SuiteResult:
    detail = {}
    for n in ns:
        rep = verify_basis(GroupSpec("A", n), "positive")
        detail[f"A{n}"] = f"{rep.total_rules} rules/{rep.total_ambiguities} overlaps/{rep.failure_count} failures"
        if not rep.ok or rep.total_ambiguities == 0:
            return SuiteResult("", False, detail, rep.failures[:1] or "no overlaps found")
    return SuiteResult("", True, detail)


@_timed("full basis (type A, n=2,3) with every required family pair")
def suite_full_basis(ns=(2, 3)) -> SuiteResult:
    detail = {}
    seen: set[str] = set()
    for n in ns:
        rep = verify_basis(GroupSpec("A", n), "full", coxeter=True)
        detail[f"A{n}"] = f"{rep.total_rules} rules/{rep.total_ambiguities} overlaps/{rep.failure_count} failures"
        if not rep.ok:
            bad = rep.failures[:1] or [p.failures[:1] for p in rep.parts if not p.ok]
            return SuiteResult("", False, detail, bad)
        seen.update(rep.family_pairs)
    missing = [p for p in REQUIRED_FAMILY_PAIRS if p not in seen]
    detail["family_pairs_found"] = len(REQUIRED_FAMILY_PAIRS) - len(missing)
    return SuiteResult("", not missing, detail, missing or None)


@_timed("type B bases (n=2, n=3)")
def suite_type_b_basis(ns=(2, 3)) -> SuiteResult:
    detail = {}
    for n in ns:
        spec = GroupSpec("B", n)
        for system in ("coxeter", "positive", "full"):
            rep = verify_basis(spec, system)
            detail[f"B{n}-{system}"] = f"{rep.total_rules}/{rep.total_ambiguities}/{rep.failure_count}"
            if not rep.ok:
                return SuiteResult("", False, detail, rep.failures[:1])
    return SuiteResult("", True, detail)


# -- Coxeter-level facts -----------------------------------------------------

@_timed("canonical words match the Cayley-graph oracle")
def suite_normal_form_counts(max_a: int = 5, max_b: int = 3) -> SuiteResult:
    """Breadth-first search finds the shortlex-first geodesic of each element,
    which must be its canonical word, with the right block pattern."""
    detail = {}
    configs = [("A", n) for n in range(1, max_a + 1)] + [("B", n) for n in range(2, max_b + 1)]
    for fam, n in configs:
        spec = GroupSpec(fam, n)
        geo = coxeter_bfs(spec)
        elems = enumerate_elements(spec)
        expected = math.factorial(n + 1) if fam == "A" else 2 ** n * math.factorial(n)
        if len(elems) != expected or len(geo) != expected:
            return SuiteResult("", False, detail, f"{spec}: {len(elems)} vs {len(geo)} vs {expected}")
        bad = [e for e in elems if geo[e.perm] != e.nf or not is_normal_word(spec, e.nf)]
        if bad:
            return SuiteResult("", False, detail, f"{spec}: {list(bad[0].nf)}")
        # each element's canonical word evaluates back to that element
        if {e.perm for e in elems} != set(geo) or any(coxeter_projection(spec, e.nf) != e.perm for e in elems):
            return SuiteResult("", False, detail, f"{spec}: canonical words do not cover the group")
        detail[f"{fam}{n}"] = expected
    return SuiteResult("", True, detail)


@_timed("Garside element conjugates generators by the flip")
def suite_delta_flip(max_a: int = 5, max_b: int = 4) -> SuiteResult:
    checked = 0
    configs = [("A", n) for n in range(1, max_a + 1)] + [("B", n) for n in range(2, max_b + 1)]
    for fam, n in configs:
        spec = GroupSpec(fam, n)
        dword = longest_element(spec).nf
        for i in range(1, n + 1):
            j = n + 1 - i if fam == "A" else i
            if not positive_equal(spec, (i,) + dword, dword + (j,)):
                return SuiteResult("", False, {"checked": checked}, f"{spec} i={i}")
            checked += 1
    return SuiteResult("", True, {"checked": checked})


def explicit_generator_complement(spec: GroupSpec, i: int) -> list[int]:
    """Closed-form word for the complement of ``s_i`` built from descending runs."""
    def run(j, k):  # s_j s_{j-1} ... s_k, empty when k > j
        return list(range(j, k - 1, -1))

    n = spec.n
    if spec.family is Family.A:
        word = []
        for j in range(1, n + 1):
            word += run(j, 2) if j == i else run(j, 1)
        return word
    # type B: the top run is replaced by the runs s_n...s_k for k = 1..n
    word = []
    for j in range(1, n):
        word += run(j, 2) if j == i else run(j, 1)
    last = n - 1 if i == n else n
    for k in range(1, last + 1):
        word += run(n, k)
    return word


@_timed("complements: length-additive, product w0, closed forms")
def suite_complements(max_a: int = 4, max_b: int = 3) -> SuiteResult:
    checked = 0
    configs = [("A", n) for n in range(1, max_a + 1)] + [("B", n) for n in range(2, max_b + 1)]
    for fam, n in configs:
        spec = GroupSpec(fam, n)
        w0 = longest_element(spec)
        for a in enumerate_elements(spec):
            e = complement(a)
            if not perp(a, e) or multiply(a, e) != w0:
                return SuiteResult("", False, {"checked": checked}, f"{spec} {list(a.nf)}")
            checked += 1
        for i in range(1, n + 1):
            word = explicit_generator_complement(spec, i)
            e = complement(spec.generator(i))
            if len(word) != e.length or nf_reduce(spec, word) != e:
                return SuiteResult("", False, {"checked": checked}, f"{spec} s{i}: {word} vs {list(e.nf)}")
    return SuiteResult("", True, {"checked": checked})


# -- word problem ------------------------------------------------------------

_WORD_CONFIGS = (("A", 2, 12), ("A", 3, 12), ("B", 2, 10))


@_timed("word problem: rewriting agrees with the oracle")
def suite_word_problem(pairs: int = 2000, seed: int = 0, configs=_WORD_CONFIGS) -> SuiteResult:
    detail = {}
    for fam, n, max_len in configs:
        spec = GroupSpec(fam, n)
        rng = random.Random(f"{seed}-{fam}{n}")
        equal = 0
        for _ in range(pairs):
            u = random_signed_word(spec, rng, max_len)
            v = random_signed_word(spec, rng, max_len)
            ours = _nf(spec, u) == _nf(spec, v)
            truth = artin_equal(spec, u, v)
            if ours != truth:
                return SuiteResult("", False, detail, f"{spec} {u} vs {v}: rewrite={ours} oracle={truth}")
            equal += truth
        # equal pairs are rare above, so also test pairs differing by relators
        for _ in range(pairs // 4):
            u = random_signed_word(spec, rng, max_len - 4)
            v = list(u)
            p = rng.randrange(len(v) + 1)
            v[p:p] = random_relator(spec, rng)
            ours = _nf(spec, u) == _nf(spec, v)
            truth = artin_equal(spec, u, v)
            if ours != truth or not truth:
                return SuiteResult("", False, detail, f"{spec} {u} vs {v}: rewrite={ours} oracle={truth}")
        detail[f"{fam}{n}"] = f"{pairs}+{pairs // 4} pairs, {equal} equal uniform"
    return SuiteResult("", True, detail)


@_timed("positive braids embed in the group")
def suite_embedding(pairs: int = 2000, seed: int = 0) -> SuiteResult:
    configs = (("A", 2, 8), ("A", 3, 8), ("B", 2, 8))
    detail = {}
    for fam, n, max_len in configs:
        spec = GroupSpec(fam, n)
        rng = random.Random(f"{seed}-emb-{fam}{n}")
        equal = 0
        count = -(-pairs // len(configs))
        for t in range(count):
            u = random_signed_word(spec, rng, max_len, positive=True)
            if t % 2:
                # rewrite a copy of u with random relations to get equal pairs
                v = list(u)
                rels = braid_relations(spec)
                for _ in range(6):
                    lhs, rhs = rng.choice(rels)
                    hits = [p for p in range(len(v) - len(lhs) + 1) if tuple(v[p:p + len(lhs)]) == lhs]
                    if hits:
                        p = rng.choice(hits)
                        v[p:p + len(lhs)] = rhs
                v = v if rng.random() < 0.7 else random_signed_word(spec, rng, max_len, positive=True)
            else:
                v = [rng.randint(1, n) for _ in range(len(u))]
            cu, cv = _nf(spec, u), _nf(spec, v)
            if cu.k < 0 or cv.k < 0:
                return SuiteResult("", False, detail, f"{spec} negative k for {u if cu.k < 0 else v}")
            truth = positive_equal(spec, u, v)
            if (cu == cv) != truth:
                return SuiteResult("", False, detail, f"{spec} {u} vs {v}: rewrite={cu == cv} oracle={truth}")
            equal += truth
        detail[f"{fam}{n}"] = f"{count} pairs, {equal} equal"
    return SuiteResult("", True, detail)


# -- randomized properties ---------------------------------------------------

_PROPERTY_CONFIGS = (("A", 2, 10), ("A", 3, 10), ("B", 2, 10), ("B", 3, 8))


def _property_checks(spec: GroupSpec, word: list[int], rng: random.Random):
    u = from_artin(spec, word)
    c, _ = normalize(spec, u)
    yield "idempotence", normalize(spec, c.letters())[0] == c
    v = list(word)
    p = rng.randrange(len(v) + 1)
    v[p:p] = random_relator(spec, rng)
    yield "relator insertion", _nf(spec, v) == c
    yield "strategy independence", normalize(spec, u, rng=rng)[0] == c
    back = evaluate(spec, c)
    yield "projection and exponent sum", (
        coxeter_projection(spec, back) == coxeter_projection(spec, word)
        and _exponent_sum(back) == _exponent_sum(word)
    )
    w0len = spec.longest_length
    shape = all(not a.is_identity and a.length != w0len for a in c.tail) and all(
        is_left_weighted(a, b) for a, b in zip(c.tail, c.tail[1:])
    )
    yield "left-weighted tail", shape
    yield "fast normalizer agrees", normalize_fast(spec, u) == c


@_timed("randomized properties")
def suite_properties(cases: int = 10_000, seed: int = 0) -> SuiteResult:
    """Each property is checked on ``cases`` words spread over several groups."""
    rng = random.Random(f"{seed}-props")
    specs = [(GroupSpec(f, n), L) for f, n, L in _PROPERTY_CONFIGS]
    counts: dict[str, int] = {}
    for t in range(cases):
        spec, max_len = specs[t % len(specs)]
        word = random_signed_word(spec, rng, max_len)
        for name, ok in _property_checks(spec, word, rng):
            if not ok:
                return SuiteResult("", False, counts, f"{name}: {spec} {word}")
            counts[name] = counts.get(name, 0) + 1
    return SuiteResult("", True, counts)


# -- irreducible-word census -------------------------------------------------

def positive_braid_count(spec: GroupSpec, length: int) -> int:
    """Number of distinct positive braids of Artin length ``length``.

    Classes of positive words under single relation rewrites, found by a
    flood fill over all ``n**length`` words.
    """
    rels = braid_relations(spec)
    seen: set[tuple] = set()
    classes = 0
    for w in itertools.product(range(1, spec.n + 1), repeat=length):
        if w in seen:
            continue
        classes += 1
        stack = [w]
        seen.add(w)
        while stack:
            x = stack.pop()
            for lhs, rhs in rels:
                k = len(lhs)
                for p in range(len(x) - k + 1):
                    if x[p:p + k] == lhs:
                        y = x[:p] + rhs + x[p + k:]
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
    return classes


def irreducible_count(spec: GroupSpec, weight: int, rules=None) -> int:
    """Positive AT words of the given weight containing no left-hand side."""
    rules = at_rules(spec, "positive") if rules is None else rules
    forbidden = {r.lhs for r in rules}
    if any(len(lhs) != 2 for lhs in forbidden):
        raise ValueError("census expects length-two left-hand sides")
    letters = alphabet(spec)
    # count by dynamic programming on (remaining weight, last letter)
    memo: dict = {}

    def count(rest, last):
        if rest == 0:
            return 1
        key = (rest, last)
        if key not in memo:
            memo[key] = sum(
                count(rest - x.weight, x)
                for x in letters
                if x.weight <= rest and (last is None or (last, x) not in forbidden)
            )
        return memo[key]

    return count(weight, None)


@_timed("irreducible-word census (type A, n=2)")
def suite_census(max_weight: int = 6) -> SuiteResult:
    spec = GroupSpec("A", 2)
    detail = {}
    for q in range(1, max_weight + 1):
        ours, truth = irreducible_count(spec, q), positive_braid_count(spec, q)
        detail[f"q{q}"] = ours
        if ours != truth:
            return SuiteResult("", False, detail, f"weight {q}: {ours} irreducible vs {truth} braids")
    return SuiteResult("", True, detail)


def mutated_basis_report(spec: GroupSpec | None = None):
    """Verification report for the positive system with the R2 family removed."""
    spec = spec or GroupSpec("A", 2)
    rules = [r for r in at_rules(spec, "positive") if r.family is not RuleFamily.R2]
    return verify_rules(spec, rules, "positive-without-R2")


SUITES = {
    "positive-basis": suite_positive_basis,
    "full-basis": suite_full_basis,
    "type-b-basis": suite_type_b_basis,
    "normal-form-counts": suite_normal_form_counts,
    "delta-flip": suite_delta_flip,
    "complements": suite_complements,
    "word-problem": suite_word_problem,
    "embedding": suite_embedding,
    "properties": suite_properties,
    "census": suite_census,
}


def run_all(quick: bool = False, seed: int = 0, only=None) -> list[SuiteResult]:
    """Run every suite; ``quick`` shrinks the random corpora tenfold."""
    kw = {
        "word-problem": {"pairs": 200 if quick else 2000, "seed": seed},
        "embedding": {"pairs": 200 if quick else 2000, "seed": seed},
        "properties": {"cases": 1000 if quick else 10_000, "seed": seed},
    }
    names = only or list(SUITES)
    return [SUITES[name](**kw.get(name, {})) for name in names]
