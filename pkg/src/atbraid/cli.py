"""Command-line interface: ``atbraid <command> --type a|b --n N ...``.

Exit codes: 0 ok/equal, 1 unequal or failed check, 2 usage, parse or cap
errors, 3 disagreement between the rewriting system and the oracle.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys

from .alphabet import alphabet, delta, format_letter, from_artin
from .coxeter import CapExceeded, GroupSpec, complement, flip
from .oracle import OracleLimitExceeded, artin_equal
from .rewrite import evaluate, normalize, normalize_fast
from .verify import DEFAULT_VERIFY_CAP, SYSTEMS, verify_basis

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


_SIGMA = re.compile(r"^(?:s|σ|sigma)_?(\d+)(\^-1|\^\{-1\}|'|\^1)?$")


def parse_artin(text: str) -> list[int]:
    """Parse ``"1 2 -1"`` or ``"s1 s2^-1"`` (commas allowed) into signed indices."""
    out = []
    for tok in text.replace(",", " ").split():
        try:
            val = int(tok)
        except ValueError:
            m = _SIGMA.match(tok)
            if not m:
                raise UsageError(f"cannot parse generator {tok!r}") from None
            val = int(m.group(1))
            if m.group(2) and m.group(2) != "^1":
                val = -val
        if val == 0:
            raise UsageError("generator index 0 is not allowed")
        out.append(val)
    return out


def _spec(args) -> GroupSpec:
    try:
        return GroupSpec(args.type, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _word(spec: GroupSpec, text: str) -> list[int]:
    word = parse_artin(text)
    for x in word:
        if abs(x) > spec.n:
            raise UsageError(f"generator {x} out of range ±1..±{spec.n}")
    return word


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _canonical(spec, word, want_trace: bool):
    u = from_artin(spec, word)
    if want_trace:
        return normalize(spec, u)
    return normalize_fast(spec, u), None


# -- commands ----------------------------------------------------------------

def cmd_nf(args) -> int:
    spec = _spec(args)
    word = _word(spec, args.word)
    c, trace = _canonical(spec, word, args.trace or args.method == "rewrite")
    payload = c.to_json()
    payload["steps"] = None if trace is None else len(trace)
    payload["artin"] = evaluate(spec, c)
    text = f"k={c.k} tail={[list(a.nf) for a in c.tail]}\n{c}"
    if args.trace:
        payload["trace"] = trace.lines()
        text += "".join("\n  " + s for s in trace.lines())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_eq(args) -> int:
    spec = _spec(args)
    u, v = _word(spec, args.word1), _word(spec, args.word2)
    cu, cv = _canonical(spec, u, False)[0], _canonical(spec, v, False)[0]
    equal = cu == cv
    payload = {"equal": equal, "nf": [cu.to_json(), cv.to_json()]}
    status = EXIT_OK if equal else EXIT_NO
    if args.oracle:
        truth = artin_equal(spec, u, v)
        payload["oracle"] = truth
        if truth != equal:
            status = EXIT_DISAGREE
    text = "equal" if equal else "unequal"
    if status == EXIT_DISAGREE:
        text += f" (oracle says {'equal' if payload['oracle'] else 'unequal'})"
    _emit(args, payload, text)
    return status


def cmd_oracle_eq(args) -> int:
    spec = _spec(args)
    u, v = _word(spec, args.word1), _word(spec, args.word2)
    equal = artin_equal(spec, u, v)
    _emit(args, {"equal": equal}, "equal" if equal else "unequal")
    return EXIT_OK if equal else EXIT_NO


def cmd_verify_basis(args) -> int:
    spec = _spec(args)
    report = verify_basis(spec, args.system, coxeter=args.coxeter, cap=args.cap)
    payload = report.to_json()
    lines = [
        f"{args.system} system for {spec}: {report.total_rules} rules, "
        f"{report.total_ambiguities} ambiguities, {report.failure_count} nontrivial compositions"
    ]
    lines += [f"  {k}: {v}" for k, v in sorted(report.family_pairs.items())]
    for part in report.parts:
        lines.append(
            f"{part.system} system: {part.total_rules} rules, {part.total_ambiguities} "
            f"ambiguities, {part.failure_count} nontrivial compositions"
        )
    for f in report.failures[:5]:
        lines.append(f"  FAIL {f['w']}: {f['normal_forms'][0]} != {f['normal_forms'][1]}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_NO


def cmd_letters(args) -> int:
    spec = _spec(args)
    rows = []
    for x in alphabet(spec, args.cap):
        a = x.elem
        rows.append({
            "word": list(a.nf),
            "length": a.length,
            "flip": list(flip(a).nf),
            "complement": list(complement(a).nf),
            "delta": x.is_delta,
        })
    payload = {"type": spec.family.value.lower(), "n": spec.n, "count": len(rows), "letters": rows}
    lines = [f"{len(rows)} letters for {spec}; D = {format_letter(delta(spec))}"]
    for r in rows:
        lines.append(f"  {r['word']!s:<24} len={r['length']:<3} flip={r['flip']} E={r['complement']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_random(args) -> int:
    spec = _spec(args)
    rng = random.Random(args.seed)
    words = []
    for _ in range(args.count):
        length = rng.randint(0, args.length)
        if args.positive:
            words.append([rng.randint(1, spec.n) for _ in range(length)])
        else:
            words.append([rng.randint(1, spec.n) * rng.choice((1, -1)) for _ in range(length)])
    if args.format == "json":
        print(json.dumps({"type": spec.family.value.lower(), "n": spec.n, "seed": args.seed, "words": words}))
    else:
        for w in words:
            print(" ".join(map(str, w)))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from . import suites

    if args.inject_mutation:
        report = suites.mutated_basis_report()
        payload = {"passed": report.ok, "suite": "mutated-basis", "witness": report.failures[:1]}
        text = "[FAIL] positive basis with R2 removed" if not report.ok else "[PASS] mutated basis"
        if report.failures:
            f = report.failures[0]
            text += f"\n    witness: {f['w']} -> {f['normal_forms'][0]} / {f['normal_forms'][1]}"
        _emit(args, payload, text)
        return EXIT_OK if report.ok else EXIT_NO
    spec = None
    if args.n is not None:
        spec = _spec(args)
        if spec.order > DEFAULT_VERIFY_CAP:
            raise CapExceeded(f"|{spec}| = {spec.order} exceeds verification cap {DEFAULT_VERIFY_CAP}")
    only = args.suite or None
    if only:
        unknown = [s for s in only if s not in suites.SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s) {unknown}; choose from {list(suites.SUITES)}")
    results = suites.run_all(quick=args.quick, seed=args.seed, only=only)
    if spec is not None:
        # the requested group gets its own basis check on top of the defaults
        rep = verify_basis(spec, "full", coxeter=True)
        results.append(suites.SuiteResult(
            f"full and Coxeter bases for {spec}", rep.ok,
            {"rules": rep.total_rules, "ambiguities": rep.total_ambiguities},
            rep.failures[:1] or None, rep.seconds,
        ))
    passed = all(r.passed for r in results)
    payload = {"passed": passed, "suites": [r.to_json() for r in results]}
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if passed else EXIT_NO


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="a", type=str.lower, choices=("a", "b"), help="Coxeter type")
    common.add_argument("--n", type=int, default=None, help="rank (type A: n+1 strands)")
    common.add_argument("--format", default="text", choices=("text", "json"))
    common.add_argument("--trace", action="store_true", help="print rewrite steps")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="atbraid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", parents=[common], help="canonical form of a signed word")
    s.add_argument("word")
    s.add_argument("--method", default="rewrite", choices=("rewrite", "fast"))
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("eq", parents=[common], help="compare two words by canonical forms")
    s.add_argument("word1")
    s.add_argument("word2")
    s.add_argument("--oracle", action="store_true", help="cross-check with the BFS oracle")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("oracle-eq", parents=[common], help="compare two words with the BFS oracle only")
    s.add_argument("word1")
    s.add_argument("word2")
    s.set_defaults(func=cmd_oracle_eq)

    s = sub.add_parser("verify-basis", parents=[common], help="check all compositions of a rule system")
    s.add_argument("--system", default="full", choices=SYSTEMS)
    s.add_argument("--coxeter", action="store_true", help="also check the generator-level system")
    s.add_argument("--cap", type=int, default=None, help="group-order cap")
    s.set_defaults(func=cmd_verify_basis)

    s = sub.add_parser("letters", parents=[common], help="list the alphabet")
    s.add_argument("--cap", type=int, default=None, help="group-order cap")
    s.set_defaults(func=cmd_letters)

    s = sub.add_parser("random", parents=[common], help="print a random word corpus")
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--length", type=int, default=8)
    s.add_argument("--positive", action="store_true")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suites")
    s.add_argument("--quick", action="store_true", help="smaller random corpora")
    s.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    s.add_argument("--inject-mutation", action="store_true", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n is None and args.command != "selftest":
        args.n = 2
    try:
        return args.func(args)
    except (UsageError, CapExceeded, OracleLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
