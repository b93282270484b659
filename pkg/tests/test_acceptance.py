"""Acceptance criteria, one test each, at full size.

Each test prints a ``[PASS]``/``[FAIL]`` line for its criterion.  Run just
this module with ``pytest tests/test_acceptance.py -v`` or as a script with
``python tests/test_acceptance.py``.
"""
import sys

import pytest

from atbraid import suites

# criterion number -> (suite, keyword arguments, runtime budget in seconds)
CRITERIA = {
    1: ("positive-basis", {}, 60),
    2: ("full-basis", {}, 300),
    3: ("type-b-basis", {}, None),
    4: ("normal-form-counts", {}, None),
    5: ("delta-flip", {}, None),
    6: ("complements", {}, None),
    7: ("word-problem", {"pairs": 2000, "seed": 0}, 600),
    8: ("embedding", {"pairs": 2000, "seed": 0}, None),
    9: ("properties", {"cases": 10_000, "seed": 0}, None),
    10: ("census", {"max_weight": 6}, None),
}


def evaluate_criterion(number):
    name, kwargs, budget = CRITERIA[number]
    result = suites.SUITES[name](**kwargs)
    within = budget is None or result.seconds < budget
    passed = result.passed and within
    body = result.line().split("] ", 1)[1]
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {body}"
    if not within:
        line += f"\n    over budget: {result.seconds:.1f}s >= {budget}s"
    return passed, line, result


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    passed, line, result = evaluate_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert passed, result.witness


def main() -> int:
    ok = True
    for number in sorted(CRITERIA):
        passed, line, _ = evaluate_criterion(number)
        print(line, flush=True)
        ok &= passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
