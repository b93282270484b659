import json
import subprocess
import sys

import pytest

from atbraid.alphabet import CanonicalBraid
from atbraid.cli import EXIT_DISAGREE, EXIT_NO, EXIT_OK, EXIT_USAGE, main, parse_artin
from atbraid.coxeter import GroupSpec
from atbraid.rewrite import normal_form


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# -- parsing -------------------------------------------------------------------

def test_parse_artin_forms():
    assert parse_artin("1 2 -1") == [1, 2, -1]
    assert parse_artin("1,2, -1") == [1, 2, -1]
    assert parse_artin("s1 s2^-1 σ3 s_2'") == [1, -2, 3, -2]
    assert parse_artin("") == []


@pytest.mark.parametrize("text", ["x", "1 0", "s", "s1^2"])
def test_parse_errors_exit_2(capsys, text):
    code, _, err = run(capsys, "nf", "--type", "a", "--n", "2", text)
    assert code == EXIT_USAGE and err.startswith("error:")


def test_out_of_range_generator(capsys):
    code, _, err = run(capsys, "nf", "--n", "2", "3")
    assert code == EXIT_USAGE and "out of range" in err


# -- nf --------------------------------------------------------------------------

def test_nf_delta(capsys):
    code, data = run_json(capsys, "nf", "--type", "a", "--n", "2", "1 2 1")
    assert code == EXIT_OK
    assert data["k"] == 1 and data["tail"] == [] and data["steps"] == 2
    assert data["artin"] == [1, 2, 1]


def test_nf_empty(capsys):
    code, data = run_json(capsys, "nf", "--type", "a", "--n", "2", "")
    assert code == EXIT_OK and data["k"] == 0 and data["tail"] == [] and data["steps"] == 0


def test_nf_inverse(capsys):
    code, data = run_json(capsys, "nf", "--type", "a", "--n", "2", "-1")
    assert code == EXIT_OK and data["k"] == -1 and data["tail"] == [[1, 2]]


def test_nf_text_and_trace(capsys):
    code, out, _ = run(capsys, "nf", "--n", "2", "1 2 1", "--trace")
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0] == "k=1 tail=[]"
    steps = [s.strip() for s in lines[2:]]
    assert len(steps) == 2 and all(s.startswith("pos=") and "rule=R1" in s for s in steps)


def test_nf_trace_json(capsys):
    _, data = run_json(capsys, "nf", "--n", "2", "-1", "--trace")
    assert data["trace"] == ["pos=0 rule=R3 [2 1]·D^-1 -> D^-1·[1 2]"]


def test_nf_fast_method(capsys):
    _, data = run_json(capsys, "nf", "--type", "b", "--n", "3", "3 2 3 2 -1", "--method", "fast")
    assert data["steps"] is None
    spec = GroupSpec("B", 3)
    assert CanonicalBraid.from_json(spec, data) == normal_form(spec, [3, 2, 3, 2, -1])


def test_nf_json_round_trips_through_the_parser(capsys):
    _, data = run_json(capsys, "nf", "--n", "3", "1 -2 3 2 -1 -3")
    word = " ".join(map(str, data["artin"]))
    _, again = run_json(capsys, "nf", "--n", "3", word)
    assert (again["k"], again["tail"]) == (data["k"], data["tail"])


# -- eq and oracle-eq ------------------------------------------------------------

@pytest.mark.parametrize(
    "u, v, expected",
    [("1 2 1", "2 1 2", EXIT_OK), ("1", "2", EXIT_NO), ("1 -1", "", EXIT_OK)],
)
def test_eq(capsys, u, v, expected):
    code, out, _ = run(capsys, "eq", "--type", "a", "--n", "2", u, v, "--oracle")
    assert code == expected
    assert out.strip() == ("equal" if expected == EXIT_OK else "unequal")


def test_eq_json(capsys):
    code, data = run_json(capsys, "eq", "--n", "2", "1 2 1", "2 1 2", "--oracle")
    assert code == EXIT_OK and data["equal"] and data["oracle"]
    assert data["nf"][0] == data["nf"][1]


def test_eq_reports_disagreement(capsys, monkeypatch):
    import atbraid.cli as cli

    monkeypatch.setattr(cli, "artin_equal", lambda spec, u, v: False)
    code, out, _ = run(capsys, "eq", "--n", "2", "1 2 1", "2 1 2", "--oracle")
    assert code == EXIT_DISAGREE and "oracle says unequal" in out


def test_oracle_eq(capsys):
    code, out, _ = run(capsys, "oracle-eq", "--type", "a", "--n", "2", "1 2 1", "2 1 2")
    assert code == EXIT_OK and out.strip() == "equal"
    code, data = run_json(capsys, "oracle-eq", "--type", "b", "--n", "2", "1 2 1", "2 1 2")
    assert code == EXIT_NO and data == {"equal": False}


# -- verify-basis ------------------------------------------------------------------

def test_verify_basis_json(capsys):
    code, data = run_json(capsys, "verify-basis", "--type", "b", "--n", "2", "--system", "full", "--coxeter")
    assert code == EXIT_OK and data["ok"] and data["failure_count"] == 0
    assert data["rules"] > 0 and data["ambiguities"] > 0
    assert data["parts"][0]["system"] == "coxeter"


def test_verify_basis_text(capsys):
    code, out, _ = run(capsys, "verify-basis", "--n", "2", "--system", "positive")
    assert code == EXIT_OK and out.startswith("positive system for A2:") and "0 nontrivial" in out


def test_verify_basis_cap(capsys):
    code, _, err = run(capsys, "verify-basis", "--n", "4")
    assert code == EXIT_USAGE and "cap" in err
    code, _, _ = run(capsys, "verify-basis", "--n", "2", "--cap", "3")
    assert code == EXIT_USAGE


# -- letters -----------------------------------------------------------------------

@pytest.mark.parametrize("family, n, count", [("a", 2, 5), ("a", 3, 23), ("b", 2, 7)])
def test_letters_counts(capsys, family, n, count):
    code, data = run_json(capsys, "letters", "--type", family, "--n", str(n))
    assert code == EXIT_OK and data["count"] == count == len(data["letters"])
    assert sum(r["delta"] for r in data["letters"]) == 1


def test_letters_table_contents(capsys):
    _, data = run_json(capsys, "letters", "--n", "2")
    rows = {tuple(r["word"]): r for r in data["letters"]}
    assert rows[(1,)]["flip"] == [2] and rows[(1,)]["complement"] == [2, 1]
    assert rows[(1, 2, 1)]["delta"] and rows[(1, 2, 1)]["complement"] == []
    code, out, _ = run(capsys, "letters", "--n", "2")
    assert out.startswith("5 letters for A2")


def test_letters_cap(capsys):
    code, _, _ = run(capsys, "letters", "--n", "3", "--cap", "10")
    assert code == EXIT_USAGE


# -- random ------------------------------------------------------------------------

def test_random_is_deterministic(capsys):
    _, a = run_json(capsys, "random", "--n", "3", "--seed", "5", "--count", "20")
    _, b = run_json(capsys, "random", "--n", "3", "--seed", "5", "--count", "20")
    _, c = run_json(capsys, "random", "--n", "3", "--seed", "6", "--count", "20")
    assert a == b and a != c
    assert len(a["words"]) == 20
    assert all(1 <= abs(x) <= 3 and len(w) <= 8 for w in a["words"] for x in w)


def test_random_positive_text(capsys):
    code, out, _ = run(capsys, "random", "--n", "2", "--positive", "--count", "5", "--length", "4")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 5
    for line in lines:
        assert all(int(t) > 0 for t in line.split())


# -- selftest ----------------------------------------------------------------------

def test_selftest_single_suite(capsys):
    code, data = run_json(capsys, "selftest", "--quick", "--suite", "census")
    assert code == EXIT_OK and data["passed"]
    assert len(data["suites"]) == 1


def test_selftest_unknown_suite(capsys):
    code, _, err = run(capsys, "selftest", "--suite", "nope")
    assert code == EXIT_USAGE and "unknown suite" in err


def test_selftest_with_mutation_fails_with_witness(capsys):
    code, out, _ = run(capsys, "selftest", "--inject-mutation")
    assert code == EXIT_NO and out.startswith("[FAIL]") and "witness:" in out


def test_selftest_rank_beyond_cap(capsys):
    code, _, err = run(capsys, "selftest", "--n", "4")
    assert code == EXIT_USAGE and "cap" in err


def test_selftest_extra_group(capsys):
    code, data = run_json(capsys, "selftest", "--quick", "--suite", "census", "--type", "b", "--n", "2")
    assert code == EXIT_OK and len(data["suites"]) == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "atbraid.cli", "nf", "--n", "2", "1 2 1", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["k"] == 1
