import pickle

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from atbraid import BraidNormalizer
from atbraid._validation import check_word, check_words, infer_rank
from atbraid.alphabet import CanonicalBraid
from atbraid.coxeter import GroupSpec

WORDS = [[1, 2, 1], [2, 1, 2], [-1], [], [1, -1, 2]]


def test_params_round_trip():
    est = BraidNormalizer(braid_type="b", n=3, method="rewrite", output="json")
    assert est.get_params() == {"braid_type": "b", "n": 3, "method": "rewrite", "output": "json"}
    est.set_params(output="text")
    assert est.output == "text"
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est


def test_unfitted_transform_raises():
    with pytest.raises(NotFittedError):
        BraidNormalizer().transform(WORDS)


def test_fit_infers_rank():
    est = BraidNormalizer().fit(WORDS)
    assert est.n_ == 2 and est.spec_ == GroupSpec("A", 2)
    assert BraidNormalizer(braid_type="b").fit([[1]]).n_ == 2
    assert BraidNormalizer(n=4).fit(WORDS).n_ == 4


def test_transform_outputs():
    braids = BraidNormalizer().fit_transform(WORDS)
    assert all(isinstance(c, CanonicalBraid) for c in braids)
    assert braids[0] == braids[1]
    assert braids[2].k == -1 and braids[3] == CanonicalBraid(GroupSpec("A", 2), 0, ())
    est = BraidNormalizer(output="json").fit(WORDS)
    assert est.transform([[1, 2, 1]]) == [{"k": 1, "tail": []}]
    assert BraidNormalizer(output="artin").fit(WORDS).transform([[2, 1, 2]]) == [[1, 2, 1]]
    assert BraidNormalizer(output="text").fit(WORDS).transform([[1, 1]]) == ["[1]·[1]"]


def test_methods_agree():
    fast = BraidNormalizer(method="fast", n=3).fit_transform(WORDS + [[3, -2, 1, 3]])
    slow = BraidNormalizer(method="rewrite", n=3).fit_transform(WORDS + [[3, -2, 1, 3]])
    assert fast == slow


def test_inverse_transform():
    est = BraidNormalizer(output="json").fit(WORDS)
    out = est.transform(WORDS)
    back = est.inverse_transform(out)
    assert BraidNormalizer().fit(WORDS).transform(back) == BraidNormalizer().fit(WORDS).transform(WORDS)
    assert est.inverse_transform([[1, -2]]) == [[1, -2]]
    with pytest.raises(TypeError):
        est.inverse_transform([3.5])


def test_string_rows():
    est = BraidNormalizer(output="artin").fit(["1 2 1", "2,1"])
    assert est.transform(["2 1 2"]) == [[1, 2, 1]]


@pytest.mark.parametrize(
    "params",
    [{"braid_type": "c"}, {"method": "slow"}, {"output": "latex"}, {"n": 0}, {"n": True}, {"n": 2.0}],
)
def test_bad_params(params):
    with pytest.raises(ValueError):
        BraidNormalizer(**params).fit(WORDS)


def test_out_of_range_rows():
    est = BraidNormalizer(n=2).fit(WORDS)
    with pytest.raises(ValueError):
        est.transform([[3]])
    with pytest.raises(ValueError):
        BraidNormalizer(n=2).fit([[3]])


def test_pipeline_and_pickle():
    pipe = make_pipeline(BraidNormalizer(output="json"), FunctionTransformer(lambda rows: [r["k"] for r in rows]))
    assert pipe.fit_transform(WORDS) == [1, 1, -1, 0, 0]
    est = pickle.loads(pickle.dumps(BraidNormalizer().fit(WORDS)))
    assert est.transform([[1, 2, 1]])[0].k == 1


def test_validation_helpers():
    assert check_word("1, -2 3") == [1, -2, 3]
    assert check_word(("1", 2)) == [1, 2]
    for bad, exc in ([[0], ValueError], [[1.5], TypeError], [[True], TypeError], [5, TypeError], [["x"], ValueError]):
        with pytest.raises(exc):
            check_word(bad)
    with pytest.raises(ValueError):
        check_word([3], GroupSpec("A", 2))
    with pytest.raises(TypeError):
        check_words("1 2")
    with pytest.raises(TypeError):
        check_words(7)
    assert infer_rank([[1, -3]], "a") == 3
    assert infer_rank([], "a") == 1
    assert infer_rank([[1]], "B") == 2
