"""Property-based checks of normalization against group-theoretic identities."""
from hypothesis import given, settings
from hypothesis import strategies as st

from atbraid.alphabet import from_artin, is_left_weighted
from atbraid.coxeter import GroupSpec, longest_element
from atbraid.oracle import artin_equal, coxeter_projection
from atbraid.rewrite import evaluate, normal_form, normalize, normalize_fast

SPECS = [GroupSpec("A", 2), GroupSpec("A", 3), GroupSpec("A", 4), GroupSpec("B", 2), GroupSpec("B", 3)]


@st.composite
def spec_and_words(draw, count=1, max_len=10):
    spec = draw(st.sampled_from(SPECS))
    letter = st.integers(1, spec.n).flatmap(lambda i: st.sampled_from((i, -i)))
    words = [draw(st.lists(letter, max_size=max_len)) for _ in range(count)]
    return (spec, *words)


def inverse_word(word):
    return [-x for x in reversed(word)]


def flip_word(spec, word):
    if spec.family.value == "B":
        return list(word)
    return [(spec.n + 1 - abs(x)) * (1 if x > 0 else -1) for x in word]


KW = dict(max_examples=150, deadline=None)


@settings(**KW)
@given(spec_and_words())
def test_word_times_inverse_is_trivial(args):
    spec, w = args
    c = normal_form(spec, w + inverse_word(w))
    assert c.k == 0 and c.tail == ()


@settings(**KW)
@given(spec_and_words(count=2))
def test_normal_form_is_a_homomorphism(args):
    spec, u, v = args
    left = normal_form(spec, evaluate(spec, normal_form(spec, u)) + v)
    assert left == normal_form(spec, u + v)


@settings(**KW)
@given(spec_and_words())
def test_conjugation_by_delta_is_the_flip(args):
    spec, w = args
    d = list(longest_element(spec).nf)
    assert normal_form(spec, d + w + inverse_word(d)) == normal_form(spec, flip_word(spec, w))


@settings(**KW)
@given(spec_and_words())
def test_output_shape_and_invariants(args):
    spec, w = args
    c = normal_form(spec, w)
    assert all(not a.is_identity and not a.is_longest for a in c.tail)
    assert all(is_left_weighted(a, b) for a, b in zip(c.tail, c.tail[1:]))
    back = evaluate(spec, c)
    assert coxeter_projection(spec, back) == coxeter_projection(spec, w)
    assert sum(1 if x > 0 else -1 for x in back) == sum(1 if x > 0 else -1 for x in w)


@settings(**KW)
@given(spec_and_words())
def test_rewriting_and_greedy_agree(args):
    spec, w = args
    u = from_artin(spec, w)
    assert normalize(spec, u)[0] == normalize_fast(spec, u)


@settings(max_examples=80, deadline=None)
@given(spec_and_words(count=2, max_len=8))
def test_equal_normal_forms_iff_oracle_equal(args):
    spec, u, v = args
    if spec.n > 3:
        spec = GroupSpec(spec.family.value, 2)
        u = [x for x in u if abs(x) <= 2]
        v = [x for x in v if abs(x) <= 2]
    assert (normal_form(spec, u) == normal_form(spec, v)) == artin_equal(spec, u, v)


@settings(max_examples=80, deadline=None)
@given(spec_and_words(max_len=8))
def test_canonical_word_is_oracle_equal_to_input(args):
    spec, w = args
    if spec.n > 3:
        return
    assert artin_equal(spec, evaluate(spec, normal_form(spec, w)), w)
