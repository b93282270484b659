import random

import pytest

from atbraid.alphabet import (
    ATLetter,
    CanonicalBraid,
    Ordering,
    alphabet,
    delta,
    delta_inv,
    format_word,
    from_artin,
    gen,
    is_left_weighted,
    letter_compare,
    parse_word,
    weight,
    word_compare,
)
from atbraid.coxeter import GroupSpec, longest_element, nf_reduce
from atbraid.oracle import artin_equal
from atbraid.verify import at_rules

A2, A3, B2, B3 = GroupSpec("A", 2), GroupSpec("A", 3), GroupSpec("B", 2), GroupSpec("B", 3)


def L(spec, *word):
    return gen(nf_reduce(spec, word))


def artin_of(spec, u):
    """Signed Artin word of an AT word (D^-1 is the reversed, negated D word)."""
    dword = list(longest_element(spec).nf)
    out = []
    for x in u:
        out += [-i for i in reversed(dword)] if x.is_delta_inv else list(x.elem.nf)
    return out


def test_identity_is_not_a_letter():
    with pytest.raises(ValueError):
        ATLetter(A2, A2.identity())


def test_letter_compare_examples():
    assert letter_compare(L(A2, 1), L(A2, 2)) is Ordering.LT
    assert letter_compare(delta(A2), L(A2, 1)) is Ordering.LT
    assert letter_compare(delta_inv(A2), delta(A2)) is Ordering.LT
    assert letter_compare(L(A2, 2), L(A2, 2)) is Ordering.EQ
    with pytest.raises(ValueError):
        letter_compare(L(A2, 1), L(B2, 1))


def test_word_compare_examples():
    assert word_compare((L(A2, 1), L(A2, 2)), (L(A2, 1, 2),)) is Ordering.GT
    assert word_compare((L(A2, 1, 2, 1),), (L(A2, 1), L(A2, 2))) is Ordering.GT
    u = (L(A2, 1), delta_inv(A2))
    assert word_compare(u, u) is Ordering.EQ
    assert word_compare((), ()) is Ordering.EQ


def test_weight_examples():
    assert weight(()) == 0
    assert weight((L(A2, 1, 2),)) == 2
    assert weight((delta_inv(A2), L(A2, 1))) == 4


def test_from_artin_examples():
    assert from_artin(A2, [1]) == (L(A2, 1),)
    assert from_artin(A2, [-1]) == (L(A2, 2, 1), delta_inv(A2))
    assert from_artin(A2, []) == ()
    for bad in ([0], [3], [-3], [True]):
        with pytest.raises(ValueError):
            from_artin(A2, bad)


@pytest.mark.parametrize("spec, count", [(A2, 5), (A3, 23), (B2, 7)])
def test_alphabet_size_and_order(spec, count):
    letters = alphabet(spec)
    assert len(letters) == count
    assert letters[0] == delta(spec)
    assert all(a < b for a, b in zip(letters, letters[1:]))


def test_word_order_is_monomial():
    rng = random.Random(11)
    for spec in (A2, A3, B2):
        letters = alphabet(spec) + [delta_inv(spec)]

        def rand_word():
            return tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))

        for _ in range(10_000 // 3 + 1):
            u, v, w = rand_word(), rand_word(), rand_word()
            c = word_compare(u, v)
            assert word_compare(w + u, w + v) is c
            assert word_compare(u + w, v + w) is c
            assert word_compare(v, u) is Ordering(-c)


@pytest.mark.parametrize("spec", [A2, A3, B2, B3])
def test_every_rule_decreases(spec):
    for r in at_rules(spec, "full"):
        assert word_compare(r.lhs, r.rhs) is Ordering.GT, str(r)


@pytest.mark.parametrize("spec", [A2, B2, A3])
def test_rules_are_braid_identities(spec):
    rules = at_rules(spec, "full")
    if len(rules) > 300:
        rules = random.Random(5).sample(rules, 300)
    for r in rules:
        assert artin_equal(spec, artin_of(spec, r.lhs), artin_of(spec, r.rhs)), str(r)


@pytest.mark.parametrize("spec", [A2, A3, B2])
def test_from_artin_preserves_the_braid(spec):
    rng = random.Random(3)
    for _ in range(300):
        w = [rng.randint(1, spec.n) * rng.choice((1, -1)) for _ in range(rng.randint(0, 8))]
        assert artin_equal(spec, w, artin_of(spec, from_artin(spec, w)))


def test_text_round_trip():
    u = (L(A3, 1, 2), delta_inv(A3), delta(A3), L(A3, 3))
    text = format_word(u)
    assert text == "[1 2]·D^-1·[1 2 1 3 2 1]·[3]"
    assert parse_word(A3, text) == u
    assert parse_word(A3, "[1 2] * D^-1 * D * [3]") == u
    assert format_word(()) == "1" and parse_word(A3, "1") == ()
    with pytest.raises(ValueError):
        parse_word(A3, "[1 2]·X")


def test_canonical_braid_validation_and_json():
    s1, s2 = A2.generators()
    c = CanonicalBraid(A2, -1, (s1 * s2,))
    assert str(c) == "D^-1·[1 2]"
    assert CanonicalBraid.from_json(A2, c.to_json()) == c
    assert c.to_json() == {"k": -1, "tail": [[1, 2]]}
    assert c.letters() == (delta_inv(A2), L(A2, 1, 2))
    with pytest.raises(ValueError):
        CanonicalBraid(A2, 0, (longest_element(A2),))
    with pytest.raises(ValueError):
        CanonicalBraid(A2, 0, (A2.identity(),))
    with pytest.raises(ValueError):
        CanonicalBraid(A2, 0, (s1, s2))  # s2 does not extend s1 on the right


def test_left_weighted():
    s1, s2 = A2.generators()
    assert is_left_weighted(s1, s1)
    assert not is_left_weighted(s1, s2)
    assert is_left_weighted(s1 * s2, s2 * s1)
    assert not is_left_weighted(s1 * s2, s1 * s2)
    assert is_left_weighted(s2 * s1, s1)
