import random

import pytest

from rotewords import (AlphabetError, ParseError, Word, complement,
                       dominates, factor_complexity, factors_of_length,
                       named, parikh, parse_word, reverse, word)

from oracles import brute_factor_count


def w2(text):
    return parse_word(text, 2)


def w3(text):
    return parse_word(text, 3)


def test_parse_basic():
    assert parse_word("0121", 3).letters == bytes([0, 1, 2, 1])
    assert len(parse_word("", 2)) == 0


def test_parse_rejects_out_of_alphabet_digit():
    with pytest.raises(ParseError) as err:
        parse_word("012", 2)
    assert err.value.position == 2


def test_parse_rejects_non_digit():
    with pytest.raises(ParseError) as err:
        parse_word("01x1", 2)
    assert err.value.position == 2


def test_word_validates_letters():
    with pytest.raises(AlphabetError):
        Word(bytes([0, 3]), 3)
    with pytest.raises(AlphabetError):
        Word(b"\x00", 0)


def test_word_conveniences():
    u = w3("0121")
    assert u[1] == 1
    assert u[1:3] == w3("12")
    assert str(u) == "0121"
    assert u + w3("0") == w3("01210")
    with pytest.raises(AlphabetError):
        u + w2("0")
    assert word([0, 1, 2], 3) == w3("012")
    assert word("012", 3) == w3("012")


def test_complement():
    assert complement(w2("1101")) == w2("0010")
    assert complement(w2("")) == w2("")
    assert complement(w2("0110")) == w2("1001")
    with pytest.raises(AlphabetError):
        complement(w3("012"))


def test_reverse():
    assert reverse(w2("1101")) == w2("1011")
    assert reverse(w2("")) == w2("")
    assert reverse(w3("021")) == w3("120")


def test_parikh():
    assert parikh(w3("012")) == (1, 1, 1)
    assert parikh(w3("")) == (0, 0, 0)
    assert parikh(w3("10210210")) == (3, 3, 2)


def test_dominates():
    assert dominates((1, 1, 1), (0, 0, 0))
    assert not dominates((1, 1, 1), (1, 1, 1))
    assert not dominates((2, 0, 1), (1, 1, 0))
    with pytest.raises(AlphabetError):
        dominates((1, 0), (1, 0, 0))


def test_dominates_is_strict_partial_order():
    vectors = [(a, b) for a in range(3) for b in range(3)]
    for v in vectors:
        assert not dominates(v, v)
    for a in vectors:
        for b in vectors:
            for c in vectors:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)
    for a in vectors:
        for b in vectors:
            if dominates(a, b):
                assert sum(a) > sum(b)


def test_factors_of_length():
    u = w2("0110")
    assert factors_of_length(u, 4) == {u}
    assert factors_of_length(u, 2) == {w2("01"), w2("11"), w2("10")}
    assert factors_of_length(u, 5) == set()
    assert factors_of_length(u, 0) == {w2("")}


def test_factor_complexity_small():
    assert factor_complexity(w2("0110"), 2) == 3
    assert factor_complexity(w2("0110"), 0) == 1
    assert factor_complexity(w2(""), 0) == 1


def test_factor_complexity_on_rote_prefix():
    # 20000-letter prefix of g applied to f's fixed point; the distinct
    # length-10 window count is cross-checked against the brute census.
    prefix = named("g").apply(named("f").iterate_prefix(0, 12000))[:20000]
    assert factor_complexity(prefix, 10) == brute_factor_count(prefix.letters, 10) == 20


def test_involutions_and_parikh_invariance():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.choice([2, 3])
        u = Word(bytes(rng.randrange(k) for _ in range(rng.randrange(25))), k)
        assert reverse(reverse(u)) == u
        assert parikh(reverse(u)) == parikh(u)
        if k == 2:
            assert complement(complement(u)) == u


def test_complexity_bounds():
    rng = random.Random(7)
    for _ in range(100):
        k = rng.choice([2, 3])
        u = Word(bytes(rng.randrange(k) for _ in range(rng.randrange(1, 30))), k)
        for n in range(len(u)):
            assert factor_complexity(u, n) <= factor_complexity(u, n + 1) * k
            assert factor_complexity(u, n) <= len(u) - n + 1


def test_factor_sets_commute_with_complement_and_reversal():
    rng = random.Random(3)
    for _ in range(50):
        u = Word(bytes(rng.randrange(2) for _ in range(rng.randrange(1, 20))), 2)
        for n in range(len(u) + 1):
            facs = factors_of_length(u, n)
            assert factors_of_length(complement(u), n) == {complement(v) for v in facs}
            assert factors_of_length(reverse(u), n) == {reverse(v) for v in facs}
