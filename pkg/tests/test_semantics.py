import pytest

from nerode.regex import EMPTY, EPSILON, Alphabet, enumerate_language, parse_regex, regex_size, words_up_to
from nerode.regex.syntax import (
    AlphabetError,
    Concat,
    Star,
    Symbol,
    Union,
    concat_of,
    format_word,
    star_of,
    union_all,
    union_of,
)

ABC = Alphabet.from_text("abc")


def test_empty_language():
    assert enumerate_language(EMPTY, 3) == frozenset()


def test_star_of_empty_is_epsilon():
    assert enumerate_language(Star(EMPTY), 3) == {""}


def test_example1_words_up_to_two():
    tree = parse_regex("(a+b+c)*.a.(a+b+c)*", ABC)
    assert enumerate_language(tree, 2) == {"a", "aa", "ab", "ac", "ba", "ca"}


def test_star_respects_bound():
    words = enumerate_language(Star(Concat(Symbol("a"), Symbol("b"))), 5)
    assert words == {"", "ab", "abab"}


def test_negative_bound_rejected():
    with pytest.raises(ValueError):
        enumerate_language(EPSILON, -1)


def test_words_up_to_is_shortlex():
    assert words_up_to(Alphabet.from_text("ba"), 2) == ["", "b", "a", "bb", "ba", "ab", "aa"]
    assert len(words_up_to(ABC, 2)) == 13


def test_alphabet_validation():
    with pytest.raises(AlphabetError):
        Alphabet.from_text("")
    with pytest.raises(AlphabetError):
        Alphabet.from_text("aa")
    with pytest.raises(AlphabetError):
        ABC.check_word("abd")
    assert ABC.check_word("cab") == "cab"
    assert ABC.word_key("b") < ABC.word_key("aa")


def test_smart_constructors():
    a = Symbol("a")
    assert union_of(EMPTY, a) == a
    assert union_of(a, a) == a
    assert concat_of(EMPTY, a) == EMPTY
    assert concat_of(EPSILON, a) == a
    assert star_of(EMPTY) == EPSILON
    assert star_of(Star(a)) == Star(a)
    assert union_all([]) == EMPTY


def test_regex_size_counts_nodes():
    assert regex_size(parse_regex("a + b.c*", ABC)) == 6
    assert regex_size(EPSILON) == 2


def test_format_word():
    assert format_word("") == "ε"
    assert format_word("ab") == "ab"


def test_enumeration_of_union_is_union_of_enumerations(regex_factory):
    ab = Alphabet.from_text("ab")
    for _ in range(100):
        left, right = regex_factory(ab, 8), regex_factory(ab, 8)
        for k in range(6):
            assert enumerate_language(Union(left, right), k) == (
                enumerate_language(left, k) | enumerate_language(right, k)
            )


def test_enumeration_of_star_unrolls_once(regex_factory):
    ab = Alphabet.from_text("ab")
    for _ in range(100):
        e = regex_factory(ab, 6)
        unrolled = Union(EPSILON, Concat(e, Star(e)))
        for k in range(6):
            assert enumerate_language(Star(e), k) == enumerate_language(unrolled, k)
