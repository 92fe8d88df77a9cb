import time

import pytest

from nerode import automata
from nerode.automata import Dfa
from nerode.minimization import (
    class_representatives,
    distinguishing_extension,
    minimize,
    mn_index,
    refine,
    state_distinguisher,
    trim,
)
from nerode.nonregularity import observation_table
from nerode.regex import EMPTY, EPSILON, Alphabet, Concat, Star, Union, parse_regex, words_up_to
from nerode.regex.syntax import AlphabetError
from nerode.zoo import (
    ABC,
    EXAMPLE1_REGEX,
    LanguageOracle,
    PrimeSet,
    divisibility_dfa,
    length_mod_dfa,
    prime_union_dfa,
)


def test_divisibility_index_equals_modulus():
    start = time.perf_counter()
    for n in range(1, 65):
        assert mn_index(divisibility_dfa(n)) == n
    assert time.perf_counter() - start < 5


def test_padding_with_unreachable_states_is_removed():
    d = divisibility_dfa(4)
    padded = Dfa(d.alphabet, 0, d.finals | {5}, d.delta + ((4, 5), (5, 4)))
    assert padded.state_count == 6
    assert minimize(padded).state_count == 4
    assert trim(padded).state_count == 4


def test_length_mod_five_has_five_classes():
    assert mn_index(length_mod_dfa(5, 3)) == 5


def test_example1_needs_two_states():
    d = automata.compile_regex(parse_regex(EXAMPLE1_REGEX, ABC), ABC)
    assert minimize(d).state_count == 2


def test_prime_union_of_three_primes():
    assert mn_index(prime_union_dfa(PrimeSet((2, 3, 5)))) == 30


def test_universal_language_has_one_class():
    assert mn_index(divisibility_dfa(1)) == 1


def test_minimize_is_canonical(zoo_dfa):
    _, d = zoo_dfa
    m = minimize(d)
    assert minimize(m) == m
    assert automata.equivalent(m, d) == (True, None)


def test_equal_languages_minimize_identically():
    left = automata.compile_regex(parse_regex("a*", ABC), ABC)
    right = automata.compile_regex(parse_regex("\\e + a.a* + a.a", ABC), ABC)
    assert minimize(left) == minimize(right)


def test_refine_separates_finals():
    partition = refine(divisibility_dfa(3))
    assert len(partition) == 3
    assert sorted(len(block) for block in partition.blocks) == [1, 1, 1]


def test_state_distinguisher_examples():
    l3 = divisibility_dfa(3)
    assert state_distinguisher(l3, 1, 1) is None
    assert state_distinguisher(l3, 0, 1) == ""
    assert state_distinguisher(l3, 1, 2) == "a"


def test_state_distinguisher_rejects_bad_ids():
    with pytest.raises(ValueError):
        state_distinguisher(divisibility_dfa(3), 0, 3)


def test_distinguishing_extension_examples():
    l3 = divisibility_dfa(3)
    assert distinguishing_extension(l3, "", "aaa") is None
    assert distinguishing_extension(l3, "a", "aa") == "a"
    with pytest.raises(AlphabetError):
        distinguishing_extension(l3, "c", "a")


def test_class_representatives_of_length_mod_five():
    assert class_representatives(length_mod_dfa(5, 3)) == ["", "a", "aa", "aaa", "aaaa"]


def _exhaustive_shortest(acceptance, words, p, q):
    for z in words:
        if acceptance[z][p] != acceptance[z][q]:
            return z
    return None


def test_distinguishers_are_sound_and_shortest(zoo_dfa, rng):
    name, d = zoo_dfa
    symbols = d.alphabet.symbols
    words = words_up_to(d.alphabet, 8)
    acceptance = {z: [d.accepts_from(s, z) for s in range(d.state_count)] for z in words}

    def random_word(max_len):
        return "".join(rng.choice(symbols) for _ in range(rng.randint(0, max_len)))

    for _ in range(100):
        x, y = random_word(10), random_word(10)
        z = distinguishing_extension(d, x, y)
        p, q = d.run_from(d.initial, x), d.run_from(d.initial, y)
        if z is not None:
            assert automata.run(d, x + z) != automata.run(d, y + z), (name, x, y, z)
            assert z == _exhaustive_shortest(acceptance, words, p, q), (name, x, y)
        else:
            for _ in range(1000):
                probe = random_word(12)
                assert automata.run(d, x + probe) == automata.run(d, y + probe), (name, x, y, probe)


def test_equivalent_expressions_share_a_canonical_dfa(regex_factory):
    ab = Alphabet.from_text("ab")
    for _ in range(50):
        e = regex_factory(ab)
        canonical = minimize(automata.compile_regex(e, ab))
        variants = [
            Union(e, e),
            Union(e, EMPTY),
            Concat(EPSILON, e),
            automata.dfa_to_regex(automata.compile_regex(e, ab)),
        ]
        if isinstance(e, Star):
            variants.append(Star(e))
        for variant in variants:
            assert minimize(automata.compile_regex(variant, ab)) == canonical


def random_dfa(rng, alphabet, states):
    rows = tuple(tuple(rng.randrange(states) for _ in alphabet) for _ in range(states))
    finals = frozenset(s for s in range(states) if rng.random() < 0.5)
    return Dfa(alphabet, rng.randrange(states), finals, rows)


def test_index_matches_observation_table(rng):
    ab = Alphabet.from_text("ab")
    words = words_up_to(ab, 7)
    for _ in range(30):
        d = random_dfa(rng, ab, rng.randint(1, 8))
        table = observation_table(LanguageOracle.from_dfa("random", minimize(d)), words, words)
        assert table.distinct_row_count() == mn_index(d)
