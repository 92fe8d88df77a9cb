import time

import pytest

from nerode import automata
from nerode.minimization import mn_index
from nerode.nonregularity import verify_witnesses
from nerode.regex import Alphabet, parse_regex, words_up_to
from nerode.regex.syntax import AlphabetError
from nerode.zoo import (
    ABC,
    EXAMPLE1_COMPLEMENT_REGEX,
    OracleName,
    PrimeSet,
    WitnessTriple,
    divisibility_dfa,
    divisibility_witnesses,
    example1_dfa,
    example2_dfa,
    figure1_dfa,
    fibonacci,
    fibonacci_witnesses,
    first_primes,
    is_fibonacci,
    is_prime,
    is_zoo_name,
    length_mod_witnesses,
    prime_union_dfa,
    residue_period,
    resolve_oracle,
    xi,
    xi_witnesses,
    zoo_oracles,
)

AB = Alphabet.from_text("ab")


def random_word(rng, max_len=20):
    return "".join(rng.choice("ab") for _ in range(rng.randint(0, max_len)))


def test_xi():
    assert xi("") == 0
    assert xi("aab") == 1
    assert xi("a" * 6 + "b" * 4) == 2
    with pytest.raises(AlphabetError):
        xi("abc")


def test_divisibility_dfa_runs():
    l3 = divisibility_dfa(3)
    assert not automata.run(l3, "aaab")
    assert automata.run(l3, "ab")
    assert divisibility_dfa(1).state_count == 1
    assert automata.run(divisibility_dfa(1), "abba")
    with pytest.raises(ValueError):
        divisibility_dfa(0)


def test_xi_is_additive(rng):
    for _ in range(1000):
        u, v = random_word(rng), random_word(rng)
        assert xi(u + v) == xi(u) + xi(v)


@pytest.mark.parametrize("n", range(1, 8))
def test_divisibility_dfa_tracks_xi(rng, n):
    d = divisibility_dfa(n)
    for w in words_up_to(AB, 8):
        assert automata.run(d, w) == (xi(w) % n == 0)
    for _ in range(1000):
        w = random_word(rng, 40)
        assert automata.run(d, w) == (xi(w) % n == 0)


def test_example_automata_match_their_definitions():
    for w in words_up_to(ABC, 6):
        has_a = "a" in w
        a_followed_by_b = all("b" in w[i + 1:] for i, c in enumerate(w) if c == "a")
        assert automata.run(example1_dfa(), w) == has_a
        assert automata.run(example2_dfa(), w) == a_followed_by_b
        assert automata.run(figure1_dfa(), w) == a_followed_by_b


def test_example1_complement():
    complement = automata.compile_regex(parse_regex(EXAMPLE1_COMPLEMENT_REGEX, ABC), ABC)
    assert automata.equivalent(automata.complement(example1_dfa()), complement) == (True, None)


def test_prime_union_state_counts():
    start = time.perf_counter()
    counts = [mn_index(prime_union_dfa(PrimeSet.first(k))) for k in range(1, 5)]
    assert counts == [2, 6, 30, 210]
    assert time.perf_counter() - start < 10


def test_prime_union_is_union_of_divisibility_languages():
    for primes in ((2,), (2, 3), (3, 5), (2, 3, 5)):
        d = prime_union_dfa(PrimeSet(primes))
        for w in words_up_to(AB, 8):
            assert automata.run(d, w) == any(automata.run(divisibility_dfa(p), w) for p in primes)


def test_prime_union_agrees_with_xi_not_unit():
    oracle = zoo_oracles()[OracleName.XI_NE_PM1]
    small = prime_union_dfa(PrimeSet.first(3))
    for w in words_up_to(AB, 6):
        assert automata.run(small, w) == oracle.contains(w)

    product = divisibility_dfa(2)
    for p in (3, 5, 7, 11):
        product = automata.union(product, divisibility_dfa(p))
    for w in words_up_to(AB, 12):
        assert automata.run(product, w) == oracle.contains(w)


def test_residue_period_agrees_with_minimization():
    for primes in ((2,), (3,), (2, 3), (3, 5), (2, 3, 5)):
        S = PrimeSet(primes)
        assert residue_period(S) == mn_index(prime_union_dfa(S))


def test_prime_set_validation():
    assert str(PrimeSet((5, 2, 3))) == "{2,3,5}"
    assert PrimeSet.first(4).modulus == 210
    with pytest.raises(ValueError):
        PrimeSet(())
    with pytest.raises(ValueError):
        PrimeSet((4,))
    with pytest.raises(ValueError):
        PrimeSet((3, 3))


def test_primes_and_fibonacci():
    assert first_primes(5) == [2, 3, 5, 7, 11]
    assert not is_prime(1) and is_prime(97) and not is_prime(91)
    assert [fibonacci(i) for i in range(1, 10)] == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [n for n in range(0, 22) if is_fibonacci(n)] == [1, 2, 3, 5, 8, 13, 21]
    with pytest.raises(ValueError):
        fibonacci(0)


def test_oracle_examples():
    oracles = zoo_oracles()
    pow2 = oracles[OracleName.POW2]
    assert pow2.contains("a") and not pow2.contains("aaa") and not pow2.contains("")
    fib = oracles[OracleName.FIB]
    assert fib.contains("a" * 13) and not fib.contains("a" * 7)
    xi_ne = oracles[OracleName.XI_NE_PM1]
    assert not xi_ne.contains("a") and xi_ne.contains("aa")
    assert oracles[OracleName.PRIME_LEN].contains("a" * 7)
    with pytest.raises(AlphabetError):
        pow2.contains("b")


def test_regular_oracles_carry_automata():
    oracles = zoo_oracles()
    assert oracles[OracleName.EX1].is_regular
    assert not oracles[OracleName.POW2].is_regular
    assert mn_index(oracles[OracleName.EX4].dfa) == 5


def test_resolve_parametric_names():
    assert resolve_oracle("Ln:7").dfa.state_count == 7
    assert resolve_oracle("len-mod:4:1").contains("ababa")
    assert resolve_oracle("ex2") == zoo_oracles()["ex2"]
    with pytest.raises(ValueError, match="Known names"):
        resolve_oracle("nope")
    with pytest.raises(ValueError, match="Invalid parameters"):
        resolve_oracle("Ln:0")
    with pytest.raises(ValueError):
        resolve_oracle("len-mod:3:5")


def test_is_zoo_name():
    assert is_zoo_name("pow2")
    assert is_zoo_name("Ln:12")
    assert is_zoo_name("len-mod:5:3")
    assert not is_zoo_name("a+b")


def test_concrete_xi_witness():
    oracle = zoo_oracles()[OracleName.XI_NE_PM1]
    x, y, z = "a" * 6, "a" * 3, "b" * 4
    assert xi(x + z) == 2 and oracle.contains(x + z)
    assert xi(y + z) == -1 and not oracle.contains(y + z)


def test_witness_families_hold():
    oracles = zoo_oracles()
    assert verify_witnesses(oracles[OracleName.XI_NE_PM1], xi_witnesses(6)) == []
    assert verify_witnesses(oracles[OracleName.FIB], fibonacci_witnesses(5)) == []
    assert verify_witnesses(resolve_oracle("Ln:5"), divisibility_witnesses(5)) == []
    assert verify_witnesses(resolve_oracle("len-mod:5:3"), length_mod_witnesses(5, 3)) == []


def test_verify_witnesses_reports_failures():
    oracle = resolve_oracle("Ln:3")
    bad = WitnessTriple("a", "aaaa", "aa")
    assert verify_witnesses(oracle, [bad]) == [bad]
