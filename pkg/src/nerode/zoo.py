"""Concrete languages: the divisibility languages L_n and their prime unions,
the worked examples, and membership oracles for the non-regular ones.

Regular languages are built as automata; non-regular ones exist only as
predicates. Oracle names are stable identifiers used by the command line.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from . import automata
from .automata import Dfa
from .minimization import minimize
from .regex.parser import parse_regex
from .regex.syntax import Alphabet, Word

logger = logging.getLogger(__name__)

AB = Alphabet.from_text("ab")
ABC = Alphabet.from_text("abc")
UNARY = Alphabet.from_text("a")

EXAMPLE1_REGEX = "(a+b+c)*.a.(a+b+c)*"
EXAMPLE1_COMPLEMENT_REGEX = "(b+c)*"
EXAMPLE2_REGEX = "(b+c)* + (a+b+c)*.a.(a+b+c)*.b.(b+c)*"


class OracleName(StrEnum):
    """Stable identifiers of the language catalogue."""
    POW2 = "pow2"             # unary, length is a power of 2
    FIB = "fib"               # unary, length is a Fibonacci number
    PRIME_LEN = "prime-len"   # unary, length is prime
    XI_NE_PM1 = "xi-ne-pm1"   # over {a,b}, ξ(w) ≠ ±1
    EX1 = "ex1"               # over {a,b,c}, contains an a
    EX2 = "ex2"               # over {a,b,c}, every a has a b to its right
    EX4 = "ex4"               # over {a,b}, length ≡ 3 mod 5
    FIG1 = "fig1"             # the printed two-state transition table

    # Parametric prefixes
    LN = "Ln"                 # Ln:<n>
    LEN_MOD = "len-mod"       # len-mod:<m>:<r>


NAME_SEPARATOR = ":"


# ξ and the divisibility languages

def xi(w: Word) -> int:
    """ξ(w) = |w|_a − |w|_b for a word over {a, b}.

    Raises:
        AlphabetError: If w has a character other than a or b
    """
    AB.check_word(w)
    return w.count("a") - w.count("b")


def divisibility_dfa(n: int) -> Dfa:
    """The n-state cyclic DFA for L_n = { w : n divides ξ(w) }.

    State r is the residue ξ mod n; a adds one, b subtracts one.

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"Modulus must be a positive integer, got {n}")
    rows = tuple(((r + 1) % n, (r - 1) % n) for r in range(n))
    return Dfa(AB, 0, frozenset([0]), rows)


def length_mod_dfa(modulus: int, residue: int, alphabet: Alphabet = AB) -> Dfa:
    """DFA for the words whose length is ≡ residue mod modulus."""
    if modulus < 1:
        raise ValueError(f"Modulus must be a positive integer, got {modulus}")
    if not 0 <= residue < modulus:
        raise ValueError(f"Residue must be in 0..{modulus - 1}, got {residue}")
    rows = tuple(tuple([(r + 1) % modulus] * len(alphabet)) for r in range(modulus))
    return Dfa(alphabet, 0, frozenset([residue]), rows)


@lru_cache(maxsize=None)
def example1_dfa() -> Dfa:
    """Minimal DFA for the words over {a,b,c} with at least one a."""
    return minimize(automata.compile_regex(parse_regex(EXAMPLE1_REGEX, ABC), ABC))


@lru_cache(maxsize=None)
def example2_dfa() -> Dfa:
    """Minimal DFA for the words over {a,b,c} where every a has a b somewhere to its right."""
    return minimize(automata.compile_regex(parse_regex(EXAMPLE2_REGEX, ABC), ABC))


def figure1_dfa() -> Dfa:
    """The two-state machine exactly as its transition table is printed.

    S0 (initial, only final): stay on b or c, go to S1 on a.
    S1: stay on a or c, go back to S0 on b.
    It recognizes the ex2 language (every a has a b to its right).
    """
    return Dfa(ABC, 0, frozenset([0]), ((1, 0, 0), (1, 0, 1)))


# Primes

def is_prime(n: int) -> bool:
    """Trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def first_primes(k: int) -> List[int]:
    primes: List[int] = []
    candidate = 2
    while len(primes) < k:
        if is_prime(candidate):
            primes.append(candidate)
        candidate += 1
    return primes


@dataclass(frozen=True)
class PrimeSet:
    """A finite, non-empty set of distinct primes kept in increasing order."""

    primes: Tuple[int, ...]

    def __post_init__(self):
        primes = tuple(sorted(self.primes))
        if not primes:
            raise ValueError("PrimeSet must not be empty")
        if len(set(primes)) != len(primes):
            raise ValueError(f"PrimeSet has duplicates: {primes}")
        for p in primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", primes)

    @classmethod
    def first(cls, k: int) -> "PrimeSet":
        if k < 1:
            raise ValueError(f"Need at least one prime, got k={k}")
        return cls(tuple(first_primes(k)))

    @property
    def modulus(self) -> int:
        return math.prod(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.primes) + "}"


def prime_union_dfa(S: PrimeSet) -> Dfa:
    """Minimal DFA for the union of L_p over p in S.

    Raises:
        ValueError: If S is empty
    """
    if not len(S):
        raise ValueError("Cannot build the union of an empty prime set")
    result = divisibility_dfa(S.primes[0])
    for p in S.primes[1:]:
        result = minimize(automata.union(result, divisibility_dfa(p)))
    result = minimize(result)
    logger.debug("Union of L_p over %s: %d states", S, result.state_count)
    return result


def residue_period(S: PrimeSet) -> int:
    """Least period of r ↦ (some p in S divides r) on the integers mod ∏S.

    Membership in the union of L_p depends only on ξ mod ∏S, so this is the
    number of Nerode classes of the union, computed without automata.
    """
    modulus = S.modulus
    pattern = [any(r % p == 0 for p in S) for r in range(modulus)]
    for period in range(1, modulus + 1):
        if modulus % period:
            continue
        if all(pattern[r] == pattern[(r + period) % modulus] for r in range(modulus)):
            return period
    return modulus


# Fibonacci numbers, indexed F(1) = F(2) = 1

def fibonacci(i: int) -> int:
    if i < 1:
        raise ValueError(f"Fibonacci index starts at 1, got {i}")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def is_fibonacci(n: int) -> bool:
    """True for 1, 2, 3, 5, 8, ...; 0 is not F(i) for any i ≥ 1."""
    if n < 1:
        return False
    for candidate in (5 * n * n + 4, 5 * n * n - 4):
        root = math.isqrt(candidate)
        if root * root == candidate:
            return True
    return False


# Oracles

@dataclass(frozen=True)
class LanguageOracle:
    """A named membership predicate over an alphabet.

    `membership` is called on words already known to be over `alphabet`;
    use `contains` for unchecked input. DFA-backed oracles also carry the
    automaton so callers can evaluate many words from shared states.
    """

    name: str
    alphabet: Alphabet
    membership: Callable[[Word], bool] = field(compare=False)
    dfa: Optional[Dfa] = None

    @classmethod
    def from_dfa(cls, name: str, d: Dfa) -> "LanguageOracle":
        return cls(name, d.alphabet, lambda w: d.accepts_from(d.initial, w), d)

    def contains(self, word: Word) -> bool:
        """Membership of word, after checking it is over the oracle's alphabet."""
        return self.membership(self.alphabet.check_word(word))

    @property
    def is_regular(self) -> bool:
        return self.dfa is not None


def _length_is_power_of_two(w: Word) -> bool:
    n = len(w)
    return n > 0 and n & (n - 1) == 0


def _xi_not_unit(w: Word) -> bool:
    return abs(w.count("a") - w.count("b")) != 1


def zoo_oracles() -> Dict[str, LanguageOracle]:
    """The fixed catalogue, keyed by stable name."""
    oracles = [
        LanguageOracle(OracleName.POW2, UNARY, _length_is_power_of_two),
        LanguageOracle(OracleName.FIB, UNARY, lambda w: is_fibonacci(len(w))),
        LanguageOracle(OracleName.PRIME_LEN, UNARY, lambda w: is_prime(len(w))),
        LanguageOracle(OracleName.XI_NE_PM1, AB, _xi_not_unit),
        LanguageOracle.from_dfa(OracleName.EX1, example1_dfa()),
        LanguageOracle.from_dfa(OracleName.EX2, example2_dfa()),
        LanguageOracle.from_dfa(OracleName.EX4, length_mod_dfa(5, 3)),
        LanguageOracle.from_dfa(OracleName.FIG1, figure1_dfa()),
    ]
    for n in (2, 3, 5):
        oracles.append(LanguageOracle.from_dfa(f"{OracleName.LN}:{n}", divisibility_dfa(n)))
    oracles.append(LanguageOracle.from_dfa(f"{OracleName.LEN_MOD}:5:3", length_mod_dfa(5, 3)))
    return {str(o.name): o for o in oracles}


def resolve_oracle(name: str) -> LanguageOracle:
    """Look up a catalogue name, including the parametric Ln:<n> and len-mod:<m>:<r>.

    Raises:
        ValueError: If the name is unknown or its parameters are invalid
    """
    catalogue = zoo_oracles()
    if name in catalogue:
        return catalogue[name]
    head, _, rest = name.partition(NAME_SEPARATOR)
    params = rest.split(NAME_SEPARATOR) if rest else []
    try:
        if head == OracleName.LN and len(params) == 1:
            return LanguageOracle.from_dfa(name, divisibility_dfa(int(params[0])))
        if head == OracleName.LEN_MOD and len(params) == 2:
            return LanguageOracle.from_dfa(name, length_mod_dfa(int(params[0]), int(params[1])))
    except ValueError as e:
        raise ValueError(f"Invalid parameters in language name {name!r}: {e}") from None
    known = ", ".join(sorted(catalogue)) + f", {OracleName.LN}:<n>, {OracleName.LEN_MOD}:<m>:<r>"
    raise ValueError(f"Unknown language name {name!r}. Known names: {known}")


def is_zoo_name(text: str) -> bool:
    """Whether text looks like a catalogue name rather than an expression."""
    head = text.strip().partition(NAME_SEPARATOR)[0]
    return text.strip() in {str(n) for n in OracleName} or head in (OracleName.LN, OracleName.LEN_MOD)


# Witness families from the hand proofs; each triple (x, y, z) claims that
# exactly one of x·z and y·z is in the language.

class WitnessTriple(NamedTuple):
    x: Word
    y: Word
    z: Word


def divisibility_witnesses(n: int) -> List[WitnessTriple]:
    """For L_n: u = a^m is separated from any v with ξ(v) ≢ m by a^(n−m)."""
    return [
        WitnessTriple("a" * m, "a" * other, "a" * (n - m))
        for m in range(n) for other in range(n) if other != m
    ]


def length_mod_witnesses(modulus: int, residue: int) -> List[WitnessTriple]:
    """For length ≡ residue mod modulus: a^k is separated from a^k' by a^(modulus+residue−k)."""
    return [
        WitnessTriple("a" * k, "a" * other, "a" * (modulus + residue - k))
        for k in range(modulus) for other in range(modulus) if other != k
    ]


def xi_witnesses(k: int) -> List[WitnessTriple]:
    """For ξ(w) ≠ ±1: a^(3i) and a^(3j), i > j, are separated by b^(3j+1)."""
    return [
        WitnessTriple("a" * (3 * i), "a" * (3 * j), "b" * (3 * j + 1))
        for i in range(1, k + 1) for j in range(i)
    ]


def fibonacci_witnesses(k: int) -> List[WitnessTriple]:
    """For Fibonacci lengths: a^F(3i) and a^F(3j), i > j ≥ 1, are separated by a^F(3i−1)."""
    return [
        WitnessTriple("a" * fibonacci(3 * i), "a" * fibonacci(3 * j), "a" * fibonacci(3 * i - 1))
        for i in range(2, k + 1) for j in range(1, i)
    ]
