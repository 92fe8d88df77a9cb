import random

import pytest

from nerode.client import LanguageClient, ToolkitSettings
from nerode.regex.syntax import EMPTY, EPSILON, Alphabet, Concat, Star, Symbol, Union
from nerode.zoo import (
    PrimeSet,
    divisibility_dfa,
    example1_dfa,
    example2_dfa,
    figure1_dfa,
    length_mod_dfa,
    prime_union_dfa,
)

SEED = 20240517


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_regex(rng: random.Random, alphabet: Alphabet, size: int):
    """A random expression with exactly `size` AST nodes (size >= 1)."""
    if size == 1:
        choice = rng.random()
        if choice < 0.1:
            return EMPTY
        return Symbol(rng.choice(alphabet.symbols))
    if size == 2:
        if rng.random() < 0.2:
            return EPSILON
        return Star(random_regex(rng, alphabet, 1))
    kind = rng.choice(("union", "concat", "star"))
    if kind == "star":
        return Star(random_regex(rng, alphabet, size - 1))
    left = rng.randint(1, size - 2)
    node = Union if kind == "union" else Concat
    return node(random_regex(rng, alphabet, left), random_regex(rng, alphabet, size - 1 - left))


@pytest.fixture
def regex_factory(rng):
    def make(alphabet: Alphabet, max_size: int = 10):
        return random_regex(rng, alphabet, rng.randint(1, max_size))
    return make


def zoo_dfa_catalogue():
    catalogue = {f"Ln:{n}": divisibility_dfa(n) for n in range(1, 7)}
    catalogue.update({
        "ex1": example1_dfa(),
        "ex2": example2_dfa(),
        "ex4": length_mod_dfa(5, 3),
        "fig1": figure1_dfa(),
        "union{2,3}": prime_union_dfa(PrimeSet((2, 3))),
    })
    return catalogue


@pytest.fixture
def zoo_dfas():
    return zoo_dfa_catalogue()


@pytest.fixture
def client(monkeypatch, tmp_path):
    """A fresh LanguageClient that ignores any settings on the host."""
    monkeypatch.setenv("NERODE_SETTINGS", str(tmp_path / "settings.json"))
    for variable in ("NERODE_ALPHABET", "NERODE_HORIZONS", "NERODE_MAX_K", "NERODE_WORKERS"):
        monkeypatch.delenv(variable, raising=False)
    LanguageClient.reset_instance()
    yield LanguageClient.get_instance(ToolkitSettings())
    LanguageClient.reset_instance()


ZOO_DFA_NAMES = sorted(zoo_dfa_catalogue())


@pytest.fixture(params=ZOO_DFA_NAMES)
def zoo_dfa(request):
    """Each catalogue DFA in turn, as (name, dfa)."""
    return request.param, zoo_dfa_catalogue()[request.param]
