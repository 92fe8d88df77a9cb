"""Brute-force semantics: the words of a Regex up to a length bound.

This is computed by structural recursion on the syntax tree and shares no
code with the automata, so it serves as an independent oracle for them.
"""
import itertools
from typing import FrozenSet, List

from .syntax import Alphabet, Concat, Empty, Regex, Star, Symbol, Union, Word


def enumerate_language(e: Regex, max_len: int) -> FrozenSet[Word]:
    """Return exactly the words of L(e) whose length is at most max_len."""
    if max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    return _words(e, max_len)


def _words(e: Regex, max_len: int) -> FrozenSet[Word]:
    if isinstance(e, Empty):
        return frozenset()
    if isinstance(e, Symbol):
        return frozenset([e.char]) if max_len >= 1 else frozenset()
    if isinstance(e, Union):
        return _words(e.left, max_len) | _words(e.right, max_len)
    if isinstance(e, Concat):
        return _concatenate(_words(e.left, max_len), _words(e.right, max_len), max_len)
    if isinstance(e, Star):
        # L* = union of L^k; only non-empty factors can grow a word
        factors = _words(e.inner, max_len) - {""}
        closure = {""}
        frontier = {""}
        while frontier:
            grown = _concatenate(frontier, factors, max_len) - closure
            closure |= grown
            frontier = grown
        return frozenset(closure)
    raise TypeError(f"Not a regex node: {e!r}")


def _concatenate(left, right, max_len: int) -> FrozenSet[Word]:
    return frozenset(u + v for u in left for v in right if len(u) + len(v) <= max_len)


def words_up_to(alphabet: Alphabet, max_len: int) -> List[Word]:
    """All words of length at most max_len, shortest first, then in alphabet order."""
    words: List[Word] = []
    for length in range(max_len + 1):
        words.extend("".join(chars) for chars in itertools.product(alphabet.symbols, repeat=length))
    return words
