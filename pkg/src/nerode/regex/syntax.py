from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Tuple

# Words are plain strings; "" is the empty word.
Word = str

EPSILON_DISPLAY = "ε"


class AlphabetError(ValueError):
    """A symbol or word does not belong to the declared alphabet."""


class AlphabetMismatchError(ValueError):
    """Two automata or oracles that must share an alphabet do not."""


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character symbols.

    The construction order is the canonical order used by every enumeration
    and every tie-break in the package.
    """

    symbols: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise AlphabetError("Alphabet must contain at least one symbol")
        for symbol in symbols:
            if not isinstance(symbol, str) or len(symbol) != 1:
                raise AlphabetError(f"Alphabet symbols must be single characters, got {symbol!r}")
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"Alphabet has duplicate symbols: {''.join(symbols)!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    @classmethod
    def from_text(cls, text: str) -> "Alphabet":
        """Build an alphabet from a string, one symbol per character."""
        return cls(tuple(text))

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AlphabetError(f"Symbol {symbol!r} is not in alphabet {str(self)!r}") from None

    def check_word(self, word: Word) -> Word:
        """Validate that every character of word is a symbol; return it unchanged."""
        for position, char in enumerate(word):
            if char not in self._index:
                raise AlphabetError(
                    f"Character {char!r} at position {position} of {format_word(word)!r} "
                    f"is not in alphabet {str(self)!r}"
                )
        return word

    def word_key(self, word: Word) -> Tuple[int, Tuple[int, ...]]:
        """Sort key for the canonical order: shorter first, then alphabet order."""
        return len(word), tuple(self._index[c] for c in word)


def format_word(word: Word) -> str:
    """Render a word for reports; the empty word prints as ε."""
    return word if word else EPSILON_DISPLAY


# Regex abstract syntax. Nodes are immutable and compare structurally.

@dataclass(frozen=True)
class Empty:
    """The constant ∅."""


@dataclass(frozen=True)
class Symbol:
    char: str


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = Empty | Symbol | Union | Concat | Star

EMPTY = Empty()
EPSILON = Star(EMPTY)


def is_epsilon(e: Regex) -> bool:
    return isinstance(e, Star) and isinstance(e.inner, Empty)


def union_of(left: Regex, right: Regex) -> Regex:
    """Union with ∅ + e = e and e + e = e applied."""
    if isinstance(left, Empty):
        return right
    if isinstance(right, Empty) or left == right:
        return left
    return Union(left, right)


def concat_of(left: Regex, right: Regex) -> Regex:
    """Concatenation with ∅ · e = ∅ and ε · e = e applied."""
    if isinstance(left, Empty) or isinstance(right, Empty):
        return EMPTY
    if is_epsilon(left):
        return right
    if is_epsilon(right):
        return left
    return Concat(left, right)


def star_of(inner: Regex) -> Regex:
    """Star with ∅* = ε* = ε and (e*)* = e* applied."""
    if isinstance(inner, Empty) or is_epsilon(inner):
        return EPSILON
    if isinstance(inner, Star):
        return inner
    return Star(inner)


def union_all(parts: Iterable[Regex]) -> Regex:
    result: Regex = EMPTY
    for part in parts:
        result = union_of(result, part)
    return result


def regex_size(e: Regex) -> int:
    """Number of AST nodes."""
    count = 0
    stack = [e]
    while stack:
        node = stack.pop()
        count += 1
        if isinstance(node, (Union, Concat)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Star):
            stack.append(node.inner)
    return count
