import logging
from dataclasses import dataclass
from typing import List

from .operators import (
    CONSTANT_TEXT,
    OperatorPrecedence,
    RegexConstant,
    RegexOperator,
    is_metacharacter,
)
from .syntax import (
    EMPTY,
    EPSILON,
    Alphabet,
    Concat,
    Empty,
    Regex,
    Star,
    Symbol,
    Union,
    is_epsilon,
)

logger = logging.getLogger(__name__)


class RegexSyntaxError(ValueError):
    """Raised when expression text does not follow the grammar.

    `position` is the 0-based character offset where the problem was found.
    """

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


# Token kinds besides the operator characters themselves
SYMBOL = "symbol"
CONSTANT = "constant"
END = "end"

ATOM_STARTS = (SYMBOL, CONSTANT, RegexOperator.LPAREN.value)


class RegexParser:
    """Parser for the expression language.

    Grammar, loosest binding first:

        regex  := union
        union  := concat ("+" concat)*
        concat := star (["."] star)*
        star   := atom "*"*
        atom   := SYMBOL | "\\0" | "\\e" | "(" regex ")"

    Binary operators associate to the left. Whitespace between tokens is
    ignored; a metacharacter or whitespace character is read as a symbol
    when preceded by a backslash.
    """

    @staticmethod
    def tokenize(text: str) -> List[Token]:
        """Split expression text into tokens, ending with an END token.

        Raises:
            RegexSyntaxError: On a dangling or unknown escape
        """
        tokens = []
        i = 0
        while i < len(text):
            char = text[i]
            if char.isspace():
                i += 1
                continue
            if char == RegexOperator.ESCAPE:
                if i + 1 >= len(text):
                    raise RegexSyntaxError("Dangling escape", text, i)
                escaped = text[i + 1]
                if escaped in (RegexConstant.EMPTY, RegexConstant.EPSILON):
                    tokens.append(Token(CONSTANT, escaped, i))
                elif is_metacharacter(escaped):
                    tokens.append(Token(SYMBOL, escaped, i))
                else:
                    raise RegexSyntaxError(f"Unknown escape '\\{escaped}'", text, i)
                i += 2
                continue
            if char in (RegexOperator.UNION, RegexOperator.CONCAT, RegexOperator.STAR,
                        RegexOperator.LPAREN, RegexOperator.RPAREN):
                tokens.append(Token(char, char, i))
            else:
                tokens.append(Token(SYMBOL, char, i))
            i += 1
        tokens.append(Token(END, "", len(text)))
        return tokens

    @staticmethod
    def parse(text: str, alphabet: Alphabet) -> Regex:
        """Parse expression text into a Regex over the given alphabet.

        Args:
            text: Expression text (e.g., "a + b.c*" or "(b+c)*")
            alphabet: Declared alphabet; every symbol must belong to it

        Returns:
            The abstract syntax tree

        Raises:
            RegexSyntaxError: Empty input, unbalanced parentheses, dangling
                operators or symbols outside the alphabet
        """
        tokens = RegexParser.tokenize(text)
        if tokens[0].kind == END:
            raise RegexSyntaxError("Empty expression", text, 0)
        cursor = _Cursor(text, tokens, alphabet)
        tree = cursor.union()
        token = cursor.peek()
        if token.kind == RegexOperator.RPAREN:
            raise RegexSyntaxError("Unbalanced parenthesis ')'", text, token.position)
        if token.kind != END:
            raise RegexSyntaxError(f"Unexpected {token.value!r}", text, token.position)
        logger.debug("Parsed %r over %r", text, str(alphabet))
        return tree

    @staticmethod
    def format(e: Regex) -> str:
        """Print a Regex back to text with the fewest parentheses that parse back to it."""
        return _format(e, OperatorPrecedence.UNION)

    @staticmethod
    def format_symbol(char: str) -> str:
        if is_metacharacter(char):
            return f"{RegexOperator.ESCAPE}{char}"
        return char


class _Cursor:
    """Recursive-descent state over a token list."""

    def __init__(self, text: str, tokens: List[Token], alphabet: Alphabet):
        self.text = text
        self.tokens = tokens
        self.alphabet = alphabet
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def union(self) -> Regex:
        tree = self.concat()
        while self.peek().kind == RegexOperator.UNION:
            self.advance()
            tree = Union(tree, self.concat())
        return tree

    def concat(self) -> Regex:
        tree = self.star()
        while True:
            token = self.peek()
            if token.kind == RegexOperator.CONCAT:
                self.advance()
                tree = Concat(tree, self.star())
            elif token.kind in ATOM_STARTS:
                tree = Concat(tree, self.star())
            else:
                return tree

    def star(self) -> Regex:
        tree = self.atom()
        while self.peek().kind == RegexOperator.STAR:
            self.advance()
            tree = Star(tree)
        return tree

    def atom(self) -> Regex:
        token = self.advance()
        if token.kind == SYMBOL:
            if token.value not in self.alphabet:
                raise RegexSyntaxError(
                    f"Symbol {token.value!r} is not in alphabet {str(self.alphabet)!r}",
                    self.text, token.position,
                )
            return Symbol(token.value)
        if token.kind == CONSTANT:
            return EMPTY if token.value == RegexConstant.EMPTY else EPSILON
        if token.kind == RegexOperator.LPAREN:
            tree = self.union()
            closing = self.advance()
            if closing.kind != RegexOperator.RPAREN:
                raise RegexSyntaxError("Unbalanced parenthesis '('", self.text, token.position)
            return tree
        if token.kind == END:
            raise RegexSyntaxError("Expected an expression but input ended", self.text, token.position)
        if token.kind == RegexOperator.RPAREN:
            raise RegexSyntaxError("Unexpected ')'", self.text, token.position)
        raise RegexSyntaxError(f"Dangling operator {token.value!r}", self.text, token.position)


def _format(e: Regex, context: int) -> str:
    if isinstance(e, Empty):
        return CONSTANT_TEXT[RegexConstant.EMPTY]
    if isinstance(e, Symbol):
        return RegexParser.format_symbol(e.char)
    if is_epsilon(e):
        return CONSTANT_TEXT[RegexConstant.EPSILON]
    if isinstance(e, Star):
        text = _format(e.inner, OperatorPrecedence.STAR) + RegexOperator.STAR
        own = OperatorPrecedence.STAR
    elif isinstance(e, Union):
        # Left-associative: a right operand of the same kind needs parentheses
        text = (_format(e.left, OperatorPrecedence.UNION) + f" {RegexOperator.UNION} "
                + _format(e.right, OperatorPrecedence.CONCAT))
        own = OperatorPrecedence.UNION
    elif isinstance(e, Concat):
        text = (_format(e.left, OperatorPrecedence.CONCAT) + RegexOperator.CONCAT
                + _format(e.right, OperatorPrecedence.STAR))
        own = OperatorPrecedence.CONCAT
    else:
        raise TypeError(f"Not a regex node: {e!r}")
    return f"({text})" if own < context else text


def parse_regex(text: str, alphabet: Alphabet) -> Regex:
    return RegexParser.parse(text, alphabet)


def format_regex(e: Regex) -> str:
    return RegexParser.format(e)


__all__ = [
    "RegexParser",
    "RegexSyntaxError",
    "Token",
    "parse_regex",
    "format_regex",
]
