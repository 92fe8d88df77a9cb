from enum import StrEnum
from typing import Dict


class RegexOperator(StrEnum):
    """Enum of the metacharacters of the expression language.

    Every other printable character is a symbol; a metacharacter used as a
    symbol must be escaped with a backslash.
    """
    # Binary operators
    UNION = "+"     # e + e'
    CONCAT = "."    # e . e' (juxtaposition is accepted too)

    # Postfix operator
    STAR = "*"      # Kleene star

    # Grouping
    LPAREN = "("
    RPAREN = ")"

    # Escape prefix for constants and metacharacter symbols
    ESCAPE = "\\"


class RegexConstant(StrEnum):
    """Escape letters that denote constants rather than symbols."""
    EMPTY = "0"     # \0, the empty language
    EPSILON = "e"   # \e, sugar for \0*


class OperatorPrecedence:
    """Binding strength of each construct, loosest first."""

    UNION = 0
    CONCAT = 1
    STAR = 2
    ATOM = 3


METACHARACTERS = frozenset(op.value for op in RegexOperator)

CONSTANT_TEXT: Dict[RegexConstant, str] = {
    constant: f"{RegexOperator.ESCAPE}{constant}" for constant in RegexConstant
}


def is_metacharacter(char: str) -> bool:
    """Check whether a character must be escaped to be read as a symbol."""
    return char in METACHARACTERS or char.isspace()
