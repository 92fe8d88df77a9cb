from .operators import RegexOperator, RegexConstant
from .parser import RegexParser, RegexSyntaxError, parse_regex, format_regex
from .semantics import enumerate_language, words_up_to
from .syntax import (
    Alphabet,
    AlphabetError,
    AlphabetMismatchError,
    Concat,
    Empty,
    EMPTY,
    EPSILON,
    Regex,
    Star,
    Symbol,
    Union,
    Word,
    concat_of,
    format_word,
    regex_size,
    star_of,
    union_all,
    union_of,
)

__all__ = [
    'RegexOperator', 'RegexConstant', 'RegexParser', 'RegexSyntaxError',
    'parse_regex', 'format_regex', 'enumerate_language', 'words_up_to',
    'Alphabet', 'AlphabetError', 'AlphabetMismatchError', 'Word', 'Regex',
    'Empty', 'Symbol', 'Union', 'Concat', 'Star', 'EMPTY', 'EPSILON',
    'union_of', 'concat_of', 'star_of', 'union_all', 'regex_size', 'format_word',
]
