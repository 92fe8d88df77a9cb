import functools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import automata
from .automata import Dfa
from .formats import read_dfa
from .minimization import minimize
from .nonregularity import DEFAULT_HORIZONS, DEFAULT_MAX_K
from .regex.parser import parse_regex
from .regex.syntax import Alphabet, AlphabetMismatchError
from .utils import load_settings, parse_int_list
from .zoo import LanguageOracle, is_zoo_name, resolve_oracle

logger = logging.getLogger(__name__)

DEFAULT_ALPHABET = "ab"

# Compiled automata kept per client
COMPILE_CACHE_SIZE = 128


@dataclass(frozen=True)
class ToolkitSettings:
    """Resolved configuration of the toolkit."""

    alphabet: str = DEFAULT_ALPHABET
    horizons: Tuple[int, ...] = DEFAULT_HORIZONS
    max_k: int = DEFAULT_MAX_K
    workers: int = 1

    @classmethod
    def from_dict(cls, settings: Dict[str, Any]) -> "ToolkitSettings":
        """Build settings from a raw dict (settings file plus environment).

        Raises:
            ValueError: If a value has the wrong type or range
        """
        defaults = cls()
        try:
            max_k = int(settings.get("max_k", defaults.max_k))
            workers = int(settings.get("workers", defaults.workers))
        except (TypeError, ValueError):
            raise ValueError(f"max_k and workers must be integers, got {settings!r}") from None
        if max_k < 1 or workers < 1:
            raise ValueError(f"max_k and workers must be positive, got {max_k}, {workers}")
        horizons = tuple(parse_int_list(settings.get("horizons", defaults.horizons)))
        if not horizons:
            raise ValueError("At least one horizon is required")
        alphabet = str(settings.get("alphabet", defaults.alphabet))
        Alphabet.from_text(alphabet)
        return cls(
            alphabet=alphabet,
            horizons=horizons,
            max_k=max_k,
            workers=workers,
        )

    @classmethod
    def load(cls, path: Optional[str] = None) -> "ToolkitSettings":
        return cls.from_dict(load_settings(path))


class LanguageClient:
    """Resolves expression text, catalogue names and DFA files into automata and oracles.

    The most recently compiled automata are cached per (expression, alphabet).
    """

    _instance = None

    @classmethod
    def reset_instance(cls):
        cls._instance = None

    @classmethod
    def get_instance(cls, settings: Optional[ToolkitSettings] = None) -> 'LanguageClient':
        """Get or create the shared client.

        Args:
            settings: Optional settings; defaults to ToolkitSettings.load()
        """
        # Asking for different settings replaces the shared instance
        if cls._instance is not None and settings is not None and cls._instance.settings != settings:
            logger.debug("Resetting language client: settings changed")
            cls.reset_instance()

        if cls._instance is None:
            cls._instance = cls(settings or ToolkitSettings.load())
        return cls._instance

    def __init__(self, settings: ToolkitSettings):
        self.settings = settings
        self.compile = functools.lru_cache(maxsize=COMPILE_CACHE_SIZE)(self._compile)

    def default_alphabet(self) -> Alphabet:
        return Alphabet.from_text(self.settings.alphabet)

    def operand_alphabet(self, operands: Sequence[str], alphabet: Optional[str] = None) -> Alphabet:
        """Alphabet for regex operands.

        An explicit alphabet wins; otherwise the first catalogue name among the
        operands lends its alphabet; otherwise the configured default.
        """
        if alphabet:
            return Alphabet.from_text(alphabet)
        for operand in operands:
            if operand is not None and is_zoo_name(operand):
                return resolve_oracle(operand.strip()).alphabet
        return self.default_alphabet()

    def resolve_oracle(self, expr: str, alphabet: Optional[Alphabet] = None) -> LanguageOracle:
        """Oracle for a catalogue name or a regex.

        Raises:
            ValueError: Unknown names, parse errors, alphabet conflicts
        """
        if is_zoo_name(expr):
            oracle = resolve_oracle(expr.strip())
            if alphabet is not None and oracle.alphabet != alphabet:
                raise AlphabetMismatchError(
                    f"{expr!r} is over {str(oracle.alphabet)!r}, not {str(alphabet)!r}"
                )
            return oracle
        return LanguageOracle.from_dfa(expr, self.compile(expr, alphabet or self.default_alphabet()))

    def _compile(self, expr: str, alphabet: Alphabet) -> Dfa:
        """Minimal DFA of a regex over alphabet; reached through the cached `compile`."""
        d = minimize(automata.compile_regex(parse_regex(expr, alphabet), alphabet))
        logger.debug("Compiled %r: %d states", expr, d.state_count)
        return d

    def resolve_dfa(self, expr: Optional[str] = None, dfa_path: Optional[str] = None,
                    alphabet: Optional[Alphabet] = None) -> Dfa:
        """Automaton for exactly one of an expression / catalogue name or a DFA file.

        Raises:
            ValueError: If both or neither source is given, or the named
                language has no automaton
            OSError: If the DFA file cannot be read
        """
        if (expr is None) == (dfa_path is None):
            raise ValueError("Give exactly one of an expression or a DFA file")
        if dfa_path is not None:
            d = read_dfa(dfa_path)
            if alphabet is not None and d.alphabet != alphabet:
                raise AlphabetMismatchError(
                    f"{dfa_path} is over {str(d.alphabet)!r}, not {str(alphabet)!r}"
                )
            return d
        oracle = self.resolve_oracle(expr, alphabet)
        if oracle.dfa is None:
            raise ValueError(f"{expr!r} is not regular; no automaton can be built for it")
        return oracle.dfa

    def resolve_operands(self, exprs: Sequence[str], dfa_paths: Sequence[str],
                         alphabet: Optional[str] = None) -> List[Dfa]:
        """Automata for positional expressions followed by DFA files, over one alphabet."""
        if alphabet or any(is_zoo_name(e) for e in exprs) or not dfa_paths:
            shared = self.operand_alphabet(exprs, alphabet)
        else:
            # Regex operands take the alphabet of the first DFA file
            shared = read_dfa(dfa_paths[0]).alphabet
        return [self.resolve_dfa(expr=e, alphabet=shared) for e in exprs] + [
            self.resolve_dfa(dfa_path=path, alphabet=shared) for path in dfa_paths
        ]
