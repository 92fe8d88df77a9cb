import logging
from typing import Dict, Iterator, List, Optional, Tuple

from .automata import Dfa
from .regex.syntax import Alphabet, AlphabetError

logger = logging.getLogger(__name__)

# Keys of the line-based DFA text format
ALPHABET_KEY = "alphabet"
STATES_KEY = "states"
INITIAL_KEY = "initial"
FINAL_KEY = "final"
TRANS_KEY = "trans"


class DfaFormatError(ValueError):
    """Malformed DFA text; `line` is 1-based, 0 when the problem is global."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def dumps_dfa(d: Dfa) -> str:
    """Serialize a DFA to the line-based text format.

    Example:
        alphabet: ab
        states: 2
        initial: 0
        final: 0
        trans: 0 a 1
        ...
    """
    lines = [
        f"{ALPHABET_KEY}: {d.alphabet}",
        f"{STATES_KEY}: {d.state_count}",
        f"{INITIAL_KEY}: {d.initial}",
        f"{FINAL_KEY}: {' '.join(str(s) for s in sorted(d.finals))}".rstrip(),
    ]
    for state in range(d.state_count):
        for i, symbol in enumerate(d.alphabet):
            lines.append(f"{TRANS_KEY}: {state} {symbol} {d.delta[state][i]}")
    return "\n".join(lines) + "\n"


def loads_dfa(text: str) -> Dfa:
    """Parse the line-based DFA text format.

    Blank lines are ignored. Every (state, symbol) pair must have exactly
    one `trans:` line.

    Raises:
        DfaFormatError: On unknown keys, bad numbers, whitespace symbols,
            duplicate final states, missing or duplicate transitions
    """
    header: Dict[str, Tuple[str, int]] = {}
    transitions: Dict[Tuple[int, str], Tuple[int, int]] = {}
    raw_transitions: List[Tuple[str, int]] = []

    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise DfaFormatError(f"Expected '<key>: <value>', got {line!r}", number)
        if key == TRANS_KEY:
            raw_transitions.append((value, number))
        elif key in (ALPHABET_KEY, STATES_KEY, INITIAL_KEY, FINAL_KEY):
            if key in header:
                raise DfaFormatError(f"Duplicate '{key}' line", number)
            header[key] = (value.strip(), number)
        else:
            raise DfaFormatError(f"Unknown key {key!r}", number)

    for key in (ALPHABET_KEY, STATES_KEY, INITIAL_KEY, FINAL_KEY):
        if key not in header:
            raise DfaFormatError(f"Missing '{key}' line")

    alphabet_text, alphabet_line = header[ALPHABET_KEY]
    if any(c.isspace() for c in alphabet_text):
        raise DfaFormatError(f"Alphabet symbols may not be whitespace, got {alphabet_text!r}", alphabet_line)
    try:
        alphabet = Alphabet.from_text(alphabet_text)
    except AlphabetError as e:
        raise DfaFormatError(str(e), alphabet_line) from None

    state_count = _parse_int(*header[STATES_KEY])
    if state_count < 1:
        raise DfaFormatError("A DFA needs at least one state", header[STATES_KEY][1])
    initial = _parse_state(header[INITIAL_KEY][0], header[INITIAL_KEY][1], state_count)
    final_text, final_line = header[FINAL_KEY]
    final_list = [_parse_state(item, final_line, state_count) for item in final_text.split()]
    finals = frozenset(final_list)
    if len(finals) != len(final_list):
        raise DfaFormatError(f"Duplicate final state in {final_text!r}", final_line)

    for value, number in raw_transitions:
        parts = value.split()
        if len(parts) != 3:
            raise DfaFormatError(f"Expected 'trans: <from> <symbol> <to>', got {value.strip()!r}", number)
        source = _parse_state(parts[0], number, state_count)
        symbol = parts[1]
        if symbol not in alphabet:
            raise DfaFormatError(f"Symbol {symbol!r} is not in alphabet {alphabet_text!r}", number)
        target = _parse_state(parts[2], number, state_count)
        if (source, symbol) in transitions:
            raise DfaFormatError(f"Duplicate transition for state {source} on {symbol!r}", number)
        transitions[(source, symbol)] = (target, number)

    rows = []
    for state in range(state_count):
        row = []
        for symbol in alphabet:
            if (state, symbol) not in transitions:
                raise DfaFormatError(f"Missing transition for state {state} on {symbol!r}")
            row.append(transitions[(state, symbol)][0])
        rows.append(tuple(row))
    return Dfa(alphabet, initial, finals, tuple(rows))


def _parse_int(text: str, line: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise DfaFormatError(f"Expected an integer, got {text!r}", line) from None


def _parse_state(text: str, line: int, state_count: int) -> int:
    state = _parse_int(text, line)
    if not 0 <= state < state_count:
        raise DfaFormatError(f"State {state} out of range 0..{state_count - 1}", line)
    return state


def read_dfa(path: str) -> Dfa:
    with open(path, 'r') as f:
        dfa = loads_dfa(f.read())
    logger.debug("Read %d-state DFA from %s", dfa.state_count, path)
    return dfa


def write_dfa(d: Dfa, path: str) -> None:
    with open(path, 'w') as f:
        f.write(dumps_dfa(d))
    logger.debug("Wrote %d-state DFA to %s", d.state_count, path)


def _dot_quote(s: str) -> str:
    return '"{}"'.format(s.replace('\\', '\\\\').replace('"', '\\"'))


def iter_dot(d: Dfa, state_names: Optional[List[str]] = None, name: str = "dfa") -> Iterator[str]:
    """Graphviz source for d, one line at a time.

    Final states are double circles and the initial state is entered by an
    edge from a point node labelled "start". Parallel edges are merged into
    one edge with a comma-separated label.
    """
    names = state_names or [str(s) for s in range(d.state_count)]
    yield f"digraph {_dot_quote(name)} {{\n"
    yield "  rankdir=LR;\n"
    yield '  start [shape=point, xlabel="start"];\n'
    for state in range(d.state_count):
        shape = "doublecircle" if state in d.finals else "circle"
        yield f"  {_dot_quote(names[state])} [shape={shape}];\n"
    yield f"  start -> {_dot_quote(names[d.initial])};\n"
    for state in range(d.state_count):
        labels: Dict[int, List[str]] = {}
        for i, symbol in enumerate(d.alphabet):
            labels.setdefault(d.delta[state][i], []).append(symbol)
        for target, symbols in labels.items():
            yield (f"  {_dot_quote(names[state])} -> {_dot_quote(names[target])}"
                   f" [label={_dot_quote(','.join(symbols))}];\n")
    yield "}\n"


def to_dot(d: Dfa, state_names: Optional[List[str]] = None, name: str = "dfa") -> str:
    return "".join(iter_dot(d, state_names, name))
