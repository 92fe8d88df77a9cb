"""Finite automata: Thompson NFAs, total DFAs and the operations between them.

Words are strings over a declared Alphabet. Every Dfa is total: each state has
exactly one successor per symbol, with an explicit non-final sink state where a
construction would otherwise leave a transition undefined.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Set, Tuple

from .regex.syntax import (
    EMPTY,
    EPSILON,
    Alphabet,
    AlphabetMismatchError,
    Concat,
    Empty,
    Regex,
    Star,
    Symbol,
    Union,
    Word,
    concat_of,
    star_of,
    union_of,
)

logger = logging.getLogger(__name__)

# Label of an ε-move in an Nfa transition
EPSILON_LABEL = None

Transition = Tuple[int, Optional[str], int]


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with ε-moves; labels are symbols or None."""

    state_count: int
    initial: int
    finals: FrozenSet[int]
    transitions: Tuple[Transition, ...]

    def __post_init__(self):
        if not 0 <= self.initial < self.state_count:
            raise ValueError(f"Initial state {self.initial} out of range 0..{self.state_count - 1}")
        for state in self.finals:
            if not 0 <= state < self.state_count:
                raise ValueError(f"Final state {state} out of range 0..{self.state_count - 1}")
        for source, _, target in self.transitions:
            if not (0 <= source < self.state_count and 0 <= target < self.state_count):
                raise ValueError(f"Transition {source} -> {target} out of range")


@dataclass(frozen=True)
class Dfa:
    """Total deterministic automaton.

    `delta[state][i]` is the successor of `state` on `alphabet.symbols[i]`.
    Two Dfa values are equal when they are structurally identical.
    """

    alphabet: Alphabet
    initial: int
    finals: FrozenSet[int]
    delta: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        count = len(self.delta)
        if count == 0:
            raise ValueError("A DFA needs at least one state")
        if not 0 <= self.initial < count:
            raise ValueError(f"Initial state {self.initial} out of range 0..{count - 1}")
        for state in self.finals:
            if not 0 <= state < count:
                raise ValueError(f"Final state {state} out of range 0..{count - 1}")
        width = len(self.alphabet)
        for state, row in enumerate(self.delta):
            if len(row) != width:
                raise ValueError(f"State {state} has {len(row)} transitions, expected {width}")
            for target in row:
                if not 0 <= target < count:
                    raise ValueError(f"Transition from state {state} to {target} out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    def step(self, state: int, symbol: str) -> int:
        return self.delta[state][self.alphabet.index(symbol)]

    def run_from(self, state: int, word: Word) -> int:
        """State reached from `state` after reading word; one lookup per character."""
        index = self.alphabet.index
        delta = self.delta
        for char in word:
            state = delta[state][index(char)]
        return state

    def accepts_from(self, state: int, word: Word) -> bool:
        return self.run_from(state, word) in self.finals


def run(d: Dfa, w: Word) -> bool:
    """Check membership of w in L(d).

    Raises:
        AlphabetError: If w has a character outside d's alphabet
    """
    return d.accepts_from(d.initial, w)


def check_same_alphabet(d1: Dfa, d2: Dfa) -> None:
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatchError(
            f"Automata have different alphabets: {str(d1.alphabet)!r} vs {str(d2.alphabet)!r}"
        )


# Regex -> Nfa

def thompson_nfa(e: Regex) -> Nfa:
    """Compile a Regex into a Thompson NFA.

    Every fragment has one entry and one exit state and the exit has no
    outgoing transitions. Empty and Symbol use 2 states, Union adds 2 to its
    operands, Concat links its operands with an ε-move, Star adds 2.
    """
    transitions: List[Transition] = []
    counter = [0]

    def new_state() -> int:
        counter[0] += 1
        return counter[0] - 1

    # Post-order walk with an explicit stack; fragments are (entry, exit)
    fragments: List[Tuple[int, int]] = []
    pending: List[Tuple[Regex, bool]] = [(e, False)]
    while pending:
        node, expanded = pending.pop()
        if isinstance(node, Empty):
            fragments.append((new_state(), new_state()))
        elif isinstance(node, Symbol):
            entry, exit_ = new_state(), new_state()
            transitions.append((entry, node.char, exit_))
            fragments.append((entry, exit_))
        elif not expanded:
            pending.append((node, True))
            if isinstance(node, Star):
                pending.append((node.inner, False))
            else:
                pending.append((node.right, False))
                pending.append((node.left, False))
        elif isinstance(node, Star):
            inner_entry, inner_exit = fragments.pop()
            entry, exit_ = new_state(), new_state()
            transitions.extend([
                (entry, EPSILON_LABEL, inner_entry),
                (entry, EPSILON_LABEL, exit_),
                (inner_exit, EPSILON_LABEL, inner_entry),
                (inner_exit, EPSILON_LABEL, exit_),
            ])
            fragments.append((entry, exit_))
        elif isinstance(node, Union):
            right_entry, right_exit = fragments.pop()
            left_entry, left_exit = fragments.pop()
            entry, exit_ = new_state(), new_state()
            transitions.extend([
                (entry, EPSILON_LABEL, left_entry),
                (entry, EPSILON_LABEL, right_entry),
                (left_exit, EPSILON_LABEL, exit_),
                (right_exit, EPSILON_LABEL, exit_),
            ])
            fragments.append((entry, exit_))
        elif isinstance(node, Concat):
            right_entry, right_exit = fragments.pop()
            left_entry, left_exit = fragments.pop()
            transitions.append((left_exit, EPSILON_LABEL, right_entry))
            fragments.append((left_entry, right_exit))
        else:
            raise TypeError(f"Not a regex node: {node!r}")

    entry, exit_ = fragments.pop()
    nfa = Nfa(counter[0], entry, frozenset([exit_]), tuple(transitions))
    logger.debug("Thompson NFA: %d states, %d transitions", nfa.state_count, len(nfa.transitions))
    return nfa


# Nfa -> Dfa

def subset_construct(n: Nfa, alphabet: Alphabet) -> Dfa:
    """Determinize an NFA by the subset construction.

    Only subsets reachable from the ε-closure of the initial state are built,
    in breadth-first order with symbols in alphabet order. NFA states that
    cannot reach a final state are dropped first, so every dead subset
    collapses into the empty subset, which serves as the sink.
    """
    epsilon_moves: Dict[int, List[int]] = {}
    symbol_moves: Dict[Tuple[int, str], List[int]] = {}
    reverse: Dict[int, List[int]] = {}
    for source, label, target in n.transitions:
        if label is EPSILON_LABEL:
            epsilon_moves.setdefault(source, []).append(target)
        else:
            symbol_moves.setdefault((source, label), []).append(target)
        reverse.setdefault(target, []).append(source)

    productive: Set[int] = set(n.finals)
    worklist = list(n.finals)
    while worklist:
        state = worklist.pop()
        for source in reverse.get(state, ()):
            if source not in productive:
                productive.add(source)
                worklist.append(source)

    def closure(states) -> FrozenSet[int]:
        seen = {s for s in states if s in productive}
        stack = list(seen)
        while stack:
            state = stack.pop()
            for target in epsilon_moves.get(state, ()):
                if target not in seen and target in productive:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)

    start = closure([n.initial])
    ids: Dict[FrozenSet[int], int] = {start: 0}
    order: List[FrozenSet[int]] = [start]
    rows: List[Tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        row = []
        for symbol in alphabet:
            moved = [t for s in subset for t in symbol_moves.get((s, symbol), ())]
            target = closure(moved)
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(ids[target])
        rows.append(tuple(row))

    finals = frozenset(i for i, subset in enumerate(order) if subset & n.finals)
    dfa = Dfa(alphabet, 0, finals, tuple(rows))
    logger.debug("Subset construction: %d NFA states -> %d DFA states", n.state_count, dfa.state_count)
    return dfa


def compile_regex(e: Regex, alphabet: Alphabet) -> Dfa:
    """Compile a Regex over alphabet to a (not necessarily minimal) DFA."""
    return subset_construct(thompson_nfa(e), alphabet)


# Boolean combinations

def product(d1: Dfa, d2: Dfa, combine: Callable[[bool, bool], bool]) -> Dfa:
    """Product automaton accepting the words w with combine(w ∈ L(d1), w ∈ L(d2)).

    Only pairs reachable from (initial1, initial2) are built, in breadth-first
    order, so the result has at most state_count(d1) × state_count(d2) states.

    Raises:
        AlphabetMismatchError: If the automata have different alphabets
    """
    check_same_alphabet(d1, d2)
    start = (d1.initial, d2.initial)
    ids: Dict[Tuple[int, int], int] = {start: 0}
    order = [start]
    rows = []
    queue = deque([start])
    width = len(d1.alphabet)
    while queue:
        s1, s2 = queue.popleft()
        row = []
        for i in range(width):
            target = (d1.delta[s1][i], d2.delta[s2][i])
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(ids[target])
        rows.append(tuple(row))
    finals = frozenset(
        i for i, (s1, s2) in enumerate(order) if combine(s1 in d1.finals, s2 in d2.finals)
    )
    return Dfa(d1.alphabet, 0, finals, tuple(rows))


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda a, b: a or b)


def intersection(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda a, b: a and b)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda a, b: a and not b)


def symmetric_difference(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda a, b: a != b)


def complement(d: Dfa) -> Dfa:
    """Swap final and non-final states; relies on delta being total."""
    finals = frozenset(range(d.state_count)) - d.finals
    return Dfa(d.alphabet, d.initial, finals, d.delta)


# Decision procedures

def shortest_paths(d: Dfa, start: Optional[int] = None) -> Dict[int, Word]:
    """Least word (shortest, then alphabet order) reaching each reachable state.

    The dict preserves breadth-first discovery order.
    """
    start = d.initial if start is None else start
    paths: Dict[int, Word] = {start: ""}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for i, symbol in enumerate(d.alphabet):
            target = d.delta[state][i]
            if target not in paths:
                paths[target] = paths[state] + symbol
                queue.append(target)
    return paths


def is_empty(d: Dfa) -> Tuple[bool, Optional[Word]]:
    """Decide whether L(d) is empty.

    Returns:
        (True, None) when no final state is reachable, otherwise
        (False, w) with w the shortest accepted word, ties broken by
        alphabet order
    """
    for state, word in shortest_paths(d).items():
        if state in d.finals:
            return False, word
    return True, None


def equivalent(d1: Dfa, d2: Dfa) -> Tuple[bool, Optional[Word]]:
    """Decide L(d1) = L(d2).

    Returns:
        (True, None) when the languages are equal, otherwise (False, w) with
        w the shortest word in the symmetric difference

    Raises:
        AlphabetMismatchError: If the automata have different alphabets
    """
    witnesses = []
    for left, right in ((d1, d2), (d2, d1)):
        empty, witness = is_empty(difference(left, right))
        if not empty:
            witnesses.append(witness)
    if not witnesses:
        return True, None
    return False, min(witnesses, key=d1.alphabet.word_key)


def accepted_words(d: Dfa, max_len: int) -> Set[Word]:
    """All accepted words of length at most max_len."""
    accepted = set()
    layer = [("", d.initial)]
    for length in range(max_len + 1):
        next_layer = []
        for word, state in layer:
            if state in d.finals:
                accepted.add(word)
            if length < max_len:
                for i, symbol in enumerate(d.alphabet):
                    next_layer.append((word + symbol, d.delta[state][i]))
        layer = next_layer
    return accepted


# Dfa -> Regex

def useful_states(d: Dfa) -> Set[int]:
    """States that are reachable from the initial state and can reach a final state."""
    reachable = set(shortest_paths(d))
    reverse: Dict[int, Set[int]] = {}
    for state in reachable:
        for target in d.delta[state]:
            reverse.setdefault(target, set()).add(state)
    live = set(d.finals & reachable)
    stack = list(live)
    while stack:
        state = stack.pop()
        for source in reverse.get(state, ()):
            if source not in live:
                live.add(source)
                stack.append(source)
    return live


def dfa_to_regex(d: Dfa) -> Regex:
    """Convert a DFA to an equivalent Regex by state elimination.

    Useless states are dropped, a fresh start and accept state are added and
    the remaining states are eliminated from the highest id down, so the
    output is reproducible.
    """
    keep = useful_states(d)
    if d.initial not in keep:
        return EMPTY

    start, accept = d.state_count, d.state_count + 1
    edges: Dict[Tuple[int, int], Regex] = {(start, d.initial): EPSILON}
    for state in sorted(keep):
        for i, symbol in enumerate(d.alphabet):
            target = d.delta[state][i]
            if target in keep:
                edges[(state, target)] = union_of(edges.get((state, target), EMPTY), Symbol(symbol))
        if state in d.finals:
            edges[(state, accept)] = EPSILON

    for victim in sorted(keep, reverse=True):
        loop = star_of(edges.pop((victim, victim), EMPTY))
        incoming = sorted(p for (p, q) in edges if q == victim)
        outgoing = sorted(q for (p, q) in edges if p == victim)
        for p in incoming:
            into = edges[(p, victim)]
            for q in outgoing:
                path = concat_of(concat_of(into, loop), edges[(victim, q)])
                edges[(p, q)] = union_of(edges.get((p, q), EMPTY), path)
        for p in incoming:
            del edges[(p, victim)]
        for q in outgoing:
            del edges[(victim, q)]

    return edges.get((start, accept), EMPTY)
