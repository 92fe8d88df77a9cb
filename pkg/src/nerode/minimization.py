"""Myhill–Nerode canonical forms.

Two states are equivalent when no word leads exactly one of them into a final
state. `refine` computes that equivalence by Moore-style partition refinement,
`minimize` builds the quotient automaton, and the distinguisher functions
return the shortest word separating two states or two words.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .automata import Dfa, shortest_paths
from .regex.syntax import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks of state ids covering every state."""

    blocks: Tuple[FrozenSet[int], ...]
    block_of: Tuple[int, ...]

    @classmethod
    def from_block_of(cls, block_of: Sequence[int]) -> "Partition":
        members: Dict[int, set] = {}
        for state, block in enumerate(block_of):
            members.setdefault(block, set()).add(state)
        blocks = tuple(frozenset(members[b]) for b in sorted(members))
        return cls(blocks, tuple(block_of))

    def __len__(self) -> int:
        return len(self.blocks)


def reachable_states(d: Dfa) -> List[int]:
    """Reachable states in breadth-first discovery order."""
    return list(shortest_paths(d))


def renumber(d: Dfa, order: Sequence[int]) -> Dfa:
    """Restrict d to the given states (closed under delta) and number them by position."""
    new_id = {state: i for i, state in enumerate(order)}
    rows = tuple(tuple(new_id[t] for t in d.delta[state]) for state in order)
    finals = frozenset(new_id[s] for s in d.finals if s in new_id)
    return Dfa(d.alphabet, new_id[d.initial], finals, rows)


def trim(d: Dfa) -> Dfa:
    """Drop unreachable states; the survivors are numbered in breadth-first order."""
    return renumber(d, reachable_states(d))


def refine(d: Dfa) -> Partition:
    """Coarsest partition of d's states into Nerode-equivalent blocks.

    Starts from the final/non-final split and splits blocks on their
    (block, successor blocks) signature until nothing changes.
    """
    block_of = _number_by_first_seen([s in d.finals for s in range(d.state_count)])
    count = len(set(block_of))
    rounds = 0
    while True:
        rounds += 1
        signatures = [
            (block_of[s], tuple(block_of[t] for t in d.delta[s])) for s in range(d.state_count)
        ]
        refined = _number_by_first_seen(signatures)
        refined_count = len(set(refined))
        block_of = refined
        if refined_count == count:
            break
        count = refined_count
    logger.debug("Partition refinement: %d states -> %d blocks in %d rounds",
                 d.state_count, count, rounds)
    return Partition.from_block_of(block_of)


def _number_by_first_seen(keys) -> List[int]:
    ids: Dict[object, int] = {}
    return [ids.setdefault(key, len(ids)) for key in keys]


def minimize(d: Dfa) -> Dfa:
    """The minimal DFA for L(d) in canonical form.

    States are numbered in breadth-first discovery order from the initial
    state with symbols in alphabet order, so automata for the same language
    minimize to structurally identical values.
    """
    trimmed = trim(d)
    partition = refine(trimmed)
    rows = []
    for block in partition.blocks:
        representative = min(block)
        rows.append(tuple(partition.block_of[t] for t in trimmed.delta[representative]))
    finals = frozenset(partition.block_of[s] for s in trimmed.finals)
    quotient = Dfa(d.alphabet, partition.block_of[trimmed.initial], finals, tuple(rows))
    return trim(quotient)


def mn_index(d: Dfa) -> int:
    """Number of Myhill–Nerode classes of L(d), counting the sink class."""
    return minimize(d).state_count


def _check_state(d: Dfa, state: int) -> None:
    if not isinstance(state, int) or not 0 <= state < d.state_count:
        raise ValueError(f"Invalid state id {state!r}; expected 0..{d.state_count - 1}")


def state_distinguisher(d: Dfa, s: int, t: int) -> Optional[Word]:
    """Shortest word z such that exactly one of the runs from s and t on z accepts.

    Ties are broken by alphabet order. Returns None when s and t are
    equivalent.

    Raises:
        ValueError: If s or t is not a state of d
    """
    _check_state(d, s)
    _check_state(d, t)
    start = (s, t)
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        (p, q), word = queue.popleft()
        if (p in d.finals) != (q in d.finals):
            return word
        for i, symbol in enumerate(d.alphabet):
            pair = (d.delta[p][i], d.delta[q][i])
            if pair not in seen:
                seen.add(pair)
                queue.append((pair, word + symbol))
    return None


def distinguishing_extension(d: Dfa, x: Word, y: Word) -> Optional[Word]:
    """Shortest z with exactly one of x·z, y·z in L(d); None when x ≡ y.

    Raises:
        AlphabetError: If x or y has a character outside d's alphabet
    """
    d.alphabet.check_word(x)
    d.alphabet.check_word(y)
    return state_distinguisher(d, d.run_from(d.initial, x), d.run_from(d.initial, y))


def class_representatives(d: Dfa) -> List[Word]:
    """One shortest word per Nerode class, in canonical state order of minimize(d)."""
    return list(shortest_paths(minimize(d)).values())
