"""Finite evidence about the Myhill–Nerode index of a language.

An observation table records membership of prefix·extension for chosen
prefixes and extensions. Rows that differ belong to different Nerode
classes, so the number of distinct rows is a lower bound on the index.
Tracking that bound over growing horizons separates languages whose index
settles from languages whose index keeps growing. Neither outcome is a
proof; the verdict vocabulary says only what the data shows.
"""
import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .minimization import mn_index
from .regex.semantics import words_up_to
from .regex.syntax import Alphabet, AlphabetError, AlphabetMismatchError, Word
from .zoo import LanguageOracle, OracleName, PrimeSet, WitnessTriple, prime_union_dfa

logger = logging.getLogger(__name__)

DEFAULT_HORIZONS = (16, 32, 64, 128)
DEFAULT_MAX_K = 4

# Exhaustive probes stop at this length and this many words
EXHAUSTIVE_MAX_LEN = 7
EXHAUSTIVE_MAX_WORDS = 256

VERDICT_WINDOW = 3


@dataclass(frozen=True)
class ObservationTable:
    """entries[i][j] is membership of prefixes[i] · extensions[j]."""

    prefixes: Tuple[Word, ...]
    extensions: Tuple[Word, ...]
    entries: Tuple[Tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.prefixes):
            raise ValueError(f"Table has {len(self.entries)} rows for {len(self.prefixes)} prefixes")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.extensions):
                raise ValueError(f"Row {i} has {len(row)} entries for {len(self.extensions)} extensions")

    def row(self, prefix: Word) -> Tuple[bool, ...]:
        return self.entries[self.prefixes.index(prefix)]

    def distinct_row_count(self) -> int:
        return len(set(self.entries))


def _check_words(o: LanguageOracle, words: Sequence[Word]) -> None:
    for word in words:
        try:
            o.alphabet.check_word(word)
        except AlphabetError as e:
            raise AlphabetMismatchError(f"Word does not fit oracle {o.name!r}: {e}") from None


def observation_table(o: LanguageOracle, prefixes: Sequence[Word], extensions: Sequence[Word],
                      workers: int = 1) -> ObservationTable:
    """Fill the membership table of o for every prefix · extension.

    With workers > 1 rows are filled on a thread pool; rows are collected in
    prefix order so the result equals the sequential fill.

    Raises:
        AlphabetMismatchError: If a word is not over o's alphabet
    """
    prefixes = tuple(prefixes)
    extensions = tuple(extensions)
    _check_words(o, prefixes)
    _check_words(o, extensions)

    if o.dfa is not None:
        entries = _dfa_rows(o, prefixes, extensions)
    else:
        def fill(prefix: Word) -> Tuple[bool, ...]:
            return tuple(o.membership(prefix + z) for z in extensions)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                entries = tuple(pool.map(fill, prefixes))
        else:
            entries = tuple(fill(prefix) for prefix in prefixes)

    logger.debug("Observation table for %s: %d x %d", o.name, len(prefixes), len(extensions))
    return ObservationTable(prefixes, extensions, entries)


def _dfa_rows(o: LanguageOracle, prefixes, extensions) -> Tuple[Tuple[bool, ...], ...]:
    # Each extension is run once from every state; each prefix once from the start.
    d = o.dfa
    columns_by_state = [
        tuple(d.accepts_from(state, z) for z in extensions) for state in range(d.state_count)
    ]
    return tuple(columns_by_state[d.run_from(d.initial, prefix)] for prefix in prefixes)


def probe_words(alphabet: Alphabet, horizon: int) -> List[Word]:
    """The prefix/extension set used at one horizon.

    Unary alphabets: a^i for i ≤ horizon. Otherwise every word up to the
    longest length L ≤ min(horizon, 7) with at most 256 such words, followed
    by σ^i for each symbol σ and L < i ≤ horizon. Sets for larger horizons
    contain those for smaller ones.
    """
    if len(alphabet) == 1:
        return [alphabet.symbols[0] * i for i in range(horizon + 1)]
    exhaustive = 0
    total = 1
    while exhaustive < min(horizon, EXHAUSTIVE_MAX_LEN):
        total += len(alphabet) ** (exhaustive + 1)
        if total > EXHAUSTIVE_MAX_WORDS:
            break
        exhaustive += 1
    words = words_up_to(alphabet, exhaustive)
    for length in range(exhaustive + 1, horizon + 1):
        words.extend(symbol * length for symbol in alphabet)
    return words


class VerdictKind(StrEnum):
    STABILIZED = "stabilized"
    GROWING = "growing"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == VerdictKind.STABILIZED:
            return f"{self.kind}({self.index})"
        return str(self.kind)


def judge(class_counts: Sequence[int]) -> Verdict:
    """Verdict over the last three counts: equal, strictly increasing, or neither."""
    if len(class_counts) < VERDICT_WINDOW:
        return Verdict(VerdictKind.INCONCLUSIVE)
    window = class_counts[-VERDICT_WINDOW:]
    if all(c == window[0] for c in window):
        return Verdict(VerdictKind.STABILIZED, window[0])
    if all(a < b for a, b in zip(window, window[1:])):
        return Verdict(VerdictKind.GROWING)
    return Verdict(VerdictKind.INCONCLUSIVE)


@dataclass(frozen=True)
class EvidenceReport:
    oracle_name: str
    horizons: Tuple[int, ...]
    class_counts: Tuple[int, ...]
    verdict: Verdict

    def to_text(self) -> str:
        lines = [f"oracle: {self.oracle_name}", f"{'horizon':>8}  {'classes':>8}"]
        for horizon, count in zip(self.horizons, self.class_counts):
            lines.append(f"{horizon:>8}  {count:>8}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["horizon", "class_count"])
        writer.writerows(zip(self.horizons, self.class_counts))
        return buffer.getvalue()


def class_count_series(o: LanguageOracle, horizons: Sequence[int], workers: int = 1) -> EvidenceReport:
    """Distinct-row counts of the observation table at each horizon.

    Raises:
        ValueError: If horizons is empty, not strictly increasing or negative
    """
    horizons = tuple(horizons)
    if not horizons:
        raise ValueError("At least one horizon is required")
    if horizons[0] < 0 or any(a >= b for a, b in zip(horizons, horizons[1:])):
        raise ValueError(f"Horizons must be non-negative and strictly increasing, got {list(horizons)}")

    counts = []
    for horizon in horizons:
        words = probe_words(o.alphabet, horizon)
        table = observation_table(o, words, words, workers=workers)
        counts.append(table.distinct_row_count())
        logger.debug("%s at horizon %d: %d classes", o.name, horizon, counts[-1])
    report = EvidenceReport(str(o.name), horizons, tuple(counts), judge(counts))
    logger.debug("%s verdict: %s", o.name, report.verdict)
    return report


def unary_periodicity_check(o: LanguageOracle, max_preperiod: int, max_period: int,
                            horizon: int) -> Optional[Tuple[int, int]]:
    """Least (preperiod, period) under which membership of a^i repeats up to the horizon.

    Probes powers of the first alphabet symbol, which is every word when the
    alphabet is unary. Looks for t ≤ max_preperiod and 1 ≤ p ≤ max_period
    with membership(a^i) = membership(a^(i+p)) for t ≤ i ≤ horizon − p and
    returns the lexicographically least pair, or None.

    Raises:
        ValueError: If horizon < max_preperiod + 2 * max_period or a bound is invalid
    """
    if max_preperiod < 0 or max_period < 1:
        raise ValueError(f"Need max_preperiod >= 0 and max_period >= 1, got {max_preperiod}, {max_period}")
    if horizon < max_preperiod + 2 * max_period:
        raise ValueError(
            f"Horizon {horizon} is too small; need at least {max_preperiod + 2 * max_period}"
        )
    symbol = o.alphabet.symbols[0]
    member = [o.membership(symbol * i) for i in range(horizon + 1)]
    for preperiod in range(max_preperiod + 1):
        for period in range(1, max_period + 1):
            if all(member[i] == member[i + period] for i in range(preperiod, horizon - period + 1)):
                return preperiod, period
    return None


def verify_witnesses(o: LanguageOracle, triples: Sequence[WitnessTriple]) -> List[WitnessTriple]:
    """Triples (x, y, z) for which it is not the case that exactly one of x·z, y·z is a member."""
    return [t for t in triples if o.contains(t.x + t.z) == o.contains(t.y + t.z)]


class PrimesDemoRow(NamedTuple):
    primes: PrimeSet
    state_count: int


def primes_demo(k: int, max_k: int = DEFAULT_MAX_K) -> List[PrimesDemoRow]:
    """Minimal state counts of the union of L_p over the first j primes, j = 1..k.

    Raises:
        ValueError: If max_k < 1 or k is outside 1..max_k
    """
    if max_k < 1:
        raise ValueError(f"max_k must be at least 1, got {max_k}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k > max_k:
        raise ValueError(f"k={k} exceeds the configured bound {max_k}")
    rows = []
    for j in range(1, k + 1):
        primes = PrimeSet.first(j)
        rows.append(PrimesDemoRow(primes, mn_index(prime_union_dfa(primes))))
    return rows


def strictly_increasing(rows: Sequence[PrimesDemoRow]) -> bool:
    return all(a.state_count < b.state_count for a, b in zip(rows, rows[1:]))


def format_primes_report(rows: Sequence[PrimesDemoRow], evidence: Optional[EvidenceReport] = None) -> str:
    """The primes table followed by the closing argument."""
    width = max(len(str(row.primes)) for row in rows) + 2
    lines = [f"{'primes':<{width}}states"]
    for row in rows:
        lines.append(f"{str(row.primes):<{width}}{row.state_count}")
    lines.append(f"state counts strictly increase: {'yes' if strictly_increasing(rows) else 'NO'}")
    if evidence is not None:
        counts = ", ".join(str(c) for c in evidence.class_counts)
        lines.append(f"{evidence.oracle_name} class counts: {counts} ({evidence.verdict})")
    lines.extend([
        "",
        "Each union of finitely many L_p is regular, and its minimal automaton",
        "grows with every prime added. If there were only finitely many primes,",
        f"the union over all of them would be the language {OracleName.XI_NE_PM1}",
        "(every integer other than ±1 has a prime divisor) and would be regular,",
        "with a bounded number of Nerode classes. Its class counts keep growing",
        "instead, so there must be infinitely many prime numbers.",
    ])
    return "\n".join(lines) + "\n"
