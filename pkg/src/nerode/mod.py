import logging
from enum import IntEnum
from typing import List, NamedTuple, Optional, Sequence

from . import automata
from .client import LanguageClient, ToolkitSettings
from .formats import dumps_dfa, to_dot, write_dfa
from .minimization import class_representatives, distinguishing_extension, minimize
from .nonregularity import class_count_series, format_primes_report, primes_demo
from .regex.syntax import Alphabet, format_word
from .utils import format_error_response, load_settings, save_settings, settings_path
from .zoo import LanguageOracle, OracleName

logger = logging.getLogger(__name__)

__all__ = [
    "ExitStatus", "CommandResult", "cmd_compile", "cmd_match", "cmd_min", "cmd_equiv",
    "cmd_classes", "cmd_distinguish", "cmd_evidence", "cmd_primes_demo", "cmd_dot", "cmd_config",
]


class ExitStatus(IntEnum):
    OK = 0          # success, member, equivalent
    REJECTED = 1    # non-member, inequivalent
    ERROR = 2       # usage or input error


class CommandResult(NamedTuple):
    output: str
    status: ExitStatus = ExitStatus.OK


def _error(e: Exception) -> CommandResult:
    logger.debug("Command failed: %s", e)
    return CommandResult(format_error_response(e) + "\n", ExitStatus.ERROR)


def _state_names(count: int) -> List[str]:
    return [f"S{i}" for i in range(count)]


def cmd_compile(expr: Optional[str] = None, alphabet: Optional[str] = None, out: Optional[str] = None,
                dot: Optional[str] = None, dfa_path: Optional[str] = None) -> CommandResult:
    """Compile an expression, catalogue name or DFA file to its minimal DFA.

    Args:
        expr: Expression text (e.g. "(a+b+c)*.a.(a+b+c)*") or a name like "Ln:7"
        dfa_path: DFA text file, instead of expr
        alphabet: Alphabet for expression text
        out: Write the DFA text here instead of printing it
        dot: Also write Graphviz source here

    Example:
        nerode compile --alphabet abc "(a+b+c)*.a.(a+b+c)*"   ->  states: 2
    """
    try:
        client = LanguageClient.get_instance()
        shared = client.operand_alphabet([expr], alphabet) if expr is not None else None
        d = minimize(client.resolve_dfa(expr=expr, dfa_path=dfa_path, alphabet=shared))
        if dot:
            with open(dot, 'w') as f:
                f.write(to_dot(d, _state_names(d.state_count)))
        if out:
            write_dfa(d, out)
            return CommandResult(f"states: {d.state_count}\n")
        return CommandResult(dumps_dfa(d))
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_match(word: str, expr: Optional[str] = None, dfa_path: Optional[str] = None,
              alphabet: Optional[str] = None) -> CommandResult:
    """Check membership of a word; exit status 0 for members, 1 otherwise.

    Example:
        nerode match Ln:3 ab   ->  ab: member
    """
    try:
        client = LanguageClient.get_instance()
        shared = client.operand_alphabet([expr], alphabet) if expr is not None else None
        d = client.resolve_dfa(expr=expr, dfa_path=dfa_path, alphabet=shared)
        member = automata.run(d, word)
        verdict = "member" if member else "non-member"
        return CommandResult(f"{format_word(word)}: {verdict}\n",
                             ExitStatus.OK if member else ExitStatus.REJECTED)
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_min(expr: Optional[str] = None, dfa_path: Optional[str] = None,
            alphabet: Optional[str] = None, out: Optional[str] = None) -> CommandResult:
    """Minimize an expression or DFA file and emit the canonical DFA text."""
    try:
        client = LanguageClient.get_instance()
        shared = client.operand_alphabet([expr], alphabet) if expr is not None else None
        d = minimize(client.resolve_dfa(expr=expr, dfa_path=dfa_path, alphabet=shared))
        if out:
            write_dfa(d, out)
            return CommandResult(f"states: {d.state_count}\n")
        return CommandResult(dumps_dfa(d))
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_equiv(exprs: Sequence[str] = (), dfa_paths: Sequence[str] = (),
              alphabet: Optional[str] = None) -> CommandResult:
    """Compare two languages; prints the shortest witness when they differ.

    Example:
        nerode equiv "a*" "\\e + a.a*"   ->  equivalent
    """
    try:
        if len(exprs) + len(dfa_paths) != 2:
            raise ValueError(f"equiv needs exactly two operands, got {len(exprs) + len(dfa_paths)}")
        client = LanguageClient.get_instance()
        first, second = client.resolve_operands(exprs, dfa_paths, alphabet)
        same, witness = automata.equivalent(first, second)
        if same:
            return CommandResult("equivalent\n")
        return CommandResult(f"not equivalent\nwitness: {format_word(witness)}\n", ExitStatus.REJECTED)
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_classes(expr: Optional[str] = None, dfa_path: Optional[str] = None,
                alphabet: Optional[str] = None) -> CommandResult:
    """Print the Myhill–Nerode index and one shortest representative per class.

    Example:
        nerode classes len-mod:5:3   ->  classes: 5, representatives ε a aa aaa aaaa
    """
    try:
        client = LanguageClient.get_instance()
        shared = client.operand_alphabet([expr], alphabet) if expr is not None else None
        d = client.resolve_dfa(expr=expr, dfa_path=dfa_path, alphabet=shared)
        representatives = class_representatives(d)
        lines = [f"classes: {len(representatives)}"]
        lines.extend(f"  {i}: {format_word(w)}" for i, w in enumerate(representatives))
        return CommandResult("\n".join(lines) + "\n")
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_distinguish(x: str, y: str, expr: Optional[str] = None, dfa_path: Optional[str] = None,
                    alphabet: Optional[str] = None) -> CommandResult:
    """Print the shortest distinguishing extension of x and y, or "equivalent".

    Example:
        nerode distinguish Ln:3 a aa   ->  extension: a
    """
    try:
        client = LanguageClient.get_instance()
        shared = client.operand_alphabet([expr], alphabet) if expr is not None else None
        d = client.resolve_dfa(expr=expr, dfa_path=dfa_path, alphabet=shared)
        z = distinguishing_extension(d, x, y)
        if z is None:
            return CommandResult("equivalent\n")
        return CommandResult(f"extension: {format_word(z)}\n")
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_evidence(name: Optional[str] = None, horizons: Optional[Sequence[int]] = None,
                 alphabet: Optional[str] = None, csv: bool = False,
                 dfa_path: Optional[str] = None) -> CommandResult:
    """Class-count series and verdict for a catalogue language, expression or DFA file.

    Example:
        nerode evidence pow2 --horizons 16,32,64   ->  verdict: growing
    """
    try:
        client = LanguageClient.get_instance()
        if (name is None) == (dfa_path is None):
            raise ValueError("Give exactly one of an expression or a DFA file")
        if dfa_path is not None:
            shared = Alphabet.from_text(alphabet) if alphabet else None
            oracle = LanguageOracle.from_dfa(dfa_path, client.resolve_dfa(dfa_path=dfa_path, alphabet=shared))
        else:
            oracle = client.resolve_oracle(name, client.operand_alphabet([name], alphabet))
        if horizons is None:
            horizons = client.settings.horizons
        report = class_count_series(oracle, horizons, workers=client.settings.workers)
        return CommandResult(report.to_csv() if csv else report.to_text())
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_primes_demo(k: Optional[int] = None, max_k: Optional[int] = None,
                    horizons: Optional[Sequence[int]] = None) -> CommandResult:
    """State counts of the unions of L_p over the first primes, with the closing argument.

    Example:
        nerode primes-demo 3   ->  {2} 2, {2,3} 6, {2,3,5} 30
    """
    try:
        client = LanguageClient.get_instance()
        bound = max_k if max_k is not None else client.settings.max_k
        rows = primes_demo(k if k is not None else bound, max_k=bound)
        oracle = client.resolve_oracle(OracleName.XI_NE_PM1)
        if horizons is None:
            horizons = client.settings.horizons
        evidence = class_count_series(oracle, horizons, workers=client.settings.workers)
        return CommandResult(format_primes_report(rows, evidence))
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_dot(expr: Optional[str] = None, dfa_path: Optional[str] = None, alphabet: Optional[str] = None,
            out: Optional[str] = None) -> CommandResult:
    """Graphviz source for an automaton, with states named S0, S1, ..."""
    try:
        client = LanguageClient.get_instance()
        shared = client.operand_alphabet([expr], alphabet) if expr is not None else None
        d = client.resolve_dfa(expr=expr, dfa_path=dfa_path, alphabet=shared)
        source = to_dot(d, _state_names(d.state_count))
        if out:
            with open(out, 'w') as f:
                f.write(source)
            return CommandResult(f"wrote {out}\n")
        return CommandResult(source)
    except (ValueError, OSError) as e:
        return _error(e)


def cmd_config(alphabet: Optional[str] = None, horizons: Optional[Sequence[int]] = None,
               max_k: Optional[int] = None, workers: Optional[int] = None) -> CommandResult:
    """Show the effective settings, first saving any given values to the settings file.

    Environment overrides are reported but never written to the file.

    Example:
        nerode config --max-k 5   ->  saved: data/nerode/settings.json, ..., max_k: 5
    """
    try:
        path = settings_path()
        given = {"alphabet": alphabet, "horizons": horizons, "max_k": max_k, "workers": workers}
        updates = {key: value for key, value in given.items() if value is not None}
        lines = []
        if updates:
            stored = load_settings(path, include_environment=False)
            stored.update({key: list(value) if key == "horizons" else value for key, value in updates.items()})
            ToolkitSettings.from_dict(stored)
            if not save_settings(stored, path):
                raise OSError(f"Could not write settings to {path}")
            LanguageClient.reset_instance()
            lines.append(f"saved: {path}")
        settings = ToolkitSettings.load(path)
        lines.extend([
            f"alphabet: {settings.alphabet}",
            f"horizons: {','.join(str(h) for h in settings.horizons)}",
            f"max_k: {settings.max_k}",
            f"workers: {settings.workers}",
        ])
        return CommandResult("\n".join(lines) + "\n")
    except (ValueError, OSError) as e:
        return _error(e)
