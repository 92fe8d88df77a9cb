"""Command-line front end: `nerode <subcommand> ...`.

Expressions and catalogue names (Ln:7, len-mod:5:3, ex1, pow2, ...) are
accepted wherever an expression is. Exit status is 0 on success or
membership, 1 for a non-member or inequivalent pair, 2 on input errors.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence

from . import mod
from .mod import CommandResult, ExitStatus
from .utils import parse_int_list

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _horizons(value: str) -> List[int]:
    try:
        return parse_int_list(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    verbosity = argparse.ArgumentParser(add_help=False)
    verbosity.add_argument("--verbose", action="store_true", help="Debug logging on stderr")

    common = argparse.ArgumentParser(add_help=False, parents=[verbosity])
    common.add_argument("--alphabet", help="Alphabet symbols for expression text, e.g. abc")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--expr", help="Expression or catalogue name")
    source.add_argument("--dfa", dest="dfa_path", help="DFA text file")

    parser = argparse.ArgumentParser(prog="nerode", description="Regular languages and their Nerode classes.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("compile", parents=[common, source], help="Compile to a minimal DFA")
    p.add_argument("operand", nargs="?", help="Expression or catalogue name")
    p.add_argument("--out", help="Write the DFA text file here")
    p.add_argument("--dot", help="Also write Graphviz source here")

    p = commands.add_parser("match", parents=[common, source], help="Check membership of a word")
    p.add_argument("args", nargs="+", metavar="ARG", help="EXPR WORD, or WORD with --expr/--dfa")

    p = commands.add_parser("min", parents=[common, source], help="Minimize and print the canonical DFA")
    p.add_argument("operand", nargs="?", help="Expression or catalogue name")
    p.add_argument("--out", help="Write the DFA text file here")

    p = commands.add_parser("equiv", parents=[common], help="Compare two languages")
    p.add_argument("exprs", nargs="*", metavar="EXPR")
    p.add_argument("--expr", dest="expr_flags", action="append", default=[], help="Expression (repeatable)")
    p.add_argument("--dfa", dest="dfa_paths", action="append", default=[], help="DFA text file (repeatable)")

    p = commands.add_parser("classes", parents=[common, source], help="Nerode classes and representatives")
    p.add_argument("operand", nargs="?", help="Expression or catalogue name")

    p = commands.add_parser("distinguish", parents=[common, source], help="Shortest distinguishing extension")
    p.add_argument("args", nargs="+", metavar="ARG", help="EXPR X Y, or X Y with --expr/--dfa")

    p = commands.add_parser("evidence", parents=[common, source], help="Class-count series and verdict")
    p.add_argument("operand", nargs="?", help="Catalogue name or expression")
    p.add_argument("--horizons", type=_horizons, help="Comma-separated horizons, e.g. 16,32,64")
    p.add_argument("--csv", action="store_true", help="Print horizon,class_count rows")

    p = commands.add_parser("primes-demo", parents=[common], help="State counts of unions over the first primes")
    p.add_argument("k", nargs="?", type=int, help="Number of primes (default: --max-k)")
    p.add_argument("--max-k", type=int, help="Upper bound on k")
    p.add_argument("--horizons", type=_horizons, help="Horizons for the closing evidence")

    p = commands.add_parser("dot", parents=[common, source], help="Graphviz source for an automaton")
    p.add_argument("operand", nargs="?", help="Expression or catalogue name")
    p.add_argument("--out", help="Write the DOT file here")

    p = commands.add_parser("config", parents=[verbosity], help="Show or save default settings")
    p.add_argument("--alphabet", help="Default alphabet for expressions")
    p.add_argument("--horizons", type=_horizons, help="Default evidence horizons")
    p.add_argument("--max-k", type=int, help="Default primes-demo bound")
    p.add_argument("--workers", type=int, help="Observation-table fill threads")

    return parser


def _single_source(parser: argparse.ArgumentParser, args: argparse.Namespace,
                   positional: Sequence[str], needed: int) -> List[str]:
    """Split positionals into an optional leading expression and `needed` words.

    Sets args.expr when the expression came positionally.
    """
    flagged = args.expr is not None or args.dfa_path is not None
    expected = needed if flagged else needed + 1
    if len(positional) != expected:
        parser.error(f"{args.command}: expected {expected} arguments, got {len(positional)}")
    if not flagged:
        args.expr = positional[0]
        return list(positional[1:])
    return list(positional)


def _operand(args: argparse.Namespace) -> Optional[str]:
    if args.operand is not None and args.expr is not None:
        raise ValueError("Give the expression either positionally or with --expr, not both")
    return args.operand if args.operand is not None else args.expr


def dispatch(parser: argparse.ArgumentParser, args: argparse.Namespace) -> CommandResult:
    command = args.command
    if command == "match":
        (word,) = _single_source(parser, args, args.args, 1)
        return mod.cmd_match(word, expr=args.expr, dfa_path=args.dfa_path, alphabet=args.alphabet)
    if command == "equiv":
        return mod.cmd_equiv(list(args.exprs) + args.expr_flags, args.dfa_paths, alphabet=args.alphabet)
    if command == "distinguish":
        x, y = _single_source(parser, args, args.args, 2)
        return mod.cmd_distinguish(x, y, expr=args.expr, dfa_path=args.dfa_path, alphabet=args.alphabet)
    if command == "primes-demo":
        return mod.cmd_primes_demo(args.k, max_k=args.max_k, horizons=args.horizons)
    if command == "config":
        return mod.cmd_config(args.alphabet, horizons=args.horizons, max_k=args.max_k, workers=args.workers)

    try:
        expr = _operand(args)
    except ValueError as e:
        parser.error(str(e))
    if command == "compile":
        return mod.cmd_compile(expr, alphabet=args.alphabet, out=args.out, dot=args.dot, dfa_path=args.dfa_path)
    if command == "evidence":
        return mod.cmd_evidence(expr, horizons=args.horizons, alphabet=args.alphabet, csv=args.csv,
                                dfa_path=args.dfa_path)
    if command == "min":
        return mod.cmd_min(expr, dfa_path=args.dfa_path, alphabet=args.alphabet, out=args.out)
    if command == "classes":
        return mod.cmd_classes(expr, dfa_path=args.dfa_path, alphabet=args.alphabet)
    if command == "dot":
        return mod.cmd_dot(expr, dfa_path=args.dfa_path, alphabet=args.alphabet, out=args.out)
    parser.error(f"Unknown command {command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    logger.debug("Running %s", args.command)

    result = dispatch(parser, args)
    stream = sys.stderr if result.status == ExitStatus.ERROR else sys.stdout
    stream.write(result.output)
    return int(result.status)


if __name__ == "__main__":
    sys.exit(main())
