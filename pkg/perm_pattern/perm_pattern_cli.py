"""Perm Pattern command line interface.

Exit codes: 0 YES/success, 1 NO, 2 usage or input error, 3 search
budget exhausted.
"""
import argparse
import sys
from typing import Optional, Sequence

from . import perm_pattern_commands as pp_commands
from .perm_pattern_base import EXIT_BUDGET, EXIT_ERROR
from .perm_pattern_errors import BudgetExhausted


def _add_encode(subparsers):
    parser = subparsers.add_parser(
        'encode', help="Encode graph file as permutation pi_z(G).")
    parser.add_argument('graph_path', metavar='GRAPH')
    parser.add_argument('--z', type=int, default=1)
    parser.add_argument(
        '--out',
        help="Permutation file to write; layout goes to OUT.layout.")
    parser.set_defaults(command_cls=pp_commands.PermPatternEncode)


def _add_match(subparsers):
    parser = subparsers.add_parser(
        'match', help="Decide whether pattern occurs in text.")
    parser.add_argument('pattern_path', metavar='PATTERN')
    parser.add_argument('text_path', metavar='TEXT')
    parser.add_argument(
        '--certificate',
        action='store_true',
        help="Print certificate positions when found.")
    parser.add_argument(
        '--budget',
        type=int,
        help="Search-tree node limit. Defaults to 10^8.")
    parser.set_defaults(command_cls=pp_commands.PermPatternMatch)


def _add_reduce(subparsers):
    parser = subparsers.add_parser(
        'reduce', help="Reduce clique instance (l, G) to pattern matching.")
    parser.add_argument('graph_path', metavar='GRAPH')
    parser.add_argument('--l', type=int, required=True)
    parser.add_argument('--out', help="Instance directory to write.")
    parser.set_defaults(command_cls=pp_commands.PermPatternReduce)


def _add_compose(subparsers):
    parser = subparsers.add_parser(
        'compose', help="Cross-compose equivalent clique instances.")
    parser.add_argument('--l', type=int, required=True)
    parser.add_argument('graph_paths', metavar='GRAPH', nargs='+')
    parser.add_argument('--out', help="Instance directory to write.")
    parser.set_defaults(command_cls=pp_commands.PermPatternCompose)


def _add_extract(subparsers):
    parser = subparsers.add_parser(
        'extract', help="Extract clique from certificate of an instance.")
    parser.add_argument('instance_dir', metavar='INSTANCE_DIR')
    parser.add_argument('certificate_path', metavar='CERTIFICATE')
    parser.set_defaults(command_cls=pp_commands.PermPatternExtract)


def _add_verify_lemma(subparsers):
    parser = subparsers.add_parser(
        'verify-lemma',
        help="Cross-check clique reduction with brute force.")
    parser.add_argument('--max-n', dest='max_n', type=int)
    parser.add_argument('--l', type=int)
    parser.add_argument('--samples', type=int)
    parser.add_argument('--seed', type=int)
    parser.add_argument('--budget', type=int)
    parser.add_argument(
        '--exhaustive',
        action='store_true',
        default=None,
        help="Also check every graph when --max-n is at most 5.")
    parser.set_defaults(command_cls=pp_commands.PermPatternVerifyLemma)


def _add_count_avoiders(subparsers):
    parser = subparsers.add_parser(
        'count-avoiders',
        help="Count permutations of size n avoiding pattern.")
    parser.add_argument('--pattern', required=True)
    parser.add_argument('--n', type=int, required=True)
    parser.set_defaults(command_cls=pp_commands.PermPatternCountAvoiders)


def get_parser() -> argparse.ArgumentParser:
    """Return argument parser with all commands."""
    parser = argparse.ArgumentParser(
        prog='perm-pattern',
        description="Permutation pattern matching and Clique reduction.")
    parser.add_argument('--config', help="INI file with command defaults.")
    parser.add_argument(
        '--log-level',
        dest='log_level',
        help="Logging level (e.g. ERROR, NOTICE, INFO).")
    subparsers = parser.add_subparsers(dest='command', required=True)
    for add in (
        _add_encode,
        _add_match,
        _add_reduce,
        _add_compose,
        _add_extract,
        _add_verify_lemma,
        _add_count_avoiders,
    ):
        add(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run command and return its exit code."""
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # usage error or --help
        return e.code
    kwargs = vars(args)
    command_cls = kwargs.pop('command_cls')
    kwargs.pop('command')
    config_path = kwargs.pop('config')
    log_level = kwargs.pop('log_level')
    try:
        command = command_cls(config_path=config_path, log_level=log_level)
        outcome = command.run(**kwargs)
    except BudgetExhausted as e:
        print("perm-pattern: %s" % e, file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:  # PermPatternError included
        print("perm-pattern: error: %s" % e, file=sys.stderr)
        return EXIT_ERROR
    except MemoryError:
        print("perm-pattern: error: out of memory", file=sys.stderr)
        return EXIT_ERROR
    for line in outcome.lines:
        print(line)
    return outcome.exit_code
