"""
Command-line entry point:

    python calc.py <table-file> <param-file> --group sp|so-odd|o-even --n N
                   [--so-irreducible true|false] <command> [command flags]

Exit codes: 0 success, 1 malformed input or failed check, 2 inadmissible or
inconsistent input.
"""
import argparse
import logging
import sys
from typing import List, Optional

from cli import COMMANDS, CalcArgumentParser, load, run
from config import get_log_level, get_so_irreducible_default, parse_bool
from data_models import GroupForm, GroupKind
from exceptions import CalcError
from reducibility import O2nFlags


def create_parser() -> argparse.ArgumentParser:
    parser = CalcArgumentParser(
        prog="calc",
        description="Reducibility points and normalization factors for cuspidal representations of classical groups",
    )
    parser.add_argument("table", help="symbol table file")
    parser.add_argument("param", help="parameter file (block or sblock lines)")
    parser.add_argument("--group", required=True, choices=[kind.value for kind in GroupKind])
    parser.add_argument("--n", required=True, type=int, help="rank n of G(n)")
    parser.add_argument("--so-irreducible", default=None,
                        help="O(2n) only: whether the SO(2n) restriction of pi0 is irreducible")
    parser.add_argument("command", help=f"one of {', '.join(sorted(COMMANDS))}")
    parser.add_argument("rest", nargs=argparse.REMAINDER, help="command flags")
    return parser


def configure_logging():
    """Logs go to stderr so stdout only carries the report"""
    logging.basicConfig(level=get_log_level(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        configure_logging()
        args = create_parser().parse_args(argv)
        if args.so_irreducible is None:
            irreducible = get_so_irreducible_default()
        else:
            irreducible = parse_bool(args.so_irreducible, "--so-irreducible")
        form = GroupForm(GroupKind(args.group), args.n)
        session = load(args.table, args.param, form, O2nFlags(irreducible))
        text, code = run(args.command, session, args.rest)
    except CalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
