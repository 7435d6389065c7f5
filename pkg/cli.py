"""
Session loading and command dispatch. Every command is a pure function of the
session and returns its report text with an exit code.
"""
import argparse
import logging
import os
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from config import ensure_dir, get_candidate_radius, get_output_dir
from data_models import GroupForm, SymbolTable, ValidationReport, format_rational, parse_rational
from exceptions import ParseError, UnknownCommand
from lfactor import Style, candidate_points, order_ledger, product_ledger, steinberg_right_half_poles
from lparam import build_parameter, factors_through_LG, is_elliptic, pairing_table
from multisegment import (AParam, SpehParam, jord_all, l_parameter, langlands_quotient, param_support,
                          validate_param, validate_speh)
from parsers import format_param, format_rational_set, parse_red_set, read_param, read_table
from reconstruction import reconstruct, red_multiset
from reducibility import O2nFlags, a_rho, consistency_check, jord, red_points, validate_jord
from reports import ReportWriter, pairing_frame, render, support_frame

logger = logging.getLogger(__name__)

Result = Tuple[str, int]


@dataclass
class Session:
    table: SymbolTable
    param: Union[AParam, SpehParam]
    speh: SpehParam
    form: GroupForm
    flags: O2nFlags = field(default_factory=O2nFlags)
    report: ValidationReport = field(default_factory=ValidationReport)


def make_session(table: SymbolTable, param: Union[AParam, SpehParam], form: GroupForm,
                 flags: Optional[O2nFlags] = None) -> Session:
    """Validate the parameter and attach the report; violations do not abort"""
    if isinstance(param, AParam):
        speh = langlands_quotient(param)
        report = validate_param(param, form)
    else:
        speh = param
        report = validate_speh(param, form)

    for name in table.names():
        for blk in steinberg_right_half_poles(speh, name):
            logger.warning("Steinberg block (%s,1,%s) puts a pole of r^L for %s at s=%s",
                           blk.sigma, format_rational(blk.x), name, format_rational(-blk.x))

    logger.info("session loaded: %d symbols, %d blocks, %s", len(table), len(param), form.describe())
    return Session(table, param, speh, form, flags or O2nFlags(), report)


def load(table_path: str, param_path: str, form: GroupForm, flags: Optional[O2nFlags] = None) -> Session:
    table = read_table(table_path)
    param = read_param(param_path, table)
    return make_session(table, param, form, flags)


class CalcArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting"""

    def error(self, message):
        raise ParseError(message, source="<argv>", line=1, column=0)


def _parser(command: str) -> CalcArgumentParser:
    return CalcArgumentParser(prog=command, add_help=False)


def _rho_option(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--rho", required=required)


def _rho(session: Session, name: str) -> str:
    if name not in session.table:
        raise ParseError(f"unknown symbol {name!r}", source="<argv>", line=1, column=0)
    return name


def cmd_support(session: Session, argv: Sequence[str]) -> Result:
    _parser("support").parse_args(argv)
    return render(support_frame(param_support(session.param))), 0


def cmd_aparam(session: Session, argv: Sequence[str]) -> Result:
    _parser("aparam").parse_args(argv)
    return "\n".join(format_param(session.speh)), 0


def cmd_lparam(session: Session, argv: Sequence[str]) -> Result:
    _parser("lparam").parse_args(argv)
    lines = sorted(f"st sigma={blk.sigma} a={blk.a} x={format_rational(blk.x)}" for blk in l_parameter(session.speh))
    return "\n".join(lines), 0


def cmd_jord(session: Session, argv: Sequence[str]) -> Result:
    parser = _parser("jord")
    _rho_option(parser)
    parser.add_argument("--x")
    args = parser.parse_args(argv)
    name = _rho(session, args.rho)
    if args.x is not None:
        try:
            x = parse_rational(args.x)
        except ValueError as exc:
            raise ParseError(str(exc), source="<argv>", line=1, column=0)
        return f"jord({name}, {format_rational(x)}) = {{{', '.join(map(str, jord(session.speh, name, x)))}}}", 0
    lines = [f"x={format_rational(x)}: {{{', '.join(map(str, sizes))}}}"
             for x, sizes in jord_all(session.speh, name).items()]
    return "\n".join(lines) or "{}", 0


def cmd_red(session: Session, argv: Sequence[str]) -> Result:
    parser = _parser("red")
    _rho_option(parser)
    args = parser.parse_args(argv)
    name = _rho(session, args.rho)
    return f"red = {format_rational_set(red_points(session.speh, name, session.form, session.flags))}", 0


def cmd_arho(session: Session, argv: Sequence[str]) -> Result:
    parser = _parser("arho")
    _rho_option(parser)
    args = parser.parse_args(argv)
    return f"a_rho = {a_rho(session.speh, _rho(session, args.rho), session.form)}", 0


def cmd_norm(session: Session, argv: Sequence[str]) -> Result:
    parser = _parser("norm")
    _rho_option(parser)
    parser.add_argument("--style", choices=[s.value for s in Style], default=Style.A.value)
    parser.add_argument("--product", action="store_true")
    parser.add_argument("--all", action="store_true")
    args = parser.parse_args(argv)
    name = _rho(session, args.rho)
    style = Style(args.style)

    points = candidate_points(session.speh, name, get_candidate_radius())
    if not args.all:
        points = [s for s in points if s >= 0]
    build = product_ledger if args.product else order_ledger
    ledger = build(style, name, session.speh, session.form, points)
    return "\n".join([f"style={style.value} rho={name}"] + ledger.lines()), 0


def cmd_reconstruct(session: Session, argv: Sequence[str]) -> Result:
    parser = _parser("reconstruct")
    _rho_option(parser, required=False)
    parser.add_argument("values", nargs="*")
    args = parser.parse_args(argv)
    if args.rho is not None:
        values = red_multiset(session.speh, _rho(session, args.rho)).values
    else:
        values = parse_red_set(" ".join(args.values))
    try:
        lines = reconstruct(values).lines()
    except ValueError as exc:
        raise ParseError(str(exc), source="<argv>", line=1, column=0)
    return "\n".join(lines) or "{}", 0


def cmd_lgroup(session: Session, argv: Sequence[str]) -> Result:
    _parser("lgroup").parse_args(argv)
    parameter = build_parameter(session.speh, session.form)
    factors = factors_through_LG(parameter)
    lines = [
        f"factors_through_LG: {'yes' if factors.ok else 'no'}",
        f"elliptic: {'yes' if is_elliptic(session.speh) else 'no'}",
        render(pairing_frame(pairing_table(parameter))),
    ]
    lines += [f"  - {v.render()}" for v in factors.violations]
    return "\n".join(lines), 0


def cmd_check(session: Session, argv: Sequence[str]) -> Result:
    _parser("check").parse_args(argv)
    reports = [session.report]
    for name in session.table.names():
        reports.append(validate_jord(session.speh, name, session.form))
        reports.append(consistency_check(session.speh, name, session.form, session.flags))
        for blk in steinberg_right_half_poles(session.speh, name):
            reports[-1].note(f"Steinberg block ({blk.sigma},1,{format_rational(blk.x)}) "
                             f"gives r^L a pole at s={format_rational(-blk.x)}")
    lines = [line for report in reports for line in report.lines()]
    ok = all(report.ok for report in reports)
    lines.append("check: ok" if ok else "check: FAILED")
    return "\n".join(lines), 0 if ok else 1


def cmd_export(session: Session, argv: Sequence[str]) -> Result:
    parser = _parser("export")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)
    path = args.out
    if not os.path.dirname(path):
        path = os.path.join(ensure_dir(get_output_dir()), path)
    writer = ReportWriter(session.speh, session.form, session.flags,
                          support=param_support(session.param), radius=get_candidate_radius())
    return f"exported to {writer.save(path)}", 0


COMMANDS: Dict[str, Callable[[Session, Sequence[str]], Result]] = {
    "support": cmd_support,
    "aparam": cmd_aparam,
    "lparam": cmd_lparam,
    "jord": cmd_jord,
    "red": cmd_red,
    "arho": cmd_arho,
    "norm": cmd_norm,
    "reconstruct": cmd_reconstruct,
    "lgroup": cmd_lgroup,
    "check": cmd_check,
    "export": cmd_export,
}


def run(command: str, session: Session, argv: Sequence[str] = ()) -> Result:
    """Dispatch one command; a parameter that failed validation only reaches `check`"""
    handler = COMMANDS.get(command)
    if handler is None:
        raise UnknownCommand(f"unknown command {command!r}; expected one of {', '.join(sorted(COMMANDS))}")
    if command != "check" and not session.report.ok:
        return "\n".join(session.report.lines()), 1
    logger.debug("running %s %s", command, " ".join(argv))
    return handler(session, list(argv))
