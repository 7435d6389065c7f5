"""
Text formats for symbol tables and parameter files.

Symbol table, one symbol per line:
    symbol rho dim=1 type=orthogonal dual=rho
    symbol tau dim=1 type=none dual=tau_
Parameter file, either ABlocks or Speh blocks (never both):
    block sigma=rho bprime=1 b=3 x=0
    sblock sigma=rho a=3 x=0
'#' starts a comment. Rationals are written p/q.
"""
import re
from typing import Dict, Iterable, List, Tuple, Union

from data_models import (CuspidalSymbol, SelfDualType, SymbolTable, build_table, format_rational,
                         is_valid_name, parse_rational)
from exceptions import ExponentRangeError, ParseError, ValidationError
from multisegment import ABlock, AParam, SpehBlock, SpehParam

Token = Tuple[str, int]

_TOKEN = re.compile(r"\S+")

_SYMBOL_KEYS = {"dim", "type", "dual"}
_BLOCK_KEYS = {"block": ("sigma", "bprime", "b", "x"), "sblock": ("sigma", "a", "x")}


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _tokens(line: str) -> List[Token]:
    """Tokens with their 1-based column"""
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(_strip_comment(line))]


def _fields(tokens: List[Token], allowed: Iterable[str], source: str, lineno: int) -> Dict[str, Token]:
    allowed = set(allowed)
    fields: Dict[str, Token] = {}
    for text, column in tokens:
        key, sep, value = text.partition("=")
        if not sep or not value:
            raise ParseError(f"expected key=value, got {text!r}", source, lineno, column)
        if key not in allowed:
            raise ParseError(f"unknown key {key!r}", source, lineno, column)
        if key in fields:
            raise ParseError(f"key {key!r} given twice", source, lineno, column)
        fields[key] = (value, column + len(key) + 1)
    return fields


def _int_field(fields: Dict[str, Token], key: str, source: str, lineno: int, column: int) -> int:
    if key not in fields:
        raise ParseError(f"missing {key}=", source, lineno, column)
    value, col = fields[key]
    if not re.fullmatch(r"\d+", value):
        raise ParseError(f"{key} must be a positive integer, got {value!r}", source, lineno, col)
    number = int(value)
    if number < 1:
        raise ParseError(f"{key} must be a positive integer, got {value!r}", source, lineno, col)
    return number


def parse_table(text: str, source: str = "<table>") -> SymbolTable:
    symbols: List[CuspidalSymbol] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        head, column = tokens[0]
        if head != "symbol":
            raise ParseError(f"expected 'symbol', got {head!r}", source, lineno, column)
        if len(tokens) < 2:
            raise ParseError("missing symbol name", source, lineno, column + len(head))
        name, name_col = tokens[1]
        if not is_valid_name(name) or "=" in name:
            raise ParseError(f"invalid symbol name {name!r}", source, lineno, name_col)

        fields = _fields(tokens[2:], _SYMBOL_KEYS, source, lineno)
        dim = _int_field(fields, "dim", source, lineno, column)
        type_text, type_col = fields.get("type", ("none", column))
        try:
            sd_type = SelfDualType(type_text)
        except ValueError:
            raise ParseError(f"type must be symplectic, orthogonal or none, got {type_text!r}", source, lineno, type_col)
        default_dual = name if sd_type.is_self_dual else None
        dual_text, dual_col = fields.get("dual", (default_dual, column))
        if dual_text is None:
            raise ParseError(f"{name}: a symbol of type none needs dual=", source, lineno, column)
        if not is_valid_name(dual_text):
            raise ParseError(f"invalid dual name {dual_text!r}", source, lineno, dual_col)
        symbols.append(CuspidalSymbol(name, dim, dual_text, sd_type))
    return build_table(symbols)


def _exponent(value: str, source: str, lineno: int, column: int):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise ParseError(str(exc), source, lineno, column)


def parse_param(text: str, table: SymbolTable, source: str = "<param>") -> Union[AParam, SpehParam]:
    """Parse a parameter file; exponents on or beyond +-1/2 are validation errors"""
    kind = None
    blocks = []
    range_errors: List[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        head, column = tokens[0]
        if head not in _BLOCK_KEYS:
            raise ParseError(f"expected 'block' or 'sblock', got {head!r}", source, lineno, column)
        if kind is None:
            kind = head
        elif head != kind:
            raise ParseError(f"'{head}' lines cannot be mixed with '{kind}' lines", source, lineno, column)

        fields = _fields(tokens[1:], _BLOCK_KEYS[head], source, lineno)
        if "sigma" not in fields:
            raise ParseError("missing sigma=", source, lineno, column)
        sigma, sigma_col = fields["sigma"]
        if sigma not in table:
            raise ParseError(f"unknown symbol {sigma!r}", source, lineno, sigma_col)
        x_text, x_col = fields.get("x", ("0", column))
        x = _exponent(x_text, source, lineno, x_col)

        try:
            if head == "block":
                bprime = _int_field(fields, "bprime", source, lineno, column)
                b = _int_field(fields, "b", source, lineno, column)
                blocks.append(ABlock(sigma, bprime, b, x))
            else:
                a = _int_field(fields, "a", source, lineno, column)
                blocks.append(SpehBlock(sigma, a, x))
        except ExponentRangeError as exc:
            range_errors.append(f"{source}:{lineno}:{x_col}: {exc}")

    if range_errors:
        raise ValidationError(range_errors)
    if kind == "sblock":
        return SpehParam(tuple(blocks), table)
    return AParam(tuple(blocks), table)


def parse_red_set(text: str) -> List:
    """'3/4 5/4', '{3/4, 5/4}' or '' -> list of rationals"""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    items = [item for item in re.split(r"[\s,]+", body) if item]
    values = []
    for column, item in enumerate(items, start=1):
        try:
            values.append(parse_rational(item))
        except ValueError as exc:
            raise ParseError(str(exc), "<argv>", 1, column)
    return values


def format_table(table: SymbolTable) -> List[str]:
    return [f"symbol {sym.name} dim={sym.dim} type={sym.sd_type.value} dual={sym.dual}"
            for sym in sorted(table, key=lambda s: s.name)]


def format_param(p: Union[AParam, SpehParam]) -> List[str]:
    lines = []
    for blk in p.blocks:
        if isinstance(blk, ABlock):
            lines.append(f"block sigma={blk.sigma} bprime={blk.bprime} b={blk.b} x={format_rational(blk.x)}")
        else:
            lines.append(f"sblock sigma={blk.sigma} a={blk.a} x={format_rational(blk.x)}")
    return sorted(lines)


def format_rational_set(values: Iterable) -> str:
    return "{" + ", ".join(format_rational(v) for v in sorted(values)) + "}"


def read_table(path: str) -> SymbolTable:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_table(handle.read(), source=path)


def read_param(path: str, table: SymbolTable) -> Union[AParam, SpehParam]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_param(handle.read(), table, source=path)
