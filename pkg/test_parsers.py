from fractions import Fraction as F

import pytest

from data_models import SelfDualType
from exceptions import DanglingDual, ParseError, ValidationError
from multisegment import AParam, SpehParam
from parsers import (format_param, format_rational_set, format_table, parse_param, parse_red_set, parse_table,
                     read_param, read_table)

TABLE_TEXT = """
# cuspidal data
symbol rho1 dim=1 type=orthogonal
symbol rho2 dim=2 type=symplectic dual=rho2
symbol tau dim=1 type=none dual=tau_
symbol tau_ dim=1 type=none dual=tau   # dual pair
"""


def test_parse_table():
    table = parse_table(TABLE_TEXT)
    assert table.names() == ["rho1", "rho2", "tau", "tau_"]
    assert table.sd_type("rho1") is SelfDualType.ORTHOGONAL
    assert table.dual("rho1") == "rho1"
    assert table.dual("tau") == "tau_"


def test_format_table_roundtrip():
    table = parse_table(TABLE_TEXT)
    assert parse_table("\n".join(format_table(table))) == table


def test_table_unknown_key():
    with pytest.raises(ParseError) as info:
        parse_table("symbol rho dim=1 kind=orthogonal")
    assert (info.value.line, info.value.column) == (1, 18)


def test_table_bad_type():
    with pytest.raises(ParseError, match="type must be"):
        parse_table("symbol rho dim=1 type=unitary")


def test_table_needs_dual_for_none():
    with pytest.raises(ParseError) as info:
        parse_table("symbol rho dim=1 type=orthogonal\nsymbol tau dim=1")
    assert info.value.line == 2


def test_table_dangling_dual():
    with pytest.raises(DanglingDual):
        parse_table("symbol tau dim=1 type=none dual=tau_")


def test_table_none_type_cannot_be_its_own_dual():
    with pytest.raises(DanglingDual, match="cannot be its own dual"):
        parse_table("symbol t dim=1 type=none dual=t")


def test_parse_speh_param(table):
    e = parse_param("sblock sigma=rho1 a=3 x=0\nsblock sigma=rho1 a=1 x=0  # small\n", table)
    assert isinstance(e, SpehParam)
    assert sorted(blk.a for blk in e.blocks) == [1, 3]


def test_parse_aparam(table):
    p = parse_param("block sigma=rho1 bprime=2 b=2 x=1/4\nblock sigma=rho1 bprime=2 b=2 x=-1/4", table)
    assert isinstance(p, AParam)
    assert {blk.x for blk in p.blocks} == {F(1, 4), F(-1, 4)}


def test_empty_param_is_empty_aparam(table):
    p = parse_param("# nothing\n", table)
    assert isinstance(p, AParam) and p.blocks == ()


def test_mixed_blocks(table):
    with pytest.raises(ParseError, match="cannot be mixed") as info:
        parse_param("sblock sigma=rho1 a=1 x=0\nblock sigma=rho1 bprime=1 b=1 x=0", table)
    assert (info.value.line, info.value.column) == (2, 1)


def test_unknown_symbol(table):
    with pytest.raises(ParseError) as info:
        parse_param("sblock sigma=nope a=1 x=0", table, source="p.txt")
    assert (info.value.source, info.value.line, info.value.column) == ("p.txt", 1, 14)
    assert str(info.value).startswith("p.txt:1:14:")


def test_bad_integer(table):
    with pytest.raises(ParseError, match="positive integer"):
        parse_param("sblock sigma=rho1 a=0 x=0", table)


def test_decimal_exponent(table):
    with pytest.raises(ParseError):
        parse_param("sblock sigma=rho1 a=1 x=0.25", table)


def test_exponents_out_of_range_are_collected(table):
    text = "sblock sigma=rho1 a=1 x=1/2\nsblock sigma=rho1 a=1 x=-3/4"
    with pytest.raises(ValidationError) as info:
        parse_param(text, table)
    assert len(info.value.violations) == 2
    assert info.value.violations[0].startswith("<param>:1:")


def test_format_param_is_sorted(speh):
    e = speh(("rho1", 3, 0), ("rho1", 1, F(-1, 4)), ("rho1", 1, F(1, 4)))
    assert format_param(e) == [
        "sblock sigma=rho1 a=1 x=-1/4",
        "sblock sigma=rho1 a=1 x=1/4",
        "sblock sigma=rho1 a=3 x=0",
    ]


@pytest.mark.parametrize("text", ["3/4 5/4", "{3/4, 5/4}", "5/4,3/4"])
def test_parse_red_set(text):
    assert sorted(parse_red_set(text)) == [F(3, 4), F(5, 4)]


def test_parse_red_set_empty_and_bad():
    assert parse_red_set("{}") == []
    with pytest.raises(ParseError):
        parse_red_set("3/4 x")


def test_format_rational_set():
    assert format_rational_set([F(5, 4), F(1, 2), F(3, 4)]) == "{1/2, 3/4, 5/4}"
    assert format_rational_set([]) == "{}"


def test_read_files(tmp_path):
    table_path = tmp_path / "table.txt"
    param_path = tmp_path / "param.txt"
    table_path.write_text(TABLE_TEXT)
    param_path.write_text("sblock sigma=rho2 a=2 x=0\n")
    table = read_table(str(table_path))
    e = read_param(str(param_path), table)
    assert e.blocks[0].sigma == "rho2"
