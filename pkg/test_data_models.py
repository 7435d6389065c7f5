from fractions import Fraction

import pytest

from data_models import (HALF, CuspidalSymbol, GroupForm, GroupKind, RKind, SelfDualType, SymbolTable,
                         ValidationReport, build_table, form_for_dimension, format_rational, group_data,
                         is_half_integer, parse_rational, register_batch, register_symbol)
from exceptions import DanglingDual, DuplicateName, TypeDimMismatch


def test_parse_rational_accepts_fractions_and_integers():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-1/4") == Fraction(-1, 4)
    assert parse_rational("2") == 2
    assert parse_rational("6/8") == Fraction(3, 4)


@pytest.mark.parametrize("text", ["0.25", "1/0", "1 /2", "", "a/b", "1/-2"])
def test_parse_rational_rejects_other_forms(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_is_lowest_terms():
    assert format_rational(Fraction(6, 8)) == "3/4"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_half_integers():
    assert is_half_integer(HALF)
    assert is_half_integer(Fraction(3))
    assert is_half_integer(Fraction(-5, 2))
    assert not is_half_integer(Fraction(3, 4))
    assert not is_half_integer(Fraction(1, 3))


def test_register_self_dual_symplectic():
    table = register_symbol(SymbolTable(), CuspidalSymbol("rho", 2, "rho", SelfDualType.SYMPLECTIC))
    assert table.is_self_dual("rho")
    assert table.sd_type("rho") is SelfDualType.SYMPLECTIC


def test_symplectic_of_odd_dimension_is_rejected():
    with pytest.raises(TypeDimMismatch):
        CuspidalSymbol("tau", 1, "tau", SelfDualType.SYMPLECTIC)


def test_missing_dual_is_dangling():
    with pytest.raises(DanglingDual):
        register_symbol(SymbolTable(), CuspidalSymbol("sigma", 3, "sigma*", SelfDualType.NOT_SELF_DUAL))


def test_self_dual_type_requires_own_dual():
    with pytest.raises(DanglingDual):
        CuspidalSymbol("rho", 1, "other", SelfDualType.ORTHOGONAL)


def test_self_duality_follows_the_type():
    assert CuspidalSymbol("rho", 1, "rho", SelfDualType.ORTHOGONAL).is_self_dual
    assert not CuspidalSymbol("sigma", 3, "sigma*").is_self_dual
    with pytest.raises(DanglingDual):
        CuspidalSymbol("sigma", 3, "sigma")


def test_batch_registers_dual_pairs():
    table = register_batch(SymbolTable(), [
        CuspidalSymbol("sigma", 3, "sigma*"),
        CuspidalSymbol("sigma*", 3, "sigma"),
    ])
    assert table.dual("sigma") == "sigma*"
    assert table.dual(table.dual("sigma")) == "sigma"
    assert table.is_closed()


def test_dual_pair_of_unequal_dimension():
    with pytest.raises(TypeDimMismatch):
        build_table([CuspidalSymbol("sigma", 3, "sigma*"), CuspidalSymbol("sigma*", 2, "sigma")])


def test_duplicate_names():
    rho = CuspidalSymbol("rho", 1, "rho", SelfDualType.ORTHOGONAL)
    with pytest.raises(DuplicateName):
        build_table([rho, rho])
    with pytest.raises(DuplicateName):
        register_symbol(build_table([rho]), rho)


def test_group_data_sp():
    data = group_data(GroupForm(GroupKind.SP, 3))
    assert (data.epsilon, data.lg_type, data.lg_dim, data.r_kind) == (1, SelfDualType.ORTHOGONAL, 7, RKind.WEDGE2)


def test_group_data_so_odd():
    data = group_data(GroupForm(GroupKind.SO_ODD, 2))
    assert (data.epsilon, data.lg_type, data.lg_dim, data.r_kind) == (0, SelfDualType.SYMPLECTIC, 4, RKind.SYM2)


def test_group_data_o_even_rank_zero():
    data = group_data(GroupForm(GroupKind.O_EVEN, 0))
    assert (data.epsilon, data.lg_type, data.lg_dim, data.r_kind) == (0, SelfDualType.ORTHOGONAL, 0, RKind.WEDGE2)


@pytest.mark.parametrize("kind", list(GroupKind))
@pytest.mark.parametrize("n", range(5))
def test_group_invariants(kind, n):
    form = GroupForm(kind, n)
    assert (form.r_kind is RKind.SYM2) == (form.lg_type is SelfDualType.SYMPLECTIC)
    assert (form.lg_dim % 2 == 1) == (kind is GroupKind.SP)


def test_form_for_dimension():
    assert form_for_dimension(7) == GroupForm(GroupKind.SP, 3)
    assert form_for_dimension(4, GroupKind.SO_ODD) == GroupForm(GroupKind.SO_ODD, 2)
    with pytest.raises(ValueError):
        form_for_dimension(4, GroupKind.SP)


def test_report_lines():
    report = ValidationReport("parameter")
    assert report.ok
    assert report.lines() == ["parameter: ok"]
    report.add("symmetry", "missing partner", "(rho,1,1/4)")
    assert not report.ok
    assert report.checks_failed() == ["symmetry"]
    assert report.lines() == ["parameter: FAILED", "  - symmetry at (rho,1,1/4): missing partner"]
