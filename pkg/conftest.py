"""
Shared fixtures: a small symbol table and parameter builders
"""
from fractions import Fraction

import pytest

import config
from data_models import CuspidalSymbol, GroupForm, GroupKind, SelfDualType, build_table
from generators import default_table
from multisegment import ABlock, AParam, SpehBlock, SpehParam


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test sees the default configuration"""
    for key in config.DEFAULTS:
        monkeypatch.delenv(key, raising=False)
    config.reset_settings()
    yield
    config.reset_settings()


@pytest.fixture
def table():
    """rho1 (dim 1, orthogonal), rho2 (dim 2, symplectic), tau / tau_ (dim 1, dual pair)"""
    return default_table()


@pytest.fixture
def orth2_table():
    """rho orthogonal of dimension 2, sigma / sigma_ a non-self-dual pair of dimension 1"""
    return build_table([
        CuspidalSymbol("rho", 2, "rho", SelfDualType.ORTHOGONAL),
        CuspidalSymbol("sigma", 1, "sigma_", SelfDualType.NOT_SELF_DUAL),
        CuspidalSymbol("sigma_", 1, "sigma", SelfDualType.NOT_SELF_DUAL),
    ])


@pytest.fixture
def speh(table):
    """speh(("rho1", 3, 0), ...) -> SpehParam over the default table"""
    def build(*triples, over=None):
        return SpehParam(tuple(SpehBlock(s, a, Fraction(x)) for s, a, x in triples), over or table)
    return build


@pytest.fixture
def aparam(table):
    def build(*quads, over=None):
        return AParam(tuple(ABlock(s, bp, b, Fraction(x)) for s, bp, b, x in quads), over or table)
    return build


@pytest.fixture
def sp1():
    """Sp(2): L-group SO(3), orthogonal, r = exterior square"""
    return GroupForm(GroupKind.SP, 1)


@pytest.fixture
def so_odd():
    """SO(2n+1) with n = 1: L-group Sp(2), symplectic, r = symmetric square"""
    return GroupForm(GroupKind.SO_ODD, 1)
