"""
Seeded random parameters for the property tests and the demo. Every generator
takes a `random.Random` stream `rng` so corpora are reproducible.
"""
import logging
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from data_models import CuspidalSymbol, GroupForm, GroupKind, SelfDualType, SymbolTable, build_table, form_for_dimension
from exceptions import InadmissibleParam
from lfactor import eps_prime
from multisegment import ABlock, AParam, SpehBlock, SpehParam, dimension, langlands_quotient
from reconstruction import red_multiset

logger = logging.getLogger(__name__)

EXPONENTS = (Fraction(0), Fraction(1, 4), Fraction(-1, 4), Fraction(1, 3), Fraction(-1, 3))
MUTATIONS = ("duplicate", "gap", "parity", "not-self-dual")


def default_table() -> SymbolTable:
    return build_table([
        CuspidalSymbol("rho1", 1, "rho1", SelfDualType.ORTHOGONAL),
        CuspidalSymbol("rho2", 2, "rho2", SelfDualType.SYMPLECTIC),
        CuspidalSymbol("tau", 1, "tau_", SelfDualType.NOT_SELF_DUAL),
        CuspidalSymbol("tau_", 1, "tau", SelfDualType.NOT_SELF_DUAL),
    ])


def _closure(table: SymbolTable, sigma: str, bprime: int, b: int, x: Fraction) -> List[ABlock]:
    """The orbit of one block under x -> -x and sigma -> dual(sigma)"""
    dual = table.dual(sigma)
    orbit = {(sigma, x), (sigma, -x), (dual, x), (dual, -x)}
    return [ABlock(name, bprime, b, exp) for name, exp in sorted(orbit)]


def random_aparam(rng: random.Random, table: Optional[SymbolTable] = None, max_blocks: int = 3,
                  max_length: int = 5, exponents: Sequence[Fraction] = EXPONENTS) -> Tuple[AParam, GroupForm]:
    """A symmetric, autodual AParam with the group its dimension fits"""
    table = table or default_table()
    names = table.names()
    blocks: List[ABlock] = []
    for _ in range(rng.randint(1, max_blocks)):
        sigma = rng.choice(names)
        bprime = rng.randint(1, max_length)
        b = rng.randint(1, max_length)
        x = rng.choice(list(exponents))
        blocks.extend(_closure(table, sigma, bprime, b, x))
    p = AParam(tuple(blocks), table)
    even_kind = rng.choice([GroupKind.O_EVEN, GroupKind.SO_ODD])
    return p, form_for_dimension(dimension(p), even_kind)


def _jordan_set(eps: int, top: int) -> List[int]:
    """{1, 3, ..., top} or {2, 4, ..., top}; empty when top < 1"""
    start = 2 if eps else 1
    return list(range(start, top + 1, 2))


def random_cshape(rng: random.Random, table: Optional[SymbolTable] = None, max_top: int = 7,
                  max_tries: int = 1000) -> Tuple[SpehParam, GroupForm]:
    """All-x=0 Speh parameter whose Jordan sets have the right parity, no gaps and no repeats"""
    table = table or default_table()
    self_dual = [sym for sym in table if sym.is_self_dual]
    for attempt in range(1, max_tries + 1):
        kind = rng.choice(list(GroupKind))
        probe = GroupForm(kind, 0)
        blocks = []
        for sym in self_dual:
            eps = eps_prime(sym, probe)
            tops = [t for t in range(0, max_top + 1) if t % 2 == (0 if eps else 1)]
            for a in _jordan_set(eps, rng.choice(tops)):
                blocks.append(SpehBlock(sym.name, a, Fraction(0)))
        e = SpehParam(tuple(blocks), table)
        dim = dimension(e)
        if (dim % 2 == 1) != (kind is GroupKind.SP):
            continue
        logger.debug("C-shape parameter after %d attempt(s)", attempt)
        return e, GroupForm(kind, dim // 2)
    raise RuntimeError(f"no C-shape parameter found in {max_tries} attempts")


def mutate_jord(rng: random.Random, e: SpehParam, rho: str, form: GroupForm,
                kind: Optional[str] = None) -> Tuple[SpehParam, str, str]:
    """Break Jord_{rho,0} in one structural way; returns (mutated, kind, symbol to check)"""
    table = e.table
    sizes = sorted(blk.a for blk in e.blocks if blk.sigma == rho and blk.x == 0)
    if kind is None:
        choices = [k for k in MUTATIONS if k != "duplicate" or sizes]
        if not any(not sym.is_self_dual for sym in table):
            choices.remove("not-self-dual")
        kind = rng.choice(choices)

    added: List[SpehBlock] = []
    target = rho
    if kind == "duplicate":
        added.append(SpehBlock(rho, rng.choice(sizes), Fraction(0)))
    elif kind == "gap":
        # skip the next size of the right parity
        eps = eps_prime(table[rho], form)
        size = max(sizes) + 4 if sizes else (4 if eps else 3)
        added.append(SpehBlock(rho, size, Fraction(0)))
    elif kind == "parity":
        eps = eps_prime(table[rho], form)
        size = max(sizes) + 1 if sizes else (1 if eps else 2)
        added.append(SpehBlock(rho, size, Fraction(0)))
    elif kind == "not-self-dual":
        sym = next(s for s in table if not s.is_self_dual)
        target = sym.name
        a = rng.randint(1, 3)
        added.extend([SpehBlock(sym.name, a, Fraction(0)), SpehBlock(sym.dual, a, Fraction(0))])
    else:
        raise ValueError(f"unknown mutation {kind!r}")
    return SpehParam(e.blocks + tuple(added), table), kind, target


def is_admissible(e: SpehParam) -> bool:
    try:
        for name in e.table.names():
            red_multiset(e, name)
    except InadmissibleParam:
        return False
    return True


def admissible_corpus(rng: random.Random, count: int, table: Optional[SymbolTable] = None,
                      require_twist: bool = True, max_tries: int = 200000) -> List[Tuple[SpehParam, GroupForm]]:
    """Langlands quotients of random parameters, rejection-sampled on admissibility"""
    table = table or default_table()
    corpus = []
    rejected = 0
    for _ in range(max_tries):
        if len(corpus) >= count:
            break
        p, form = random_aparam(rng, table)
        e = langlands_quotient(p)
        if require_twist and all(blk.x == 0 for blk in e.blocks):
            rejected += 1
            continue
        if not is_admissible(e):
            rejected += 1
            continue
        corpus.append((e, form))
    logger.debug("admissible corpus: %d kept, %d rejected", len(corpus), rejected)
    if len(corpus) < count:
        raise RuntimeError(f"only {len(corpus)} admissible parameters in {max_tries} attempts")
    return corpus
