"""
Orders of vanishing of local L-factors and of the normalization factors r^A, r^L.

Convention: L(rho x Pi|.|^x, s) = L(rho x Pi, s + x). The pair L(rho x sigma, s)
of unitary cuspidals has a simple pole exactly at s = 0 when sigma = rho*, and
no zero. A negative order is a pole, a positive order a zero.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Set, Tuple, Union

from data_models import HALF, CuspidalSymbol, GroupForm, RKind, SelfDualType, format_rational
from multisegment import SpehParam, SteinbergBlock, Support, l_parameter, param_support

logger = logging.getLogger(__name__)

Symbol = Union[str, CuspidalSymbol]


class Style(Enum):
    """Arthur-style (Speh reading) or Langlands-style (Steinberg reading)"""
    A = "A"
    L = "L"


@dataclass(frozen=True)
class OrderLedger:
    """Finite-support map from points s0 to nonzero orders"""
    entries: Tuple[Tuple[Fraction, int], ...] = ()

    @classmethod
    def from_mapping(cls, orders: Dict[Fraction, int]) -> "OrderLedger":
        return cls(tuple(sorted((Fraction(s), n) for s, n in orders.items() if n != 0)))

    def get(self, s0) -> int:
        s0 = Fraction(s0)
        for s, n in self.entries:
            if s == s0:
                return n
        return 0

    def points(self) -> List[Fraction]:
        return [s for s, _ in self.entries]

    def poles(self) -> Dict[Fraction, int]:
        return {s: n for s, n in self.entries if n < 0}

    def zeros(self) -> Dict[Fraction, int]:
        return {s: n for s, n in self.entries if n > 0}

    def restrict(self, lower=None, strict: bool = False) -> "OrderLedger":
        if lower is None:
            return self
        lower = Fraction(lower)
        kept = {s: n for s, n in self.entries if (s > lower if strict else s >= lower)}
        return OrderLedger.from_mapping(kept)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def lines(self) -> List[str]:
        return [f"s={format_rational(s)} ord={n}" for s, n in self.entries]


def _name(sym: Symbol) -> str:
    return sym.name if isinstance(sym, CuspidalSymbol) else sym


def _resolve(e: SpehParam, rho: Symbol) -> CuspidalSymbol:
    return rho if isinstance(rho, CuspidalSymbol) else e.table[rho]


@lru_cache(maxsize=2048)
def _support(e: SpehParam) -> Support:
    return param_support(e)


def ord_pair(rho: CuspidalSymbol, sigma: Symbol, u, s0) -> int:
    """Order at s0 of s -> L(rho x sigma|.|^u, s)"""
    if _name(sigma) == rho.dual and Fraction(s0) == -Fraction(u):
        return -1
    return 0


def ord_L_speh(rho: Symbol, e: SpehParam, s0) -> int:
    """Speh L-factor: one pair factor per point of the cuspidal support"""
    rho = _resolve(e, rho)
    total = 0
    for sigma, exp, count in _support(e).entries:
        total += count * ord_pair(rho, sigma, exp, s0)
    return total


def ord_L_steinberg(rho: CuspidalSymbol, blocks: Sequence[SteinbergBlock], s0) -> int:
    """Steinberg L-factor: a single pair factor per block, at its top exponent"""
    return sum(ord_pair(rho, blk.sigma, blk.top, s0) for blk in blocks)


def eps_prime(rho: CuspidalSymbol, form: GroupForm) -> int:
    """1 when L(rho, r, s) has a pole at s = 0"""
    if form.r_kind is RKind.SYM2:
        return int(rho.sd_type is SelfDualType.ORTHOGONAL)
    return int(rho.sd_type is SelfDualType.SYMPLECTIC)


def ord_r_ratio(rho: CuspidalSymbol, form: GroupForm, s0) -> int:
    """Order of L(rho, r, 2s)^-1 L(rho, r, 2s+1) at s0"""
    s0 = Fraction(s0)
    eps = eps_prime(rho, form)
    # L(rho, r, .) has its only real pole at 0
    return eps * (int(s0 == 0) - int(s0 == -HALF))


def ord_rA(rho: Symbol, e: SpehParam, form: GroupForm, s0) -> int:
    """Order at s0 of r^A, assembled from the Speh blocks"""
    rho = _resolve(e, rho)
    s0 = Fraction(s0)
    return ord_L_speh(rho, e, s0) - ord_L_speh(rho, e, s0 + 1) - ord_r_ratio(rho, form, s0)


def ord_rL(rho: Symbol, e: SpehParam, form: GroupForm, s0) -> int:
    """Order at s0 of r^L, assembled from the Steinberg blocks"""
    rho = _resolve(e, rho)
    s0 = Fraction(s0)
    blocks = l_parameter(e)
    return ord_L_steinberg(rho, blocks, s0) - ord_L_steinberg(rho, blocks, s0 + 1) - ord_r_ratio(rho, form, s0)


def ord_r(style: Style, rho: Symbol, e: SpehParam, form: GroupForm, s0) -> int:
    """Dispatch on style"""
    if style is Style.A:
        return ord_rA(rho, e, form, s0)
    return ord_rL(rho, e, form, s0)


def product_order(style: Style, rho: Symbol, e: SpehParam, form: GroupForm, s0) -> int:
    """Order at s0 of r(rho x pi0, s) r(rho* x pi0, -s)"""
    rho = _resolve(e, rho)
    dual = e.table[rho.dual]
    s0 = Fraction(s0)
    return ord_r(style, rho, e, form, s0) + ord_r(style, dual, e, form, -s0)


def _relevant_blocks(e: SpehParam, rho: CuspidalSymbol):
    names = {rho.name, rho.dual}
    return [blk for blk in e.blocks if blk.sigma in names]


def base_candidates(e: SpehParam, rho: Symbol) -> Set[Fraction]:
    """Every point where a term of the assembly can be nonzero"""
    rho = _resolve(e, rho)
    points = {Fraction(0), HALF, -HALF}
    for blk in _relevant_blocks(e, rho):
        for half_len in (Fraction(blk.a - 1, 2), Fraction(blk.a + 1, 2)):
            for sx in (blk.x, -blk.x):
                points.add(sx + half_len)
                points.add(sx - half_len)
    return points


def candidate_points(e: SpehParam, rho: Symbol, radius: int) -> List[Fraction]:
    """The base candidates, their integer translates, cut to [-radius, radius]"""
    bound = Fraction(radius)
    grid = set()
    for point in base_candidates(e, rho):
        for k in range(math.ceil(-bound - point), math.floor(bound - point) + 1):
            grid.add(point + k)
    logger.debug("candidate grid for %s: %d points", _name(rho), len(grid))
    return sorted(grid)


def order_ledger(style: Style, rho: Symbol, e: SpehParam, form: GroupForm,
                 points: Iterable[Fraction]) -> OrderLedger:
    """ord_r over a finite point set"""
    return OrderLedger.from_mapping({s: ord_r(style, rho, e, form, s) for s in points})


def product_ledger(style: Style, rho: Symbol, e: SpehParam, form: GroupForm,
                   points: Iterable[Fraction]) -> OrderLedger:
    """product_order over a finite point set"""
    return OrderLedger.from_mapping({s: product_order(style, rho, e, form, s) for s in points})


def zero_pole_locus(style: Style, rho: Symbol, e: SpehParam, form: GroupForm) -> OrderLedger:
    """Orders of r^style on s0 >= 0; a pole of r^style is a zero of the normalized operator"""
    points = [s for s in base_candidates(e, rho) if s >= 0]
    return order_ledger(style, rho, e, form, points)


def predicted_normalized_zeros(e: SpehParam, rho: Symbol) -> Counter:
    """Points x + (a-1)/2 > 0 over the blocks (rho, a, x), with multiplicity"""
    name = _name(rho)
    return Counter(blk.top for blk in e.blocks if blk.sigma == name and blk.top > 0)


def steinberg_right_half_poles(e: SpehParam, rho: Symbol) -> List[SteinbergBlock]:
    """Steinberg blocks (rho*, 1, x), x < 0: each puts a pole of r^L at s0 = -x > 0"""
    rho = _resolve(e, rho)
    return [blk for blk in l_parameter(e) if blk.sigma == rho.dual and blk.a == 1 and blk.x < 0]
