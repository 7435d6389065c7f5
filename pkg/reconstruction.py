"""
Recover the positive-exponent Jordan data from the non-half-integer reducibility points.

Couples (x, a) with x in ]0, 1/2[ are keyed by x + (a+1)/2. Keys are visited in
strictly decreasing order; at key y every couple needed besides the unknown
(x_y, a_y) has a strictly larger key and is therefore already determined.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from data_models import HALF, CuspidalSymbol, format_rational, is_half_integer
from exceptions import InadmissibleParam, Inconsistent
from multisegment import SpehParam

logger = logging.getLogger(__name__)

Couple = Tuple[Fraction, int]


def couple_key(x: Fraction, a: int) -> Fraction:
    """x + (a+1)/2"""
    return x + Fraction(a + 1, 2)


@dataclass(frozen=True)
class RedSet:
    """Non-half-integer reducibility points above 1/2, without multiplicity"""
    values: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = [Fraction(v) for v in self.values]
        for v in values:
            if v <= 0:
                raise ValueError(f"reducibility points are positive, got {format_rational(v)}")
            if is_half_integer(v):
                raise ValueError(f"{format_rational(v)} is a half-integer")
        repeated = sorted(v for v, n in Counter(values).items() if n > 1)
        if repeated:
            raise Inconsistent(f"{format_rational(repeated[0])} occurs more than once", y=repeated[0])
        object.__setattr__(self, "values", tuple(sorted(values)))

    def __contains__(self, y) -> bool:
        return Fraction(y) in self.values

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class EPrime:
    """Multiset of couples (x, a), x in ]0, 1/2[, sorted by key"""
    entries: Tuple[Tuple[Fraction, int, int], ...] = ()

    @classmethod
    def from_counter(cls, counts: Counter) -> "EPrime":
        rows = [(x, a, n) for (x, a), n in counts.items() if n > 0]
        rows.sort(key=lambda row: (couple_key(row[0], row[1]), row[0], row[1]))
        return cls(tuple(rows))

    def counter(self) -> Counter:
        return Counter({(x, a): n for x, a, n in self.entries})

    def __len__(self):
        return sum(n for _, _, n in self.entries)

    def lines(self) -> List[str]:
        return [f"({format_rational(x)}, {a}) * {n}" for x, a, n in self.entries]


def red_multiset(e: SpehParam, rho: Union[str, CuspidalSymbol]) -> RedSet:
    """{x + (a+1)/2} minus {x + (a-1)/2} over the x != 0 blocks of rho, above 1/2"""
    name = rho.name if isinstance(rho, CuspidalSymbol) else rho
    signed = Counter()
    for blk in e.blocks:
        if blk.sigma != name or blk.x == 0:
            continue
        signed[blk.x + Fraction(blk.a + 1, 2)] += 1
        signed[blk.x + Fraction(blk.a - 1, 2)] -= 1

    values = []
    for y, count in sorted(signed.items()):
        if y <= HALF or count == 0:
            continue
        if count < 0 or count > 1:
            raise InadmissibleParam(f"multiplicity {count} at {format_rational(y)} for {name}", s0=y)
        values.append(y)
    return RedSet(tuple(values))


def _x_for_key(y: Fraction) -> Fraction:
    """The representative of y modulo 1/2 inside ]0, 1/2["""
    return y - Fraction(math.floor(2 * y), 2)


def reconstruct(E: Union[RedSet, Iterable[Fraction]]) -> EPrime:
    """Rebuild the twisted Jordan couples from a reducibility multiset"""
    if not isinstance(E, RedSet):
        E = RedSet(tuple(E))

    known: Counter = Counter()
    pending = set(E.values)
    last = None

    def lookup(x: Fraction, a: int, y: Fraction) -> int:
        if a < 1:
            return 0
        assert couple_key(x, a) > y, "lookup of a couple that is not yet determined"
        return known[(x, a)]

    while pending:
        y = max(pending)
        pending.discard(y)
        assert last is None or y < last, "keys must be visited in decreasing order"
        last = y

        if y <= HALF:
            raise Inconsistent(f"{format_rational(y)} lies below 1/2 where no couple can produce it", y=y)

        x_y = _x_for_key(y)
        a_y = math.floor(2 * y) - 1
        mirror = HALF - x_y

        m_minus = lookup(x_y, a_y + 2, y) + lookup(mirror, a_y + 3, y)
        m_plus_known = lookup(mirror, a_y + 1, y)
        remainder = int(y in E) + m_minus - m_plus_known
        logger.debug("key %s: x_y=%s a_y=%d m_minus=%d known plus=%d remainder=%d",
                     y, x_y, a_y, m_minus, m_plus_known, remainder)

        if remainder < 0:
            raise Inconsistent(f"negative multiplicity {remainder} at {format_rational(y)}", y=y)
        if remainder == 0:
            continue
        if a_y < 1:
            raise Inconsistent(f"{format_rational(y)} needs a couple with a = {a_y}", y=y)

        known[(x_y, a_y)] += remainder
        for derived in (y - 1, y - 2 * x_y, y - 2 * x_y - 1):
            if derived > HALF:
                pending.add(derived)

    return EPrime.from_counter(known)


def reconstruct_jord(E: Union[RedSet, Iterable[Fraction]]) -> Dict[Fraction, List[int]]:
    """Jord_{rho,x} for every x != 0, the negative side by symmetry"""
    result: Dict[Fraction, List[int]] = {}
    for x, a, n in reconstruct(E).entries:
        for sign_x in (x, -x):
            result.setdefault(sign_x, []).extend([a] * n)
    return {x: sorted(sizes) for x, sizes in sorted(result.items())}


def roundtrip_check(e: SpehParam, rho: Union[str, CuspidalSymbol]) -> bool:
    """reconstruct(red_multiset(e)) gives back the couples (x, a) of e with x > 0"""
    name = rho.name if isinstance(rho, CuspidalSymbol) else rho
    expected = Counter((blk.x, blk.a) for blk in e.blocks if blk.sigma == name and blk.x > 0)
    return reconstruct(red_multiset(e, name)).counter() == expected
