"""
Jordan blocks, a_rho, reducibility points and the n0/n1 bookkeeping.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Set, Union

from data_models import HALF, CuspidalSymbol, GroupForm, GroupKind, ValidationReport, format_rational, is_half_integer
from exceptions import DomainError, InadmissibleParam
from lfactor import eps_prime
from multisegment import SpehParam

logger = logging.getLogger(__name__)

Symbol = Union[str, CuspidalSymbol]


class ExtKind(Enum):
    FINITE = "finite"
    MINUS_ONE = "minus_one"
    INFINITY = "infinity"


@dataclass(frozen=True)
class ExtNat:
    """A nonnegative integer, or the two extra values -1 and infinity"""
    kind: ExtKind
    value: int = 0

    @classmethod
    def finite(cls, value: int) -> "ExtNat":
        if value < 0:
            raise ValueError("finite values are nonnegative")
        return cls(ExtKind.FINITE, value)

    @classmethod
    def minus_one(cls) -> "ExtNat":
        return cls(ExtKind.MINUS_ONE, -1)

    @classmethod
    def infinity(cls) -> "ExtNat":
        return cls(ExtKind.INFINITY, 0)

    @property
    def is_infinite(self) -> bool:
        return self.kind is ExtKind.INFINITY

    def red_point(self) -> Optional[Fraction]:
        """(a + 1)/2, or None for infinity"""
        if self.is_infinite:
            return None
        return Fraction(self.value + 1, 2)

    def __str__(self):
        if self.kind is ExtKind.INFINITY:
            return "inf"
        return str(self.value)


@dataclass(frozen=True)
class O2nFlags:
    """Only read for the even orthogonal group"""
    so_restriction_irreducible: bool = True


def _resolve(e: SpehParam, rho: Symbol) -> CuspidalSymbol:
    return rho if isinstance(rho, CuspidalSymbol) else e.table[rho]


def jord(e: SpehParam, rho: Symbol, x) -> List[int]:
    """Jord_{rho,x}: sorted multiset of the a with (rho, a, x) in e"""
    name = rho.name if isinstance(rho, CuspidalSymbol) else rho
    x = Fraction(x)
    if not -HALF < x < HALF:
        raise DomainError(f"x={format_rational(x)} outside ]-1/2, 1/2[")
    return sorted(blk.a for blk in e.blocks if blk.sigma == name and blk.x == x)


def a_rho(e: SpehParam, rho: Symbol, form: GroupForm) -> ExtNat:
    """Largest a in Jord_{rho,0}; when empty: -1 or 0 by the L-group type, infinite for non-self-dual rho"""
    rho = _resolve(e, rho)
    sizes = jord(e, rho, 0)
    if sizes:
        return ExtNat.finite(max(sizes))
    if not rho.sd_type.is_self_dual:
        return ExtNat.infinity()
    if rho.sd_type is form.lg_type:
        return ExtNat.minus_one()
    return ExtNat.finite(0)


def n0(e: SpehParam, rho: Symbol, s0, x) -> int:
    """Number of a in Jord_{rho,x} with s0 = x + (a-1)/2"""
    s0, x = Fraction(s0), Fraction(x)
    return sum(1 for a in jord(e, rho, x) if s0 == x + Fraction(a - 1, 2))


def n1(e: SpehParam, rho: Symbol, s0, x, form: GroupForm) -> int:
    """Number of a in Jord_{rho,x} with s0 = x + (a+1)/2; at s0 = 1/2 and x = 0 it is eps'"""
    s0, x = Fraction(s0), Fraction(x)
    if s0 > HALF:
        return sum(1 for a in jord(e, rho, x) if s0 == x + Fraction(a + 1, 2))
    if s0 == HALF and x == 0:
        return eps_prime(_resolve(e, rho), form)
    raise DomainError(f"n1 is defined for s0 > 1/2 (or s0 = 1/2 with x = 0), got s0={format_rational(s0)} x={format_rational(x)}")


def signed_count(e: SpehParam, rho: Symbol, s0) -> int:
    """Sum over x of n1 - n0 at a point s0 > 1/2"""
    rho = _resolve(e, rho)
    s0 = Fraction(s0)
    if s0 <= HALF:
        raise DomainError(f"signed count needs s0 > 1/2, got {format_rational(s0)}")
    total = 0
    for blk in e.blocks:
        if blk.sigma != rho.name:
            continue
        total += int(s0 == blk.x + Fraction(blk.a + 1, 2)) - int(s0 == blk.x + Fraction(blk.a - 1, 2))
    return total


def bookkeeping_points(e: SpehParam, rho: Symbol) -> List[Fraction]:
    """Points s0 > 1/2 where some n0 or n1 can be nonzero"""
    name = rho.name if isinstance(rho, CuspidalSymbol) else rho
    points = set()
    for blk in e.blocks:
        if blk.sigma == name:
            for s in (blk.x + Fraction(blk.a + 1, 2), blk.x + Fraction(blk.a - 1, 2)):
                if s > HALF:
                    points.add(s)
    return sorted(points)


def _special_o2n_branch(rho: CuspidalSymbol, form: GroupForm, flags: O2nFlags) -> bool:
    return form.kind is GroupKind.O_EVEN and rho.dim % 2 == 1 and not flags.so_restriction_irreducible


def half_integer_red(e: SpehParam, rho: Symbol, form: GroupForm) -> List[Fraction]:
    """The single reducibility point in (1/2)Z, or none for a non-self-dual rho"""
    rho = _resolve(e, rho)
    sizes = jord(e, rho, 0)
    if sizes:
        return [Fraction(max(sizes) + 1, 2)]
    if rho.sd_type.is_self_dual:
        return [HALF] if eps_prime(rho, form) else [Fraction(0)]
    return []


def red_points(e: SpehParam, rho: Symbol, form: GroupForm, flags: Optional[O2nFlags] = None) -> List[Fraction]:
    """Red_rho(pi0) as a sorted list"""
    flags = flags or O2nFlags()
    rho = _resolve(e, rho)
    if _special_o2n_branch(rho, form, flags):
        return [Fraction(0)] if rho.sd_type.is_self_dual else []

    points: Set[Fraction] = set(half_integer_red(e, rho, form))
    for s0 in bookkeeping_points(e, rho):
        value = signed_count(e, rho, s0)
        if value not in (0, 1):
            logger.debug("inadmissible: signed count %d at s0=%s for %s", value, format_rational(s0), rho.name)
            raise InadmissibleParam(f"signed count {value} at s0={format_rational(s0)} for {rho.name}", s0=s0)
        if value == 1 and not is_half_integer(s0):
            points.add(s0)
    return sorted(points)


def irr_at(e: SpehParam, rho: Symbol, form: GroupForm, s0, flags: Optional[O2nFlags] = None) -> int:
    """1 when rho|.|^s0 x pi0 reduces, else 0"""
    s0 = Fraction(s0)
    if s0 < 0:
        raise DomainError(f"reducibility is asked for s0 >= 0, got {format_rational(s0)}")
    return int(s0 in red_points(e, rho, form, flags))


def closed_form_red(e: SpehParam, rho: Symbol, form: GroupForm) -> List[Fraction]:
    """{(a_rho + 1)/2}, empty when a_rho is infinite"""
    point = a_rho(e, rho, form).red_point()
    return [] if point is None else [point]


def validate_jord(e: SpehParam, rho: Symbol, form: GroupForm) -> ValidationReport:
    """No repeats, no gaps, the right parity and a self-dual rho"""
    rho = _resolve(e, rho)
    report = ValidationReport(f"jord {rho.name}")
    sizes = jord(e, rho, 0)
    if not sizes:
        return report

    present = set(sizes)
    for a in sorted(present):
        if sizes.count(a) > 1:
            report.add("multiplicity", f"{a} occurs {sizes.count(a)} times in Jord_{{{rho.name},0}}", f"a={a}")
    for a in sorted(present):
        if a > 2 and a - 2 not in present:
            report.add("gap", f"{a} present but {a - 2} missing", f"a={a}")

    if not rho.sd_type.is_self_dual:
        report.add("parity", f"{rho.name} is not self-dual but Jord_{{{rho.name},0}} is nonempty")
    elif eps_prime(rho, form):
        odd = sorted(a for a in present if a % 2)
        if odd:
            report.add("parity", f"expected even sizes ({rho.sd_type.value} vs {form.lg_type.value} L-group), found {odd}")
    else:
        even = sorted(a for a in present if a % 2 == 0)
        if even:
            report.add("parity", f"expected odd sizes ({rho.sd_type.value} vs {form.lg_type.value} L-group), found {even}")
    return report


def consistency_check(e: SpehParam, rho: Symbol, form: GroupForm, flags: Optional[O2nFlags] = None) -> ValidationReport:
    """Check the n0 = n1 - irr identities and the telescoping sum on the candidate points"""
    flags = flags or O2nFlags()
    rho = _resolve(e, rho)
    report = ValidationReport(f"consistency {rho.name}")
    try:
        red = set(red_points(e, rho, form, flags))
    except InadmissibleParam as exc:
        where = f"s0={format_rational(exc.s0)}" if exc.s0 is not None else None
        report.add("admissibility", str(exc), where)
        return report

    if _special_o2n_branch(rho, form, flags):
        report.note(f"{rho.name}: O(2n) branch with reducible SO restriction, identities not checked")
        return report

    def irr(s) -> int:
        return int(Fraction(s) in red)

    eps = eps_prime(rho, form)
    upper = set(bookkeeping_points(e, rho)) | {s for s in red if s > HALF}
    for s0 in sorted(upper):
        value = signed_count(e, rho, s0)
        if value != irr(s0):
            report.add("n1-n0=irr", f"sum of n1 - n0 is {value} but irr is {irr(s0)}", f"s0={format_rational(s0)}")

    left = n0(e, rho, HALF, 0)
    right = n1(e, rho, HALF, 0, form) - irr(HALF)
    if left != right:
        report.add("n0=n1-irr", f"n0={left} but n1 - irr = {right}", "s0=1/2")

    total = n0(e, rho, 0, 0) + irr(0) + eps
    expected = 1 if rho.sd_type.is_self_dual else 0
    if total != expected:
        report.add("s=0 relation", f"n0(0) + irr(0) + eps' = {total}, expected {expected}", "s0=0")

    if all(blk.x == 0 for blk in e.blocks if blk.sigma == rho.name):
        top = max([s for s in upper] + [Fraction(1)])
        s0 = HALF
        while s0 <= top + 1:
            tail = sum(irr(s) for s in red if s >= s0 and (s - s0).denominator == 1)
            count = n1(e, rho, s0, 0, form)
            if tail != count:
                report.add("telescoping", f"sum of irr(s0 + k) is {tail} but n1 is {count}", f"s0={format_rational(s0)}")
            s0 += HALF
    return report
