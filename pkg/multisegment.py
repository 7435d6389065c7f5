"""
Parameter multisets, cuspidal supports and the passage from the Arthur-type
parameter to the Langlands quotient and its Steinberg reading.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from data_models import (HALF, GroupForm, SymbolTable, ValidationReport, format_rational)
from exceptions import BoundaryExponentError, ExponentRangeError

logger = logging.getLogger(__name__)


def check_exponent(x) -> Fraction:
    """Return x as a Fraction, enforcing -1/2 < x < 1/2"""
    x = Fraction(x)
    if abs(x) == HALF:
        raise BoundaryExponentError(f"exponent {format_rational(x)} lies on the boundary of ]-1/2, 1/2[")
    if abs(x) > HALF:
        raise ExponentRangeError(f"exponent {format_rational(x)} lies outside ]-1/2, 1/2[")
    return x


def _check_length(name: str, value: int) -> int:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class ABlock:
    """pi(St(sigma, b'), b) twisted by |.|^x"""
    sigma: str
    bprime: int
    b: int
    x: Fraction

    def __post_init__(self):
        _check_length("bprime", self.bprime)
        _check_length("b", self.b)
        object.__setattr__(self, "x", check_exponent(self.x))

    def mirror(self, dual: str) -> "ABlock":
        return ABlock(dual, self.bprime, self.b, -self.x)

    def negate(self) -> "ABlock":
        return ABlock(self.sigma, self.bprime, self.b, -self.x)


@dataclass(frozen=True, order=True)
class SpehBlock:
    """The Speh module pi(sigma, a) twisted by |.|^x"""
    sigma: str
    a: int
    x: Fraction

    def __post_init__(self):
        _check_length("a", self.a)
        object.__setattr__(self, "x", check_exponent(self.x))

    def mirror(self, dual: str) -> "SpehBlock":
        return SpehBlock(dual, self.a, -self.x)

    def negate(self) -> "SpehBlock":
        return SpehBlock(self.sigma, self.a, -self.x)

    @property
    def top(self) -> Fraction:
        """x + (a-1)/2, the largest exponent of the support"""
        return self.x + Fraction(self.a - 1, 2)


@dataclass(frozen=True, order=True)
class SteinbergBlock:
    """St(sigma, a) twisted by |.|^x"""
    sigma: str
    a: int
    x: Fraction

    @property
    def top(self) -> Fraction:
        return self.x + Fraction(self.a - 1, 2)


@dataclass(frozen=True)
class AParam:
    """Multiset of ABlocks; blocks are kept in canonical sorted order"""
    blocks: Tuple[ABlock, ...]
    table: SymbolTable = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def counts(self) -> Counter:
        return Counter(self.blocks)


@dataclass(frozen=True)
class SpehParam:
    """Multiset of SpehBlocks (the E0 data)"""
    blocks: Tuple[SpehBlock, ...]
    table: SymbolTable = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def counts(self) -> Counter:
        return Counter(self.blocks)

    def blocks_of(self, sigma: str) -> List[SpehBlock]:
        return [blk for blk in self.blocks if blk.sigma == sigma]


Param = Union[AParam, SpehParam]


@dataclass(frozen=True)
class Support:
    """Multiset of (symbol, exponent) pairs in canonical sorted form"""
    entries: Tuple[Tuple[str, Fraction, int], ...] = ()

    @classmethod
    def from_counter(cls, counts: Counter) -> "Support":
        return cls(tuple(sorted((sigma, exp, n) for (sigma, exp), n in counts.items() if n > 0)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, Fraction]]) -> "Support":
        return cls.from_counter(Counter((sigma, Fraction(exp)) for sigma, exp in pairs))

    def counter(self) -> Counter:
        return Counter({(sigma, exp): n for sigma, exp, n in self.entries})

    def count(self, sigma: str, s0) -> int:
        s0 = Fraction(s0)
        for name, exp, n in self.entries:
            if name == sigma and exp == s0:
                return n
        return 0

    def __len__(self):
        return sum(n for _, _, n in self.entries)

    def items(self) -> List[Tuple[str, Fraction, int]]:
        return list(self.entries)


def symmetric_progression(length: int) -> List[Fraction]:
    """-(length-1)/2, ..., (length-1)/2 in steps of 1"""
    return [Fraction(length - 1, 2) * -1 + k for k in range(length)]


def speh_support(sigma: str, a: int, x) -> Support:
    """Support of the Speh block (sigma, a, x): x + (a-1)/2 down to x - (a-1)/2"""
    _check_length("a", a)
    x = Fraction(x)
    return Support.from_pairs((sigma, x + Fraction(a - 1, 2) - k) for k in range(a))


def ablock_support(block: ABlock) -> Support:
    """Support of an Arthur block, the b x b' grid of exponents"""
    pairs = [(block.sigma, block.x + i + j)
             for i in symmetric_progression(block.b)
             for j in symmetric_progression(block.bprime)]
    return Support.from_pairs(pairs)


def param_support(p: Param) -> Support:
    """Cuspidal support of a whole parameter, counted with multiplicity"""
    total = Counter()
    for block in p.blocks:
        if isinstance(block, ABlock):
            total += ablock_support(block).counter()
        else:
            total += speh_support(block.sigma, block.a, block.x).counter()
    return Support.from_counter(total)


def multiplicity(sup: Support, sigma: str, s0) -> int:
    return sup.count(sigma, s0)


def decomposition_sizes(b: int, bprime: int) -> List[int]:
    """b + b' - 1 - 2l for l in [0, min(b, b') - 1]"""
    return [b + bprime - 1 - 2 * ell for ell in range(min(b, bprime))]


def langlands_quotient(p: AParam) -> SpehParam:
    """Replace each Arthur block by the Speh blocks of its decomposition sizes"""
    blocks = [SpehBlock(block.sigma, a, block.x)
              for block in p.blocks
              for a in decomposition_sizes(block.b, block.bprime)]
    logger.debug("Langlands quotient: %d Arthur blocks give %d Speh blocks", len(p.blocks), len(blocks))
    return SpehParam(tuple(blocks), p.table)


def l_parameter(e: SpehParam) -> Tuple[SteinbergBlock, ...]:
    """Read each Speh block as the Steinberg block with the same data"""
    return tuple(SteinbergBlock(blk.sigma, blk.a, blk.x) for blk in e.blocks)


def cg_weight_identity(b: int, bprime: int) -> bool:
    """The b x b' weight grid equals the union of the symmetric progressions of the decomposition sizes"""
    _check_length("b", b)
    _check_length("bprime", bprime)
    grid = Counter(i + j for i in symmetric_progression(b) for j in symmetric_progression(bprime))
    tiled = Counter()
    for size in decomposition_sizes(b, bprime):
        tiled.update(symmetric_progression(size))
    return grid == tiled


def dimension(p: Param) -> int:
    """Sum of dim(sigma) times block length"""
    total = 0
    for block in p.blocks:
        dim = p.table.dim(block.sigma)
        if isinstance(block, ABlock):
            total += dim * block.bprime * block.b
        else:
            total += dim * block.a
    return total


def dual_negate(p: Param) -> Param:
    """The image under (sigma, ..., x) -> (sigma*, ..., -x)"""
    blocks = tuple(block.mirror(p.table.dual(block.sigma)) for block in p.blocks)
    return type(p)(blocks, p.table)


def _describe(block) -> str:
    if isinstance(block, ABlock):
        return f"({block.sigma},{block.bprime},{block.b},{format_rational(block.x)})"
    return f"({block.sigma},{block.a},{format_rational(block.x)})"


def _validate_blocks(p: Param, form: Optional[GroupForm], subject: str) -> ValidationReport:
    report = ValidationReport(subject)
    table = p.table
    unknown = sorted({block.sigma for block in p.blocks if block.sigma not in table})
    for name in unknown:
        report.add("symbol", f"{name} is not in the symbol table")
    if unknown:
        return report

    counts = p.counts()
    reported = set()
    for block, count in sorted(counts.items()):
        partner = block.negate()
        pair = frozenset((block, partner))
        if counts.get(partner, 0) != count and pair not in reported:
            reported.add(pair)
            report.add("symmetry",
                       f"{_describe(block)} occurs {count} time(s) but {_describe(partner)} occurs {counts.get(partner, 0)}",
                       _describe(block))

    reported = set()
    for block, count in sorted(counts.items()):
        partner = block.mirror(table.dual(block.sigma))
        pair = frozenset((block, partner))
        if counts.get(partner, 0) != count and pair not in reported:
            reported.add(pair)
            report.add("autoduality",
                       f"{_describe(block)} occurs {count} time(s) but {_describe(partner)} occurs {counts.get(partner, 0)}",
                       _describe(block))

    if form is not None:
        total = dimension(p)
        if total != form.lg_dim:
            report.add("dimension", f"parameter dimension {total} differs from 2n+epsilon = {form.lg_dim} for {form.describe()}")
    return report


def validate_param(p: AParam, form: Optional[GroupForm] = None) -> ValidationReport:
    """Symbol, symmetry, autoduality and (when form is given) dimension checks on an Arthur parameter"""
    return _validate_blocks(p, form, "parameter")


def validate_speh(e: SpehParam, form: Optional[GroupForm] = None) -> ValidationReport:
    """The same checks on a Speh parameter"""
    return _validate_blocks(e, form, "speh parameter")


def jord_all(e: SpehParam, rho: str) -> Dict[Fraction, List[int]]:
    """Every Jordan multiset of rho, keyed by the twist exponent"""
    result: Dict[Fraction, List[int]] = {}
    for blk in e.blocks:
        if blk.sigma == rho:
            result.setdefault(blk.x, []).append(blk.a)
    return {x: sorted(sizes) for x, sizes in sorted(result.items())}
