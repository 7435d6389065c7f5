"""
The formal parameter attached to a Speh parameter, with the check that it lands
in the L-group and the ellipticity test.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from data_models import GroupForm, SelfDualType, ValidationReport, format_rational
from exceptions import ClosureViolation, DimensionMismatch, NotSelfDualInput
from multisegment import SpehParam, dimension, validate_speh

logger = logging.getLogger(__name__)


class PairingKind(Enum):
    SELF_SYMPLECTIC = "symplectic"
    SELF_ORTHOGONAL = "orthogonal"
    ISOTROPIC = "isotropic"


@dataclass(frozen=True)
class FormalBlock:
    id: int
    sigma: str
    a: int
    x: Fraction
    pairing: PairingKind
    partner: Optional[int] = None

    @property
    def is_self_paired(self) -> bool:
        return self.pairing is not PairingKind.ISOTROPIC

    @property
    def pairing_type(self) -> Optional[SelfDualType]:
        if self.pairing is PairingKind.SELF_SYMPLECTIC:
            return SelfDualType.SYMPLECTIC
        if self.pairing is PairingKind.SELF_ORTHOGONAL:
            return SelfDualType.ORTHOGONAL
        return None


@dataclass(frozen=True)
class FormalParameter:
    blocks: Tuple[FormalBlock, ...]
    form: GroupForm

    def __len__(self):
        return len(self.blocks)

    def isotropic_pairs(self) -> List[Tuple[int, int]]:
        return [(blk.id, blk.partner) for blk in self.blocks
                if blk.pairing is PairingKind.ISOTROPIC and blk.id < blk.partner]

    def self_paired(self) -> List[FormalBlock]:
        return [blk for blk in self.blocks if blk.is_self_paired]


def block_pairing_type(sd: SelfDualType, a: int) -> SelfDualType:
    """Type of the form on sigma (x) Sym^{a-1}: an odd a keeps the type, an even a flips it"""
    if not sd.is_self_dual:
        raise NotSelfDualInput("a pairing type needs a self-dual symbol")
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    return sd if a % 2 else sd.opposite()


def build_parameter(e: SpehParam, form: GroupForm) -> FormalParameter:
    """Pair every block with its dual-and-negated partner; fails exactly where validate_speh or the dimension does"""
    table = e.table
    total = dimension(e)
    if total != form.lg_dim:
        raise DimensionMismatch(f"parameter dimension {total} differs from {form.lg_dim} for {form.describe()}")
    report = validate_speh(e)
    if not report.ok:
        raise ClosureViolation(report.violations[0].render())

    positions: Dict[tuple, List[int]] = {}
    for idx, blk in enumerate(e.blocks):
        positions.setdefault((blk.sigma, blk.a, blk.x), []).append(idx)

    partners: Dict[int, int] = {}
    blocks: List[FormalBlock] = []
    for idx, blk in enumerate(e.blocks):
        sym = table[blk.sigma]
        if blk.x == 0 and sym.is_self_dual:
            kind = (PairingKind.SELF_SYMPLECTIC
                    if block_pairing_type(sym.sd_type, blk.a) is SelfDualType.SYMPLECTIC
                    else PairingKind.SELF_ORTHOGONAL)
            blocks.append(FormalBlock(idx, blk.sigma, blk.a, blk.x, kind))
            continue

        if idx not in partners:
            # the i-th occurrence pairs with the i-th occurrence of the partner key;
            # autoduality guarantees one is left
            partner = next(j for j in positions[(sym.dual, blk.a, -blk.x)] if j != idx and j not in partners)
            partners[idx] = partner
            partners[partner] = idx
        blocks.append(FormalBlock(idx, blk.sigma, blk.a, blk.x, PairingKind.ISOTROPIC, partners[idx]))

    parameter = FormalParameter(tuple(blocks), form)
    logger.debug("formal parameter: %d blocks, %d isotropic pairs", len(blocks), len(parameter.isotropic_pairs()))
    return parameter


def factors_through_LG(p: FormalParameter) -> ValidationReport:
    """Every self-paired block must carry the form type of the L-group; isotropic pairs impose nothing"""
    report = ValidationReport(f"factors through L-group of {p.form.describe()}")
    target = p.form.lg_type
    for blk in p.self_paired():
        if blk.pairing_type is not target:
            report.add("pairing",
                       f"block ({blk.sigma},{blk.a},0) is {blk.pairing_type.value}, L-group is {target.value}",
                       f"block {blk.id}")
    return report


def is_elliptic(e: SpehParam) -> bool:
    return all(blk.x == 0 for blk in e.blocks)


def pairing_table(p: FormalParameter) -> List[Dict[str, object]]:
    """One row per formal block, for rendering and export"""
    rows = []
    for blk in p.blocks:
        rows.append({
            "id": blk.id,
            "sigma": blk.sigma,
            "a": blk.a,
            "x": format_rational(blk.x),
            "pairing": blk.pairing.value,
            "partner": "" if blk.partner is None else blk.partner,
        })
    return rows
