import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from exceptions import DanglingDual, DuplicateName, TypeDimMismatch

# All real parameters (s, s0, x, y) are exact rationals
Rational = Fraction

HALF = Fraction(1, 2)

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")
_NAME_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_*']*$")


def parse_rational(text: str) -> Fraction:
    """Parse `p/q` or an integer; floats and decimals are rejected"""
    text = str(text).strip()
    if not _RATIONAL_PATTERN.match(text):
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}")


def format_rational(q: Fraction) -> str:
    """Lowest terms, no spaces: 3/4, -1/4, 2"""
    return str(Fraction(q))


def is_half_integer(q: Fraction) -> bool:
    """True when the denominator divides 2 (integers included)"""
    return (Fraction(q) * 2).denominator == 1


def is_valid_name(name: str) -> bool:
    return bool(_NAME_PATTERN.match(name))


class SelfDualType(Enum):
    """Which of the exterior or symmetric square L-functions has a pole at 0"""
    SYMPLECTIC = "symplectic"
    ORTHOGONAL = "orthogonal"
    NOT_SELF_DUAL = "none"

    @property
    def is_self_dual(self) -> bool:
        return self is not SelfDualType.NOT_SELF_DUAL

    def opposite(self) -> "SelfDualType":
        if self is SelfDualType.SYMPLECTIC:
            return SelfDualType.ORTHOGONAL
        if self is SelfDualType.ORTHOGONAL:
            return SelfDualType.SYMPLECTIC
        return self


@dataclass(frozen=True)
class CuspidalSymbol:
    """Opaque label for a unitary cuspidal representation of GL(dim, F)"""
    name: str
    dim: int
    dual: str
    sd_type: SelfDualType = SelfDualType.NOT_SELF_DUAL

    def __post_init__(self):
        if self.dim < 1:
            raise TypeDimMismatch(f"{self.name}: dimension must be positive, got {self.dim}")
        if self.sd_type.is_self_dual and self.dual != self.name:
            raise DanglingDual(f"{self.name}: a {self.sd_type.value} symbol is its own dual, not {self.dual}")
        if not self.sd_type.is_self_dual and self.dual == self.name:
            raise DanglingDual(f"{self.name}: a symbol of type none cannot be its own dual")
        if self.sd_type is SelfDualType.SYMPLECTIC and self.dim % 2:
            raise TypeDimMismatch(f"{self.name}: a symplectic symbol needs even dimension, got {self.dim}")

    @property
    def is_self_dual(self) -> bool:
        return self.sd_type.is_self_dual


@dataclass(frozen=True)
class SymbolTable:
    """Registered symbols, closed under taking duals"""
    symbols: Tuple[CuspidalSymbol, ...] = ()
    _index: Dict[str, CuspidalSymbol] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for sym in self.symbols:
            if sym.name in index:
                raise DuplicateName(f"symbol {sym.name} registered twice")
            index[sym.name] = sym
        object.__setattr__(self, "_index", index)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def get(self, name: str) -> Optional[CuspidalSymbol]:
        return self._index.get(name)

    def __getitem__(self, name: str) -> CuspidalSymbol:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown symbol {name}")

    def names(self) -> List[str]:
        return sorted(self._index)

    def dual(self, name: str) -> str:
        return self[name].dual

    def is_self_dual(self, name: str) -> bool:
        return self[name].is_self_dual

    def sd_type(self, name: str) -> SelfDualType:
        return self[name].sd_type

    def dim(self, name: str) -> int:
        return self[name].dim

    def is_closed(self) -> bool:
        return all(sym.dual in self._index and self._index[sym.dual].dual == sym.name for sym in self.symbols)

    def register_batch(self, symbols: Sequence[CuspidalSymbol]) -> "SymbolTable":
        return register_batch(self, symbols)


def _check_dual(sym: CuspidalSymbol, partner: Optional[CuspidalSymbol]):
    if sym.is_self_dual:
        return
    if partner is None:
        raise DanglingDual(f"{sym.name}: dual {sym.dual} is not registered")
    if partner.dim != sym.dim:
        raise TypeDimMismatch(f"{sym.name}: dual {partner.name} has dimension {partner.dim}, expected {sym.dim}")
    if partner.sd_type.is_self_dual or partner.dual != sym.name:
        raise DanglingDual(f"{sym.name}: {partner.name} does not name {sym.name} as its dual")


def register_symbol(table: SymbolTable, sym: CuspidalSymbol,
                    batch: Sequence[CuspidalSymbol] = ()) -> SymbolTable:
    """Return a new table with `sym` added; a non-self-dual dual may come from `batch`"""
    if sym.name in table:
        raise DuplicateName(f"symbol {sym.name} already registered")
    partner = table.get(sym.dual)
    if partner is None:
        partner = next((other for other in batch if other.name == sym.dual), None)
    _check_dual(sym, partner)
    return SymbolTable(table.symbols + (sym,))


def register_batch(table: SymbolTable, symbols: Sequence[CuspidalSymbol]) -> SymbolTable:
    """Register symbols that may reference each other as duals"""
    names = [sym.name for sym in symbols]
    if len(set(names)) != len(names):
        duplicate = next(name for name in names if names.count(name) > 1)
        raise DuplicateName(f"symbol {duplicate} appears twice in one batch")
    for sym in symbols:
        table = register_symbol(table, sym, batch=symbols)
    return table


def build_table(symbols: Iterable[CuspidalSymbol]) -> SymbolTable:
    """Register symbols as one batch"""
    return register_batch(SymbolTable(), list(symbols))


class GroupKind(Enum):
    """Classical group G(n): Sp(2n), SO(2n+1), O(2n)"""
    SP = "sp"
    SO_ODD = "so-odd"
    O_EVEN = "o-even"


class RKind(Enum):
    """The representation r of the L-group on Levi GL(c)"""
    SYM2 = "Sym2"
    WEDGE2 = "Wedge2"


@dataclass(frozen=True)
class GroupData:
    """Derived metadata of a classical group"""
    epsilon: int
    lg_type: SelfDualType
    lg_dim: int
    r_kind: RKind


@dataclass(frozen=True)
class GroupForm:
    """The classical group G(n) with its derived L-group data"""
    kind: GroupKind
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"rank must be nonnegative, got {self.n}")

    @property
    def epsilon(self) -> int:
        return 1 if self.kind is GroupKind.SP else 0

    @property
    def lg_dim(self) -> int:
        return 2 * self.n + self.epsilon

    @property
    def lg_type(self) -> SelfDualType:
        # Sp(2n) -> SO(2n+1, C), O(2n) -> O(2n, C), SO(2n+1) -> Sp(2n, C)
        if self.kind is GroupKind.SO_ODD:
            return SelfDualType.SYMPLECTIC
        return SelfDualType.ORTHOGONAL

    @property
    def r_kind(self) -> RKind:
        return RKind.SYM2 if self.lg_type is SelfDualType.SYMPLECTIC else RKind.WEDGE2

    def describe(self) -> str:
        return f"{self.kind.value} n={self.n}"


def group_data(form: GroupForm) -> GroupData:
    """Derived data of a group form"""
    return GroupData(epsilon=form.epsilon, lg_type=form.lg_type, lg_dim=form.lg_dim, r_kind=form.r_kind)


def form_for_dimension(dim: int, even_kind: GroupKind = GroupKind.O_EVEN) -> GroupForm:
    """The group whose L-group has the given dimension (odd -> Sp, even -> `even_kind`)"""
    if dim % 2:
        return GroupForm(GroupKind.SP, (dim - 1) // 2)
    if even_kind is GroupKind.SP:
        raise ValueError("Sp has an odd-dimensional L-group")
    return GroupForm(even_kind, dim // 2)


@dataclass(frozen=True)
class Violation:
    """One failed check inside a validation report"""
    check: str
    message: str
    location: Optional[str] = None

    def render(self) -> str:
        where = f" at {self.location}" if self.location else ""
        return f"{self.check}{where}: {self.message}"


@dataclass
class ValidationReport:
    """Violations are data: validators collect them instead of raising"""
    subject: str = ""
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, message: str, location: Optional[str] = None):
        self.violations.append(Violation(check, message, location))

    def note(self, message: str):
        self.notes.append(message)

    def extend(self, other: "ValidationReport"):
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)

    def checks_failed(self) -> List[str]:
        return sorted({v.check for v in self.violations})

    def lines(self) -> List[str]:
        header = f"{self.subject}: {'ok' if self.ok else 'FAILED'}" if self.subject else ("ok" if self.ok else "FAILED")
        body = [f"  - {v.render()}" for v in self.violations]
        body += [f"  note: {n}" for n in self.notes]
        return [header] + body
