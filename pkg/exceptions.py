"""
Exception hierarchy for the reducibility calculator
"""
from typing import List, Optional


class CalcError(Exception):
    """Base class for every error raised by the calculator"""
    exit_code = 1


# Symbol table

class DuplicateName(CalcError):
    """A symbol name is registered twice"""


class DanglingDual(CalcError):
    """A symbol references a dual that is not registered"""


class TypeDimMismatch(CalcError):
    """A symplectic symbol with odd dimension, or a dual pair of unequal dimension"""


# Parameters

class ExponentRangeError(CalcError, ValueError):
    """Twist exponent outside the open interval ]-1/2, 1/2["""


class BoundaryExponentError(ExponentRangeError):
    """Twist exponent exactly on the boundary +-1/2"""


class DomainError(CalcError, ValueError):
    """A count queried outside the range where it is defined"""


class NotSelfDualInput(CalcError, ValueError):
    """A self-duality type was required but NotSelfDual was given"""


class ClosureViolation(CalcError):
    """A block is missing its dual-and-negated partner"""


class DimensionMismatch(CalcError):
    """The parameter dimension differs from the dimension of the L-group"""


# Mathematically impossible inputs

class InadmissibleParam(CalcError):
    """The signed n1 - n0 bookkeeping leaves {0, 1}: no cuspidal representation has this parameter"""
    exit_code = 2

    def __init__(self, message: str, s0=None):
        super().__init__(message)
        self.s0 = s0


class Inconsistent(CalcError):
    """The reducibility set cannot come from any Jordan data"""
    exit_code = 2

    def __init__(self, message: str, y=None):
        super().__init__(message)
        self.y = y


# Input files and command line

class ParseError(CalcError):
    """Malformed symbol-table or parameter text"""

    def __init__(self, message: str, source: str = "<input>", line: int = 0, column: int = 0):
        self.source = source
        self.line = line
        self.column = column
        super().__init__(f"{source}:{line}:{column}: {message}")


class ValidationError(CalcError):
    """A parameter failed validation; carries every violation found"""

    def __init__(self, violations: List[str], message: Optional[str] = None):
        self.violations = list(violations)
        super().__init__(message or "; ".join(self.violations) or "validation failed")


class UnknownCommand(CalcError):
    """Command name not known to the dispatcher"""


class ConfigError(CalcError):
    """A configuration value could not be interpreted"""
