import enum
import math
from typing import Iterable, Sequence


class SteinerError(Exception):
    """Base class for errors raised deliberately by steiner_chains."""
    pass


class ValidationError(SteinerError, ValueError):
    """Raised when validation of inputs fails."""
    pass


class InputError(ValidationError):
    """Nonpositive radii or bends, empty chains, malformed documents."""
    pass


class DomainError(ValidationError):
    """The Soddy pair does not support a porism, or a gauge is inconsistent."""
    pass


class RangeError(ValidationError):
    """A radius or bend lies outside the poristic range."""
    pass


class NumericError(SteinerError, ArithmeticError):
    """A quantity that must be real or nonzero is not, beyond tolerance."""
    pass


class PoleError(NumericError):
    pass


class NoSocle(SteinerError):
    """No circle is tangent to all four given circles."""
    pass


class SingularSystem(SteinerError):
    """The socle linear system is rank-deficient."""
    pass


class InfeasibleReason(str, enum.Enum):
    NO_REAL_ROOTS = "NoRealRoots"
    SIGN_PATTERN = "SignPattern"
    PEDOE_NEGATIVE = "PedoeNegative"


class Infeasible(SteinerError):
    """Moment inversion produced no admissible Soddy pair."""

    def __init__(self, reason: InfeasibleReason, message: str = ""):
        self.reason = reason
        super().__init__(f"{reason.value}: {message}" if message else reason.value)


def ensure_non_empty_sequence(name: str, seq: Sequence) -> None:
    if not seq:
        raise InputError(f"Empty sequence: {name}")


def ensure_positive(name: str, values: Iterable[float]) -> None:
    """Reject nonpositive or non-finite entries."""
    for i, value in enumerate(values):
        if not math.isfinite(value) or value <= 0:
            raise InputError(f"{name}[{i}] must be positive and finite, got {value!r}")


def ensure_chain_length(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise InputError(f"Chain length must be an integer >= 3, got {n!r}")


def ensure_quadruple(name: str, values: Sequence[float]) -> None:
    if len(values) != 4:
        raise InputError(f"{name} must contain exactly four values, got {len(values)}")
    ensure_positive(name, values)
