# sslocus/errors.py
"""Exceptions raised by sslocus and the violation codes reported by validate_spec"""

from dataclasses import dataclass
from enum import Enum


class ViolationCode(str, Enum):
    NON_ODD_PRIME = "NonOddPrime"
    MIXED_SIGNATURE_SUM = "MixedSignatureSum"
    UNSUPPORTED_M = "UnsupportedM"
    EMPTY_PLACES = "EmptyPlaces"
    UNNORMALIZED_SIGNATURE = "UnnormalizedSignature"


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    message: str

    def __str__(self):
        return f"{self.code.value}: {self.message}"


class SSLocusError(Exception):
    """Base class for every error raised by the package"""


class InvalidSpec(SSLocusError):
    """A GlobalSpec failed validation; carries every violation found"""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations) or "invalid spec")


class NotAnOddPrime(SSLocusError, ValueError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"NotAnOddPrime: {p} is not an odd prime")


class UnsupportedSignature(SSLocusError):
    pass


class LengthMismatch(SSLocusError, ValueError):
    pass


class InconsistentPattern(SSLocusError):
    pass


class InvalidClass(SSLocusError):
    pass


class BoundExceeded(SSLocusError):
    def __init__(self, p, bound):
        self.p = p
        self.bound = bound
        super().__init__(f"BoundExceeded: p={p} is above the verification bound {bound} (raise it with --max-p)")


class SpecFileError(SSLocusError):
    """The spec file could not be read or does not have the expected shape"""


class ConfigError(SSLocusError):
    pass
