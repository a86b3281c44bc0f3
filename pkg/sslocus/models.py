# sslocus/models.py
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import InvalidSpec, LengthMismatch, Violation, ViolationCode
from .utils import is_odd_prime

logger = logging.getLogger(__name__)

MAX_M = 4

# ord_p of the polarization comparison scalar; any integer is legal
PolarizationIndex = int


class SplittingType(str, Enum):
    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True, order=True)
class SignaturePair:
    a: int
    b: int

    @property
    def m(self) -> int:
        return self.a + self.b

    @property
    def is_normalized(self) -> bool:
        return self.a <= self.b

    def normalized(self) -> "SignaturePair":
        """Return the pair with a <= b"""
        return self if self.is_normalized else SignaturePair(self.b, self.a)

    def conjugate(self) -> "SignaturePair":
        return SignaturePair(self.b, self.a)

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class PlaceSpec:
    """One place of the totally real field above p"""
    splitting: SplittingType
    signature: SignaturePair

    @property
    def is_split(self) -> bool:
        return self.splitting is SplittingType.SPLIT

    def __str__(self):
        return f"{self.splitting.value}{self.signature}"


@dataclass(frozen=True)
class GlobalSpec:
    p: int
    places: tuple = ()
    m: Optional[int] = None

    def __post_init__(self):
        # Accept any sequence of places but store a tuple
        object.__setattr__(self, "places", tuple(self.places))
        if self.m is None and self.places:
            object.__setattr__(self, "m", self.places[0].signature.m)

    @property
    def n(self) -> int:
        return len(self.places)


@dataclass(frozen=True)
class SignatureMatching:
    """
    Induced identification of embeddings of E into Qbar and into Qbar_p.
    permutation[i] is the (0-based) global index sent to local index i;
    conjugated[i] swaps the roles of a and b at that index.
    """
    permutation: tuple
    conjugated: tuple

    def __post_init__(self):
        object.__setattr__(self, "permutation", tuple(self.permutation))
        object.__setattr__(self, "conjugated", tuple(bool(c) for c in self.conjugated))
        if len(self.permutation) != len(self.conjugated):
            raise LengthMismatch(
                f"LengthMismatch: permutation has {len(self.permutation)} entries, "
                f"conjugated has {len(self.conjugated)}"
            )
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError(f"Permutation {self.permutation} is not a bijection on 0..{len(self.permutation) - 1}")

    @property
    def n(self) -> int:
        return len(self.permutation)

    @classmethod
    def identity(cls, n: int) -> "SignatureMatching":
        return cls(tuple(range(n)), (False,) * n)


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> list:
        return [v.code for v in self.violations]

    def raise_for_violations(self):
        if self.violations:
            raise InvalidSpec(self.violations)


def validate_spec(spec: GlobalSpec) -> ValidationResult:
    """Check the standing hypotheses; collects every violation rather than stopping at the first"""
    violations = []

    if not is_odd_prime(spec.p):
        violations.append(Violation(ViolationCode.NON_ODD_PRIME, f"p={spec.p} is not an odd prime"))

    if not spec.places:
        violations.append(Violation(ViolationCode.EMPTY_PLACES, "at least one place is required"))

    if spec.m is not None and not 1 <= spec.m <= MAX_M:
        violations.append(Violation(ViolationCode.UNSUPPORTED_M, f"m={spec.m} is outside 1..{MAX_M}"))

    for index, place in enumerate(spec.places):
        sig = place.signature
        if sig.a < 0 or sig.b < 0:
            violations.append(
                Violation(ViolationCode.UNNORMALIZED_SIGNATURE, f"place {index}: signature {sig} has a negative entry")
            )
        elif not sig.is_normalized:
            violations.append(
                Violation(ViolationCode.UNNORMALIZED_SIGNATURE, f"place {index}: signature {sig} has a > b")
            )
        if spec.m is not None and sig.m != spec.m:
            violations.append(
                Violation(ViolationCode.MIXED_SIGNATURE_SUM, f"place {index}: signature {sig} sums to {sig.m}, not m={spec.m}")
            )

    if violations:
        logger.debug("Spec %s rejected: %s", spec, [str(v) for v in violations])
    return ValidationResult(tuple(violations))


def localize_signatures(global_signatures, matching: SignatureMatching) -> list:
    """
    Local signatures at a prime of the reflex field: entry i is the global
    signature at matching.permutation[i], conjugated when flagged, then
    re-normalized so a <= b.
    """
    global_signatures = list(global_signatures)
    if len(global_signatures) != matching.n:
        raise LengthMismatch(
            f"LengthMismatch: {len(global_signatures)} signatures but the matching has length {matching.n}"
        )

    local = []
    for index, source in enumerate(matching.permutation):
        sig = global_signatures[source]
        if matching.conjugated[index]:
            sig = sig.conjugate()
        local.append(sig.normalized())

    return local
