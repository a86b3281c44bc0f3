# sslocus/decomposition.py
"""
Product geometry of the Rapoport-Zink space at level j and of the
supersingular locus it uniformizes.

The space at level j is the product of its local factors, so its dimension,
component type and intersection combinatorics are assembled from the
local_geometry rows place by place.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from math import comb, factorial
from typing import Optional

from .errors import InconsistentPattern, InvalidClass
from .local_geometry import ComponentVariety, Relation, local_factor_geometry
from .models import GlobalSpec, PolarizationIndex, SignaturePair, SplittingType, validate_spec
from .utils import isomorphism_type

logger = logging.getLogger(__name__)


class GeometryStatus(str, Enum):
    EMPTY = "empty"
    NONEMPTY = "nonempty"


class ReportLevel(str, Enum):
    RZ_SPACE = "rz"
    SHIMURA_SS = "shimura"


@dataclass(frozen=True)
class ComponentProfile:
    curves: int = 0
    surfaces: int = 0
    lines: int = 0
    zero_dim_factors: int = 0

    @property
    def dimension(self) -> int:
        return self.curves + 2 * self.surfaces + self.lines

    @property
    def n(self) -> int:
        return self.curves + self.surfaces + self.lines + self.zero_dim_factors

    @property
    def isomorphism_type(self) -> str:
        return isomorphism_type(self.curves, self.surfaces, self.lines)

    @property
    def identity_class(self) -> "IntersectionClass":
        return IntersectionClass(self.curves, self.surfaces, 0, self.lines)

    @classmethod
    def from_factors(cls, factors) -> "ComponentProfile":
        tally = {variety: 0 for variety in ComponentVariety}
        for factor in factors:
            tally[factor.component_variety] += 1
        return cls(
            curves=tally[ComponentVariety.FERMAT_CURVE],
            surfaces=tally[ComponentVariety.FERMAT_SURFACE],
            lines=tally[ComponentVariety.PROJECTIVE_LINE],
            zero_dim_factors=tally[ComponentVariety.POINT],
        )


@dataclass(frozen=True)
class IntersectionPattern:
    """One relation per place; all-Equal is the component itself"""
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(Relation(r) for r in self.relations))

    @classmethod
    def identity(cls, n: int) -> "IntersectionPattern":
        return cls((Relation.EQUAL,) * n)


@dataclass(frozen=True, order=True)
class IntersectionClass:
    """
    r equal curve coordinates, s1 equal surface coordinates, s2 surface
    coordinates meeting in a line, t equal line coordinates. The intersection
    is isomorphic to C^r x S^s1 x (P^1)^(s2+t).
    """
    r: int = 0
    s1: int = 0
    s2: int = 0
    t: int = 0

    @property
    def isomorphism_type(self) -> str:
        return isomorphism_type(self.r, self.s1, self.s2 + self.t)

    @property
    def dimension(self) -> int:
        return self.r + 2 * self.s1 + self.s2 + self.t

    def check_against(self, profile: ComponentProfile):
        if min(self.r, self.s1, self.s2, self.t) < 0:
            raise InvalidClass(f"InvalidClass: {self} has a negative entry")
        if self.r > profile.curves:
            raise InvalidClass(f"InvalidClass: r={self.r} exceeds d={profile.curves}")
        if self.s1 + self.s2 > profile.surfaces:
            raise InvalidClass(f"InvalidClass: s1+s2={self.s1 + self.s2} exceeds e={profile.surfaces}")
        if self.t > profile.lines:
            raise InvalidClass(f"InvalidClass: t={self.t} exceeds f={profile.lines}")


@dataclass(frozen=True)
class ClassCount:
    intersection_class: IntersectionClass
    per_pattern: Optional[int] = None
    multiplicity: Optional[int] = None


@dataclass(frozen=True)
class GlobalGeometry:
    status: GeometryStatus
    report_level: ReportLevel
    j: Optional[int] = None
    dimension: Optional[int] = None
    profile: Optional[ComponentProfile] = None
    classes: tuple = ()
    factors: tuple = ()

    @property
    def is_empty(self) -> bool:
        return self.status is GeometryStatus.EMPTY

    @property
    def has_counts(self) -> bool:
        return self.report_level is ReportLevel.RZ_SPACE


@dataclass(frozen=True)
class SignatureConstants:
    """The named tallies of the per-m case analysis; recomputed from the places on demand"""
    m: int
    c: int = 0
    d: int = 0
    e: int = 0
    f: int = 0
    g: int = 0
    split: int = 0


@dataclass(frozen=True)
class ClosedForm:
    empty: bool
    dimension: Optional[int] = None


def _validated(spec: GlobalSpec):
    validate_spec(spec).raise_for_violations()


def _factors(spec: GlobalSpec, j: PolarizationIndex) -> list:
    return [local_factor_geometry(place.splitting, place.signature, spec.p, j) for place in spec.places]


def _enumerate_classes(profile: ComponentProfile):
    for r in range(profile.curves + 1):
        for s1 in range(profile.surfaces + 1):
            for s2 in range(profile.surfaces - s1 + 1):
                for t in range(profile.lines + 1):
                    yield IntersectionClass(r, s1, s2, t)


def rz_geometry(spec: GlobalSpec, j: PolarizationIndex) -> GlobalGeometry:
    """Geometry of the Rapoport-Zink space at level j as a product of local factors"""
    _validated(spec)
    factors = _factors(spec, j)

    if any(factor.is_empty for factor in factors):
        logger.debug("Level j=%s of %s is empty", j, spec)
        return GlobalGeometry(GeometryStatus.EMPTY, ReportLevel.RZ_SPACE, j=j, factors=tuple(factors))

    profile = ComponentProfile.from_factors(factors)
    dimension = sum(factor.dimension for factor in factors)

    classes = []
    for cls in _enumerate_classes(profile):
        per_pattern, multiplicity = _class_count(factors, profile, cls)
        classes.append(ClassCount(cls, per_pattern, multiplicity))

    return GlobalGeometry(
        GeometryStatus.NONEMPTY,
        ReportLevel.RZ_SPACE,
        j=j,
        dimension=dimension,
        profile=profile,
        classes=tuple(classes),
        factors=tuple(factors),
    )


def rz_geometry_all_parities(spec: GlobalSpec) -> list:
    """Representatives j=0 and j=1; every other level repeats one of them"""
    return [rz_geometry(spec, j) for j in (0, 1)]


def _pattern_count(factors, pattern: IntersectionPattern) -> int:
    if len(pattern.relations) != len(factors):
        raise InconsistentPattern(
            f"InconsistentPattern: {len(pattern.relations)} relations for {len(factors)} places"
        )
    count = 1
    for index, (factor, relation) in enumerate(zip(factors, pattern.relations)):
        if factor.is_empty:
            raise InconsistentPattern(f"InconsistentPattern: place {index} has an empty local factor")
        if relation is Relation.EQUAL:
            continue
        if factor.component_variety is ComponentVariety.POINT:
            raise InconsistentPattern(
                f"InconsistentPattern: place {index} is zero-dimensional and only admits Equal"
            )
        if relation not in factor.neighbor_counts:
            raise InconsistentPattern(
                f"InconsistentPattern: relation {relation.value} is not possible at place {index} "
                f"({factor.component_variety.value})"
            )
        count *= factor.neighbor_count(relation)
    return count


def neighbor_count_per_pattern(spec: GlobalSpec, j: PolarizationIndex, pattern: IntersectionPattern) -> int:
    """Components X' meeting a fixed component X with exactly this relation at each place"""
    _validated(spec)
    return _pattern_count(_factors(spec, j), pattern)


def _representative_pattern(factors, cls: IntersectionClass) -> IntersectionPattern:
    # Fill each factor type's coordinates in place order: Equal first, then Line, then Point
    budget = {
        ComponentVariety.FERMAT_CURVE: [Relation.EQUAL] * cls.r,
        ComponentVariety.FERMAT_SURFACE: [Relation.EQUAL] * cls.s1 + [Relation.LINE] * cls.s2,
        ComponentVariety.PROJECTIVE_LINE: [Relation.EQUAL] * cls.t,
    }
    relations = []
    for factor in factors:
        queue = budget.get(factor.component_variety)
        if queue is None:
            relations.append(Relation.EQUAL)
        elif queue:
            relations.append(queue.pop(0))
        else:
            relations.append(Relation.POINT)
    return IntersectionPattern(tuple(relations))


def pattern_multiplicity(profile: ComponentProfile, cls: IntersectionClass) -> int:
    """Number of relation patterns whose intersection has the type of cls"""
    e = profile.surfaces
    surfaces = factorial(e) // (factorial(cls.s1) * factorial(cls.s2) * factorial(e - cls.s1 - cls.s2))
    return comb(profile.curves, cls.r) * surfaces * comb(profile.lines, cls.t)


def _class_count(factors, profile, cls):
    cls.check_against(profile)
    return _pattern_count(factors, _representative_pattern(factors, cls)), pattern_multiplicity(profile, cls)


def neighbor_count_per_class(spec: GlobalSpec, j: PolarizationIndex, cls: IntersectionClass) -> tuple:
    """(count for any one pattern of the class, number of patterns in the class)"""
    _validated(spec)
    factors = _factors(spec, j)
    if any(factor.is_empty for factor in factors):
        raise InvalidClass(f"InvalidClass: level j={j} is empty, so it has no intersection classes")
    return _class_count(factors, ComponentProfile.from_factors(factors), cls)


def shimura_ss_geometry(spec: GlobalSpec) -> GlobalGeometry:
    """
    Supersingular locus: uniformized by the Rapoport-Zink space, locally
    isomorphic to it, so it carries the same dimension, component type and
    intersection classes. Counts are dropped because the arithmetic quotient
    can identify components.
    """
    _validated(spec)
    geometries = rz_geometry_all_parities(spec)
    for geometry in geometries:
        if not geometry.is_empty:
            classes = tuple(ClassCount(entry.intersection_class) for entry in geometry.classes)
            return replace(geometry, report_level=ReportLevel.SHIMURA_SS, j=None, classes=classes)
    return replace(geometries[0], report_level=ReportLevel.SHIMURA_SS, j=None)


def signature_constants(spec: GlobalSpec) -> SignatureConstants:
    def tally(splitting, a, b):
        return sum(1 for place in spec.places if place.splitting is splitting and place.signature == SignaturePair(a, b))

    split = sum(1 for place in spec.places if place.is_split)
    inert, split_t = SplittingType.INERT, SplittingType.SPLIT

    if spec.m == 2:
        return SignatureConstants(
            m=2, c=tally(split_t, 0, 2), d=tally(split_t, 1, 1), e=tally(inert, 0, 2), f=tally(inert, 1, 1), split=split
        )
    if spec.m == 3:
        c = sum(1 for place in spec.places if place.signature == SignaturePair(1, 2))
        return SignatureConstants(m=3, c=c, split=split)
    if spec.m == 4:
        f = tally(split_t, 2, 2)
        return SignatureConstants(
            m=4, c=tally(inert, 0, 4), d=tally(inert, 1, 3), e=tally(inert, 2, 2), f=f, g=split - f, split=split
        )
    return SignatureConstants(m=spec.m, split=split)


def closed_form_geometry(spec: GlobalSpec, j: PolarizationIndex) -> ClosedForm:
    """Emptiness and dimension straight from the per-m case rules"""
    _validated(spec)
    k = signature_constants(spec)
    j_odd = j % 2 == 1
    if spec.m == 1:
        return ClosedForm(True) if k.split or j_odd else ClosedForm(False, 0)
    if spec.m == 2:
        return ClosedForm(True) if k.c else ClosedForm(False, 0)
    if spec.m == 3:
        return ClosedForm(True) if k.split or j_odd else ClosedForm(False, k.c)
    return ClosedForm(True) if k.g else ClosedForm(False, k.d + 2 * k.e + k.f)


def closed_form_neighbor_count(spec: GlobalSpec, j: PolarizationIndex, cls: IntersectionClass) -> int:
    """
    Direct evaluation of the neighbour-count formula for a class. For m=3 the
    number of equal curve coordinates is cls.r.
    """
    if closed_form_geometry(spec, j).empty:
        raise InvalidClass(f"InvalidClass: level j={j} is empty, so it has no intersection classes")
    p = spec.p
    k = signature_constants(spec)
    if spec.m == 4:
        cls.check_against(ComponentProfile(k.d, k.e, k.f, k.c))
        return (
            (p**3 * (p**3 + 1)) ** (k.d - cls.r)
            * ((p**3 + 1) * (p**2 + 1)) ** (k.e - cls.s1 - cls.s2)
            * ((p**3 + 1) * (p + 1)) ** cls.s2
            * (p**2 * (p**2 + 1)) ** (k.f - cls.t)
        )
    if spec.m == 3:
        cls.check_against(ComponentProfile(curves=k.c))
        return (p * (p**3 + 1)) ** (k.c - cls.r)
    cls.check_against(ComponentProfile())
    return 1
