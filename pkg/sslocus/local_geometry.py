# sslocus/local_geometry.py
"""
Geometry of the local factors for m <= 4.

The table holds one declarative row per (splitting, signature) case. Incidence
constants are stored as formulas in p and evaluated exactly on lookup; the
verification oracle diffs against the same rows.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from sympy import Integer, Symbol

from .errors import NotAnOddPrime, UnsupportedSignature
from .models import MAX_M, PolarizationIndex, SignaturePair, SplittingType
from .utils import is_odd_prime, render_count

logger = logging.getLogger(__name__)

P = Symbol("p", integer=True, positive=True)


class ComponentVariety(str, Enum):
    POINT = "point"
    PROJECTIVE_LINE = "P1"
    FERMAT_CURVE = "C"
    FERMAT_SURFACE = "S"

    @property
    def dimension(self) -> int:
        return _VARIETY_DIMENSION[self]

    @property
    def description(self) -> str:
        return _VARIETY_DESCRIPTION[self]


_VARIETY_DIMENSION = {
    ComponentVariety.POINT: 0,
    ComponentVariety.PROJECTIVE_LINE: 1,
    ComponentVariety.FERMAT_CURVE: 1,
    ComponentVariety.FERMAT_SURFACE: 2,
}

_VARIETY_DESCRIPTION = {
    ComponentVariety.POINT: "point",
    ComponentVariety.PROJECTIVE_LINE: "projective line P^1",
    ComponentVariety.FERMAT_CURVE: "Fermat curve x0^(p+1) + x1^(p+1) + x2^(p+1) = 0 in P^2",
    ComponentVariety.FERMAT_SURFACE: "Fermat surface x0^(p+1) + x1^(p+1) + x2^(p+1) + x3^(p+1) = 0 in P^3",
}


class Relation(str, Enum):
    EQUAL = "equal"
    POINT = "point"
    LINE = "line"


class Status(str, Enum):
    EMPTY = "empty"
    ZERO_DIMENSIONAL = "zero-dimensional"
    POSITIVE_DIMENSIONAL = "positive-dimensional"


class EmptinessRule(str, Enum):
    NEVER = "never"
    ALWAYS = "always"
    MJ_ODD = "m*j odd"
    J_ODD = "j odd"

    def applies(self, m: int, j: int) -> bool:
        if self is EmptinessRule.ALWAYS:
            return True
        if self is EmptinessRule.MJ_ODD:
            return (m * j) % 2 == 1
        if self is EmptinessRule.J_ODD:
            return j % 2 == 1
        return False


@dataclass(frozen=True)
class Formula:
    """An exact count as a polynomial in p, with the tag used in reports"""
    tag: str
    expr: object

    def evaluate(self, p: int) -> int:
        value = Integer(self.expr.subs(P, p))
        return int(value)


@dataclass(frozen=True)
class Count:
    value: int
    formula: str

    def render(self, p: int) -> str:
        return render_count(self.value, self.formula, p)


ONE = Count(1, "1")


@dataclass(frozen=True)
class TableRow:
    emptiness: EmptinessRule
    variety: Optional[ComponentVariety] = None
    points_per_component: Optional[Formula] = None
    components_per_point: Optional[Formula] = None
    neighbors: tuple = ()
    note: Optional[str] = None


@dataclass(frozen=True)
class LocalGeometry:
    status: Status
    dimension: Optional[int] = None
    component_variety: Optional[ComponentVariety] = None
    points_per_component: Optional[Count] = None
    components_per_point: Optional[Count] = None
    neighbor_counts: dict = field(default_factory=dict)
    note: Optional[str] = None

    @property
    def is_empty(self) -> bool:
        return self.status is Status.EMPTY

    def neighbor_count(self, relation: Relation) -> int:
        return self.neighbor_counts[relation].value

    def double_counting_holds(self) -> Optional[bool]:
        """
        neighbors(Point) == points_per_component * (components_per_point - 1);
        None when either incidence constant is absent
        """
        if self.points_per_component is None or self.components_per_point is None:
            return None
        expected = self.points_per_component.value * (self.components_per_point.value - 1)
        return self.neighbor_count(Relation.POINT) == expected


# Split rows with a != b are empty for every j, as are all of these
_EMPTY = TableRow(EmptinessRule.ALWAYS)
_POINT = TableRow(EmptinessRule.NEVER, ComponentVariety.POINT)

LOCAL_TABLE = {
    (SplittingType.SPLIT, SignaturePair(1, 1)): TableRow(
        EmptinessRule.NEVER,
        ComponentVariety.POINT,
        note="split (1,1) is assumed nonempty for all j (comparison with the GL2 Rapoport-Zink space)",
    ),
    (SplittingType.SPLIT, SignaturePair(2, 2)): TableRow(
        EmptinessRule.NEVER,
        ComponentVariety.PROJECTIVE_LINE,
        points_per_component=Formula("p^2+1", P**2 + 1),
        components_per_point=Formula("p^2+1", P**2 + 1),
        neighbors=((Relation.POINT, Formula("p^2(p^2+1)", P**2 * (P**2 + 1))),),
    ),
    (SplittingType.INERT, SignaturePair(1, 1)): _POINT,
    (SplittingType.INERT, SignaturePair(1, 2)): TableRow(
        EmptinessRule.J_ODD,
        ComponentVariety.FERMAT_CURVE,
        points_per_component=Formula("p^3+1", P**3 + 1),
        components_per_point=Formula("p+1", P + 1),
        neighbors=((Relation.POINT, Formula("p(p^3+1)", P * (P**3 + 1))),),
    ),
    (SplittingType.INERT, SignaturePair(1, 3)): TableRow(
        EmptinessRule.NEVER,
        ComponentVariety.FERMAT_CURVE,
        points_per_component=Formula("p^3+1", P**3 + 1),
        components_per_point=Formula("p^3+1", P**3 + 1),
        neighbors=((Relation.POINT, Formula("p^3(p^3+1)", P**3 * (P**3 + 1))),),
    ),
    # Only neighbour counts are known here; the incidence constants stay absent
    (SplittingType.INERT, SignaturePair(2, 2)): TableRow(
        EmptinessRule.NEVER,
        ComponentVariety.FERMAT_SURFACE,
        neighbors=(
            (Relation.POINT, Formula("(p^3+1)(p^2+1)", (P**3 + 1) * (P**2 + 1))),
            (Relation.LINE, Formula("(p^3+1)(p+1)", (P**3 + 1) * (P + 1))),
        ),
    ),
}

for _m in range(1, MAX_M + 1):
    LOCAL_TABLE[(SplittingType.INERT, SignaturePair(0, _m))] = TableRow(EmptinessRule.MJ_ODD, ComponentVariety.POINT)
    for _a in range(0, (_m + 1) // 2):
        LOCAL_TABLE[(SplittingType.SPLIT, SignaturePair(_a, _m - _a))] = _EMPTY


def local_factor_geometry(splitting: SplittingType, sig: SignaturePair, p: int, j: PolarizationIndex,
                          table: Optional[dict] = None) -> LocalGeometry:
    """Look up and evaluate the table row for one local factor at level j"""
    if not is_odd_prime(p):
        raise NotAnOddPrime(p)
    if not sig.is_normalized or sig.a < 0 or not 1 <= sig.m <= MAX_M:
        raise UnsupportedSignature(f"UnsupportedSignature: {splitting.value} {sig} (need a <= b and 1 <= a+b <= {MAX_M})")

    rows = LOCAL_TABLE if table is None else table
    try:
        row = rows[(SplittingType(splitting), sig)]
    except KeyError:
        raise UnsupportedSignature(f"UnsupportedSignature: no table row for {splitting.value} {sig}") from None

    if row.emptiness.applies(sig.m, j):
        return LocalGeometry(Status.EMPTY, note=row.note)

    neighbors = {Relation.EQUAL: ONE}
    for relation, formula in row.neighbors:
        neighbors[relation] = Count(formula.evaluate(p), formula.tag)

    if row.variety is ComponentVariety.POINT:
        return LocalGeometry(
            Status.ZERO_DIMENSIONAL,
            dimension=0,
            component_variety=ComponentVariety.POINT,
            neighbor_counts=neighbors,
            note=row.note,
        )

    def _evaluate(formula):
        return None if formula is None else Count(formula.evaluate(p), formula.tag)

    return LocalGeometry(
        Status.POSITIVE_DIMENSIONAL,
        dimension=row.variety.dimension,
        component_variety=row.variety,
        points_per_component=_evaluate(row.points_per_component),
        components_per_point=_evaluate(row.components_per_point),
        neighbor_counts=neighbors,
        note=row.note,
    )


def quasi_isogeny_height(m: int, j: PolarizationIndex) -> int:
    """Height of the quasi-isogeny on the piece where ord_p c(rho) = j"""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return m * j
