# tests/test_local_geometry.py
import pytest
from hypothesis import given, strategies as st

from sslocus.errors import NotAnOddPrime, UnsupportedSignature
from sslocus.local_geometry import (
    LOCAL_TABLE,
    ComponentVariety,
    Relation,
    Status,
    local_factor_geometry,
    quasi_isogeny_height,
)
from sslocus.models import SignaturePair, SplittingType

INERT = SplittingType.INERT
SPLIT = SplittingType.SPLIT

PRIMES = [3, 5, 7, 11, 13]


def geometry(splitting, a, b, p=3, j=0):
    return local_factor_geometry(splitting, SignaturePair(a, b), p, j)


def test_split_unequal_is_empty():
    result = geometry(SPLIT, 1, 2, p=5, j=0)
    assert result.is_empty
    assert result.dimension is None
    assert result.component_variety is None
    assert result.neighbor_counts == {}


def test_inert_0m_empty_iff_mj_odd():
    assert geometry(INERT, 0, 3, j=1).is_empty
    assert not geometry(INERT, 0, 3, j=2).is_empty
    assert not geometry(INERT, 0, 2, j=1).is_empty


def test_inert_12_curve():
    result = geometry(INERT, 1, 2, p=3, j=2)
    assert result.status is Status.POSITIVE_DIMENSIONAL
    assert result.component_variety is ComponentVariety.FERMAT_CURVE
    assert result.points_per_component.value == 28
    assert result.components_per_point.value == 4
    assert result.neighbor_count(Relation.POINT) == 84
    assert result.points_per_component.formula == "p^3+1"


def test_inert_12_empty_for_odd_j():
    assert geometry(INERT, 1, 2, j=-1).is_empty


def test_inert_22_surface():
    result = geometry(INERT, 2, 2, p=3, j=5)
    assert result.component_variety is ComponentVariety.FERMAT_SURFACE
    assert result.dimension == 2
    assert result.neighbor_count(Relation.POINT) == 280
    assert result.neighbor_count(Relation.LINE) == 112
    assert result.points_per_component is None
    assert result.components_per_point is None
    assert result.double_counting_holds() is None


def test_inert_13_curve_count_renders_formula():
    result = geometry(INERT, 1, 3, p=3)
    assert result.neighbor_counts[Relation.POINT].render(3) == "756 = p^3(p^3+1) @ p=3"


def test_split_22_line():
    result = geometry(SPLIT, 2, 2, p=3, j=7)
    assert result.component_variety is ComponentVariety.PROJECTIVE_LINE
    assert result.points_per_component.value == 10
    assert result.neighbor_count(Relation.POINT) == 90


@pytest.mark.parametrize("splitting, a, b", [(SPLIT, 1, 1), (INERT, 1, 1), (INERT, 0, 2)])
def test_zero_dimensional_rows(splitting, a, b):
    result = geometry(splitting, a, b)
    assert result.status is Status.ZERO_DIMENSIONAL
    assert result.dimension == 0
    assert result.component_variety is ComponentVariety.POINT
    assert result.neighbor_counts == {Relation.EQUAL: result.neighbor_counts[Relation.EQUAL]}
    assert result.neighbor_count(Relation.EQUAL) == 1


def test_split_11_carries_assumption_note():
    assert "assumed nonempty" in geometry(SPLIT, 1, 1).note


def _expected_empty(splitting, sig, j):
    if splitting is SPLIT:
        return sig.a != sig.b
    if sig.a == 0:
        return (sig.m * j) % 2 == 1
    if sig == SignaturePair(1, 2):
        return j % 2 == 1
    return False


@pytest.mark.parametrize("key", sorted(LOCAL_TABLE, key=lambda k: (k[0].value, k[1])))
@pytest.mark.parametrize("j", [0, 1, 2, 3, -1])
def test_emptiness_matrix(key, j):
    splitting, sig = key
    assert geometry(splitting, sig.a, sig.b, j=j).is_empty == _expected_empty(splitting, sig, j), \
        f"{splitting.value}{sig} at j={j}"


@pytest.mark.parametrize("p", PRIMES)
def test_double_counting_every_row(p):
    checked = 0
    for splitting, sig in LOCAL_TABLE:
        result = local_factor_geometry(splitting, sig, p, 0)
        if result.points_per_component is not None and result.components_per_point is not None:
            assert result.double_counting_holds(), f"{splitting.value}{sig} at p={p}"
            checked += 1
    assert checked == 3


@given(st.sampled_from(sorted(LOCAL_TABLE, key=lambda k: (k[0].value, k[1]))), st.integers(-50, 50))
def test_nonempty_rows_have_positive_counts(key, j):
    splitting, sig = key
    result = local_factor_geometry(splitting, sig, 1_000_003, j)
    if not result.is_empty:
        assert all(count.value > 0 for count in result.neighbor_counts.values())
        if result.status is Status.POSITIVE_DIMENSIONAL:
            assert result.dimension in (1, 2)


def test_large_prime_exact():
    p = 1_000_003
    result = geometry(INERT, 1, 3, p=p)
    assert result.neighbor_count(Relation.POINT) == p**3 * (p**3 + 1)


def test_errors():
    with pytest.raises(NotAnOddPrime):
        geometry(INERT, 1, 3, p=2)
    with pytest.raises(UnsupportedSignature):
        geometry(INERT, 2, 3)
    with pytest.raises(UnsupportedSignature):
        geometry(INERT, 3, 1)


def test_custom_table_missing_row():
    with pytest.raises(UnsupportedSignature):
        local_factor_geometry(INERT, SignaturePair(1, 3), 3, 0, table={})


@pytest.mark.parametrize("m, j, height", [(4, 3, 12), (1, 0, 0), (3, -2, -6)])
def test_quasi_isogeny_height(m, j, height):
    assert quasi_isogeny_height(m, j) == height


def test_quasi_isogeny_height_rejects_m0():
    with pytest.raises(ValueError):
        quasi_isogeny_height(0, 1)
