# sslocus/reports.py
"""
Report building and rendering.

Reports are built once as plain dicts of strings and integers; the text, JSON
and HTML renderers all read the same dict.
"""

import json
from typing import Optional

from .decomposition import GlobalGeometry, ReportLevel
from .local_geometry import ComponentVariety, Relation
from .models import GlobalSpec
from .oracle import VerificationReport
from .utils import render_count

ZERO_DIM_WARNING = "component counts of zero-dimensional local factors are not reported (no closed form is known)"
PATTERN_WARNING = (
    "per_pattern counts components X' for one fixed relation pattern; "
    "multiplicity is the number of patterns giving the same intersection type"
)
SHIMURA_WARNING = "counts are omitted: the arithmetic quotient of the uniformization can identify components"

_ANSI = {"green": "32", "red": "31", "bold": "1"}


def _paint(text: str, style: str, color: bool) -> str:
    if not color:
        return text
    return f"\033[{_ANSI[style]}m{text}\033[0m"


def _count_dict(count) -> dict:
    return {"value": count.value, "formula": count.formula}


def _factor_dict(place, factor, with_counts: bool) -> dict:
    entry = {"place": str(place), "status": factor.status.value}
    if factor.dimension is not None:
        entry["dimension"] = factor.dimension
    if factor.component_variety is not None:
        entry["variety"] = factor.component_variety.value
    if with_counts:
        if factor.points_per_component is not None:
            entry["points_per_component"] = _count_dict(factor.points_per_component)
        if factor.components_per_point is not None:
            entry["components_per_point"] = _count_dict(factor.components_per_point)
        neighbors = {
            relation.value: _count_dict(count)
            for relation, count in factor.neighbor_counts.items()
            if relation is not Relation.EQUAL
        }
        if neighbors:
            entry["neighbors"] = neighbors
    return entry


def _class_formula(geometry: GlobalGeometry, cls) -> str:
    """Symbolic per-pattern count of a class, e.g. (p^3(p^3+1))^1 * (p^2(p^2+1))^1"""
    tags = {}
    for factor in geometry.factors:
        for relation, count in factor.neighbor_counts.items():
            tags[(factor.component_variety, relation)] = count.formula
    profile = geometry.profile
    exponents = [
        ((ComponentVariety.FERMAT_CURVE, Relation.POINT), profile.curves - cls.r),
        ((ComponentVariety.FERMAT_SURFACE, Relation.POINT), profile.surfaces - cls.s1 - cls.s2),
        ((ComponentVariety.FERMAT_SURFACE, Relation.LINE), cls.s2),
        ((ComponentVariety.PROJECTIVE_LINE, Relation.POINT), profile.lines - cls.t),
    ]
    parts = [f"({tags[key]})^{power}" for key, power in exponents if power]
    return " * ".join(parts) if parts else "1"


def geometry_dict(spec: GlobalSpec, geometry: GlobalGeometry) -> dict:
    with_counts = geometry.has_counts
    entry = {
        "j": geometry.j,
        "status": geometry.status.value,
        "dimension": geometry.dimension,
        "profile": None,
        "factors": [
            _factor_dict(place, factor, with_counts) for place, factor in zip(spec.places, geometry.factors)
        ],
        "classes": [],
    }
    if geometry.is_empty:
        return entry

    profile = geometry.profile
    entry["profile"] = {
        "curves": profile.curves,
        "surfaces": profile.surfaces,
        "lines": profile.lines,
        "zero_dim_factors": profile.zero_dim_factors,
        "isomorphism_type": profile.isomorphism_type,
    }
    for item in geometry.classes:
        cls = item.intersection_class
        row = {"r": cls.r, "s1": cls.s1, "s2": cls.s2, "t": cls.t, "type": cls.isomorphism_type}
        if with_counts:
            row["per_pattern"] = {"value": item.per_pattern, "formula": _class_formula(geometry, cls)}
            row["multiplicity"] = item.multiplicity
        entry["classes"].append(row)
    return entry


def describe_report(spec_file, geometries) -> dict:
    """The describe report for a parsed spec file and its computed geometries"""
    spec = spec_file.spec
    warnings = []
    for geometry in geometries:
        for factor in geometry.factors:
            if factor.note and factor.note not in warnings:
                warnings.append(factor.note)
        if not geometry.is_empty and geometry.profile.zero_dim_factors and ZERO_DIM_WARNING not in warnings:
            warnings.append(ZERO_DIM_WARNING)
        if not geometry.is_empty and geometry.has_counts and len(geometry.classes) > 1 and PATTERN_WARNING not in warnings:
            warnings.append(PATTERN_WARNING)
    if spec_file.report is ReportLevel.SHIMURA_SS:
        warnings.append(SHIMURA_WARNING)

    return {
        "command": "describe",
        "input": spec_file.to_dict(),
        "geometries": [geometry_dict(spec, geometry) for geometry in geometries],
        "warnings": warnings,
    }


def verification_dict(report: VerificationReport) -> dict:
    return {
        "command": "verify",
        "p": report.p,
        "passed": report.passed,
        "elapsed_ms": report.elapsed_ms,
        "checks": [
            {
                "name": check.name,
                "row": check.row,
                "expected": None if check.expected is None else {"value": check.expected, "formula": check.formula},
                "observed": check.observed,
                "pass": check.passed,
                "note": check.note,
            }
            for check in report.checks
        ],
        "warnings": list(report.warnings),
    }


def height_dict(m: int, j: int, height: int) -> dict:
    return {"command": "convert-height", "m": m, "j": j, "height": height}


def render_json(data: dict) -> str:
    """Canonical JSON: sorted keys, fixed indentation, integers only"""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _count_text(count: Optional[dict], p: int) -> str:
    return render_count(count["value"], count["formula"], p)


def render_describe_text(data: dict, color: bool = False) -> str:
    source = data["input"]
    p = source["p"]
    places = ", ".join(f"{place['splitting']}({place['signature'][0]},{place['signature'][1]})" for place in source["places"])
    level = "Rapoport-Zink space" if source["report"] == ReportLevel.RZ_SPACE.value else "supersingular locus"
    lines = [
        _paint(f"sslocus describe: {level}", "bold", color),
        f"  p = {p}, places = {places}",
    ]

    for geometry in data["geometries"]:
        heading = "" if geometry["j"] is None else f"[j = {geometry['j']}] "
        if geometry["status"] == "empty":
            lines += ["", f"{heading}status: {_paint('empty', 'red', color)}"]
        else:
            lines += ["", f"{heading}status: {_paint('nonempty', 'green', color)}, dimension {geometry['dimension']}"]
            profile = geometry["profile"]
            lines.append(
                f"  components: {profile['isomorphism_type']} "
                f"(d={profile['curves']}, e={profile['surfaces']}, f={profile['lines']}, z={profile['zero_dim_factors']})"
            )

        lines.append("  local factors:")
        for factor in geometry["factors"]:
            text = f"    {factor['place']}: {factor['status']}"
            if "variety" in factor:
                text += f", dimension {factor['dimension']}, component {factor['variety']}"
            lines.append(text)
            if "points_per_component" in factor:
                lines.append(f"      points per component: {_count_text(factor['points_per_component'], p)}")
            if "components_per_point" in factor:
                lines.append(f"      components per point: {_count_text(factor['components_per_point'], p)}")
            for relation, count in sorted(factor.get("neighbors", {}).items()):
                lines.append(f"      neighbors meeting in a {relation}: {_count_text(count, p)}")

        if geometry["classes"]:
            lines.append("  intersection classes (r, s1, s2, t):")
            for row in geometry["classes"]:
                text = f"    ({row['r']}, {row['s1']}, {row['s2']}, {row['t']}) {row['type']}"
                if "per_pattern" in row:
                    text += f": per pattern {_count_text(row['per_pattern'], p)}, multiplicity {row['multiplicity']}"
                lines.append(text)

    if data["warnings"]:
        lines += ["", "warnings:"]
        lines += [f"  - {warning}" for warning in data["warnings"]]
    return "\n".join(lines) + "\n"


def render_verify_text(data: dict, color: bool = False) -> str:
    p = data["p"]
    lines = [_paint(f"sslocus verify: p = {p}", "bold", color)]
    for check in data["checks"]:
        expected = check["expected"]
        expected_text = "absent" if expected is None else f"{expected['formula']} = {expected['value']}"
        observed_text = "absent" if check["observed"] is None else check["observed"]
        text = f"  {check['name']}: expected {expected_text}, observed {observed_text}"
        if check["row"]:
            text += f" [{check['row']}]"
        if check["note"]:
            text += f" ({check['note']})"
        status = _paint("ok", "green", color) if check["pass"] else _paint("FAIL", "red", color)
        lines.append(f"{text} {status}")

    passed = sum(1 for check in data["checks"] if check["pass"])
    verdict = _paint("PASS", "green", color) if data["passed"] else _paint("FAIL", "red", color)
    lines.append(f"result: {verdict} ({passed}/{len(data['checks'])} checks) in {data['elapsed_ms']} ms")
    if data["warnings"]:
        lines.append("warnings:")
        lines += [f"  - {warning}" for warning in data["warnings"]]
    return "\n".join(lines) + "\n"


def render_height_text(data: dict) -> str:
    return f"{data['height']}\n"
