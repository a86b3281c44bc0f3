# sslocus/pages.py
"""HTML rendering of describe and verify reports as standalone MonsterUI pages"""

from fasthtml.common import *
from monsterui.all import *

from .local_geometry import ComponentVariety
from .utils import render_count


def _status_badge(status: str):
    colors = {
        "empty": "bg-red-100 text-red-800",
        "nonempty": "bg-green-100 text-green-800",
        "zero-dimensional": "bg-blue-100 text-blue-800",
        "positive-dimensional": "bg-green-100 text-green-800",
    }
    return Span(status, cls=f"px-2 py-1 text-xs rounded {colors.get(status, 'bg-gray-100 text-gray-800')}")


def _count_cell(count, p):
    return Td(render_count(count["value"], count["formula"], p), cls="font-mono") if count else Td("-")


def _factors_table(geometry, p):
    rows = [
        Tr(
            Td(factor["place"]),
            Td(_status_badge(factor["status"])),
            Td(str(factor.get("dimension", "-"))),
            Td(factor["variety"], title=ComponentVariety(factor["variety"]).description) if "variety" in factor else Td("-"),
            _count_cell(factor.get("points_per_component"), p),
            _count_cell(factor.get("components_per_point"), p),
            _count_cell(factor.get("neighbors", {}).get("point"), p),
            _count_cell(factor.get("neighbors", {}).get("line"), p),
        )
        for factor in geometry["factors"]
    ]
    return Table(
        Thead(Tr(Th("Place"), Th("Status"), Th("Dim"), Th("Component"),
                 Th("Points/component"), Th("Components/point"), Th("Point neighbors"), Th("Line neighbors"))),
        Tbody(*rows),
        cls="w-full"
    )


def _classes_table(geometry, p):
    with_counts = any("per_pattern" in row for row in geometry["classes"])
    header = [Th("(r, s1, s2, t)"), Th("Intersection type")]
    if with_counts:
        header += [Th("Per pattern"), Th("Multiplicity")]

    rows = []
    for row in geometry["classes"]:
        cells = [Td(f"({row['r']}, {row['s1']}, {row['s2']}, {row['t']})"), Td(row["type"], cls="font-mono")]
        if with_counts:
            cells += [_count_cell(row["per_pattern"], p), Td(str(row["multiplicity"]))]
        rows.append(Tr(*cells))
    return Table(Thead(Tr(*header)), Tbody(*rows), cls="w-full")


def _geometry_card(geometry, p):
    title = "Supersingular locus" if geometry["j"] is None else f"Level j = {geometry['j']}"
    summary = [_status_badge(geometry["status"])]
    if geometry["profile"]:
        summary.append(Span(f" dimension {geometry['dimension']}, components {geometry['profile']['isomorphism_type']}",
                            cls="ml-2"))
    return Card(
        CardHeader(DivFullySpaced(H3(title), Div(*summary))),
        CardBody(
            H4("Local factors"),
            _factors_table(geometry, p),
            H4("Intersection classes", cls="mt-4") if geometry["classes"] else None,
            _classes_table(geometry, p) if geometry["classes"] else None,
        ),
        cls="mb-4"
    )


def _page(title, *content):
    return to_xml(Html(
        Head(Title(title), *Theme.blue.headers()),
        Body(Container(*content, cls=ContainerT.xl)),
    ))


def create_describe_page(data: dict) -> str:
    """Render a describe report dict as an HTML document"""
    source = data["input"]
    p = source["p"]
    places = ", ".join(f"{place['splitting']}({place['signature'][0]},{place['signature'][1]})"
                       for place in source["places"])
    return _page(
        "sslocus describe",
        H1("Supersingular locus geometry"),
        Subtitle(f"p = {p}, report = {source['report']}, places: {places}"),
        *[_geometry_card(geometry, p) for geometry in data["geometries"]],
        *[Alert(warning, cls=AlertT.warning) for warning in data["warnings"]],
    )


def create_verify_page(data: dict) -> str:
    p = data["p"]
    rows = [
        Tr(
            Td(check["name"]),
            Td(check["row"] or "-"),
            _count_cell(check["expected"], p),
            Td("-" if check["observed"] is None else str(check["observed"]), cls="font-mono"),
            Td(Span("ok" if check["pass"] else "FAIL",
                    cls=f"px-2 py-1 text-xs rounded {'bg-green-100 text-green-800' if check['pass'] else 'bg-red-100 text-red-800'}")),
        )
        for check in data["checks"]
    ]
    return _page(
        f"sslocus verify p={p}",
        H1(f"Oracle verification at p = {p}"),
        Alert("All checks passed" if data["passed"] else "Some checks failed",
              cls=AlertT.success if data["passed"] else AlertT.error),
        Card(Table(Thead(Tr(Th("Check"), Th("Row"), Th("Expected"), Th("Observed"), Th("Result"))),
                   Tbody(*rows), cls="w-full")),
        *[Alert(warning, cls=AlertT.warning) for warning in data["warnings"]],
    )
