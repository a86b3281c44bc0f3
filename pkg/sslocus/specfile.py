# sslocus/specfile.py
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .decomposition import ReportLevel
from .errors import SpecFileError
from .models import GlobalSpec, PlaceSpec, SignaturePair, SplittingType

logger = logging.getLogger(__name__)

ALL_PARITIES = "all-parities"


@dataclass(frozen=True)
class SpecFile:
    """A parsed spec file; validation of the GlobalSpec itself happens later"""
    spec: GlobalSpec
    report: ReportLevel
    j: Union[int, str, None] = None

    @property
    def levels(self) -> list:
        """The levels j to describe for an rz report"""
        if self.j == ALL_PARITIES:
            return [0, 1]
        return [0 if self.j is None else self.j]

    def to_dict(self) -> dict:
        return {
            "p": self.spec.p,
            "j": self.j,
            "report": self.report.value,
            "places": [
                {"splitting": place.splitting.value, "signature": [place.signature.a, place.signature.b]}
                for place in self.spec.places
            ],
        }


def _dict_to_place(index: int, place) -> PlaceSpec:
    """Convert one entry of the places list into a PlaceSpec"""
    if not isinstance(place, dict):
        raise SpecFileError(f"places[{index}] must be an object, got {type(place).__name__}")
    try:
        splitting = SplittingType(place["splitting"])
    except KeyError:
        raise SpecFileError(f"places[{index}] is missing 'splitting'") from None
    except ValueError:
        raise SpecFileError(f"places[{index}].splitting must be 'split' or 'inert', got {place['splitting']!r}") from None

    signature = place.get("signature")
    if (not isinstance(signature, list) or len(signature) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in signature)):
        raise SpecFileError(f"places[{index}].signature must be a 2-element integer array [a, b], got {signature!r}")
    return PlaceSpec(splitting, SignaturePair(*signature))


def parse_spec(data) -> SpecFile:
    if not isinstance(data, dict):
        raise SpecFileError("spec file must contain a JSON object")

    p = data.get("p")
    if not isinstance(p, int) or isinstance(p, bool):
        raise SpecFileError(f"'p' must be an integer, got {p!r}")

    try:
        report = ReportLevel(data.get("report", ReportLevel.RZ_SPACE.value))
    except ValueError:
        raise SpecFileError(f"'report' must be 'rz' or 'shimura', got {data.get('report')!r}") from None

    j: Optional[Union[int, str]] = data.get("j")
    if j is not None and j != ALL_PARITIES and (not isinstance(j, int) or isinstance(j, bool)):
        raise SpecFileError(f"'j' must be an integer or {ALL_PARITIES!r}, got {j!r}")
    if j is not None and report is not ReportLevel.RZ_SPACE:
        # The supersingular locus has no level
        raise SpecFileError(f"'j' is only allowed with report 'rz', got {j!r} with report {report.value!r}")

    places = data.get("places")
    if not isinstance(places, list):
        raise SpecFileError("'places' must be an array")

    spec = GlobalSpec(p=p, places=[_dict_to_place(i, place) for i, place in enumerate(places)])
    return SpecFile(spec=spec, report=report, j=j)


def load_spec_file(path) -> SpecFile:
    """Read and parse a JSON spec file"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpecFileError(f"cannot read spec file {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFileError(f"{path} is not valid JSON: {e}") from e
    logger.debug("Loaded spec file %s", path)
    return parse_spec(data)
