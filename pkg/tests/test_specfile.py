# tests/test_specfile.py
import pytest

from sslocus.decomposition import ReportLevel
from sslocus.errors import SpecFileError
from sslocus.models import SignaturePair, SplittingType, validate_spec
from sslocus.specfile import ALL_PARITIES, load_spec_file, parse_spec

EXAMPLE = {
    "p": 3,
    "j": 0,
    "report": "rz",
    "places": [
        {"splitting": "inert", "signature": [1, 3]},
        {"splitting": "split", "signature": [2, 2]},
    ],
}


def test_parse_example():
    spec_file = parse_spec(EXAMPLE)
    assert spec_file.report is ReportLevel.RZ_SPACE
    assert spec_file.levels == [0]
    assert spec_file.spec.p == 3
    assert spec_file.spec.places[0].splitting is SplittingType.INERT
    assert spec_file.spec.places[1].signature == SignaturePair(2, 2)
    assert spec_file.to_dict() == EXAMPLE


def test_defaults():
    spec_file = parse_spec({"p": 5, "places": [{"splitting": "inert", "signature": [0, 1]}]})
    assert spec_file.report is ReportLevel.RZ_SPACE
    assert spec_file.j is None
    assert spec_file.levels == [0]


def test_all_parities():
    spec_file = parse_spec(dict(EXAMPLE, j=ALL_PARITIES))
    assert spec_file.levels == [0, 1]


@pytest.mark.parametrize("j", [ALL_PARITIES, 0, 3])
def test_j_only_for_rz(j):
    with pytest.raises(SpecFileError, match="only allowed with report 'rz'"):
        parse_spec(dict(EXAMPLE, j=j, report="shimura"))


def test_unnormalized_signature_parses_then_fails_validation():
    spec_file = parse_spec(dict(EXAMPLE, places=[{"splitting": "inert", "signature": [3, 1]}]))
    assert not validate_spec(spec_file.spec).valid


@pytest.mark.parametrize("data", [
    [],
    {"places": []},
    {"p": "3", "places": []},
    {"p": True, "places": []},
    {"p": 3, "report": "global", "places": []},
    {"p": 3, "j": 1.5, "places": []},
    {"p": 3, "j": "odd", "places": []},
    {"p": 3, "places": {}},
    {"p": 3, "places": ["inert"]},
    {"p": 3, "places": [{"signature": [1, 3]}]},
    {"p": 3, "places": [{"splitting": "ramified", "signature": [1, 3]}]},
    {"p": 3, "places": [{"splitting": "inert", "signature": [1, 3, 0]}]},
    {"p": 3, "places": [{"splitting": "inert", "signature": [1, "3"]}]},
    {"p": 3, "places": [{"splitting": "inert"}]},
])
def test_malformed(data):
    with pytest.raises(SpecFileError):
        parse_spec(data)


def test_load_spec_file(write_spec):
    assert load_spec_file(write_spec(EXAMPLE)).spec.n == 2


def test_load_missing_file(tmp_path):
    with pytest.raises(SpecFileError, match="cannot read"):
        load_spec_file(tmp_path / "missing.json")


def test_load_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{p: 3", encoding="utf-8")
    with pytest.raises(SpecFileError, match="not valid JSON"):
        load_spec_file(path)
