# tests/conftest.py
import json

import pytest

from sslocus.models import GlobalSpec, PlaceSpec, SignaturePair, SplittingType

INERT = SplittingType.INERT
SPLIT = SplittingType.SPLIT


def place(splitting, a, b):
    return PlaceSpec(splitting, SignaturePair(a, b))


@pytest.fixture
def mixed_m4_spec():
    """p=3, (d, e, f) = (1, 1, 1): one Fermat curve, one Fermat surface and one P^1 factor"""
    return GlobalSpec(p=3, places=[place(INERT, 1, 3), place(INERT, 2, 2), place(SPLIT, 2, 2)])


@pytest.fixture
def write_spec(tmp_path):
    """Write a spec dict to a JSON file and return its path"""
    def _write(data, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path
    return _write


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("SSLOCUS_MAX_P", "SSLOCUS_WORKERS", "SSLOCUS_LOG_LEVEL", "NO_COLOR"):
        monkeypatch.delenv(name, raising=False)
