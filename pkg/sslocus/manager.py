import logging

from .config import load_config
from .decomposition import ReportLevel, rz_geometry, shimura_ss_geometry
from .local_geometry import quasi_isogeny_height
from .models import MAX_M
from .oracle import verify_counts
from .pages import create_describe_page, create_verify_page
from .reports import (
    describe_report,
    height_dict,
    render_describe_text,
    render_height_text,
    render_json,
    render_verify_text,
    verification_dict,
)
from .specfile import SpecFile, load_spec_file

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "html")


class LocusManager:
    """ Entry point for describing supersingular loci and verifying the local geometry table.

    Methods:
        describe: Describe the geometry for a spec file (path or parsed SpecFile)
        verify: Run the finite-geometry oracle at a prime
        convert_height: Height of the quasi-isogeny at level j
        render: Render any report dict as text, JSON or HTML

    Each operation returns a plain report dict; errors propagate as SSLocusError subclasses.
    """
    def __init__(self, config=None):
        self.config = config if config is not None else load_config()

    def describe(self, spec_file) -> dict:
        if not isinstance(spec_file, SpecFile):
            spec_file = load_spec_file(spec_file)

        spec = spec_file.spec
        if spec_file.report is ReportLevel.SHIMURA_SS:
            geometries = [shimura_ss_geometry(spec)]
        else:
            geometries = [rz_geometry(spec, j) for j in spec_file.levels]

        logger.info("Described %s (%s) at %s level(s)", spec, spec_file.report.value, len(geometries))
        return describe_report(spec_file, geometries)

    def verify(self, p: int, max_p=None, workers=None, table=None) -> dict:
        max_p = self.config.get("max_p", 7) if max_p is None else max_p
        workers = self.config.get("workers", 1) if workers is None else workers
        report = verify_counts(p, max_p=max_p, workers=workers, table=table)
        for failure in report.failures:
            logger.warning("Check %s failed: expected %s, observed %s", failure.name, failure.expected, failure.observed)
        return verification_dict(report)

    def convert_height(self, m: int, j: int) -> dict:
        if not 1 <= m <= MAX_M:
            raise ValueError(f"UnsupportedM: m={m} is outside 1..{MAX_M}")
        return height_dict(m, j, quasi_isogeny_height(m, j))

    def render(self, data: dict, fmt: str = "text", color=None) -> str:
        if fmt not in FORMATS:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
        if fmt == "json":
            return render_json(data)

        color = self.config.get("color", True) if color is None else color
        command = data["command"]
        if fmt == "html":
            if command == "describe":
                return create_describe_page(data)
            if command == "verify":
                return create_verify_page(data)
            raise ValueError(f"No HTML rendering for {command}")

        if command == "describe":
            return render_describe_text(data, color)
        if command == "verify":
            return render_verify_text(data, color)
        return render_height_text(data)
