"""
sslocus: geometry of the supersingular locus of unitary Shimura varieties.

Describes the Rapoport-Zink space and supersingular locus attached to a list of
local signatures as a product of local factors (Fermat curves and surfaces,
projective lines and points), with exact intersection counts, and checks the
local constants by brute-force enumeration over GF(p^2).
"""

__version__ = "0.1.0"

from .models import (
    GlobalSpec,
    PlaceSpec,
    SignatureMatching,
    SignaturePair,
    SplittingType,
    ValidationResult,
    localize_signatures,
    validate_spec,
)
from .local_geometry import LocalGeometry, local_factor_geometry, quasi_isogeny_height
from .decomposition import (
    GlobalGeometry,
    IntersectionClass,
    IntersectionPattern,
    ReportLevel,
    neighbor_count_per_class,
    neighbor_count_per_pattern,
    rz_geometry,
    shimura_ss_geometry,
)
from .field import FqSquared, build_field
from .oracle import VerificationReport, verify_counts
from .manager import LocusManager

__all__ = [
    'GlobalSpec',
    'PlaceSpec',
    'SignatureMatching',
    'SignaturePair',
    'SplittingType',
    'ValidationResult',
    'localize_signatures',
    'validate_spec',
    'LocalGeometry',
    'local_factor_geometry',
    'quasi_isogeny_height',
    'GlobalGeometry',
    'IntersectionClass',
    'IntersectionPattern',
    'ReportLevel',
    'neighbor_count_per_class',
    'neighbor_count_per_pattern',
    'rz_geometry',
    'shimura_ss_geometry',
    'FqSquared',
    'build_field',
    'VerificationReport',
    'verify_counts',
    'LocusManager',
]

# Version info tuple
VERSION = tuple(map(int, __version__.split('.')))
