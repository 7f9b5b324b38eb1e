"""Ample sets of sign vectors: shattering, the cube complex, convexity checks."""
from .ample import (
    ALL_IDS,
    Characterization,
    CharacterizationReport,
    Kind,
    Verdict,
    check,
    cross_check,
    enumerate_families,
    find_disagreements,
    generate,
    is_ample,
    sample_families,
)
from .convexity import (
    ConvexityReport,
    PointCloud,
    is_sign_convex,
    orthant_pattern,
    orthant_pattern_of_complex,
    parse_point_cloud,
    region_pattern,
    satisfies_sca,
    sign_of_point,
    upward_closed_convexity_report,
)
from .cubihedron import (
    UNREACHABLE,
    barycentric_completion,
    circuits,
    cocircuits,
    complex_dimension,
    euler_characteristic,
    face_counts,
    grid_distance,
    is_grid_isometric,
    projected_complex_contains,
    projection_dimensions,
)
from .shatter import (
    SubsetFamily,
    dress_pajor,
    project,
    restrict,
    sauer_shelah_bound,
    shattered,
    strongly_shattered,
    vc_dimension,
)
from .signs import (
    FormatError,
    GroundSet,
    PartialFamily,
    PartialSignVector,
    SignFamily,
    SignVector,
    complement,
    format_family,
    l1_distance,
    l1_distance_partial,
    minima,
    parse_family,
    parse_partial_family,
    precedes,
    upward_closure,
)

__version__ = "0.1.0"
