"""gaugediam: planar convex-geometry toolkit for gauge diameters.

Computes inradius/circumradius, Minkowski asymmetry, the four gauge
symmetrizations, the four diameter functionals and widths, completions, and
(r/R, D/2R) diagrams for polygonal gauges.
"""

from .geometry import (
    EPS_CMP,
    EPS_GEOM,
    Polygon,
    canonicalize,
    chord_through_origin,
    contains,
    gauge_norm,
    halfplane_intersection,
    linear_map,
    minkowski_sum,
    negate,
    polar,
    polygon_from_json,
    polygon_to_json,
    same_set,
    scale,
    support,
    translate,
)
from .radii import (
    ContainmentResult,
    GaugeContext,
    asymmetry,
    circumradius,
    inradius,
    make_context,
    verify_certificate,
)
from .symmetry import Factors, Mode, factors, symmetrize, verify_firey_chain
from .diameters import (
    DiameterResult,
    WidthResult,
    diameter,
    half_difference,
    s_breadth,
    s_length,
    width,
)
from .completion import (
    CompletenessReport,
    complete_via_diametric_simplex,
    constant_width,
    is_complete,
    k_x,
    outer_symmetric_support,
    supercompletion,
)
from .families import FamilySpec, build, interpolate, random_hull
from .diagrams import (
    DiagramRecord,
    InequalityReport,
    boundary_curves,
    diagram_point,
    falsify_dominating_conjecture,
    sample_diagram,
    verify_inequalities,
    write_csv,
    write_svg,
)

__version__ = "0.1.0"
