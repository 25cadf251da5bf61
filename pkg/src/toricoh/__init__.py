"""Compactly supported cohomology of smooth toric surfaces from their fans."""

from .classify import (
    AngleClass,
    FanClass,
    FanKind,
    GapComponent,
    SupportArc,
    UnsupportedFan,
    classify_fan,
    gap_components,
    support_arcs,
)
from .cohomology import (
    CohomologyReport,
    Summand,
    SummandKind,
    cohomology_report,
    graded_dim,
    summand_text,
)
from .completion import Completion, complete_fan, curve_chain
from .corpus import builtin_fan
from .fan import (
    Cone2,
    Fan,
    apply_unimodular,
    is_complete,
    is_smooth_cone,
    make_fan,
    parse_fan,
    serialize_fan,
    validate_fan,
)
from .lattice import LatticeVector, angular_compare, ccw_between, det2, primitive, vec
from .resolve import ConeType, CurveChain, cf_eval, cone_type, hj_cf, smooth_subdivide

__version__ = "0.1.0"
