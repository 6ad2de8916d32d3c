"""Painted cubic planar graphs and the symmetry groups they encode."""

__version__ = "0.1.0"

from .errors import (
    CapExceededError,
    CatalogMissError,
    CrushtaceanError,
    GraphFormatError,
    InvalidRotationError,
    NonplanarError,
    PreconditionError,
)
from .graphs import (
    FaceSet,
    PaintedGraph,
    Rotation,
    StructReport,
    dual,
    faces,
    is_k_connected,
    painted_graph,
    parse_graph,
    planar_embed,
    relabel,
    serialize_graph,
    validate_basic,
)
from .groups import GroupId, PermGroup, Permutation, close, identify, signature
from .automorphism import automorphisms, find_isomorphism
from .classify import (
    BPrimeVerdict,
    ClassificationReport,
    CrushtaceanReport,
    EdgeCut,
    KnotCircle,
    KnotStructure,
    NerveReport,
    ReflectionMultiplicity,
    SymEstimate,
    classify_bprime,
    detect_reflection_multiplicity,
    has_universal_region,
    knot_circles,
    nerve_check,
    signature_screen,
    symmetry_report,
    three_edge_cuts,
    validate_crushtacean,
)
from .families import (
    FamilyMember,
    antiprism,
    cube,
    cycle_expand,
    dodecahedron,
    family_from_target,
    gamma_borromean,
    gamma_ochain,
    gamma_pretzel,
    generate_family,
    prism,
    seed_catalog,
    tetrahedron,
    wheel,
)

__all__ = [
    "CapExceededError",
    "CatalogMissError",
    "CrushtaceanError",
    "GraphFormatError",
    "InvalidRotationError",
    "NonplanarError",
    "PreconditionError",
    "FaceSet",
    "PaintedGraph",
    "Rotation",
    "StructReport",
    "dual",
    "faces",
    "is_k_connected",
    "painted_graph",
    "parse_graph",
    "planar_embed",
    "relabel",
    "serialize_graph",
    "validate_basic",
    "GroupId",
    "PermGroup",
    "Permutation",
    "close",
    "identify",
    "signature",
    "automorphisms",
    "find_isomorphism",
    "BPrimeVerdict",
    "ClassificationReport",
    "CrushtaceanReport",
    "EdgeCut",
    "KnotCircle",
    "KnotStructure",
    "NerveReport",
    "ReflectionMultiplicity",
    "SymEstimate",
    "classify_bprime",
    "detect_reflection_multiplicity",
    "has_universal_region",
    "knot_circles",
    "nerve_check",
    "signature_screen",
    "symmetry_report",
    "three_edge_cuts",
    "validate_crushtacean",
    "FamilyMember",
    "antiprism",
    "cube",
    "cycle_expand",
    "dodecahedron",
    "family_from_target",
    "gamma_borromean",
    "gamma_ochain",
    "gamma_pretzel",
    "generate_family",
    "prism",
    "seed_catalog",
    "tetrahedron",
    "wheel",
    "__version__",
]
