"""tetrascreen: exact-arithmetic screening of triangle centers placed on
the faces of parametrized tetrahedra.

The package evaluates curated center functions on the four faces of a
tetrahedron given by its six rational edge lengths, and decides sixteen
incidence/shape properties of the resulting point quadruples exactly
(adaptive-precision intervals take over only where square roots are
unavoidable).  A registry of known identities can be re-derived on seeded
random instances, and falsification searches back the uniqueness results.
"""

from ._backend import BACKEND, Q
from .catalog import Catalog, CatalogEntry, builtin_catalog, load_catalog_file
from .errors import TetraScreenError
from .geometry import EdgeMetric, TetraDirection, TetraLine, TetraPlane, TetraPoint
from .properties import PropertyId, Verdict, check_property
from .scalar import Interval
from .screen import CenterSpec, ScreenPlan, hunt_counterexample, run_screen
from .tetrahedron import (
    EdgeLengths,
    EvalMode,
    SpaceCenterKind,
    TetraFamily,
    face_points,
    generate,
    space_center,
    space_center_of_points,
)
from .theorems import registry, verify_cases
from .triangle import Areal, TriangleSides, Trilinear

__version__ = "0.1.0"

__all__ = [
    "Areal",
    "BACKEND",
    "Catalog",
    "CatalogEntry",
    "CenterSpec",
    "EdgeLengths",
    "EdgeMetric",
    "EvalMode",
    "Interval",
    "PropertyId",
    "Q",
    "ScreenPlan",
    "SpaceCenterKind",
    "TetraDirection",
    "TetraFamily",
    "TetraLine",
    "TetraPlane",
    "TetraPoint",
    "TetraScreenError",
    "TriangleSides",
    "Trilinear",
    "Verdict",
    "builtin_catalog",
    "check_property",
    "face_points",
    "generate",
    "hunt_counterexample",
    "load_catalog_file",
    "registry",
    "run_screen",
    "space_center",
    "space_center_of_points",
    "verify_cases",
]
