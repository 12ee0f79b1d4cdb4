"""Exact invariants of toric Kahler metrics on the two- and three-point
blow-ups of the projective plane, with certificate checks and a CLI."""
from .cohomology import CohClass, T_sublevel_test, enumerate_negative_classes
from .errors import ConeViolation, NotVerified, ToricError
from .exact import MPoly, PiScalar, RatFn
from .invariants import (
    calA,
    calB,
    calB_symbolic,
    calT,
    extremal_potential,
    invariant_set,
    invariant_set_symbolic,
    scalar_bounds,
)
from .polytope import DP2, DP3, KahlerParams, SurfaceKind, build_polygon

__version__ = "0.1.0"

__all__ = [
    "CohClass", "ConeViolation", "DP2", "DP3", "KahlerParams", "MPoly", "NotVerified", "PiScalar",
    "RatFn", "SurfaceKind", "T_sublevel_test", "ToricError", "build_polygon", "calA", "calB",
    "calB_symbolic", "calT", "enumerate_negative_classes", "extremal_potential", "invariant_set",
    "invariant_set_symbolic", "scalar_bounds",
]
