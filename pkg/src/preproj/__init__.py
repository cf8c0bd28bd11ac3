"""Preprojective algebras of Dynkin quivers, their support tau-tilting
modules and the Weyl group side: ideals I_w, mutation, g-vectors and the
chamber fan."""

from .algebra import Algebra, build_algebra
from .context import Context
from .errors import (ApproximationNotMinimal, DegreeBoundExceeded, GMismatch, MalformedSpecError,
                     NonDynkinError, NotSupportTauTilting, PreprojError, RelationViolated,
                     SocleNotSimple)
from .gfan import (Boundary, Cone, chamber_fan, chamber_report, cone_membership, g_matrix,
                   g_matrix_presentations, g_matrix_reflections, g_vector)
from .ideals import RightIdeal
from .linalg import QQ, Field
from .modules import ModuleRep, Morphism, min_presentation, tau
from .pairs import SttPair, stt_pair
from .quiver import DynkinQuiver, double_quiver, parse_quiver
from .tilting import exchange_quiver, ideal_closure, mutate
from .weyl import WeylElement, WeylGroup

__version__ = "0.1.0"

__all__ = [
    "Algebra", "ApproximationNotMinimal", "Boundary", "Cone", "Context", "DegreeBoundExceeded",
    "DynkinQuiver", "Field", "GMismatch", "MalformedSpecError", "ModuleRep", "Morphism",
    "NonDynkinError", "NotSupportTauTilting", "PreprojError", "QQ", "RelationViolated",
    "RightIdeal", "SocleNotSimple", "SttPair", "WeylElement", "WeylGroup", "build_algebra",
    "chamber_fan", "chamber_report", "cone_membership", "double_quiver", "exchange_quiver",
    "g_matrix", "g_matrix_presentations", "g_matrix_reflections", "g_vector", "ideal_closure",
    "min_presentation", "mutate", "parse_quiver", "stt_pair", "tau",
]
