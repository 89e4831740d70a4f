"""Exact local-global tools for ternary cubic forms and an audit of the cubic-to-quadrics argument."""

from .config import Config
from .forms import BinaryCubicForm, ProjectivePoint, QuadraticForm, TernaryCubicForm
from .jacobian import DiagonalCubic, WeierstrassCurve
from .localfields import Place, SolvabilityVerdict, Status

__all__ = [
    "BinaryCubicForm",
    "Config",
    "DiagonalCubic",
    "Place",
    "ProjectivePoint",
    "QuadraticForm",
    "SolvabilityVerdict",
    "Status",
    "TernaryCubicForm",
    "WeierstrassCurve",
]
__version__ = "0.1.0"
