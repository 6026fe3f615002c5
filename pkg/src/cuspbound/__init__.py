"""cuspbound: Certified explicit coefficient bounds for level 2 cusp forms."""

from .basis import EchelonBasis, echelon_basis, expand_linear_combo, miller_basis
from .core.config import BoundConfiguration
from .core.constants import DisplayedBounds, EnvelopeDefaults, RigorDefaults
from .forms import FormDescriptor, FormRegistry
from .reports import BoundReport, ReportDocument
from .series import QSeries

__version__ = "0.1.0"

__all__ = [
    "BoundConfiguration",
    "BoundReport",
    "DisplayedBounds",
    "EchelonBasis",
    "EnvelopeDefaults",
    "FormDescriptor",
    "FormRegistry",
    "QSeries",
    "ReportDocument",
    "RigorDefaults",
    "echelon_basis",
    "expand_linear_combo",
    "miller_basis",
]
