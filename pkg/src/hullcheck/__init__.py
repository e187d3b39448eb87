"""Overlap checks and minimal overlapping configurations for binary-response data.

The top level re-exports the everyday entry points; the submodules hold
the full interface.
"""

from .dataset import Dataset, load_dataset
from .elcore import SolverOptions, el_solve
from .errors import HullcheckError
from .forms import make_equidistant, make_standard_type1, to_standard_form
from .minimal import Kind, deflate, removal_depths, verify_minimal
from .status import Status, classify, lp_separation

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "load_dataset",
    "SolverOptions",
    "el_solve",
    "HullcheckError",
    "Status",
    "classify",
    "lp_separation",
    "Kind",
    "deflate",
    "removal_depths",
    "verify_minimal",
    "to_standard_form",
    "make_standard_type1",
    "make_equidistant",
    "__version__",
]
