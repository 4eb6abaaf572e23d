"""Higher weights of the Grassmann codes C(2, m) via Schubert unions."""

from .engine import (
    ClosedFormMismatch,
    Method,
    WeightHierarchy,
    admissible_by_lemma,
    closed_form_dr,
    hierarchy,
    is_admissible,
    lr_choice,
    max_gamma,
    s_L,
    s_R,
)
from .grid import ColumnProfile, CornerSet, GridCoord, GridError, grid_from_corners
from .qpoly import QPoly, evaluate, g_profile, lex_cmp, n_points
from .tableau import StrictSubtableau, gamma, subtableaux_of_area

__version__ = "0.1.0"
