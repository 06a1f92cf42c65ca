"""Tableaux, Gelfand-Tsetlin patterns and the eigensteps of finite frames."""

from .common import PreconditionError, ValidationReport, Violation
from .tableaux import (
    Tableau,
    boxcomp,
    count_tableaux,
    enumerate_tableaux,
    gamma_complement,
    skew_to_straight,
    strip_to_skew,
    validate_tableau,
    weight_of,
)
from .gt import (
    GTPattern,
    canonical,
    equivalent,
    generalized_complement,
    gt_weight,
    lattice_points,
    naimark_map,
    parallelogram_to_triangular,
    triangular_to_parallelogram,
    validate_gt,
)
from .bridge import gt_to_skew, gt_to_ssyt, skew_to_gt, ssyt_to_gt, verify_boxcomp_diagram, verify_naimark_diagram
from .spectral import (
    Cleared,
    EigenstepTable,
    FrameReport,
    NotClearableError,
    clear,
    frame_report,
    inner_eigensteps,
    naimark_frame,
    outer_eigensteps,
)

__version__ = "0.1.0"
