"""Riemann solvers for Chaplygin-type gas models and their vanishing-pressure limits."""

from ._kernels import NUMBA_ENABLED
from .errors import (
    AccuracyError,
    BracketError,
    ChapgasError,
    DegenerateError,
    DomainError,
    DomainTooSmallError,
    NoDeltaShockError,
    NumericalLimitError,
    PositivityError,
    ScheduleError,
    UnsupportedComparisonError,
    UnsupportedModelError,
)
from .fvcheck import FieldSnapshot, GridConfig, Scheme, evolve, l1_error
from .limits import (
    Schedule,
    SweepMode,
    SweepReport,
    run_to_gcg_sweep,
    run_vacuum_sweep,
    run_vanishing_pressure_sweep,
    target_A_rho_n,
    target_gcg_delta,
    target_transport_delta,
    threshold_A0,
    threshold_A1,
)
from .models import (
    Model,
    PressureParams,
    State,
    eigenvalues,
    genuine_nonlinearity_indicator,
    pressure,
    sound_speed_sq,
)
from .numerics import ToleranceConfig, expand_bracket, find_root, integrate
from .solver import (
    DeltaShock,
    RiemannSolution,
    SamplePoint,
    SegmentKind,
    WaveSegment,
    delta_weight_at,
    sample,
    solve,
    solve_ecg,
    solve_gcg,
    solve_transport,
)
from .waves import (
    RegionECG,
    RegionGCG,
    WaveFamily,
    classify_ecg,
    classify_gcg,
    lax_check,
    rarefaction_u,
    shock_speed,
    shock_u,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BracketError",
    "ChapgasError",
    "DegenerateError",
    "DeltaShock",
    "DomainError",
    "DomainTooSmallError",
    "FieldSnapshot",
    "GridConfig",
    "Model",
    "NoDeltaShockError",
    "NUMBA_ENABLED",
    "NumericalLimitError",
    "PositivityError",
    "PressureParams",
    "RegionECG",
    "RegionGCG",
    "RiemannSolution",
    "SamplePoint",
    "Schedule",
    "ScheduleError",
    "Scheme",
    "SegmentKind",
    "State",
    "SweepMode",
    "SweepReport",
    "ToleranceConfig",
    "UnsupportedComparisonError",
    "UnsupportedModelError",
    "WaveFamily",
    "WaveSegment",
    "classify_ecg",
    "classify_gcg",
    "delta_weight_at",
    "eigenvalues",
    "evolve",
    "expand_bracket",
    "find_root",
    "genuine_nonlinearity_indicator",
    "integrate",
    "l1_error",
    "lax_check",
    "pressure",
    "rarefaction_u",
    "run_to_gcg_sweep",
    "run_vacuum_sweep",
    "run_vanishing_pressure_sweep",
    "sample",
    "shock_speed",
    "shock_u",
    "solve",
    "solve_ecg",
    "solve_gcg",
    "solve_transport",
    "sound_speed_sq",
    "target_A_rho_n",
    "target_gcg_delta",
    "target_transport_delta",
    "threshold_A0",
    "threshold_A1",
]
