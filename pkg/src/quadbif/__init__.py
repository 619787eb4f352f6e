"""Quadratic map bifurcation diagrams and their floating-point artifacts."""

__version__ = "0.1.0"

from .analysis import (
    DivergenceReport,
    divergence_index,
    precision_sweep,
    predicted_divergence_index,
    shadow_compare,
)
from .bifurcation import (
    ConstantSeed,
    DiagramConfig,
    DiagramPoint,
    DiscardTransient,
    FirstIterateOnly,
    PreimageSeed,
    build_diagram,
    columns,
    diagram_distance,
)
from .errors import (
    ConfigError,
    DivisionByZero,
    DomainError,
    EmptyDiagramColumn,
    Escaped,
    NoRealFixedPoint,
    NoRealPreimage,
    ParseError,
    PrecisionMismatch,
    QuadBifError,
)
from .highprec import HPArithmetic, HPFloat, NativeDouble, arithmetic, parse_precision
from .kernels import BACKEND
from .map_core import (
    ConvergenceCheck,
    FixedPointPair,
    Orbit,
    SeedBranch,
    escape_threshold,
    fixed_point_residual,
    fixed_points,
    invariant_bound,
    iterate,
    one_step_convergence_check,
    preimages_of,
    quad_step,
    seed_initial_condition,
)
