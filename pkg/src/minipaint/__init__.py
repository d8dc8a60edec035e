"""Exact optimal painting plans and Free Flood-It sequences on cographs and co-gem-free graphs."""
from ._accel import JIT_ENABLED
from .equivalence import flood_to_plan, normalize_recursive, plan_to_flood
from .errors import CapacityError, InputError, MiniPaintError, ParseError, SearchExhaustedError, StrokeError
from .generators import generate
from .graph import (
    Graph,
    cogem_free_by_domination,
    cogem_witnesses,
    color_component,
    connected_components,
    dominating_edges,
    induced_p4s,
    is_cogem_free,
    is_cograph,
    is_connected,
    is_dominating,
    is_separator,
    minimal_separators,
)
from .io import Instance, parse_flood, parse_instance, parse_plan, serialize_flood, serialize_instance, serialize_plan
from .oracle import flood_optimum, plan_optimum, plan_space_optimum
from .painting import (
    CanonicalParams,
    FailureKind,
    FloodMove,
    PaintPlan,
    Stroke,
    VerificationReport,
    apply_flood_move,
    apply_stroke,
    color_lower_bound,
    finishing_index,
    is_canonical,
    is_maximal_canonical,
    is_recursive_plan,
    simulate_flood,
    simulate_plan,
    verify_canonical,
    verify_flood,
    verify_plan,
)
from .solvers import SolveConfig, SolveResult, combine, generate_heads, generate_tails, solve, solve_cograph, solve_with_report

__version__ = "0.1.0"
