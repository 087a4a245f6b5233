"""Cost-optimal on/off planning for a heater with a bounded buffer."""

from .bounds import (
    Infeasible,
    PrefixBounds,
    RawBounds,
    canonical_feasible_schedule,
    check_feasible,
    prefix_bounds,
    raw_bounds,
    tighten,
)
from .greedy import BadPermutation, NaiveTracker, SolveReport, solve_greedy
from .model import (
    EvaluationReport,
    GeneratorParams,
    HeatingInstance,
    Schedule,
    evaluate_schedule,
    generate_instance,
    validate_instance,
)
from .oracle import solve_bruteforce, solve_dp
from .solvers import ALGORITHMS, solve

__version__ = "0.1.0"
