"""Rational points of weighted projective spaces over small finite fields,
and fibers of the coordinate power maps between them."""

from .census import count_points, enumerate_space, t_set
from .ff import FieldSpec, field_of_order, make_field
from .fiber import (
    FiberReport,
    build_fiber_report,
    fiber_bruteforce,
    fiber_formula,
    fiber_formula_old,
    hypothesis_check,
    pi_map,
)
from .verify import (
    SweepConfig,
    SweepReport,
    check_valuation_identity,
    galois_crosscheck,
    reproduce_counterexample,
    run_sweep,
)
from .wps import WpsPoint, in_T_i, normalize, points_equal, scale, support

__version__ = "0.1.0"
