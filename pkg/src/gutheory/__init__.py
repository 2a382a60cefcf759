"""Interval-valued uncertainty: measures, variables, and decisions.

Belief about an event is carried as a pair of bounds ``[left, right]``
instead of a single probability.  The package provides the arithmetic and
ordering of such bounds, finite measure spaces built from them, discrete
variables and function envelopes with an interval calculus, mixture
sequence generation with neighbourhood classing, and an expected-utility
decision procedure, all exposed through the ``gut`` command line as well.
"""

from .algorithms import DistributionSpec, GUSequence, classify, generate_sequence
from .decisions import (
    ComparisonEntry,
    DecisionProblem,
    DecisionReport,
    NatureStatus,
    Scheme,
    SelectionRationale,
    decide,
    geu,
    relation_matrix,
    render_decision_table,
    report_to_dict,
)
from .errors import (
    AttitudeRequiredError,
    ConditioningError,
    ConfigurationError,
    ConvergenceError,
    DegeneracyError,
    EnvelopeError,
    EventError,
    GutError,
    IntervalError,
    NestingError,
    ValidationError,
)
from .intervals import (
    DEFAULT_TOLERANCE,
    GUInterval,
    Relation,
    SystemOrder,
    add,
    arith,
    as_interval,
    compare,
    complement,
    delta_neighbour,
    div,
    gud,
    inverse,
    mul,
    normalize,
    sub,
    uncertainty_order,
)
from .spaces import GUMeasureSpace, axiom_violations, build_space
from .variables import (
    CovarianceResult,
    DiscreteGUVariable,
    GUFunctionEnvelope,
    GUProcess,
    JointDiscreteGUVariable,
    NestedLimit,
    core_from_config,
    covariance,
    density_expectation,
    envelope_from_config,
    gu_calculus,
    gu_derivative,
    gu_integral,
    gu_limit,
    gu_variation,
    nested_limit,
)

__version__ = "0.1.0"

__all__ = [
    "AttitudeRequiredError",
    "ComparisonEntry",
    "ConditioningError",
    "ConfigurationError",
    "ConvergenceError",
    "CovarianceResult",
    "DEFAULT_TOLERANCE",
    "DecisionProblem",
    "DecisionReport",
    "DegeneracyError",
    "DiscreteGUVariable",
    "DistributionSpec",
    "EnvelopeError",
    "EventError",
    "GUFunctionEnvelope",
    "GUInterval",
    "GUMeasureSpace",
    "GUProcess",
    "GUSequence",
    "GutError",
    "IntervalError",
    "JointDiscreteGUVariable",
    "NatureStatus",
    "NestedLimit",
    "NestingError",
    "Relation",
    "Scheme",
    "SelectionRationale",
    "SystemOrder",
    "ValidationError",
    "add",
    "arith",
    "as_interval",
    "axiom_violations",
    "build_space",
    "classify",
    "compare",
    "complement",
    "core_from_config",
    "covariance",
    "decide",
    "delta_neighbour",
    "density_expectation",
    "div",
    "envelope_from_config",
    "generate_sequence",
    "geu",
    "gu_calculus",
    "gu_derivative",
    "gu_integral",
    "gu_limit",
    "gu_variation",
    "gud",
    "inverse",
    "mul",
    "nested_limit",
    "normalize",
    "relation_matrix",
    "render_decision_table",
    "report_to_dict",
    "sub",
    "uncertainty_order",
]
