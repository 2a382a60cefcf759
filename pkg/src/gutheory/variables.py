"""Uncertain variables with interval-valued laws, and their calculus.

Two families live here.  Discrete variables carry an interval mass per
support point and yield interval expectations and distribution values by
endpoint sums.  Function envelopes carry a pair of ordered cores (a lower
and an upper function) and yield interval answers to the usual calculus
questions: limits, derivatives, increments and integrals are computed per
core and bracketed.

Sums use ``math.fsum``; quadrature is the composite trapezoid rule on the
envelope's own grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import (
    ConfigurationError,
    ConvergenceError,
    EnvelopeError,
    IntervalError,
    NestingError,
    ValidationError,
)
from .intervals import (
    DEFAULT_TOLERANCE,
    GUInterval,
    IntervalLike,
    as_interval,
    gud,
    normalize,
)

_MODES = ("coherent", "strict")


def _law_violations(
    masses: Sequence[GUInterval], mode: str, tolerance: float, what: str
) -> list[str]:
    """Shared mass-law checks for discrete and joint variables."""
    problems = []
    bad = [i for i, m in enumerate(masses) if not m.is_measure_valid]
    if bad:
        problems.append(f"{what} at positions {bad} must lie inside [0, 1]")
        return problems
    low = math.fsum(m.left for m in masses)
    high = math.fsum(m.right for m in masses)
    if mode == "strict":
        if abs(low - 1.0) > tolerance or abs(high - 1.0) > tolerance:
            problems.append(
                f"strict mode requires both {what} sums to equal 1, got "
                f"{low:.12g} and {high:.12g}"
            )
    else:
        if low - 1.0 > tolerance:
            problems.append(f"lower {what} endpoints sum to {low:.12g}, exceeding 1")
        if 1.0 - high > tolerance:
            problems.append(
                f"upper {what} endpoints sum to {high:.12g}, falling short of 1"
            )
    return problems


def _values_violations(values: Sequence[float], what: str) -> list[str]:
    problems = []
    if any(not math.isfinite(v) for v in values):
        problems.append(f"{what} must be finite")
    elif any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
        problems.append(f"{what} must be strictly increasing")
    return problems


@dataclass(frozen=True)
class DiscreteGUVariable:
    """A variable on finitely many points with interval masses.

    ``values`` must be strictly increasing and ``masses`` aligned with
    them.  The mass law obeys the same coherent/strict discipline as
    measure spaces.
    """

    values: tuple[float, ...]
    masses: tuple[GUInterval, ...]
    mode: str = "coherent"
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        problems = []
        if not self.values:
            problems.append("the support is empty")
        if len(self.values) != len(self.masses):
            problems.append(
                f"{len(self.values)} values but {len(self.masses)} masses"
            )
        if self.mode not in _MODES:
            problems.append(f"unknown mode {self.mode!r}; expected one of {_MODES}")
        if self.tolerance < 0.0:
            problems.append(f"tolerance must be nonnegative, got {self.tolerance}")
        problems += _values_violations(self.values, "support values")
        if not problems:
            problems += _law_violations(self.masses, self.mode, self.tolerance, "mass")
        if problems:
            raise ValidationError(problems)

    @classmethod
    def from_dict(cls, data: Mapping, **overrides) -> "DiscreteGUVariable":
        """Build from ``{"values": [...], "masses": [[l, r], ...]}``."""
        kwargs = {"mode": data.get("mode", "coherent")}
        kwargs.update(overrides)
        return cls(
            values=tuple(float(v) for v in data.get("values", ())),
            masses=tuple(as_interval(m) for m in data.get("masses", ())),
            **kwargs,
        )

    def mass(self, x: float) -> GUInterval:
        """Interval mass at ``x``; ``[0, 0]`` off the support."""
        for v, m in zip(self.values, self.masses):
            if v == x:
                return m
        return GUInterval(0.0, 0.0)

    def distribution_at(self, x: float) -> GUInterval:
        """Cumulative interval law: endpoint sums of masses at points <= x.

        The sums are returned raw.  Below the support this is ``[0, 0]``;
        at or above the largest point it is the full mass total, whose
        upper endpoint may exceed 1 in coherent mode.
        """
        low = math.fsum(m.left for v, m in zip(self.values, self.masses) if v <= x)
        high = math.fsum(m.right for v, m in zip(self.values, self.masses) if v <= x)
        return GUInterval(low, high)

    def expectation(self) -> GUInterval:
        """Interval expected value ``[sum x*left, sum x*right]``.

        With negative support points the result can come out inverse;
        it is returned unnormalized so the endpoint provenance survives.
        """
        low = math.fsum(v * m.left for v, m in zip(self.values, self.masses))
        high = math.fsum(v * m.right for v, m in zip(self.values, self.masses))
        return GUInterval(low, high)

    @property
    def total(self) -> GUInterval:
        return GUInterval(
            math.fsum(m.left for m in self.masses),
            math.fsum(m.right for m in self.masses),
        )

    @property
    def is_degenerate(self) -> bool:
        return all(gud(m) <= self.tolerance for m in self.masses)


@dataclass(frozen=True)
class JointDiscreteGUVariable:
    """A pair of discrete variables with interval masses on the product grid.

    ``cells[i][j]`` is the mass of ``(row_values[i], col_values[j])``.  The
    coherence discipline applies to the grand total over all cells.
    """

    row_values: tuple[float, ...]
    col_values: tuple[float, ...]
    cells: tuple[tuple[GUInterval, ...], ...]
    mode: str = "coherent"
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        problems = []
        if not self.row_values or not self.col_values:
            problems.append("both supports must be non-empty")
        problems += _values_violations(self.row_values, "row values")
        problems += _values_violations(self.col_values, "column values")
        if len(self.cells) != len(self.row_values):
            problems.append(
                f"{len(self.row_values)} rows of values but {len(self.cells)} "
                "rows of cells"
            )
        elif any(len(row) != len(self.col_values) for row in self.cells):
            problems.append("every cell row must match the column support length")
        if self.mode not in _MODES:
            problems.append(f"unknown mode {self.mode!r}; expected one of {_MODES}")
        if not problems:
            flat = [m for row in self.cells for m in row]
            problems += _law_violations(flat, self.mode, self.tolerance, "cell mass")
        if problems:
            raise ValidationError(problems)

    def marginals(self) -> tuple[tuple[GUInterval, ...], tuple[GUInterval, ...]]:
        """Raw row and column mass sums.

        Returned as plain intervals rather than variables because a
        coherent joint law can give a marginal whose upper endpoint
        exceeds 1.
        """
        rows = tuple(
            GUInterval(
                math.fsum(m.left for m in row), math.fsum(m.right for m in row)
            )
            for row in self.cells
        )
        cols = tuple(
            GUInterval(
                math.fsum(row[j].left for row in self.cells),
                math.fsum(row[j].right for row in self.cells),
            )
            for j in range(len(self.col_values))
        )
        return rows, cols


class CovarianceResult(NamedTuple):
    """Normalized interval covariance plus a flag telling whether the raw
    endpoint computation came out inverse (left above right)."""

    interval: GUInterval
    was_inverse: bool


def covariance(joint: JointDiscreteGUVariable) -> CovarianceResult:
    """Interval covariance of a joint discrete variable.

    Marginal interval expectations are formed first; each support point is
    then centred endpoint-wise against them and the centred products are
    weighted by the cell masses, lower with lower and upper with upper.
    Centred products carry signs, so the raw result is frequently inverse;
    it is normalized and the orientation reported alongside.
    """
    rows, cols = joint.marginals()
    e1_low = math.fsum(x * m.left for x, m in zip(joint.row_values, rows))
    e1_high = math.fsum(x * m.right for x, m in zip(joint.row_values, rows))
    e2_low = math.fsum(y * m.left for y, m in zip(joint.col_values, cols))
    e2_high = math.fsum(y * m.right for y, m in zip(joint.col_values, cols))
    low = math.fsum(
        (x - e1_low) * (y - e2_low) * joint.cells[i][j].left
        for i, x in enumerate(joint.row_values)
        for j, y in enumerate(joint.col_values)
    )
    high = math.fsum(
        (x - e1_high) * (y - e2_high) * joint.cells[i][j].right
        for i, x in enumerate(joint.row_values)
        for j, y in enumerate(joint.col_values)
    )
    raw = GUInterval(low, high)
    return CovarianceResult(normalize(raw), not raw.is_proper)


# ---------------------------------------------------------------------------
# Function envelopes and their calculus


ENVELOPE_KINDS = ("free", "unit", "density")

_RANGE_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class GUFunctionEnvelope:
    """A pair of ordered cores bracketing an unknown function on a domain.

    ``lower(x) <= upper(x)`` must hold across the whole domain; this is
    checked on the envelope's grid at construction.  ``kind`` selects an
    additional range rule:

    * ``"free"``: no range constraint.
    * ``"unit"``: both cores stay inside ``[0, 1]``.
    * ``"density"``: both cores are nonnegative.

    ``resolution`` is the grid size used for validation, quadrature and
    finite differences.
    """

    lower: Callable[[float], float]
    upper: Callable[[float], float]
    domain: tuple[float, float]
    resolution: int = 1025
    kind: str = "free"

    def __post_init__(self) -> None:
        problems = []
        try:
            lo, hi = (float(v) for v in self.domain)
        except (TypeError, ValueError):
            raise ValidationError(
                [f"domain must be a pair of numbers, got {self.domain!r}"]
            ) from None
        object.__setattr__(self, "domain", (lo, hi))
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
            problems.append(f"domain must be a finite ordered pair, got {self.domain}")
        if self.resolution < 2:
            problems.append(f"resolution must be at least 2, got {self.resolution}")
        if self.kind not in ENVELOPE_KINDS:
            problems.append(
                f"unknown kind {self.kind!r}; expected one of {ENVELOPE_KINDS}"
            )
        if not problems:
            problems += self._core_violations()
        if problems:
            raise ValidationError(problems)

    def _core_violations(self) -> list[str]:
        problems = []
        for x in self.grid():
            try:
                f1, f2 = self.lower(x), self.upper(x)
            except Exception as exc:
                problems.append(f"core evaluation failed at x={x:.6g}: {exc}")
                return problems
            if not (math.isfinite(f1) and math.isfinite(f2)):
                problems.append(f"cores must be finite on the domain, failed at x={x:.6g}")
                return problems
            if f1 - f2 > _RANGE_SLACK:
                problems.append(
                    f"lower core exceeds upper core at x={x:.6g} "
                    f"({f1:.6g} > {f2:.6g})"
                )
                return problems
            if self.kind == "unit" and not (
                -_RANGE_SLACK <= f1 and f2 <= 1.0 + _RANGE_SLACK
            ):
                problems.append(f"unit envelope leaves [0, 1] at x={x:.6g}")
                return problems
            if self.kind == "density" and f1 < -_RANGE_SLACK:
                problems.append(f"density core is negative at x={x:.6g}")
                return problems
        return problems

    def grid(self, a: float | None = None, b: float | None = None) -> np.ndarray:
        """Evaluation grid of ``resolution`` points over ``[a, b]``
        (defaulting to the whole domain)."""
        lo = self.domain[0] if a is None else a
        hi = self.domain[1] if b is None else b
        return np.linspace(lo, hi, self.resolution)

    def _contains(self, x: float) -> bool:
        return self.domain[0] <= x <= self.domain[1]

    def _require(self, x: float, label: str) -> None:
        if not self._contains(x):
            raise EnvelopeError(
                f"{label} {x:.6g} lies outside the domain "
                f"[{self.domain[0]:.6g}, {self.domain[1]:.6g}]"
            )


def gu_limit(env: GUFunctionEnvelope, x0: float) -> GUInterval:
    """Interval limit of the envelope at ``x0``: each core's limit, taken
    as its value when that is finite and by grid approach otherwise."""
    env._require(x0, "limit point")
    return GUInterval(_core_limit(env, env.lower, x0), _core_limit(env, env.upper, x0))


def _core_limit(env: GUFunctionEnvelope, core: Callable[[float], float], x0: float) -> float:
    try:
        direct = core(x0)
    except Exception:
        direct = math.nan
    if math.isfinite(direct):
        return direct
    lo, hi = env.domain
    sides = []
    for sign in (-1.0, 1.0):
        if (sign < 0 and x0 <= lo) or (sign > 0 and x0 >= hi):
            continue
        h = (hi - lo) / 8.0
        previous = None
        for _ in range(60):
            x = x0 + sign * h
            if not env._contains(x):
                h *= 0.5
                continue
            try:
                v = core(x)
            except Exception:
                h *= 0.5
                continue
            if math.isfinite(v):
                if previous is not None and abs(v - previous) <= 1e-9:
                    sides.append(v)
                    break
                previous = v
            h *= 0.5
        else:
            raise ConvergenceError(
                f"core values do not settle while approaching x={x0:.6g}"
            )
    if not sides:
        raise ConvergenceError(f"no admissible approach direction at x={x0:.6g}")
    if len(sides) == 2 and abs(sides[0] - sides[1]) > 1e-6:
        raise ConvergenceError(
            f"one-sided limits disagree at x={x0:.6g}: {sides[0]:.6g} vs {sides[1]:.6g}"
        )
    return math.fsum(sides) / len(sides)


def gu_derivative(env: GUFunctionEnvelope, x0: float) -> GUInterval:
    """Interval derivative at ``x0``.

    Each core is differenced at the envelope's grid spacing, centrally
    where both neighbours fit in the domain and one-sided at the edges;
    the two slopes are then bracketed.
    """
    env._require(x0, "derivative point")
    lo, hi = env.domain
    h = (hi - lo) / (env.resolution - 1)

    def diff(core: Callable[[float], float]) -> float:
        if x0 - h >= lo and x0 + h <= hi:
            return (core(x0 + h) - core(x0 - h)) / (2.0 * h)
        if x0 + h <= hi:
            return (core(x0 + h) - core(x0)) / h
        return (core(x0) - core(x0 - h)) / h

    d1, d2 = diff(env.lower), diff(env.upper)
    return GUInterval(min(d1, d2), max(d1, d2))


def gu_variation(env: GUFunctionEnvelope, x0: float, delta: float) -> GUInterval:
    """Interval increment over ``[x0, x0 + delta]`` for ``delta > 0``.

    The least possible increment moves from the upper core down to the
    lower one, the greatest from the lower core up to the upper one, so
    the result is ``[lower(x0+d) - upper(x0), upper(x0+d) - lower(x0)]``.
    """
    if delta <= 0.0:
        raise EnvelopeError(f"variation needs a positive increment, got {delta}")
    env._require(x0, "variation point")
    env._require(x0 + delta, "variation endpoint")
    return GUInterval(
        env.lower(x0 + delta) - env.upper(x0),
        env.upper(x0 + delta) - env.lower(x0),
    )


def gu_integral(env: GUFunctionEnvelope, a: float, b: float) -> GUInterval:
    """Interval integral over ``[a, b]`` by the trapezoid rule on a fresh
    grid of ``resolution`` points."""
    env._require(a, "integration bound")
    env._require(b, "integration bound")
    if a > b:
        raise EnvelopeError(f"integration bounds are reversed: [{a:.6g}, {b:.6g}]")
    xs = env.grid(a, b)
    lows = np.array([env.lower(x) for x in xs])
    highs = np.array([env.upper(x) for x in xs])
    return GUInterval(float(np.trapezoid(lows, xs)), float(np.trapezoid(highs, xs)))


def gu_calculus(kind: str, env: GUFunctionEnvelope, at) -> GUInterval:
    """Uniform dispatch over the four envelope calculus operations.

    ``at`` is a point for ``"limit"`` and ``"derivative"``, an
    ``(x, delta)`` pair for ``"variation"`` and an ``(a, b)`` pair for
    ``"integral"``.
    """
    if kind in ("limit", "derivative"):
        try:
            x0 = float(at)
        except (TypeError, ValueError):
            raise ConfigurationError(f"{kind} expects a single point, got {at!r}") from None
        return gu_limit(env, x0) if kind == "limit" else gu_derivative(env, x0)
    if kind in ("variation", "integral"):
        try:
            first, second = (float(v) for v in at)
        except (TypeError, ValueError):
            raise ConfigurationError(f"{kind} expects a pair, got {at!r}") from None
        if kind == "variation":
            return gu_variation(env, first, second)
        return gu_integral(env, first, second)
    raise ConfigurationError(
        f"unknown calculus operation {kind!r}; expected limit, derivative, "
        "variation or integral"
    )


def density_expectation(env: GUFunctionEnvelope, tol: float = DEFAULT_TOLERANCE) -> GUInterval:
    """Interval expected value of a density envelope.

    Integrates the pointwise minimum and maximum of ``x * lower(x)`` and
    ``x * upper(x)`` over the domain, which handles sign changes without
    any case split.  Requires ``kind == "density"``.
    """
    if env.kind != "density":
        raise ConfigurationError(
            f"expected a density envelope, got kind {env.kind!r}"
        )
    if env.resolution < 3:
        raise ConfigurationError(
            f"resolution {env.resolution} is too coarse to integrate"
        )
    xs = env.grid()
    weighted_low = np.array([x * env.lower(x) for x in xs])
    weighted_high = np.array([x * env.upper(x) for x in xs])
    low = float(np.trapezoid(np.minimum(weighted_low, weighted_high), xs))
    high = float(np.trapezoid(np.maximum(weighted_low, weighted_high), xs))
    return GUInterval(low, high)


# ---------------------------------------------------------------------------
# Nested interval sequences


class NestedLimit(NamedTuple):
    """Limit read off a nested interval sequence: the midpoint of the last
    interval and half its width as the error bound."""

    estimate: float
    error_bound: float


def nested_limit(sequence: Iterable[IntervalLike]) -> NestedLimit:
    """Common-point estimate of a shrinking chain of closed intervals.

    Every interval must be proper and contained in its predecessor
    (:class:`~gutheory.errors.NestingError` reports the first offender).
    A chain longer than one element whose final width has not shrunk at
    all raises :class:`~gutheory.errors.ConvergenceError`; the estimate
    would carry no more information than the starting interval.
    """
    items = [as_interval(s) for s in sequence]
    if not items:
        raise IntervalError("cannot take the limit of an empty interval sequence")
    for k, iv in enumerate(items):
        if not iv.is_proper:
            raise IntervalError(f"interval {k} of the sequence is inverse: {iv}")
        if k and not (items[k - 1].left <= iv.left and iv.right <= items[k - 1].right):
            raise NestingError(
                k, f"interval {k} ({iv}) is not contained in interval {k - 1} "
                f"({items[k - 1]})"
            )
    last = items[-1]
    width = gud(last)
    if len(items) > 1 and width > 0.0 and width >= gud(items[0]):
        raise ConvergenceError(
            f"no width shrinkage across the sequence (first {gud(items[0]):.6g}, "
            f"last {width:.6g})"
        )
    return NestedLimit(last.midpoint, 0.5 * width)


# ---------------------------------------------------------------------------
# Processes


def _is_finite_number(t) -> bool:
    try:
        return math.isfinite(float(t))
    except (TypeError, ValueError):
        return False


@dataclass(frozen=True)
class GUProcess:
    """A time-indexed family of discrete uncertain variables."""

    variables: Mapping[float, DiscreteGUVariable]

    def __post_init__(self) -> None:
        if not self.variables:
            raise ValidationError(["a process needs at least one time point"])
        object.__setattr__(self, "variables", dict(self.variables))
        bad = [t for t in self.variables if not _is_finite_number(t)]
        if bad:
            raise ValidationError([f"time points must be finite numbers: {bad}"])

    @property
    def times(self) -> tuple[float, ...]:
        return tuple(sorted(self.variables))

    def at(self, t: float) -> DiscreteGUVariable:
        try:
            return self.variables[t]
        except KeyError:
            raise KeyError(f"no variable at time {t!r}") from None


# ---------------------------------------------------------------------------
# Config-driven cores and envelopes


def core_from_config(config: Mapping) -> Callable[[float], float]:
    """Build a core function from a small JSON-style description.

    Supported shapes::

        {"type": "constant", "value": 1.0}
        {"type": "linear", "slope": 2.0, "intercept": 0.5}
        {"type": "polynomial", "coefficients": [c0, c1, c2, ...]}

    Polynomial coefficients are ascending (``c0 + c1*x + c2*x**2 ...``).
    """
    try:
        kind = config["type"]
    except (TypeError, KeyError):
        raise ConfigurationError(f"core description needs a 'type': {config!r}") from None
    try:
        if kind == "constant":
            value = float(config["value"])
            return lambda x: value
        if kind == "linear":
            slope, intercept = float(config["slope"]), float(config["intercept"])
            return lambda x: slope * x + intercept
        if kind == "polynomial":
            coeffs = tuple(float(c) for c in config["coefficients"])
            if not coeffs:
                raise ConfigurationError("polynomial core needs coefficients")

            def poly(x: float) -> float:
                acc = 0.0
                for c in reversed(coeffs):
                    acc = acc * x + c
                return acc

            return poly
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"bad core description {config!r}: {exc}") from None
    raise ConfigurationError(f"unknown core type {kind!r}")


def envelope_from_config(config: Mapping) -> GUFunctionEnvelope:
    """Build an envelope from ``{"lower": core, "upper": core,
    "domain": [a, b], "resolution"?, "kind"?}``."""
    try:
        lower = core_from_config(config["lower"])
        upper = core_from_config(config["upper"])
        a, b = (float(v) for v in config["domain"])
    except (TypeError, KeyError, ValueError) as exc:
        raise ConfigurationError(f"bad envelope description: {exc}") from None
    return GUFunctionEnvelope(
        lower=lower,
        upper=upper,
        domain=(a, b),
        resolution=int(config.get("resolution", 1025)),
        kind=config.get("kind", "free"),
    )
