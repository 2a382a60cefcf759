"""Interval-valued uncertainty measures and their pointwise calculus.

The scalar object of this package is a pair of bounds ``[left, right]``
attached to an event: ``left`` is the least degree of belief that the event
occurs, ``right`` the greatest.  A classical probability is the degenerate
case ``left == right``.  This module provides the value type plus every
pointwise operation the rest of the package builds on: endpoint-wise
arithmetic, complement, orientation helpers, the uncertainty degree, the
neighbourhood test and the seven-way order classifier.

Arithmetic here is deliberately endpoint-wise,

    [a1, b1] * [a2, b2] = [a1 * a2, b1 * b2]

and likewise for the other operations, pairing lower with lower and upper
with upper.  That is not the min/max convention of classical interval
arithmetic, and the two disagree on signed inputs.  No min/max mode is
offered, so results from the two conventions cannot be silently mixed.

Subtraction and division may produce an *inverse* interval whose left bound
exceeds its right one.  Inverse intervals are legal values: they keep the
information about which bound came from which side.  Operations that need a
proper interval (``gud``, ``compare``, ``delta_neighbour``) say so and
refuse inverse input; use :func:`normalize` first when only the enclosure
matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from typing import Sequence, Union

from .errors import IntervalError

#: Comparison slack used by every tolerance-aware predicate in the package.
DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class GUInterval:
    """An interval-valued measure or payoff aggregate ``[left, right]``.

    Instances are immutable and safe to share between threads.  Endpoints
    must be finite; beyond that the full real line is allowed, because
    arithmetic on measures quickly leaves ``[0, 1]`` (expected values,
    centred moments).  Use :attr:`is_measure_valid` where the unit range
    is actually required.
    """

    left: float
    right: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", float(self.left))
        object.__setattr__(self, "right", float(self.right))
        if not (math.isfinite(self.left) and math.isfinite(self.right)):
            raise IntervalError(
                f"interval endpoints must be finite, got [{self.left}, {self.right}]"
            )

    @property
    def is_proper(self) -> bool:
        """True when ``left <= right`` (the usual orientation)."""
        return self.left <= self.right

    @property
    def is_measure_valid(self) -> bool:
        """True when the interval is proper and contained in ``[0, 1]``."""
        return 0.0 <= self.left <= self.right <= 1.0

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.left + self.right)

    def __str__(self) -> str:
        return f"[{self.left:g}, {self.right:g}]"

    # Endpoint-wise operator sugar.  The named functions below are the
    # documented surface; these simply delegate.

    def __add__(self, other: "GUInterval") -> "GUInterval":
        if not isinstance(other, GUInterval):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "GUInterval") -> "GUInterval":
        if not isinstance(other, GUInterval):
            return NotImplemented
        return sub(self, other)

    def __mul__(self, other: "GUInterval") -> "GUInterval":
        if not isinstance(other, GUInterval):
            return NotImplemented
        return mul(self, other)

    def __truediv__(self, other: "GUInterval") -> "GUInterval":
        if not isinstance(other, GUInterval):
            return NotImplemented
        return div(self, other)


#: Anything :func:`as_interval` accepts: an interval or a two-item sequence.
IntervalLike = Union[GUInterval, Sequence[float]]


def as_interval(value: IntervalLike) -> GUInterval:
    """Coerce ``value`` to a :class:`GUInterval`.

    Accepts an existing interval (returned unchanged) or any two-item
    sequence of numbers, which is how intervals arrive from JSON.
    """
    if isinstance(value, GUInterval):
        return value
    try:
        left, right = value
    except (TypeError, ValueError) as exc:
        raise IntervalError(f"cannot read {value!r} as an interval") from exc
    return GUInterval(float(left), float(right))


def add(i1: GUInterval, i2: GUInterval) -> GUInterval:
    return GUInterval(i1.left + i2.left, i1.right + i2.right)


def sub(i1: GUInterval, i2: GUInterval) -> GUInterval:
    """Endpoint-wise difference.  May produce an inverse interval, e.g.
    ``sub([0.3, 0.4], [0.1, 0.3]) == [0.2, 0.1]``."""
    return GUInterval(i1.left - i2.left, i1.right - i2.right)


def mul(i1: GUInterval, i2: GUInterval) -> GUInterval:
    return GUInterval(i1.left * i2.left, i1.right * i2.right)


def div(i1: GUInterval, i2: GUInterval) -> GUInterval:
    """Endpoint-wise quotient.  Both denominator endpoints must be nonzero;
    pairing is strictly left/left and right/right, so a zero on either side
    would poison its own endpoint."""
    if i2.left == 0.0 or i2.right == 0.0:
        raise IntervalError(
            "division requires both denominator endpoints to be nonzero, "
            f"got denominator {i2}"
        )
    return GUInterval(i1.left / i2.left, i1.right / i2.right)


_ARITH = {"add": add, "sub": sub, "mul": mul, "div": div}


def arith(op: str, i1: GUInterval, i2: GUInterval) -> GUInterval:
    """Dispatch ``op`` in ``{"add", "sub", "mul", "div"}`` by name."""
    try:
        fn = _ARITH[op]
    except KeyError:
        raise IntervalError(
            f"unknown arithmetic operation {op!r}; expected one of {sorted(_ARITH)}"
        ) from None
    return fn(i1, i2)


def inverse(i: GUInterval) -> GUInterval:
    """Swap the endpoints.  Applied twice this is the identity."""
    return GUInterval(i.right, i.left)


def normalize(i: GUInterval) -> GUInterval:
    """Return the proper version of ``i`` (endpoints in ascending order)."""
    return i if i.left <= i.right else GUInterval(i.right, i.left)


def complement(i: GUInterval) -> GUInterval:
    """Measure of the complementary event, ``[1 - left, 1 - right]``.

    The result is an inverse interval whenever ``i`` is proper and
    non-degenerate, which is intentional: the greatest belief in "not A"
    comes from the least belief in "A".  Inverse input is accepted for the
    same reason, so complementing twice is the identity; only the unit
    range is required of the endpoints.
    """
    if not (0.0 <= i.left <= 1.0 and 0.0 <= i.right <= 1.0):
        raise IntervalError(f"complement needs endpoints inside [0, 1], got {i}")
    return GUInterval(1.0 - i.left, 1.0 - i.right)


def gud(i: GUInterval) -> float:
    """Generalized uncertainty degree: the width ``right - left``.

    Zero exactly when the interval is degenerate, i.e. a classical
    probability.  Refuses inverse intervals; normalize first if a bare
    enclosure width is wanted.
    """
    if not i.is_proper:
        raise IntervalError(f"uncertainty degree needs a proper interval, got {i}")
    return i.right - i.left


def delta_neighbour(i1: GUInterval, i2: GUInterval, delta: float) -> bool:
    """True when both endpoint gaps are at most ``delta``.

    The test is symmetric, reflexive for any ``delta >= 0``, and monotone
    in ``delta``.  It is *not* transitive, which is why the classing
    algorithm built on it fixes a pivot per class.
    """
    if delta < 0.0:
        raise IntervalError(f"delta must be nonnegative, got {delta}")
    for i in (i1, i2):
        if not i.is_proper:
            raise IntervalError(f"delta neighbourhood needs proper intervals, got {i}")
    return abs(i1.left - i2.left) <= delta and abs(i1.right - i2.right) <= delta


@unique
class Relation(Enum):
    """Outcome of the seven-way interval order classifier."""

    EQUAL = "Equal"
    STRONGLY_SMALLER = "StronglySmaller"
    STRONGLY_GREATER = "StronglyGreater"
    PARTLY_SMALLER = "PartlySmaller"
    PARTLY_GREATER = "PartlyGreater"
    WEAKLY_SMALLER = "WeaklySmaller"
    WEAKLY_GREATER = "WeaklyGreater"

    @property
    def mirrored(self) -> "Relation":
        """The verdict with the argument order flipped."""
        return _MIRROR[self]

    @property
    def is_greater(self) -> bool:
        return self in (
            Relation.STRONGLY_GREATER,
            Relation.WEAKLY_GREATER,
            Relation.PARTLY_GREATER,
        )

    @property
    def is_smaller(self) -> bool:
        return self in (
            Relation.STRONGLY_SMALLER,
            Relation.WEAKLY_SMALLER,
            Relation.PARTLY_SMALLER,
        )


_MIRROR = {
    Relation.EQUAL: Relation.EQUAL,
    Relation.STRONGLY_SMALLER: Relation.STRONGLY_GREATER,
    Relation.STRONGLY_GREATER: Relation.STRONGLY_SMALLER,
    Relation.PARTLY_SMALLER: Relation.PARTLY_GREATER,
    Relation.PARTLY_GREATER: Relation.PARTLY_SMALLER,
    Relation.WEAKLY_SMALLER: Relation.WEAKLY_GREATER,
    Relation.WEAKLY_GREATER: Relation.WEAKLY_SMALLER,
}


def _lt(x: float, y: float, tol: float) -> bool:
    """x < y beyond the tolerance."""
    return y - x > tol


def _le(x: float, y: float, tol: float) -> bool:
    """x <= y up to the tolerance."""
    return x - y <= tol


def compare(i1: GUInterval, i2: GUInterval, tol: float = DEFAULT_TOLERANCE) -> Relation:
    """Classify the order of two proper intervals.

    Checks run in a fixed precedence and the first hit wins, so exactly one
    tag comes back for every pair:

    1. ``Equal``             both endpoint gaps within ``tol``.
    2. ``StronglySmaller``   ``right1 < left2``: the intervals are separated,
       every value of the first sits below every value of the second.
       ``StronglyGreater`` is the mirror image.
    3. ``PartlySmaller``     ``left1 > left2`` and ``right1 <= right2``: the
       first interval starts strictly inside the second and does not reach
       past it, a containment rather than a ranking.  ``PartlyGreater``
       mirrors it (the first properly contains the second).
    4. ``WeaklySmaller``     ``left1 <= left2`` and ``right1 <= right2``:
       both bounds shifted the same way.  ``WeaklyGreater`` mirrors it.

    Strict tests mean "beyond ``tol``", loose ones "up to ``tol``".  The
    containment branch requires the left endpoint to move strictly: an
    interval sharing its left bound with a longer one counts as weakly
    smaller, not as contained.  That keeps the classifier consistent with
    measure monotonicity, where growing an event may leave the lower bound
    in place and must never read as containment.
    """
    for i in (i1, i2):
        if not i.is_proper:
            raise IntervalError(f"comparison needs proper intervals, got {i}")
    if tol < 0.0:
        raise IntervalError(f"tolerance must be nonnegative, got {tol}")
    a1, b1 = i1.left, i1.right
    a2, b2 = i2.left, i2.right
    eq_left = abs(a1 - a2) <= tol
    eq_right = abs(b1 - b2) <= tol
    if eq_left and eq_right:
        return Relation.EQUAL
    if _lt(b1, a2, tol):
        return Relation.STRONGLY_SMALLER
    if _lt(b2, a1, tol):
        return Relation.STRONGLY_GREATER
    if _lt(a2, a1, tol) and _le(b1, b2, tol):
        return Relation.PARTLY_SMALLER
    if _lt(a1, a2, tol) and _le(b2, b1, tol):
        return Relation.PARTLY_GREATER
    if _le(a1, a2, tol) and _le(b1, b2, tol):
        return Relation.WEAKLY_SMALLER
    return Relation.WEAKLY_GREATER


@unique
class SystemOrder(Enum):
    """How the uncertainty of a second system relates to a first one."""

    HIGHER = "Higher"
    LOWER = "Lower"
    INCOMPARABLE = "Incomparable"


def uncertainty_order(
    i1: GUInterval, i2: GUInterval, tol: float = DEFAULT_TOLERANCE
) -> SystemOrder:
    """Rank the uncertainty carried by two systems' measures.

    The second system counts as higher-order uncertain than the first when
    its measure is strongly greater, lower-order when strongly smaller.
    Anything short of strong separation is reported as incomparable rather
    than forced into a ranking.
    """
    rel = compare(i2, i1, tol)
    if rel is Relation.STRONGLY_GREATER:
        return SystemOrder.HIGHER
    if rel is Relation.STRONGLY_SMALLER:
        return SystemOrder.LOWER
    return SystemOrder.INCOMPARABLE
