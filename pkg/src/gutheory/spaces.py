"""Finite spaces of interval-valued measures over named atoms.

A space fixes a finite set of elementary outcomes (atoms), assigns each an
interval measure, and answers event queries by adding atom intervals
endpoint-wise.  Events are plain iterables of atom names; there is no
wrapper class.

Two validation modes exist because interval assignments rarely satisfy the
scalar normalization ``sum == 1`` on both endpoints at once:

``"coherent"`` (default)
    Lower endpoints may sum to at most 1 and upper endpoints to at least 1.
    The bounds then bracket at least one classical probability vector.  The
    full space has measure ``[1, 1]`` by axiom and composite sums are
    clipped back into ``[0, 1]``.

``"strict"``
    Both endpoint sums must equal 1 (within tolerance).  Together with the
    per-atom ordering this forces every atom interval to be degenerate up
    to tolerance, so strict spaces are finite probability distributions in
    all but name.  The mode exists for callers who want that collapse
    enforced at the door.

All endpoint sums go through ``math.fsum`` so results do not depend on
atom enumeration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    ConditioningError,
    DegeneracyError,
    EventError,
    ValidationError,
)
from .intervals import (
    DEFAULT_TOLERANCE,
    GUInterval,
    IntervalLike,
    add,
    as_interval,
    div,
    gud,
    mul,
    sub,
)

MODES = ("coherent", "strict")

#: Default ceiling on the atom count; event queries are linear in it, but
#: callers enumerating subsets will not thank us for allowing thousands.
MAX_ATOMS = 64


def axiom_violations(
    atoms: Iterable[str],
    assignment: Mapping[str, IntervalLike],
    mode: str = "coherent",
    tolerance: float = DEFAULT_TOLERANCE,
    max_atoms: int = MAX_ATOMS,
) -> tuple[str, ...]:
    """Check a proposed space against every construction rule at once.

    Returns one message per broken rule and an empty tuple for a valid
    space.  Collecting everything in one pass is what lets the command
    line report a full diagnosis instead of the first failure.
    """
    problems: list[str] = []
    atoms = tuple(atoms)

    if not atoms:
        problems.append("the atom list is empty")
    if len(set(atoms)) != len(atoms):
        seen: set[str] = set()
        dupes = sorted({a for a in atoms if a in seen or seen.add(a)})
        problems.append(f"duplicate atoms: {dupes}")
    if len(atoms) > max_atoms:
        problems.append(f"{len(atoms)} atoms exceed the limit of {max_atoms}")
    for a in atoms:
        if not isinstance(a, str) or not a:
            problems.append(f"atom names must be non-empty strings, got {a!r}")

    missing = [a for a in atoms if a not in assignment]
    if missing:
        problems.append(f"atoms without a measure: {missing}")
    extra = sorted(set(assignment) - set(atoms))
    if extra:
        problems.append(f"measures for unknown atoms: {extra}")

    if mode not in MODES:
        problems.append(f"unknown mode {mode!r}; expected one of {MODES}")
    if not (isinstance(tolerance, (int, float)) and tolerance >= 0.0):
        problems.append(f"tolerance must be nonnegative, got {tolerance!r}")
        tolerance = DEFAULT_TOLERANCE

    usable: dict[str, GUInterval] = {}
    for a in atoms:
        if a not in assignment:
            continue
        try:
            iv = as_interval(assignment[a])
        except Exception:
            problems.append(f"atom {a!r}: {assignment[a]!r} is not an interval")
            continue
        if not iv.is_measure_valid:
            problems.append(
                f"atom {a!r}: measure {iv} must satisfy 0 <= left <= right <= 1"
            )
            continue
        usable[a] = iv

    if not problems and usable:
        low = math.fsum(iv.left for iv in usable.values())
        high = math.fsum(iv.right for iv in usable.values())
        if mode == "strict":
            if abs(low - 1.0) > tolerance or abs(high - 1.0) > tolerance:
                problems.append(
                    "strict mode requires both endpoint sums to equal 1, got "
                    f"left sum {low:.12g} and right sum {high:.12g}"
                )
        else:
            if low - 1.0 > tolerance:
                problems.append(
                    f"lower endpoints sum to {low:.12g}, which exceeds 1"
                )
            if 1.0 - high > tolerance:
                problems.append(
                    f"upper endpoints sum to {high:.12g}, which falls short of 1"
                )
    return tuple(problems)


@dataclass(frozen=True)
class GUMeasureSpace:
    """An immutable finite space of interval measures.

    Constructing one runs the full axiom check and raises
    :class:`~gutheory.errors.ValidationError` listing every violation.
    Prefer :func:`build_space`, which also coerces plain ``[left, right]``
    pairs.
    """

    atoms: tuple[str, ...]
    assignment: Mapping[str, GUInterval]
    mode: str = "coherent"
    tolerance: float = DEFAULT_TOLERANCE
    max_atoms: int = MAX_ATOMS

    def __post_init__(self) -> None:
        problems = axiom_violations(
            self.atoms, self.assignment, self.mode, self.tolerance, self.max_atoms
        )
        if problems:
            raise ValidationError(problems)

    @classmethod
    def from_dict(cls, data: Mapping, **overrides) -> "GUMeasureSpace":
        """Build from the JSON document shape::

            {"atoms": ["N1", ...], "gum": {"N1": [0.1, 0.2], ...},
             "mode": "coherent"}

        Keyword overrides (``mode``, ``tolerance``, ``max_atoms``) win over
        the document.
        """
        kwargs = {"mode": data.get("mode", "coherent")}
        kwargs.update(overrides)
        return build_space(data.get("atoms", ()), data.get("gum", {}), **kwargs)

    # -- event plumbing -------------------------------------------------

    def _members(self, event: Iterable[str]) -> frozenset[str]:
        members = frozenset(event)
        unknown = members.difference(self.atoms)
        if unknown:
            raise EventError(f"event names unknown atoms: {sorted(unknown)}")
        return members

    def _sum(self, members: frozenset[str]) -> GUInterval:
        lows = math.fsum(self.assignment[a].left for a in self.atoms if a in members)
        highs = math.fsum(self.assignment[a].right for a in self.atoms if a in members)
        return GUInterval(lows, highs)

    # -- queries --------------------------------------------------------

    def measure(self, event: Iterable[str]) -> GUInterval:
        """Interval measure of an event.

        The empty event is ``[0, 0]`` and the full space ``[1, 1]``, both
        axiomatic regardless of what the atom sums would give.  Other
        events are endpoint sums over their atoms; in coherent mode the
        sums are clipped into ``[0, 1]``.
        """
        members = self._members(event)
        if not members:
            return GUInterval(0.0, 0.0)
        if len(members) == len(self.atoms):
            return GUInterval(1.0, 1.0)
        raw = self._sum(members)
        if self.mode == "coherent":
            return GUInterval(_clip01(raw.left), _clip01(raw.right))
        return raw

    def measure_raw(self, event: Iterable[str]) -> GUInterval:
        """Plain endpoint sum over the event's atoms.

        No axiom for the empty or full event and no clipping.  This is the
        additive quantity the union identity is stated for.
        """
        return self._sum(self._members(event))

    def conditional(self, event: Iterable[str], given: Iterable[str]) -> GUInterval:
        """Measure of ``event`` conditional on ``given``.

        Defined as ``measure(event & given) / measure(given)`` with
        endpoint-wise division, so conditioning on the full space is the
        identity.  Both endpoints of ``measure(given)`` must be strictly
        positive.
        """
        a = self._members(event)
        b = self._members(given)
        mb = self.measure(b)
        if mb.left <= 0.0 or mb.right <= 0.0:
            raise ConditioningError(
                f"cannot condition on an event of measure {mb}; "
                "both endpoints must be positive"
            )
        return div(self.measure(a & b), mb)

    def independent(
        self, event_a: Iterable[str], event_b: Iterable[str], tol: float | None = None
    ) -> bool:
        """Test whether the joint measure factorizes endpoint-wise."""
        if tol is None:
            tol = self.tolerance
        a = self._members(event_a)
        b = self._members(event_b)
        joint = self.measure(a & b)
        product = mul(self.measure(a), self.measure(b))
        return (
            abs(joint.left - product.left) <= tol
            and abs(joint.right - product.right) <= tol
        )

    def union_measure(self, event_a: Iterable[str], event_b: Iterable[str]) -> GUInterval:
        """Unclipped inclusion-exclusion sum for two events.

        Computes ``raw(A) + raw(B) - raw(A & B)`` endpoint-wise, which by
        additivity equals ``measure_raw(A | B)``.
        """
        a = self._members(event_a)
        b = self._members(event_b)
        return sub(add(self._sum(a), self._sum(b)), self._sum(a & b))

    # -- whole-space views ---------------------------------------------

    @property
    def total(self) -> GUInterval:
        """Raw endpoint sums over all atoms (no axiom, no clipping)."""
        return self._sum(frozenset(self.atoms))

    @property
    def is_degenerate(self) -> bool:
        """True when every atom interval has width within tolerance."""
        return all(gud(iv) <= self.tolerance for iv in self.assignment.values())

    def collapse_to_probability(self) -> dict[str, float]:
        """Collapse a degenerate space to a scalar probability mapping.

        Every atom width must be within tolerance; the left endpoints are
        returned.  Raises :class:`~gutheory.errors.DegeneracyError` naming
        the offending atoms otherwise.
        """
        wide = [a for a in self.atoms if gud(self.assignment[a]) > self.tolerance]
        if wide:
            raise DegeneracyError(
                f"space is not degenerate; atoms with nonzero width: {wide}"
            )
        return {a: self.assignment[a].left for a in self.atoms}


def build_space(
    atoms: Iterable[str],
    assignment: Mapping[str, IntervalLike],
    mode: str = "coherent",
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    max_atoms: int = MAX_ATOMS,
) -> GUMeasureSpace:
    """Validate and build a measure space.

    ``assignment`` values may be intervals or plain ``[left, right]``
    pairs.  All violations are collected before anything is raised.
    """
    atoms = tuple(atoms)
    problems = axiom_violations(atoms, assignment, mode, tolerance, max_atoms)
    if problems:
        raise ValidationError(problems)
    coerced = {a: as_interval(assignment[a]) for a in atoms}
    return GUMeasureSpace(
        atoms=atoms,
        assignment=coerced,
        mode=mode,
        tolerance=tolerance,
        max_atoms=max_atoms,
    )


def _clip01(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x
