"""Expected-utility decision analysis under interval-valued beliefs.

A decision problem pairs nature statuses, each carrying an interval
measure, with schemes whose payoff rows are indexed by those statuses.
Each scheme earns a generalized expected utility (GEU): the payoff-
weighted endpoint sums of the status measures.  Selection then runs in
three stages:

1. a scheme strongly greater than every rival wins outright;
2. failing that, a scheme at least weakly greater than every rival wins;
3. failing that, schemes not dominated (strongly or weakly) by anyone
   survive, and the risk attitude picks among them: an averse decision
   maker takes the smallest uncertainty degree, a seeking one the
   largest.  Ties go to the earliest scheme in input order.

Containment verdicts never eliminate anyone: an interval nested inside
another ranks neither above nor below it, which is exactly the situation
the attitude stage exists for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from typing import Mapping, Sequence, Union

from .errors import AttitudeRequiredError, ValidationError
from .intervals import (
    DEFAULT_TOLERANCE,
    GUInterval,
    Relation,
    as_interval,
    compare,
    gud,
)

ATTITUDES = ("averse", "seeking")

_DOMINANT = (Relation.STRONGLY_GREATER, Relation.WEAKLY_GREATER)


@dataclass(frozen=True, slots=True)
class NatureStatus:
    """A possible state of the world with its interval measure."""

    name: str
    gum: GUInterval


@dataclass(frozen=True, slots=True)
class Scheme:
    """A course of action with one payoff per nature status."""

    name: str
    payoffs: tuple[float, ...]


@unique
class SelectionRationale(Enum):
    """Which stage of the procedure produced the selected scheme."""

    STRONGLY_ADVANTAGE = "StronglyAdvantage"
    WEAKLY_ADVANTAGE = "WeaklyAdvantage"
    RISK_AVERSE_MIN_GUD = "RiskAverseMinGud"
    RISK_SEEKING_MAX_GUD = "RiskSeekingMaxGud"


@dataclass(frozen=True, slots=True)
class ComparisonEntry:
    """One row of the running comparison column: how ``scheme`` relates to
    the best scheme seen before it."""

    scheme: str
    versus: str
    relation: Relation


@dataclass(frozen=True)
class DecisionProblem:
    natures: tuple[NatureStatus, ...]
    schemes: tuple[Scheme, ...]
    attitude: str | None = None
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        problems = []
        if not self.natures:
            problems.append("at least one nature status is required")
        if not self.schemes:
            problems.append("at least one scheme is required")
        names = [n.name for n in self.natures]
        if len(set(names)) != len(names):
            problems.append("nature status names must be unique")
        names = [s.name for s in self.schemes]
        if len(set(names)) != len(names):
            problems.append("scheme names must be unique")
        for n in self.natures:
            if not n.gum.is_measure_valid:
                problems.append(
                    f"status {n.name!r}: measure {n.gum} must lie inside [0, 1]"
                )
        for s in self.schemes:
            if len(s.payoffs) != len(self.natures):
                problems.append(
                    f"scheme {s.name!r} has {len(s.payoffs)} payoffs for "
                    f"{len(self.natures)} statuses"
                )
            for p in s.payoffs:
                if not math.isfinite(p) or p < 0.0:
                    problems.append(
                        f"scheme {s.name!r}: payoffs must be finite and "
                        f"nonnegative, got {p}"
                    )
                    break
        if self.attitude is not None and self.attitude not in ATTITUDES:
            problems.append(
                f"unknown attitude {self.attitude!r}; expected one of {ATTITUDES}"
            )
        if self.tolerance < 0.0:
            problems.append(f"tolerance must be nonnegative, got {self.tolerance}")
        if problems:
            raise ValidationError(problems)

    @classmethod
    def from_dict(
        cls,
        data: Mapping,
        attitude: str | None = None,
        tolerance: float = DEFAULT_TOLERANCE,
    ) -> "DecisionProblem":
        """Build from the JSON document shape::

            {"natures": [{"name": "Status 1", "gum": [0.1, 0.2]}, ...],
             "schemes": [{"name": "S1", "payoffs": [100, 80, 90]}, ...],
             "attitude": "averse"}

        An explicit ``attitude`` argument overrides the document's.
        """
        natures = tuple(
            NatureStatus(str(n["name"]), as_interval(n["gum"]))
            for n in data.get("natures", ())
        )
        schemes = tuple(
            Scheme(str(s["name"]), tuple(float(p) for p in s["payoffs"]))
            for s in data.get("schemes", ())
        )
        if attitude is None:
            attitude = data.get("attitude")
        return cls(natures, schemes, attitude=attitude, tolerance=tolerance)


def geu(
    payoffs: Sequence[float],
    natures: Sequence[Union[NatureStatus, GUInterval]],
) -> GUInterval:
    """Generalized expected utility of one payoff row.

    Endpoint sums ``[sum p_j * left_j, sum p_j * right_j]`` over the
    status measures, via ``math.fsum``.
    """
    measures = [n.gum if isinstance(n, NatureStatus) else as_interval(n) for n in natures]
    if len(payoffs) != len(measures):
        raise ValidationError(
            [f"{len(payoffs)} payoffs for {len(measures)} status measures"]
        )
    bad = [p for p in payoffs if not math.isfinite(p) or p < 0.0]
    if bad:
        raise ValidationError([f"payoffs must be finite and nonnegative, got {bad}"])
    return GUInterval(
        math.fsum(p * m.left for p, m in zip(payoffs, measures)),
        math.fsum(p * m.right for p, m in zip(payoffs, measures)),
    )


@dataclass(frozen=True)
class DecisionReport:
    """Everything the selection procedure concluded, in scheme input order.

    ``relations[i][j]`` classifies GEU(i) against GEU(j).  The comparison
    column mimics a hand-worked table: each scheme after the first is
    compared against the best scheme so far, and ``None`` marks the first
    row.  ``note`` is set when a tie had to be broken.
    """

    scheme_names: tuple[str, ...]
    geus: tuple[GUInterval, ...]
    relations: tuple[tuple[Relation, ...], ...]
    comparison_column: tuple[ComparisonEntry | None, ...]
    selected: str
    rationale: SelectionRationale
    attitude: str | None
    note: str | None = None

    @property
    def selected_index(self) -> int:
        return self.scheme_names.index(self.selected)


def relation_matrix(
    geus: Sequence[GUInterval], tol: float = DEFAULT_TOLERANCE
) -> tuple[tuple[Relation, ...], ...]:
    """Pairwise comparison table; the diagonal is ``Equal``."""
    return tuple(
        tuple(compare(gi, gj, tol) for gj in geus) for gi in geus
    )


def decide(problem: DecisionProblem) -> DecisionReport:
    """Run the full selection procedure on ``problem``.

    Raises :class:`~gutheory.errors.AttitudeRequiredError` when no scheme
    holds a strong or weak advantage and the problem carries no attitude.
    """
    tol = problem.tolerance
    geus = tuple(geu(s.payoffs, problem.natures) for s in problem.schemes)
    relations = relation_matrix(geus, tol)
    m = len(problem.schemes)
    note = None

    def wins(i: int, allowed: tuple[Relation, ...]) -> bool:
        return all(relations[i][j] in allowed for j in range(m) if j != i)

    selected = next(
        (i for i in range(m) if wins(i, (Relation.STRONGLY_GREATER,))), None
    )
    rationale = SelectionRationale.STRONGLY_ADVANTAGE
    if selected is None:
        selected = next((i for i in range(m) if wins(i, _DOMINANT)), None)
        rationale = SelectionRationale.WEAKLY_ADVANTAGE
    if selected is None:
        survivors = [
            i
            for i in range(m)
            if not any(relations[j][i] in _DOMINANT for j in range(m) if j != i)
        ]
        if not survivors:
            survivors = list(range(m))
        if problem.attitude is None:
            raise AttitudeRequiredError(
                "no scheme dominates; a risk attitude (averse or seeking) is "
                "needed to choose among " +
                ", ".join(problem.schemes[i].name for i in survivors)
            )
        widths = [gud(geus[i]) for i in survivors]
        target = min(widths) if problem.attitude == "averse" else max(widths)
        tied = [i for i, w in zip(survivors, widths) if abs(w - target) <= tol]
        selected = tied[0]
        rationale = (
            SelectionRationale.RISK_AVERSE_MIN_GUD
            if problem.attitude == "averse"
            else SelectionRationale.RISK_SEEKING_MAX_GUD
        )
        if len(tied) > 1:
            note = (
                "uncertainty degree tie between "
                + ", ".join(problem.schemes[i].name for i in tied)
                + "; earliest scheme kept"
            )

    column: list[ComparisonEntry | None] = [None]
    best = 0
    for i in range(1, m):
        rel = relations[i][best]
        column.append(
            ComparisonEntry(
                scheme=problem.schemes[i].name,
                versus=problem.schemes[best].name,
                relation=rel,
            )
        )
        if rel in _DOMINANT:
            best = i

    return DecisionReport(
        scheme_names=tuple(s.name for s in problem.schemes),
        geus=geus,
        relations=relations,
        comparison_column=tuple(column),
        selected=problem.schemes[selected].name,
        rationale=rationale,
        attitude=problem.attitude,
        note=note,
    )


# ---------------------------------------------------------------------------
# Presentation

_SYMBOLS = {
    Relation.EQUAL: "=",
    Relation.STRONGLY_SMALLER: "<",
    Relation.STRONGLY_GREATER: ">",
    Relation.WEAKLY_SMALLER: "≤",
    Relation.WEAKLY_GREATER: "≥",
    Relation.PARTLY_SMALLER: "⪯",
    Relation.PARTLY_GREATER: "⪰",
}


def _fmt(x: float) -> str:
    return f"{x:g}"


def _fmt_interval(iv: GUInterval) -> str:
    return f"[{_fmt(iv.left)},{_fmt(iv.right)}]"


def render_decision_table(problem: DecisionProblem, report: DecisionReport) -> str:
    """Plain-text table: one column per status, then GEU and comparison."""
    header = ["/"] + [n.name for n in problem.natures] + ["GEU", "Comparison"]
    rows = [header]
    rows.append(
        ["GUM"] + [_fmt_interval(n.gum) for n in problem.natures] + ["/", "/"]
    )
    index_of = {name: k for k, name in enumerate(report.scheme_names)}
    for i, scheme in enumerate(problem.schemes):
        entry = report.comparison_column[i]
        if entry is None:
            comparison = "/"
        else:
            comparison = (
                f"GEU{index_of[entry.scheme] + 1} "
                f"{_SYMBOLS[entry.relation]} GEU{index_of[entry.versus] + 1}"
            )
        rows.append(
            [scheme.name]
            + [_fmt(p) for p in scheme.payoffs]
            + [_fmt_interval(report.geus[i]), comparison]
        )
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    lines = [
        "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    lines.append("")
    lines.append(f"selected: {report.selected} ({report.rationale.value})")
    if report.attitude:
        lines.append(f"attitude: {report.attitude}")
    if report.note:
        lines.append(f"note: {report.note}")
    return "\n".join(lines)


def report_to_dict(report: DecisionReport) -> dict:
    """JSON-ready view of a report, stable key order."""
    return {
        "schemes": list(report.scheme_names),
        "geus": [[iv.left, iv.right] for iv in report.geus],
        "relations": [[rel.value for rel in row] for row in report.relations],
        "comparisons": [
            None
            if entry is None
            else {
                "scheme": entry.scheme,
                "versus": entry.versus,
                "relation": entry.relation.value,
            }
            for entry in report.comparison_column
        ],
        "selected": report.selected,
        "rationale": report.rationale.value,
        "attitude": report.attitude,
        "note": report.note,
    }
