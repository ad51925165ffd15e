"""Cross-checks between the argumentation framework and the classical oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .framework import AbstractDecisionFramework, acceptable_alternatives, better
from .oracle import (
    ChoiceStructure,
    EnumerationCapError,
    PreferenceRelation,
    c_star,
    comparisons_from_scores,
    is_rational,
    lex_preference,
    nonempty_subsets,
    warp_violations,
)
from .scenario import Scenario, to_framework


def scenario_comparisons(s: Scenario) -> dict[tuple[str, str, str], int]:
    """Oracle-side pairwise comparisons, computed straight from the scenario.

    Geometric criteria compare raw attributes (lower is better). For raw
    scenarios a fact ``c(x,y)`` means x wins on c; an absent fact is a tie.
    """
    out = {}
    if s.mode == "geometric":
        def attr(box, crit):
            if crit == "smaller":
                return box.size
            ref = s.robot if crit == "nearer_robot" else s.store
            return (box.pos.x - ref.x) ** 2 + (box.pos.y - ref.y) ** 2

        for a, b in itertools.permutations(s.boxes, 2):
            for crit in s.criteria:
                va, vb = attr(a, crit), attr(b, crit)
                out[(crit, a.id, b.id)] = (va < vb) - (va > vb)
        return out
    wins = {(f.predicate, *f.args) for f in s.facts if not f.negated and len(f.args) == 2}
    for a, b in itertools.permutations(s.alternatives, 2):
        for crit in s.criteria:
            out[(crit, a, b)] = ((crit, a, b) in wins) - ((crit, b, a) in wins)
    return out


def induced_relation(adf: AbstractDecisionFramework) -> PreferenceRelation:
    """``x >= y`` iff better(x,y) is justified or neither is justifiably better."""
    j = adf.epistemic.justified
    alts = sorted(adf.alternatives)
    weak = {(x, x) for x in alts}
    for x, y in itertools.permutations(alts, 2):
        if better(x, y) in j or (better(x, y, True) in j and better(y, x, True) in j):
            weak.add((x, y))
    return PreferenceRelation(frozenset(alts), frozenset(weak))


def pairwise_outcomes(adf: AbstractDecisionFramework, x: str, y: str) -> tuple[bool, bool, bool]:
    """(x wins, y wins, tie) read off the justified conclusions."""
    j = adf.epistemic.justified
    return (
        better(x, y) in j and better(y, x, True) in j,
        better(y, x) in j and better(x, y, True) in j,
        better(x, y, True) in j and better(y, x, True) in j,
    )


@dataclass
class CheckReport:
    rationality: list[str] = field(default_factory=list)
    optimality: list[str] = field(default_factory=list)
    warp: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.rationality or self.optimality or self.warp)

    def lines(self) -> list[str]:
        return self.rationality + self.optimality + self.warp


def check_framework(adf: AbstractDecisionFramework, oracle: PreferenceRelation, cap: int = 12) -> CheckReport:
    """Compare the framework's choices with preference maximization under ``oracle``."""
    report = CheckReport()
    alts = sorted(adf.alternatives)
    if len(alts) > cap:
        raise EnumerationCapError(f"{len(alts)} alternatives exceed the enumeration cap of {cap}")
    induced = induced_relation(adf)
    if not is_rational(induced, alts):
        report.rationality.append("induced relation is not complete and transitive")
    for x, y in itertools.combinations(alts, 2):
        n = sum(pairwise_outcomes(adf, x, y))
        if n != 1:
            report.rationality.append(f"{x} vs {y}: {n} pairwise outcomes hold")
    choices = {}
    for b in nonempty_subsets(alts):
        got = acceptable_alternatives(adf, b)
        want = c_star(b, oracle)
        if got != want:
            report.optimality.append(f"B={sorted(b)}: framework chose {sorted(got)}, optimum is {sorted(want)}")
        if got:
            choices[b] = got
        else:
            report.warp.append(f"B={sorted(b)}: empty choice")
    for x, y, b1, b2 in warp_violations(ChoiceStructure(choices))[:10]:
        report.warp.append(f"WARP: {x} chosen with {y} in {sorted(b1)} but only {y} in {sorted(b2)}")
    return report


def check_scenario(s: Scenario) -> CheckReport:
    adf = to_framework(s)
    return check_framework(adf, lex_preference(scenario_comparisons(s), s.order, s.ids))


def oracle_for_case(case) -> PreferenceRelation:
    comps = comparisons_from_scores(case.scores, case.criteria)
    return lex_preference(comps, case.order, case.alternatives)
