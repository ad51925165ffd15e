"""Argumentation-based decision framework over a set of alternatives.

The epistemic component is a DAF generated from the alternatives and the
comparison criteria: evidence facts ``c(x,y)`` ("x is preferred to y under
criterion c") and ``same_att(x,y)`` activate arguments for ``better`` and
``~better`` claims, and conflicts between them are settled by comparing the
criteria they rest on. Two decision rule schemas then select alternatives
from a choice experiment using the justified conclusions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Sequence

from .daf import (
    Argument,
    ArgStructure,
    ConflictRelation,
    DafInstance,
    Pref,
    WorkingSet,
    justified_conclusions,
    warranted_structures,
)
from .lang import EvidenceSet, InconsistentEvidenceError, Literal, make_evidence

BETTER = "better"
SAME_ATT = "same_att"
RESERVED = frozenset({BETTER, SAME_ATT})


class MalformedEvidenceError(ValueError):
    def __init__(self, fact: Literal, reason: str):
        self.fact = fact
        super().__init__(f"malformed evidence {fact}: {reason}")


class EmptyExperimentError(ValueError):
    pass


def better(x: str, y: str, negated: bool = False) -> Literal:
    return Literal(BETTER, (x, y), negated)


def same_att(x: str, y: str) -> Literal:
    """``same_att`` in canonical orientation (smaller id first)."""
    a, b = sorted((x, y))
    return Literal(SAME_ATT, (a, b))


@dataclass(frozen=True)
class AlternativeSet:
    ids: frozenset[str]

    def __post_init__(self):
        ids = frozenset(self.ids)
        object.__setattr__(self, "ids", ids)
        if not ids:
            raise ValueError("alternative set must be non-empty")
        bad = ids & RESERVED
        if bad:
            raise ValueError(f"reserved name used as alternative: {sorted(bad)}")

    def __iter__(self):
        return iter(sorted(self.ids))

    def __len__(self):
        return len(self.ids)

    def __contains__(self, item):
        return item in self.ids


@dataclass(frozen=True)
class CriterionSet:
    names: frozenset[str]

    def __post_init__(self):
        names = frozenset(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("criterion set must be non-empty")
        bad = names & RESERVED
        if bad:
            raise ValueError(f"reserved name used as criterion: {sorted(bad)}")

    def __iter__(self):
        return iter(sorted(self.names))

    def __len__(self):
        return len(self.names)

    def __contains__(self, item):
        return item in self.names


@dataclass(frozen=True)
class CriterionOrder:
    """Strict total order over criteria, most preferred first."""

    ranking: tuple[str, ...]

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if not ranking:
            raise ValueError("criterion order must be non-empty")
        if len(set(ranking)) != len(ranking):
            raise ValueError(f"criterion order repeats a criterion: {ranking}")

    @cached_property
    def _rank(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.ranking)}

    @property
    def criteria(self) -> CriterionSet:
        return CriterionSet(frozenset(self.ranking))

    def prefers(self, a: str, b: str) -> bool:
        """True iff criterion ``a`` is ranked strictly above ``b``."""
        r = self._rank
        return a in r and b in r and r[a] < r[b]

    def pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset((a, b) for i, a in enumerate(self.ranking) for b in self.ranking[i + 1:])

    @classmethod
    def parse(cls, text: str) -> CriterionOrder:
        """Parse ``c1>c2>c3``."""
        return cls(tuple(part.strip() for part in text.split(">")))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> CriterionOrder:
        pairs = set(pairs)
        items = {c for p in pairs for c in p}
        wins = {c: sum(1 for a, _ in pairs if a == c) for c in items}
        ranking = tuple(sorted(items, key=lambda c: -wins[c]))
        order = cls(ranking)
        if order.pairs() != frozenset(pairs):
            raise ValueError("pairs do not form a strict total order")
        return order

    def __str__(self) -> str:
        return ">".join(self.ranking)


def check_evidence(facts: Iterable[Literal], x: AlternativeSet, c: CriterionSet) -> EvidenceSet:
    """Validate licensed evidence; ``same_att`` facts are stored canonically."""
    out: set[Literal] = set()
    for f in facts:
        if f.negated:
            raise MalformedEvidenceError(f, "evidence facts must be positive")
        if f.predicate != SAME_ATT and f.predicate not in c:
            raise MalformedEvidenceError(f, f"predicate {f.predicate!r} is neither a criterion nor {SAME_ATT}")
        if len(f.args) != 2:
            raise MalformedEvidenceError(f, "expected two arguments")
        a, b = f.args
        if a not in x or b not in x:
            raise MalformedEvidenceError(f, "argument is not a known alternative")
        if a == b:
            raise MalformedEvidenceError(f, "an alternative is compared with itself")
        out.add(same_att(a, b) if f.predicate == SAME_ATT else f)
    related: set[frozenset[str]] = set()
    for f in sorted(out):
        if f.predicate == SAME_ATT:
            continue
        a, b = f.args
        if Literal(f.predicate, (b, a)) in out:
            raise MalformedEvidenceError(f, "both orientations of one criterion are present")
        related.add(frozenset(f.args))
    for f in sorted(out):
        if f.predicate == SAME_ATT and frozenset(f.args) in related:
            raise MalformedEvidenceError(f, "pair also differs on some criterion")
    try:
        return make_evidence(out)
    except InconsistentEvidenceError as err:
        raise MalformedEvidenceError(err.pair[0], str(err)) from err


def _arg(premise: Literal, claim: Literal) -> Argument:
    return Argument(f"{claim}<-{premise}", frozenset({premise}), claim)


def build_working_set(x: AlternativeSet, c: CriterionSet) -> WorkingSet:
    args = []
    for a, b in itertools.combinations(sorted(x), 2):
        for crit in c:
            ab, ba = Literal(crit, (a, b)), Literal(crit, (b, a))
            args += [
                _arg(ab, better(a, b)),
                _arg(ab, better(b, a, negated=True)),
                _arg(ba, better(b, a)),
                _arg(ba, better(a, b, negated=True)),
            ]
        sa = same_att(a, b)
        args += [_arg(sa, better(a, b, negated=True)), _arg(sa, better(b, a, negated=True))]
    return WorkingSet(tuple(args))


def dlits(s: ArgStructure, c: CriterionSet | Iterable[str]) -> frozenset[str]:
    names = c.names if isinstance(c, CriterionSet) else frozenset(c)
    return frozenset(p.predicate for a in s.args for p in a.premises if p.predicate in names)


def pref_dlits(s1: ArgStructure, s2: ArgStructure, o: CriterionOrder) -> Pref:
    d1, d2 = dlits(s1, o.ranking), dlits(s2, o.ranking)
    first = all(any(o.prefers(c1, c2) for c1 in d1) for c2 in d2)
    second = all(any(o.prefers(c2, c1) for c2 in d2) for c1 in d1)
    if first and not second:
        return Pref.FIRST
    if second and not first:
        return Pref.SECOND
    return Pref.NONE


@dataclass(frozen=True)
class DlitsPreference:
    """Picklable preference callable comparing structures by their criteria."""

    order: CriterionOrder

    def __call__(self, s1: ArgStructure, s2: ArgStructure) -> Pref:
        return pref_dlits(s1, s2, self.order)


@dataclass(frozen=True)
class EpistemicComponent:
    alternatives: AlternativeSet
    criteria: CriterionSet
    order: CriterionOrder
    daf: DafInstance

    @property
    def evidence(self) -> EvidenceSet:
        return self.daf.evidence

    @cached_property
    def justified(self) -> frozenset[Literal]:
        return justified_conclusions(self.daf)

    @cached_property
    def warranted(self) -> tuple[ArgStructure, ...]:
        return warranted_structures(self.daf)

    def is_justified(self, literal: Literal) -> bool:
        return literal in self.justified


def build_epistemic(x: AlternativeSet, c: CriterionSet, o: CriterionOrder,
                    e: EvidenceSet | Iterable[Literal]) -> EpistemicComponent:
    if set(o.ranking) != set(c.names):
        raise ValueError(f"order {o} is not a permutation of criteria {sorted(c)}")
    evidence = check_evidence(e, x, c)
    ws = build_working_set(x, c)
    daf = DafInstance(evidence, ws, ConflictRelation.claim_complements(ws), DlitsPreference(o))
    return EpistemicComponent(x, c, o, daf)


@dataclass(frozen=True)
class DecisionRule:
    """``chosen <= experiment ; preconditions ; constraints`` with ground literals."""

    chosen: frozenset[str]
    experiment: frozenset[str]
    preconditions: frozenset[Literal]
    constraints: frozenset[Literal]
    kind: str = ""

    def __post_init__(self):
        if not self.chosen:
            raise ValueError("a decision rule must choose something")
        if not self.chosen <= self.experiment:
            raise ValueError("chosen alternatives must belong to the experiment")

    def __str__(self) -> str:
        def fmt(items):
            return "{" + ", ".join(str(i) for i in sorted(items)) + "}"
        return f"{self.kind}: {fmt(self.chosen)} <= {fmt(self.experiment)}; {fmt(self.preconditions)}; {fmt(self.constraints)}"


def instantiate_rules(b: Iterable[str]) -> tuple[DecisionRule, ...]:
    """Ground instances of both rule schemas over experiment ``b``.

    The constraint variable is universal: it is expanded to every other
    member of ``b``, so a rule is blocked as soon as one of them is
    justifiably better than a chosen alternative.
    """
    b = frozenset(b)
    if not b:
        raise EmptyExperimentError("a choice experiment must be non-empty")
    rules = []
    for w, y in itertools.permutations(sorted(b), 2):
        rules.append(DecisionRule(
            frozenset({w}), b,
            frozenset({better(w, y)}),
            frozenset(better(z, w) for z in b - {w}),
            "DR1",
        ))
    for w, y in itertools.combinations(sorted(b), 2):
        others = b - {w, y}
        rules.append(DecisionRule(
            frozenset({w, y}), b,
            frozenset({better(w, y, negated=True), better(y, w, negated=True)}),
            frozenset(itertools.chain.from_iterable((better(z, w), better(z, y)) for z in others)),
            "DR2",
        ))
    return tuple(rules)


def is_applicable(r: DecisionRule, k: EpistemicComponent) -> bool:
    j = k.justified
    return r.preconditions <= j and not (r.constraints & j)


@dataclass(frozen=True)
class AbstractDecisionFramework:
    alternatives: AlternativeSet
    criteria: CriterionSet
    order: CriterionOrder
    epistemic: EpistemicComponent

    def rules(self, b: Iterable[str]) -> tuple[DecisionRule, ...]:
        return instantiate_rules(b)

    @property
    def evidence(self) -> EvidenceSet:
        return self.epistemic.evidence


def build_framework(alternatives: Iterable[str], criteria: Iterable[str] | None, order: CriterionOrder | Sequence[str] | str,
                    evidence: Iterable[Literal]) -> AbstractDecisionFramework:
    if isinstance(order, str):
        order = CriterionOrder.parse(order)
    elif not isinstance(order, CriterionOrder):
        order = CriterionOrder(tuple(order))
    x = AlternativeSet(frozenset(alternatives))
    c = CriterionSet(frozenset(criteria)) if criteria is not None else order.criteria
    return AbstractDecisionFramework(x, c, order, build_epistemic(x, c, order, evidence))


def applicable_rules(adf: AbstractDecisionFramework, b: Iterable[str]) -> list[DecisionRule]:
    b = frozenset(b)
    if len(b) < 2:
        return []
    return [r for r in instantiate_rules(b) if is_applicable(r, adf.epistemic)]


def acceptable_alternatives(adf: AbstractDecisionFramework, b: Iterable[str]) -> frozenset[str]:
    b = frozenset(b)
    unknown = b - adf.alternatives.ids
    if unknown:
        raise ValueError(f"experiment contains unknown alternatives: {sorted(unknown)}")
    if len(b) <= 1:
        return b
    chosen: set[str] = set()
    for r in applicable_rules(adf, b):
        chosen |= r.chosen
    return frozenset(chosen)


def update_evidence(adf: AbstractDecisionFramework, add: Iterable[Literal] = (),
                    remove: Iterable[Literal] = ()) -> AbstractDecisionFramework:
    """New framework whose evidence is ``(E - remove) | add``; arguments and preferences are kept."""
    remove = {same_att(*f.args) if f.predicate == SAME_ATT and len(f.args) == 2 else f for f in remove}
    facts = (set(adf.evidence.facts) - remove) | set(add)
    evidence = check_evidence(facts, adf.alternatives, adf.criteria)
    k = adf.epistemic
    return replace(adf, epistemic=replace(k, daf=k.daf.with_evidence(evidence)))
