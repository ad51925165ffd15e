"""Classical choice theory: rational preference relations, preference
maximization and the weak axiom of revealed preference.

Nothing here imports the argumentation engine; equivalence checks against
it are only meaningful if the two sides share no comparison code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

# (criterion, x, y) -> +1 if x is preferred to y, -1 if y is preferred to x, 0 if tied
Comparisons = Mapping[tuple[str, str, str], int]


class MissingComparisonError(KeyError):
    pass


class IncompleteRelationError(ValueError):
    pass


class EnumerationCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class PreferenceRelation:
    """Weak preference ``x >= y`` given as a set of ordered pairs."""

    alternatives: frozenset[str]
    weak: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def at_least(self, x: str, y: str) -> bool:
        return (x, y) in self.weak

    def strict(self, x: str, y: str) -> bool:
        return (x, y) in self.weak and (y, x) not in self.weak

    def indifferent(self, x: str, y: str) -> bool:
        return (x, y) in self.weak and (y, x) in self.weak

    def strict_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(p for p in self.weak if self.strict(*p))

    def indifferent_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(p for p in self.weak if self.indifferent(*p))


def lex_preference(comparisons: Comparisons, order: Sequence[str], alternatives: Iterable[str]) -> PreferenceRelation:
    """Lexicographic preference: the highest-priority criterion that tells ``x`` and ``y`` apart decides."""
    alts = sorted(set(alternatives))
    weak = set()
    for x in alts:
        weak.add((x, x))
    for x, y in itertools.combinations(alts, 2):
        verdict = 0
        for crit in order:
            try:
                v = comparisons[(crit, x, y)]
            except KeyError:
                try:
                    v = -comparisons[(crit, y, x)]
                except KeyError:
                    raise MissingComparisonError(f"no comparison of {x} and {y} on {crit}") from None
            if v:
                verdict = 1 if v > 0 else -1
                break
        if verdict >= 0:
            weak.add((x, y))
        if verdict <= 0:
            weak.add((y, x))
    return PreferenceRelation(frozenset(alts), frozenset(weak))


def comparisons_from_scores(scores: Mapping[str, Mapping[str, float]], criteria: Iterable[str],
                            higher_is_better: bool | Mapping[str, bool] = True) -> dict[tuple[str, str, str], int]:
    """Pairwise comparisons from per-alternative attribute values."""
    out = {}
    for crit in criteria:
        hib = higher_is_better if isinstance(higher_is_better, bool) else higher_is_better[crit]
        for x, y in itertools.permutations(sorted(scores), 2):
            a, b = scores[x][crit], scores[y][crit]
            d = (a > b) - (a < b)
            out[(crit, x, y)] = d if hib else -d
    return out


def c_star(b: Iterable[str], r: PreferenceRelation) -> frozenset[str]:
    b = frozenset(b)
    if not b:
        raise ValueError("choice experiment must be non-empty")
    for x, y in itertools.combinations(sorted(b), 2):
        if not (r.at_least(x, y) or r.at_least(y, x)):
            raise IncompleteRelationError(f"{x} and {y} are not comparable")
    return frozenset(x for x in b if all(r.at_least(x, y) for y in b))


def is_complete(r: PreferenceRelation, x: Iterable[str]) -> bool:
    xs = sorted(set(x))
    return all(r.at_least(a, b) or r.at_least(b, a) for a in xs for b in xs)


def is_transitive(r: PreferenceRelation, x: Iterable[str]) -> bool:
    xs = sorted(set(x))
    return all(
        r.at_least(a, c)
        for a in xs for b in xs if r.at_least(a, b)
        for c in xs if r.at_least(b, c)
    )


def is_rational(r: PreferenceRelation, x: Iterable[str] | None = None) -> bool:
    xs = r.alternatives if x is None else frozenset(x)
    return is_complete(r, xs) and is_transitive(r, xs)


@dataclass(frozen=True)
class ChoiceStructure:
    choices: Mapping[frozenset[str], frozenset[str]]

    def __post_init__(self):
        for b, cb in self.choices.items():
            if not b:
                raise ValueError("choice experiments must be non-empty")
            if not cb or not cb <= b:
                raise ValueError(f"C({sorted(b)}) = {sorted(cb)} is not a non-empty subset")

    @property
    def experiments(self) -> list[frozenset[str]]:
        return sorted(self.choices, key=lambda b: (len(b), sorted(b)))


def warp_violations(cs: ChoiceStructure) -> list[tuple[str, str, frozenset[str], frozenset[str]]]:
    """Every ``(x, y, B, B')`` where ``x`` is revealed at least as good as ``y`` in ``B``
    but ``y`` is chosen over ``x`` in ``B'``."""
    out = []
    exps = cs.experiments
    for b in exps:
        cb = cs.choices[b]
        for x in sorted(cb):
            for y in sorted(b):
                for b2 in exps:
                    if x in b2 and y in b2:
                        cb2 = cs.choices[b2]
                        if y in cb2 and x not in cb2:
                            out.append((x, y, b, b2))
    return out


def satisfies_warp(cs: ChoiceStructure) -> bool:
    return not warp_violations(cs)


def nonempty_subsets(x: Iterable[str]) -> list[frozenset[str]]:
    xs = sorted(set(x))
    return [frozenset(c) for n in range(1, len(xs) + 1) for c in itertools.combinations(xs, n)]


def choice_structure_from(x: Iterable[str], rule: Callable[[frozenset[str]], Iterable[str]],
                          cap: int = 12) -> ChoiceStructure:
    """Choice structure over every non-empty subset of ``x``."""
    xs = sorted(set(x))
    if len(xs) > cap:
        raise EnumerationCapError(f"{len(xs)} alternatives exceed the enumeration cap of {cap}")
    return ChoiceStructure({b: frozenset(rule(b)) for b in nonempty_subsets(xs)})


def full_choice_structure(adf, cap: int = 12) -> ChoiceStructure:
    """All non-empty experiments over the framework's alternatives, answered by ``acceptable_alternatives``."""
    from .framework import acceptable_alternatives

    return choice_structure_from(adf.alternatives.ids, lambda b: acceptable_alternatives(adf, b), cap)
