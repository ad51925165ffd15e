"""Dynamic argumentation frameworks.

A framework is a working set of arguments, a conflict relation over them, a
preference function over argumental structures, and a set of evidence that
decides which arguments are currently usable. Warrant is computed with
dialectical trees over the active structures and the skeptical marking
(a node is undefeated iff all of its children are defeated).

All sets are iterated in a canonical order so trees and traces are
reproducible.
"""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping

from .lang import EvidenceSet, Literal, complement

DEFAULT_STRUCTURE_CAP = 100_000
DEFAULT_LINE_CAP = 100_000


class ResourceCapError(RuntimeError):
    """An enumeration exceeded its configured bound."""


class InvalidArgumentError(ValueError):
    pass


class Pref(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    NONE = "none"


class Mark(str, enum.Enum):
    U = "U"
    D = "D"


@dataclass(frozen=True)
class Argument:
    """A single reasoning step ``<premises, claim>`` with a stable identifier."""

    ident: str
    premises: frozenset[Literal]
    claim: Literal

    def __post_init__(self):
        object.__setattr__(self, "premises", frozenset(self.premises))
        if not self.premises:
            raise InvalidArgumentError(f"{self.ident}: premises must be non-empty")
        neg_claim = complement(self.claim)
        for p in self.premises:
            if p == self.claim or p == neg_claim:
                raise InvalidArgumentError(f"{self.ident}: premise {p} clashes with claim {self.claim}")
            if complement(p) in self.premises:
                raise InvalidArgumentError(f"{self.ident}: premises {p} and {complement(p)} clash")

    def __str__(self) -> str:
        prem = ", ".join(str(p) for p in sorted(self.premises))
        return f"<{{{prem}}}, {self.claim}>"


def is_coherent(a: Argument, e: EvidenceSet) -> bool:
    neg = complement(a.claim)
    return neg not in a.premises and neg not in e and a.claim not in a.premises and a.claim not in e


@dataclass(frozen=True)
class WorkingSet:
    arguments: tuple[Argument, ...] = ()

    def __post_init__(self):
        args = tuple(sorted(self.arguments, key=lambda a: a.ident))
        object.__setattr__(self, "arguments", args)
        seen = set()
        for a in args:
            if a.ident in seen:
                raise InvalidArgumentError(f"duplicate argument identifier {a.ident!r}")
            seen.add(a.ident)

    @cached_property
    def by_id(self) -> dict[str, Argument]:
        return {a.ident: a for a in self.arguments}

    @cached_property
    def by_claim(self) -> dict[Literal, tuple[Argument, ...]]:
        index: dict[Literal, list[Argument]] = defaultdict(list)
        for a in self.arguments:
            index[a.claim].append(a)
        return {k: tuple(v) for k, v in index.items()}

    def __iter__(self) -> Iterator[Argument]:
        return iter(self.arguments)

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, item: object) -> bool:
        return isinstance(item, Argument) and self.by_id.get(item.ident) == item


@dataclass(frozen=True)
class ConflictRelation:
    pairs: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def conflict(self, a: Argument, b: Argument) -> bool:
        return (a.ident, b.ident) in self.pairs

    @cached_property
    def attackers_of(self) -> dict[str, tuple[str, ...]]:
        index: dict[str, list[str]] = defaultdict(list)
        for a, b in sorted(self.pairs):
            index[b].append(a)
        return {k: tuple(v) for k, v in index.items()}

    @classmethod
    def claim_complements(cls, ws: WorkingSet, extra: Iterable[tuple[str, str]] = ()) -> ConflictRelation:
        """The least conflict relation over ``ws`` plus any ``extra`` pairs."""
        pairs = set(extra)
        for a in ws:
            for b in ws.by_claim.get(complement(a.claim), ()):
                pairs.add((a.ident, b.ident))
        return cls(frozenset(pairs))


@dataclass(frozen=True)
class ArgStructure:
    """A tree of arguments; each child supports its parent through one premise."""

    top: Argument
    children: tuple[tuple[Literal, ArgStructure], ...] = ()

    def __post_init__(self):
        kids = tuple(sorted(self.children, key=lambda kv: kv[0]))
        object.__setattr__(self, "children", kids)
        seen = set()
        for premise, child in kids:
            if premise not in self.top.premises:
                raise InvalidArgumentError(f"{premise} is not a premise of {self.top.ident}")
            if premise in seen:
                raise InvalidArgumentError(f"premise {premise} of {self.top.ident} has two supporters")
            if child.claim != premise:
                raise InvalidArgumentError(f"{child.top.ident} does not support {premise}")
            seen.add(premise)

    @property
    def claim(self) -> Literal:
        return self.top.claim

    def nodes(self) -> Iterator[ArgStructure]:
        yield self
        for _, child in self.children:
            yield from child.nodes()

    @cached_property
    def args(self) -> frozenset[Argument]:
        return frozenset(n.top for n in self.nodes())

    @cached_property
    def premises(self) -> frozenset[Literal]:
        prem = set().union(*(a.premises for a in self.args))
        return frozenset(prem - {a.claim for a in self.args})

    @property
    def is_primitive(self) -> bool:
        return not self.children

    @cached_property
    def key(self) -> str:
        """Canonical text form, used for sorting and display."""
        if not self.children:
            return self.top.ident
        inner = ", ".join(child.key for _, child in self.children)
        return f"{self.top.ident}[{inner}]"

    def support_edges(self) -> Iterator[tuple[Argument, Literal, Argument]]:
        """(supporter, premise, supported) for every tree edge."""
        for node in self.nodes():
            for premise, child in node.children:
                yield child.top, premise, node.top

    def __str__(self) -> str:
        return f"{self.claim} <= {self.key}"


def primitive(a: Argument) -> ArgStructure:
    return ArgStructure(a)


def _circular(args: Iterable[Argument]) -> bool:
    """True iff the support graph over ``args`` has a cycle."""
    args = list(args)
    succ = {a: [b for b in args if a.claim in b.premises] for a in args}
    state: dict[Argument, int] = {}

    def visit(a: Argument) -> bool:
        state[a] = 1
        for b in succ[a]:
            s = state.get(b, 0)
            if s == 1 or (s == 0 and visit(b)):
                return True
        state[a] = 2
        return False

    return any(state.get(a, 0) == 0 and visit(a) for a in args)


def is_well_formed(s: ArgStructure, c: ConflictRelation) -> bool:
    prem = s.premises
    if any(complement(p) in prem for p in prem):
        return False
    args = s.args
    if any(c.conflict(a, b) for a in args for b in args):
        return False
    if _circular(args):
        return False
    # uniformity: one supporter per premise literal, used at every node carrying it
    supporter: dict[Literal, Argument] = {}
    for sup, premise, _ in s.support_edges():
        if supporter.setdefault(premise, sup) != sup:
            return False
    for node in s.nodes():
        supported = {p for p, _ in node.children}
        for p in node.top.premises:
            if p in supporter and p not in supported:
                return False
    return True


def structure_conflicts(s1: ArgStructure, s2: ArgStructure, c: ConflictRelation) -> bool:
    return c.conflict(s1.top, s2.top)


def _trees(top: Argument, pool: Mapping[Literal, tuple[Argument, ...]], path: frozenset[Argument],
           budget: list[int]) -> list[ArgStructure]:
    """Every tree rooted at ``top`` over ``pool``, without repeating an argument on a branch."""
    path = path | {top}
    options: list[list[tuple[Literal, ArgStructure] | None]] = []
    for premise in sorted(top.premises):
        opts: list[tuple[Literal, ArgStructure] | None] = [None]
        for sup in pool.get(premise, ()):
            if sup not in path:
                opts.extend((premise, t) for t in _trees(sup, pool, path, budget))
        options.append(opts)
    out = []
    for combo in itertools.product(*options):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceCapError("argumental structure enumeration exceeded its cap")
        out.append(ArgStructure(top, tuple(kv for kv in combo if kv is not None)))
    return out


def structures_over(args: Iterable[Argument], c: ConflictRelation, tops: Iterable[Argument] | None = None,
                    cap: int = DEFAULT_STRUCTURE_CAP) -> list[ArgStructure]:
    """Well-formed structures built from ``args`` (optionally only those topped by ``tops``)."""
    args = sorted(set(args), key=lambda a: a.ident)
    pool: dict[Literal, list[Argument]] = defaultdict(list)
    for a in args:
        pool[a.claim].append(a)
    frozen_pool = {k: tuple(v) for k, v in pool.items()}
    budget = [cap]
    out = []
    for top in (args if tops is None else sorted(tops, key=lambda a: a.ident)):
        out.extend(t for t in _trees(top, frozen_pool, frozenset(), budget) if is_well_formed(t, c))
    return out


PrefFn = Callable[[ArgStructure, ArgStructure], Pref]


def no_preference(s1: ArgStructure, s2: ArgStructure) -> Pref:
    return Pref.NONE


@dataclass(frozen=True)
class DafInstance:
    """``<E, W, conflicts, pref>``; derived views are computed lazily and cached."""

    evidence: EvidenceSet
    working: WorkingSet
    conflicts: ConflictRelation
    pref: PrefFn = no_preference
    structure_cap: int = DEFAULT_STRUCTURE_CAP
    line_cap: int = DEFAULT_LINE_CAP

    def __post_init__(self):
        ids = self.working.by_id
        for a, b in self.conflicts.pairs:
            if a not in ids or b not in ids:
                raise InvalidArgumentError(f"conflict ({a}, {b}) names an argument outside the working set")

    def with_evidence(self, evidence: EvidenceSet) -> DafInstance:
        return DafInstance(evidence, self.working, self.conflicts, self.pref, self.structure_cap, self.line_cap)

    @cached_property
    def active_arguments(self) -> frozenset[Argument]:
        coherent = [a for a in self.working if is_coherent(a, self.evidence)]
        active: set[Argument] = set()
        supported = set(self.evidence.facts)
        changed = True
        while changed:
            changed = False
            for a in coherent:
                if a not in active and a.premises <= supported:
                    active.add(a)
                    supported.add(a.claim)
                    changed = True
        return frozenset(active)

    @cached_property
    def active_structures(self) -> tuple[ArgStructure, ...]:
        coherent = [a for a in self.working if is_coherent(a, self.evidence)]
        found = structures_over(coherent, self.conflicts, cap=self.structure_cap)
        return tuple(sorted((s for s in found if s.premises <= self.evidence.facts), key=lambda s: s.key))

    def is_active(self, s: ArgStructure) -> bool:
        return s in self._active_set

    @cached_property
    def _active_set(self) -> frozenset[ArgStructure]:
        return frozenset(self.active_structures)

    @cached_property
    def active_defeat(self) -> dict[ArgStructure, tuple[ArgStructure, ...]]:
        """Map each active structure to its active defeaters, canonically ordered."""
        by_top: dict[str, list[ArgStructure]] = defaultdict(list)
        for s in self.active_structures:
            by_top[s.top.ident].append(s)
        defeaters: dict[ArgStructure, tuple[ArgStructure, ...]] = {}
        for target in self.active_structures:
            found = []
            candidates = {att for a in target.args for att in self.conflicts.attackers_of.get(a.ident, ())}
            for att_id in sorted(candidates):
                for s1 in by_top.get(att_id, ()):
                    if _defeats(s1, target, self):
                        found.append(s1)
            defeaters[target] = tuple(sorted(set(found), key=lambda s: s.key))
        return defeaters


def _defeats(s1: ArgStructure, s2: ArgStructure, f: DafInstance) -> bool:
    hit = [a for a in s2.args if f.conflicts.conflict(s1.top, a)]
    if not hit:
        return False
    for sub in structures_over(s2.args, f.conflicts, tops=hit, cap=f.structure_cap):
        if f.pref(s1, sub) is Pref.FIRST:
            return True
    return False


def defeats(s1: ArgStructure, s2: ArgStructure, f: DafInstance) -> bool:
    """True iff ``s1`` conflicts with some substructure of ``s2`` and is strictly preferred to it."""
    return _defeats(s1, s2, f)


def active_arguments(f: DafInstance) -> frozenset[Argument]:
    return f.active_arguments


def enumerate_structures(f: DafInstance, only_active: bool = False) -> list[ArgStructure]:
    if only_active:
        return list(f.active_structures)
    return sorted(structures_over(f.working, f.conflicts, cap=f.structure_cap), key=lambda s: s.key)


def active_instance(f: DafInstance) -> tuple[tuple[ArgStructure, ...], frozenset[tuple[ArgStructure, ArgStructure]]]:
    edges = frozenset((d, t) for t, ds in f.active_defeat.items() for d in ds)
    return f.active_structures, edges


@dataclass(frozen=True)
class DialecticalTree:
    structure: ArgStructure
    children: tuple[DialecticalTree, ...] = ()
    mark: Mark | None = None

    def lines(self) -> list[list[ArgStructure]]:
        """The argumentation lines of the tree, root to leaf."""
        if not self.children:
            return [[self.structure]]
        return [[self.structure, *rest] for child in self.children for rest in child.lines()]

    def nodes(self) -> Iterator[DialecticalTree]:
        yield self
        for c in self.children:
            yield from c.nodes()


def _acceptable_extension(line: list[ArgStructure], cand: ArgStructure, c: ConflictRelation) -> bool:
    if cand in line:
        return False
    side = line[len(line) % 2::2]
    return not any(structure_conflicts(cand, s, c) or structure_conflicts(s, cand, c) for s in side)


def dialectical_tree(f: DafInstance, root: ArgStructure) -> DialecticalTree:
    """Active dialectical tree rooted at ``root``, built from every exhaustive acceptable line."""
    if not f.is_active(root):
        raise ValueError(f"{root} is not an active structure")
    defeaters = f.active_defeat
    lines = [0]

    def expand(line: list[ArgStructure]) -> DialecticalTree:
        node = line[-1]
        kids = tuple(expand(line + [d]) for d in defeaters.get(node, ())
                     if _acceptable_extension(line, d, f.conflicts))
        if not kids:
            lines[0] += 1
            if lines[0] > f.line_cap:
                raise ResourceCapError("argumentation line enumeration exceeded its cap")
        return DialecticalTree(node, kids)

    return expand([root])


def mark_skeptical(t: DialecticalTree) -> DialecticalTree:
    kids = tuple(mark_skeptical(c) for c in t.children)
    mark = Mark.D if any(k.mark is Mark.U for k in kids) else Mark.U
    return DialecticalTree(t.structure, kids, mark)


def is_warranted(f: DafInstance, s: ArgStructure) -> bool:
    return mark_skeptical(dialectical_tree(f, s)).mark is Mark.U


def warranted_structures(f: DafInstance) -> tuple[ArgStructure, ...]:
    return tuple(s for s in f.active_structures if is_warranted(f, s))


def justified_conclusions(f: DafInstance) -> frozenset[Literal]:
    return frozenset(s.claim for s in warranted_structures(f))


def render_tree(t: DialecticalTree, indent: str = "  ") -> str:
    """Indented text rendering: one node per line with claim, premises and mark."""
    out = []

    def walk(node: DialecticalTree, depth: int) -> None:
        prem = ", ".join(str(p) for p in sorted(node.structure.premises))
        mark = node.mark.value if node.mark is not None else "?"
        out.append(f"{indent * depth}{node.structure.claim}  <- {{{prem}}}  [{mark}]")
        for c in node.children:
            walk(c, depth + 1)

    walk(t, 0)
    return "\n".join(out) + "\n"
