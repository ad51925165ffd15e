"""Ground literals with classical negation and consistent evidence sets."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

_LITERAL_RE = re.compile(r"^\s*(~|¬|-)?\s*([A-Za-z_][\w]*)\s*(?:\((.*)\))?\s*$")


class LiteralSyntaxError(ValueError):
    pass


class InconsistentEvidenceError(ValueError):
    """Raised when an evidence set holds a literal together with its complement."""

    def __init__(self, pair: tuple[Literal, Literal]):
        self.pair = pair
        super().__init__(f"inconsistent evidence: {pair[0]} and {pair[1]}")


@dataclass(frozen=True, order=True)
class Literal:
    predicate: str
    args: tuple[str, ...] = ()
    negated: bool = False

    def __post_init__(self):
        if not self.predicate:
            raise ValueError("predicate name must be non-empty")
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    @property
    def positive(self) -> Literal:
        return Literal(self.predicate, self.args) if self.negated else self

    def __str__(self) -> str:
        body = self.predicate
        if self.args:
            body += "(" + ",".join(self.args) + ")"
        return "~" + body if self.negated else body

    def __repr__(self) -> str:
        return f"Literal({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Literal:
        """Parse ``pred(a,b)`` or ``~pred(a,b)``; ``¬`` and ``-`` also negate."""
        m = _LITERAL_RE.match(text)
        if m is None:
            raise LiteralSyntaxError(f"cannot parse literal {text!r}")
        neg, pred, argtext = m.groups()
        args: tuple[str, ...] = ()
        if argtext is not None:
            args = tuple(a.strip() for a in argtext.split(","))
            if any(not a for a in args):
                raise LiteralSyntaxError(f"empty argument in literal {text!r}")
        return cls(pred, args, neg is not None)


def complement(lit: Literal) -> Literal:
    return Literal(lit.predicate, lit.args, not lit.negated)


def lit(text: str) -> Literal:
    """Shorthand for :meth:`Literal.parse`."""
    return Literal.parse(text)


@dataclass(frozen=True)
class EvidenceSet:
    facts: frozenset[Literal] = field(default_factory=frozenset)

    def __post_init__(self):
        facts = frozenset(self.facts)
        object.__setattr__(self, "facts", facts)
        for f in sorted(facts):
            c = complement(f)
            if c in facts:
                raise InconsistentEvidenceError((f, c) if f.negated is False else (c, f))

    def __contains__(self, item: object) -> bool:
        return item in self.facts

    def __iter__(self) -> Iterator[Literal]:
        return iter(sorted(self.facts))

    def __len__(self) -> int:
        return len(self.facts)

    def __str__(self) -> str:
        return "{" + ", ".join(str(f) for f in self) + "}"


def make_evidence(facts: Iterable[Literal]) -> EvidenceSet:
    return EvidenceSet(frozenset(facts))
