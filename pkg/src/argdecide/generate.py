"""Random decision problems for property checks.

Each alternative gets an integer attribute value per criterion (higher is
better) from a small range, so ties are common and every criterion is
acyclic. Evidence reflects every pairwise difference; pairs that tie on all
criteria get ``same_att``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .lang import Literal
from .scenario import Scenario


@dataclass(frozen=True)
class GeneratedCase:
    seed: int
    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    order: tuple[str, ...]
    scores: dict[str, dict[str, int]]

    def facts(self) -> tuple[Literal, ...]:
        out = []
        for a, b in itertools.combinations(self.alternatives, 2):
            tied = True
            for c in self.criteria:
                sa, sb = self.scores[a][c], self.scores[b][c]
                if sa > sb:
                    out.append(Literal(c, (a, b)))
                elif sb > sa:
                    out.append(Literal(c, (b, a)))
                tied = tied and sa == sb
            if tied:
                out.append(Literal("same_att", (a, b)))
        return tuple(out)

    def to_scenario(self) -> Scenario:
        return Scenario("raw", self.criteria, self.order, alternatives=self.alternatives, facts=self.facts())


def random_case(seed: int, n_range: tuple[int, int] = (2, 6), m_range: tuple[int, int] = (1, 4),
                levels: int = 3) -> GeneratedCase:
    rng = random.Random(seed)
    n = rng.randint(*n_range)
    m = rng.randint(*m_range)
    alts = tuple(f"x{i}" for i in range(1, n + 1))
    crits = tuple(f"c{j}" for j in range(1, m + 1))
    order = list(crits)
    rng.shuffle(order)
    scores = {a: {c: rng.randrange(levels) for c in crits} for a in alts}
    return GeneratedCase(seed, alts, crits, tuple(order), scores)


def random_cases(count: int, seed: int = 0, **kw) -> list[GeneratedCase]:
    master = random.Random(seed)
    return [random_case(master.randrange(2**32), **kw) for _ in range(count)]
