"""Scenario documents: the robot/boxes world or explicit facts, plus events.

A geometric scenario places a robot, a store and boxes on the plane.
Evidence is derived by comparing every pair of boxes on each criterion:
``smaller`` by size, ``nearer_store`` and ``nearer_robot`` by Euclidean
distance. Coordinates are exact decimals and a tie means exact equality.
A raw scenario lists alternatives and facts directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any, Iterable, Mapping

import yaml

from .framework import (
    SAME_ATT,
    AbstractDecisionFramework,
    AlternativeSet,
    CriterionOrder,
    CriterionSet,
    build_framework,
    check_evidence,
    same_att,
)
from .lang import EvidenceSet, Literal, LiteralSyntaxError

GEOMETRIC_CRITERIA = ("nearer_robot", "nearer_store", "smaller")
EVENT_KINDS = ("move_box", "resize_box", "add_box", "remove_box", "set_fact", "retract_fact")


class _DecimalLoader(yaml.SafeLoader):
    """Safe loader that reads floats as Decimal so no digits are lost."""


def _yaml_decimal(loader: yaml.SafeLoader, node: yaml.Node) -> Any:
    text = loader.construct_scalar(node).replace("_", "")
    try:
        return Decimal(text)
    except InvalidOperation:
        return loader.construct_yaml_float(node)


_DecimalLoader.add_constructor("tag:yaml.org,2002:float", _yaml_decimal)


def _load_yaml(text: str) -> Any:
    return yaml.load(text, Loader=_DecimalLoader)


class ScenarioError(ValueError):
    """Parse or validation failure in a scenario or event document."""


@dataclass(frozen=True)
class Point:
    x: Decimal
    y: Decimal

    def dist2(self, other: Point) -> Decimal:
        return (self.x - other.x) ** 2 + (self.y - other.y) ** 2


@dataclass(frozen=True)
class Box:
    id: str
    pos: Point
    size: Decimal


@dataclass(frozen=True)
class Scenario:
    mode: str
    criteria: tuple[str, ...]
    order: tuple[str, ...]
    robot: Point | None = None
    store: Point | None = None
    boxes: tuple[Box, ...] = ()
    alternatives: tuple[str, ...] = ()
    facts: tuple[Literal, ...] = ()

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.mode not in ("geometric", "raw"):
            raise ScenarioError(f"unknown mode {self.mode!r}")
        if not self.criteria:
            raise ScenarioError("criteria must be non-empty")
        if len(set(self.criteria)) != len(self.criteria):
            raise ScenarioError("criteria must be distinct")
        if sorted(self.order) != sorted(self.criteria):
            raise ScenarioError(f"order {list(self.order)} is not a permutation of criteria {list(self.criteria)}")
        if self.mode == "geometric":
            if self.robot is None or self.store is None:
                raise ScenarioError("geometric scenarios need robot and store positions")
            unknown = set(self.criteria) - set(GEOMETRIC_CRITERIA)
            if unknown:
                raise ScenarioError(f"geometric scenarios only support {GEOMETRIC_CRITERIA}; got {sorted(unknown)}")
            ids = [b.id for b in self.boxes]
            if len(set(ids)) != len(ids):
                dup = sorted({i for i in ids if ids.count(i) > 1})
                raise ScenarioError(f"duplicate box id {dup[0]!r}")
            for b in self.boxes:
                if b.size <= 0:
                    raise ScenarioError(f"box {b.id!r} must have positive size")
        else:
            if len(set(self.alternatives)) != len(self.alternatives):
                raise ScenarioError("duplicate alternative id")
        if not self.ids:
            raise ScenarioError("a scenario needs at least one alternative")
        try:
            AlternativeSet(frozenset(self.ids))
            CriterionSet(frozenset(self.criteria))
            if self.mode == "raw":
                check_evidence(self.facts, AlternativeSet(frozenset(self.ids)), CriterionSet(frozenset(self.criteria)))
        except ValueError as err:
            raise ScenarioError(str(err)) from err

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(b.id for b in self.boxes) if self.mode == "geometric" else self.alternatives

    def box(self, box_id: str) -> Box:
        for b in self.boxes:
            if b.id == box_id:
                return b
        raise ScenarioError(f"unknown box {box_id!r}")


def _attribute(s: Scenario, b: Box, crit: str) -> Decimal:
    # lower is better for every geometric criterion
    if crit == "smaller":
        return b.size
    if crit == "nearer_store":
        return b.pos.dist2(s.store)
    return b.pos.dist2(s.robot)


def derive_evidence(s: Scenario) -> EvidenceSet:
    x = AlternativeSet(frozenset(s.ids))
    c = CriterionSet(frozenset(s.criteria))
    if s.mode == "raw":
        return check_evidence(s.facts, x, c)
    facts = []
    for a, b in itertools.combinations(sorted(s.boxes, key=lambda bx: bx.id), 2):
        differs = False
        for crit in sorted(s.criteria):
            va, vb = _attribute(s, a, crit), _attribute(s, b, crit)
            if va < vb:
                facts.append(Literal(crit, (a.id, b.id)))
            elif vb < va:
                facts.append(Literal(crit, (b.id, a.id)))
            differs = differs or va != vb
        if not differs:
            facts.append(same_att(a.id, b.id))
    return check_evidence(facts, x, c)


def to_framework(s: Scenario, order: CriterionOrder | str | None = None) -> AbstractDecisionFramework:
    if order is None:
        order = CriterionOrder(s.order)
    elif isinstance(order, str):
        order = CriterionOrder.parse(order)
    if set(order.ranking) != set(s.criteria):
        raise ScenarioError(f"order {order} is not a permutation of criteria {list(s.criteria)}")
    return build_framework(s.ids, s.criteria, order, derive_evidence(s))


# -- documents ---------------------------------------------------------------

def _dec(value: Any, where: str) -> Decimal:
    if isinstance(value, bool):
        raise ScenarioError(f"{where}: expected a number, got {value!r}")
    try:
        d = Decimal(str(value))
    except InvalidOperation:
        raise ScenarioError(f"{where}: expected a number, got {value!r}") from None
    if not d.is_finite():
        raise ScenarioError(f"{where}: expected a finite number, got {value!r}")
    return d


def _point(doc: Any, where: str) -> Point:
    if not isinstance(doc, Mapping) or "x" not in doc or "y" not in doc:
        raise ScenarioError(f"{where}: expected a mapping with x and y")
    return Point(_dec(doc["x"], f"{where}.x"), _dec(doc["y"], f"{where}.y"))


def _box(doc: Any, where: str) -> Box:
    if not isinstance(doc, Mapping):
        raise ScenarioError(f"{where}: expected a mapping")
    for k in ("id", "x", "y", "size"):
        if k not in doc:
            raise ScenarioError(f"{where}: missing field {k!r}")
    return Box(str(doc["id"]), Point(_dec(doc["x"], f"{where}.x"), _dec(doc["y"], f"{where}.y")),
               _dec(doc["size"], f"{where}.size"))


def _order(doc: Any) -> tuple[str, ...]:
    if isinstance(doc, str):
        return CriterionOrder.parse(doc).ranking
    if isinstance(doc, list):
        return tuple(str(c) for c in doc)
    raise ScenarioError("order: expected 'c1>c2>...' or a list")


def _literal(text: Any, where: str) -> Literal:
    try:
        return Literal.parse(str(text))
    except LiteralSyntaxError as err:
        raise ScenarioError(f"{where}: {err}") from None


def scenario_from_dict(doc: Any) -> Scenario:
    if not isinstance(doc, Mapping):
        raise ScenarioError("scenario document must be a mapping")
    mode = doc.get("mode", "geometric")
    if "criteria" not in doc:
        raise ScenarioError("missing field 'criteria'")
    criteria = tuple(str(c) for c in doc["criteria"])
    order = _order(doc.get("order", list(criteria)))
    if mode == "geometric":
        for k in ("robot", "store", "boxes"):
            if k not in doc:
                raise ScenarioError(f"missing field {k!r}")
        boxes = tuple(_box(b, f"boxes[{i}]") for i, b in enumerate(doc["boxes"] or []))
        return Scenario("geometric", criteria, order, _point(doc["robot"], "robot"), _point(doc["store"], "store"),
                        boxes)
    if mode == "raw":
        if "alternatives" not in doc:
            raise ScenarioError("missing field 'alternatives'")
        facts = tuple(_literal(f, f"facts[{i}]") for i, f in enumerate(doc.get("facts") or []))
        return Scenario("raw", criteria, order, alternatives=tuple(str(a) for a in doc["alternatives"]),
                        facts=facts)
    raise ScenarioError(f"unknown mode {mode!r}")


def load_scenario(text: str) -> Scenario:
    try:
        doc = _load_yaml(text)
    except yaml.YAMLError as err:
        mark = getattr(err, "problem_mark", None)
        where = f" at line {mark.line + 1}" if mark is not None else ""
        raise ScenarioError(f"parse error{where}: {err}") from None
    return scenario_from_dict(doc)


def read_scenario(path: str | Path) -> Scenario:
    return load_scenario(Path(path).read_text())


def _num(d: Decimal) -> int | float | str:
    if d == d.to_integral_value():
        return int(d)
    # quoted text keeps digits a float cannot hold; _dec accepts both
    return float(d) if Decimal(repr(float(d))) == d else str(d)


def scenario_to_dict(s: Scenario) -> dict:
    doc: dict[str, Any] = {"mode": s.mode, "criteria": list(s.criteria), "order": ">".join(s.order)}
    if s.mode == "geometric":
        doc["robot"] = {"x": _num(s.robot.x), "y": _num(s.robot.y)}
        doc["store"] = {"x": _num(s.store.x), "y": _num(s.store.y)}
        doc["boxes"] = [{"id": b.id, "x": _num(b.pos.x), "y": _num(b.pos.y), "size": _num(b.size)} for b in s.boxes]
    else:
        doc["alternatives"] = list(s.alternatives)
        doc["facts"] = [str(f) for f in s.facts]
    return doc


def save_scenario(s: Scenario) -> str:
    return yaml.safe_dump(scenario_to_dict(s), sort_keys=False, default_flow_style=None)


# -- events ------------------------------------------------------------------

@dataclass(frozen=True)
class Event:
    kind: str
    payload: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise ScenarioError(f"unknown event kind {self.kind!r}")

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.payload.items())
        return f"{self.kind}({args})"


def event_from_dict(doc: Any) -> Event:
    if not isinstance(doc, Mapping) or "kind" not in doc:
        raise ScenarioError("event must be a mapping with a 'kind'")
    return Event(str(doc["kind"]), {k: v for k, v in doc.items() if k != "kind"})


def load_events(text: str) -> list[Event]:
    try:
        doc = _load_yaml(text)
    except yaml.YAMLError as err:
        raise ScenarioError(f"parse error: {err}") from None
    if isinstance(doc, Mapping):
        doc = doc.get("events")
    if not isinstance(doc, list):
        raise ScenarioError("events document must be a list of events")
    return [event_from_dict(d) for d in doc]


def _need(ev: Event, *keys: str) -> None:
    for k in keys:
        if k not in ev.payload:
            raise ScenarioError(f"{ev.kind}: missing field {k!r}")


def apply_event(s: Scenario, ev: Event) -> Scenario:
    p = ev.payload
    if ev.kind in ("set_fact", "retract_fact"):
        if s.mode != "raw":
            raise ScenarioError(f"{ev.kind} only applies to raw scenarios")
        _need(ev, "fact")
        fact = _literal(p["fact"], ev.kind)
        if fact.predicate == SAME_ATT and len(fact.args) == 2:
            fact = same_att(*fact.args)
        facts = [f if not (f.predicate == SAME_ATT and len(f.args) == 2) else same_att(*f.args) for f in s.facts]
        if ev.kind == "set_fact":
            if fact in facts:
                return s
            return replace(s, facts=tuple(facts) + (fact,))
        if fact not in facts:
            raise ScenarioError(f"retract_fact: {fact} is not a current fact")
        return replace(s, facts=tuple(f for f in facts if f != fact))
    if s.mode != "geometric":
        raise ScenarioError(f"{ev.kind} only applies to geometric scenarios")
    _need(ev, "id")
    box_id = str(p["id"])
    if ev.kind == "add_box":
        _need(ev, "x", "y", "size")
        if any(b.id == box_id for b in s.boxes):
            raise ScenarioError(f"add_box: box {box_id!r} already exists")
        return replace(s, boxes=s.boxes + (_box({"id": box_id, **p}, "add_box"),))
    old = s.box(box_id)
    if ev.kind == "remove_box":
        return replace(s, boxes=tuple(b for b in s.boxes if b.id != box_id))
    if ev.kind == "move_box":
        _need(ev, "x", "y")
        new = replace(old, pos=Point(_dec(p["x"], "move_box.x"), _dec(p["y"], "move_box.y")))
    else:
        _need(ev, "size")
        new = replace(old, size=_dec(p["size"], "resize_box.size"))
    return replace(s, boxes=tuple(new if b.id == box_id else b for b in s.boxes))


def replay(s: Scenario, events: Iterable[Event]) -> list[Scenario]:
    """The scenario before the first event and after each one."""
    states = [s]
    for ev in events:
        states.append(apply_event(states[-1], ev))
    return states


def bundled(name: str) -> Path:
    """Path to a scenario or events file shipped with the package."""
    return Path(__file__).parent / "data" / name
