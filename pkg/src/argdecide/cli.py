"""Command-line entry point: ``argdecide decide|trace|check|simulate``.

Exit codes: 0 success, 1 usage error, 2 validation or licensing error,
3 resource cap exceeded, 4 counterexample found by ``check``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .daf import ResourceCapError, dialectical_tree, mark_skeptical, render_tree
from .framework import AbstractDecisionFramework, CriterionOrder, acceptable_alternatives
from .generate import random_cases
from .lang import Literal, LiteralSyntaxError
from .oracle import EnumerationCapError
from .scenario import ScenarioError, load_events, read_scenario, replay, save_scenario, to_framework
from .verify import check_framework, check_scenario, oracle_for_case

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAP, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def decision(adf: AbstractDecisionFramework, experiment=None) -> dict:
    b = adf.alternatives.ids if experiment is None else frozenset(experiment)
    k = adf.epistemic
    return {
        "justified": sorted(str(lit) for lit in k.justified),
        "chosen": sorted(acceptable_alternatives(adf, b)),
        "active_count": len(k.daf.active_structures),
        "warranted_count": len(k.warranted),
    }


def _format_decision(d: dict) -> str:
    lines = ["justified:"]
    lines += [f"  {lit}" for lit in d["justified"]]
    lines.append(f"active structures: {d['active_count']}, warranted: {d['warranted_count']}")
    lines.append("chosen: {" + ", ".join(d["chosen"]) + "}")
    return "\n".join(lines)


def _experiment(text: str | None):
    if text is None:
        return None
    return [part.strip() for part in text.split(",") if part.strip()]


def cmd_decide(args) -> int:
    s = read_scenario(args.scenario)
    adf = to_framework(s, args.order)
    b = _experiment(args.experiment)
    if b is not None:
        unknown = set(b) - adf.alternatives.ids
        if unknown:
            raise ScenarioError(f"unknown alternatives in experiment: {sorted(unknown)}")
    d = decision(adf, b)
    print(json.dumps(d, indent=2) if args.format == "json" else _format_decision(d))
    return EXIT_OK


def cmd_trace(args) -> int:
    s = read_scenario(args.scenario)
    adf = to_framework(s, args.order)
    try:
        claim = Literal.parse(args.claim)
    except LiteralSyntaxError as err:
        raise UsageError(str(err)) from None
    daf = adf.epistemic.daf
    roots = [st for st in daf.active_structures if st.claim == claim]
    if not roots:
        print(f"no active structure claims {claim}")
        return EXIT_OK
    for i, root in enumerate(roots):
        if i:
            print()
        sys.stdout.write(render_tree(mark_skeptical(dialectical_tree(daf, root))))
    return EXIT_OK


def cmd_check(args) -> int:
    if args.scenario:
        report = check_scenario(read_scenario(args.scenario))
        for line in report.lines():
            print(line)
        print("ok" if report.ok else "counterexample found")
        return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE
    failures = 0
    for case in random_cases(args.random, seed=args.seed):
        scenario = case.to_scenario()
        report = check_framework(to_framework(scenario), oracle_for_case(case))
        if report.ok:
            continue
        failures += 1
        out = Path(args.out) / f"counterexample_{case.seed}.scenario"
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(f"# seed {case.seed}\n" + save_scenario(scenario))
        print(f"seed {case.seed}: counterexample written to {out}")
        for line in report.lines():
            print(f"  {line}")
    print(f"{args.random} scenarios checked, {failures} counterexamples")
    return EXIT_OK if not failures else EXIT_COUNTEREXAMPLE


def cmd_simulate(args) -> int:
    s = read_scenario(args.scenario)
    events = load_events(Path(args.events).read_text())
    states = replay(s, events)
    trace = []
    for i, state in enumerate(states):
        d = decision(to_framework(state, args.order))
        d = {"step": i, "event": None if i == 0 else str(events[i - 1]), **d}
        trace.append(d)
    if args.format == "json":
        print(json.dumps(trace, indent=2))
    else:
        for d in trace:
            label = "initial" if d["event"] is None else d["event"]
            print(f"[{d['step']}] {label}: chosen {{{', '.join(d['chosen'])}}}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="argdecide", description="Argumentation-based choice among alternatives.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    d = sub.add_parser("decide", help="justified conclusions and chosen alternatives")
    d.add_argument("--scenario", required=True)
    d.add_argument("--experiment", help="comma-separated subset of alternatives")
    d.add_argument("--order", help="criterion order, e.g. c1>c2>c3")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.set_defaults(func=cmd_decide)

    t = sub.add_parser("trace", help="dialectical trees for a claim")
    t.add_argument("--scenario", required=True)
    t.add_argument("--claim", required=True)
    t.add_argument("--order")
    t.set_defaults(func=cmd_trace)

    c = sub.add_parser("check", help="compare choices with preference maximization and WARP")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--scenario")
    g.add_argument("--random", type=int, metavar="COUNT")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", default=".", help="directory for counterexample scenario files")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("simulate", help="replay events and decide after each")
    s.add_argument("--scenario", required=True)
    s.add_argument("--events", required=True)
    s.add_argument("--order")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        if getattr(args, "order", None) is not None:
            args.order = CriterionOrder.parse(args.order)
        return args.func(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (ResourceCapError, EnumerationCapError) as err:
        print(f"resource cap exceeded: {err}", file=sys.stderr)
        return EXIT_CAP
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
