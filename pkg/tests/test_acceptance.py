"""Acceptance criteria, one test each. Every test records a PASS/FAIL line
that is printed in the terminal summary."""

import itertools
import time

import pytest

from argdecide.daf import Mark, Pref, dialectical_tree, is_coherent, mark_skeptical
from argdecide.framework import (
    AlternativeSet,
    CriterionSet,
    acceptable_alternatives,
    build_framework,
    build_working_set,
)
from argdecide.generate import random_cases
from argdecide.lang import lit
from argdecide.oracle import (
    ChoiceStructure,
    c_star,
    full_choice_structure,
    is_rational,
    nonempty_subsets,
    satisfies_warp,
)
from argdecide.scenario import bundled, load_events, read_scenario, replay, to_framework
from argdecide.verify import induced_relation, oracle_for_case, pairwise_outcomes

from conftest import ARGS_R, CRITERIA, E_R, ORDER_R, X_2, X_R, Labelled

N_SCENARIOS = 500
SEED = 20240601


def best_of(fn, repeat=5):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return result, min(times)


@pytest.fixture(scope="module")
def generated():
    """The 500 scenarios with their frameworks; building them is timed for AC7."""
    t0 = time.perf_counter()
    out = []
    for case in random_cases(N_SCENARIOS, seed=SEED):
        adf = to_framework(case.to_scenario())
        adf.epistemic.justified  # force the dialectical analysis
        out.append((case, adf, oracle_for_case(case)))
    return out, time.perf_counter() - t0


def test_ac1_working_set(acceptance):
    x = AlternativeSet(frozenset(X_R))
    c = CriterionSet(frozenset(CRITERIA))
    ws, elapsed = best_of(lambda: build_working_set(x, c))
    schema = set()
    for a, b in itertools.permutations(X_R, 2):
        for crit in CRITERIA:
            schema.add((f"{crit}({a},{b})", f"better({a},{b})"))
            schema.add((f"{crit}({a},{b})", f"~better({b},{a})"))
        lo, hi = sorted((a, b))
        schema.add((f"same_att({lo},{hi})", f"~better({a},{b})"))
    got = {(str(next(iter(arg.premises))), str(arg.claim)) for arg in ws}
    ok = len(ws) == 42 and got == schema and elapsed < 0.010
    acceptance("AC1", ok, f"|W|={len(ws)}, schema match={got == schema}, {elapsed * 1000:.2f} ms (< 10 ms)")
    assert ok


def test_ac2_first_example(acceptance):
    def reproduce():
        k = Labelled(build_framework(X_R, CRITERIA, ORDER_R, E_R), ARGS_R)
        active = k.daf.active_arguments
        ids = {a.ident for a in active}
        pairs = {(k.label(k.daf.working.by_id[a]), k.label(k.daf.working.by_id[b]))
                 for a, b in k.daf.conflicts.pairs if a in ids and b in ids}
        return k, active, pairs, k.adf.epistemic.justified

    (k, active, pairs, justified), elapsed = best_of(reproduce)
    expected = {lit(s) for s in ("better(box1,box3)", "better(box2,box3)", "better(box1,box2)",
                                 "~better(box3,box1)", "~better(box3,box2)", "~better(box2,box1)")}
    ok = (active == frozenset(k.args.values()) and len(active) == 16
          and pairs == {(6, 11), (11, 6), (5, 12), (12, 5)}
          and justified == expected and elapsed < 0.100)
    acceptance("AC2", ok, f"{len(active)} active, conflicts {sorted(pairs)}, "
                          f"justified match={justified == expected}, {elapsed * 1000:.1f} ms (< 100 ms)")
    assert ok


def test_ac3_algorithm_goldens(acceptance, k_r, k_r_alt, k_2, k_2_alt):
    got = [acceptable_alternatives(k.adf, xs) for k, xs in
           ((k_r, X_R), (k_r_alt, X_R), (k_2, X_2), (k_2_alt, X_2))]
    want = [{"box1"}, {"box2"}, {"box4", "box5"}, {"box6"}]
    ok = got == want
    acceptance("AC3", ok, "S = " + ", ".join("{" + ",".join(sorted(s)) + "}" for s in got))
    assert ok


def test_ac4_second_example_internals(acceptance, k_2):
    daf = k_2.daf
    prefs = [(21, 30, 30), (25, 30, 25), (23, 32, 32), (27, 32, 27),
             (29, 22, 29), (29, 26, 26), (31, 24, 31), (31, 28, 28)]
    pref_ok = all(daf.pref(k_2.s(a), k_2.s(b)) is (Pref.FIRST if w == a else Pref.SECOND) for a, b, w in prefs)
    warranted = {k_2.label(s.top) for s in k_2.adf.epistemic.warranted}
    tree = mark_skeptical(dialectical_tree(daf, k_2.s(21)))
    chain = [[k_2.label(s.top) for s in line] for line in tree.lines()]
    marks = [n.mark for n in tree.nodes()]
    ok = (len(daf.active_arguments) == 14 and pref_ok
          and warranted == {25, 21, 22, 27, 34, 36, 23, 26, 24, 28}
          and chain == [[21, 30, 25]] and marks == [Mark.U, Mark.D, Mark.U])
    acceptance("AC4", ok, f"{len(daf.active_arguments)} active, 8 prefs match={pref_ok}, "
                          f"{len(warranted)} warranted, chain {chain[0] if chain else None} "
                          f"marks {''.join(m.value for m in marks)}")
    assert ok


def test_ac5_dynamics(acceptance):
    s = read_scenario(bundled("fig2_robot_first.scenario"))
    got = []
    for name in ("fig2_box5_to_robot.events", "fig2_box6_to_corner.events"):
        final = replay(s, load_events(bundled(name).read_text()))[-1]
        got.append(acceptable_alternatives(to_framework(final), final.ids))
    ok = got == [{"box5"}, {"box4", "box5"}]
    acceptance("AC5", ok, f"after box5 event {sorted(got[0])}, after box6 event {sorted(got[1])}")
    assert ok


def test_ac6_working_sets_coherent(acceptance, generated):
    cases, _ = generated
    violations = sum(not is_coherent(a, adf.evidence) for _, adf, _ in cases for a in adf.epistemic.daf.working)
    ok = violations == 0
    acceptance("AC6", ok, f"{len(cases)} frameworks, {violations} incoherent arguments")
    assert ok


def test_ac7_induced_relation_rational(acceptance, generated):
    cases, build_time = generated
    t0 = time.perf_counter()
    violations = 0
    for case, adf, _ in cases:
        if not is_rational(induced_relation(adf)):
            violations += 1
        for x, y in itertools.combinations(case.alternatives, 2):
            violations += sum(pairwise_outcomes(adf, x, y)) != 1
    elapsed = build_time + time.perf_counter() - t0
    ok = violations == 0 and elapsed < 60
    acceptance("AC7", ok, f"{len(cases)} scenarios, {violations} violations, {elapsed:.2f} s (< 60 s)")
    assert ok


def test_ac8_choices_match_oracle(acceptance, generated):
    cases, _ = generated
    mismatches = 0
    experiments = 0
    for case, adf, oracle in cases:
        for b in nonempty_subsets(case.alternatives):
            experiments += 1
            mismatches += acceptable_alternatives(adf, b) != c_star(b, oracle)
    ok = mismatches == 0
    acceptance("AC8", ok, f"{len(cases)} scenarios, {experiments} experiments, {mismatches} mismatches")
    assert ok


def test_ac9_warp(acceptance, generated):
    cases, _ = generated
    failures = sum(not satisfies_warp(full_choice_structure(adf)) for _, adf, _ in cases)
    negative = ChoiceStructure({frozenset({"box1", "box2"}): frozenset({"box1"}),
                                frozenset({"box1", "box2", "box3"}): frozenset({"box2"})})
    rejected = not satisfies_warp(negative)
    ok = failures == 0 and rejected
    acceptance("AC9", ok, f"{len(cases)} scenarios, {failures} WARP failures, negative example rejected={rejected}")
    assert ok


def test_ac10_algorithm_edges(acceptance, generated, k_r):
    cases, _ = generated
    empty_ok = acceptable_alternatives(k_r.adf, []) == frozenset()
    single_ok = all(acceptable_alternatives(k_r.adf, [x]) == {x} for x in X_R)
    bad = 0
    for case, adf, _ in cases:
        for b in nonempty_subsets(case.alternatives):
            s = acceptable_alternatives(adf, b)
            bad += not (s and s <= b)
    ok = empty_ok and single_ok and bad == 0
    acceptance("AC10", ok, f"empty->empty={empty_ok}, singleton->itself={single_ok}, "
                           f"{bad} outputs empty or outside B")
    assert ok
