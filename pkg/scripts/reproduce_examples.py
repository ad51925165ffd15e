"""Rebuild the two box-picking worked examples and the evidence-change scenarios.

Prints the justified conclusions and the chosen boxes under both criterion
orders, the dialectical tree behind better(box4,box6), and the decision
after each event.

    python3 scripts/reproduce_examples.py
"""

from argdecide import (
    acceptable_alternatives,
    bundled,
    dialectical_tree,
    load_events,
    mark_skeptical,
    read_scenario,
    render_tree,
    replay,
    to_framework,
)
from argdecide.lang import lit

ORDERS = ("nearer_robot>nearer_store>smaller", "nearer_store>nearer_robot>smaller")


def show(name: str) -> None:
    s = read_scenario(bundled(name))
    for order in ORDERS:
        adf = to_framework(s, order)
        k = adf.epistemic
        chosen = acceptable_alternatives(adf, s.ids)
        print(f"{name}  [{order}]")
        print(f"  active structures {len(k.daf.active_structures)}, warranted {len(k.warranted)}")
        print("  justified " + ", ".join(sorted(str(j) for j in k.justified)))
        print("  chosen    {" + ", ".join(sorted(chosen)) + "}")
    print()


def main() -> None:
    show("fig1.scenario")
    show("fig2.scenario")

    adf = to_framework(read_scenario(bundled("fig2.scenario")))
    daf = adf.epistemic.daf
    target = lit("better(box4,box6)")
    print(f"trees for {target}:")
    for root in daf.active_structures:
        if root.claim == target:
            print(render_tree(mark_skeptical(dialectical_tree(daf, root))), end="")
    print()

    start = read_scenario(bundled("fig2_robot_first.scenario"))
    for name in ("fig2_box5_to_robot.events", "fig2_box6_to_corner.events"):
        events = load_events(bundled(name).read_text())
        for i, state in enumerate(replay(start, events)):
            label = "initial" if i == 0 else str(events[i - 1])
            chosen = acceptable_alternatives(to_framework(state), state.ids)
            print(f"{name} [{i}] {label}: chosen {{{', '.join(sorted(chosen))}}}")


if __name__ == "__main__":
    main()
