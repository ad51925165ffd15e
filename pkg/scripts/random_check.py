"""Compare framework choices with lexicographic preference maximization on
random decision problems, and check WARP on each full choice structure.

    python3 scripts/random_check.py --count 500 --seed 20240601
"""

import argparse
import itertools
import time
from collections import Counter

from argdecide.generate import random_cases
from argdecide.oracle import full_choice_structure, is_rational, satisfies_warp
from argdecide.scenario import save_scenario, to_framework
from argdecide.verify import check_framework, induced_relation, oracle_for_case, pairwise_outcomes


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=20240601)
    p.add_argument("--show-failures", action="store_true", help="print failing scenarios")
    args = p.parse_args()

    t0 = time.perf_counter()
    sizes = Counter()
    tally = Counter()
    for case in random_cases(args.count, seed=args.seed):
        sizes[(len(case.alternatives), len(case.criteria))] += 1
        adf = to_framework(case.to_scenario())
        report = check_framework(adf, oracle_for_case(case))
        tally["rational"] += is_rational(induced_relation(adf))
        tally["pairs"] += all(sum(pairwise_outcomes(adf, x, y)) == 1
                              for x, y in itertools.combinations(case.alternatives, 2))
        tally["optimal"] += not report.optimality
        tally["warp"] += satisfies_warp(full_choice_structure(adf))
        if not report.ok and args.show_failures:
            print(f"# seed {case.seed}")
            print(save_scenario(case.to_scenario()))
            print("\n".join(report.lines()))
    elapsed = time.perf_counter() - t0

    print(f"{args.count} scenarios, seed {args.seed}, {elapsed:.2f} s")
    print("size mix (alternatives, criteria): " + ", ".join(f"{k}:{v}" for k, v in sorted(sizes.items())))
    for key, label in (("rational", "induced relation rational"), ("pairs", "one pairwise outcome per pair"),
                       ("optimal", "choices equal C*"), ("warp", "WARP holds")):
        print(f"  {label:32s} {tally[key]}/{args.count}")


if __name__ == "__main__":
    main()
