#!/usr/bin/env python3
"""Survey the curated adjacency corpus: run the local semicontinuity check
on every instance and on its reversal, and print verdicts with the minimum
slack over admissible alphas.

Usage: python scripts/adjacency_survey.py
"""

from linkspec.catalog import adjacency_examples
from linkspec.semicontinuity import DeformationInstance, check_local


def min_slack(report):
    slacks = [min(r.slack_inside, r.slack_outside) for r in report.records]
    return min(slacks) if slacks else None


def main() -> int:
    failures = 0
    print(f"{'instance':34} {'verdict':8} {'min slack':>9}   reversed")
    for ex in adjacency_examples():
        inst = DeformationInstance(central=ex.central, locals=ex.locals)
        rep = check_local(inst)
        rev = DeformationInstance(central=ex.locals[0], locals=[ex.central])
        rep_rev = check_local(rev)
        ms = min_slack(rep)
        label = f"{ex.name}"
        print(f"{label:34} {rep.verdict:8} {ms if ms is not None else '-':>9}   "
              f"{rep_rev.verdict}")
        if rep.verdict == "fails" or ex.expected != rep.verdict and rep.verdict != "vacuous":
            failures += 1
    print()
    print("all curated adjacencies hold" if failures == 0
          else f"{failures} unexpected verdicts")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
