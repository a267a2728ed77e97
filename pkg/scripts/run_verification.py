#!/usr/bin/env python3
"""Run the theorem checks over an exhaustive corpus and print a scoreboard.

Typical runs:
    python scripts/run_verification.py --max-n 7
    python scripts/run_verification.py --max-n 6 --check T3 T9 --timing
"""

import argparse
import json
import sys

from forkdiv.harness import CHECKS, graphs_up_to, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7, help="verify on all graphs with 1..N vertices")
    ap.add_argument("--check", nargs="*", choices=list(CHECKS), help="subset of checks (default all)")
    ap.add_argument("--timing", action="store_true", help="include wall times")
    ap.add_argument("--json", action="store_true", help="dump full reports as JSON")
    args = ap.parse_args()

    corpus = graphs_up_to(args.max_n)
    desc = f"all graphs on 1..{args.max_n} vertices"
    print(f"corpus: {len(corpus)} graphs ({desc})")
    reports = run_all(corpus, desc, args.check)

    bad = 0
    for r in reports:
        status = "pass" if r.passed else f"FAIL ({len(r.counterexamples)} counterexamples)"
        extra = f"  [{r.wall_time_s:.2f}s]" if args.timing else ""
        print(f"  {r.check_id:10s} hypothesis matches {r.hypothesis_matches:5d}  {status}{extra}")
        if r.skipped:
            print(f"  {'':10s} skipped for capacity: {len(r.skipped)}")
        bad += len(r.counterexamples)

    if args.json:
        json.dump([r.to_json(include_timing=args.timing) for r in reports], sys.stdout, indent=2)
        print()
    if bad:
        print(f"{bad} counterexample(s); dump with --json and triage the graph6 keys")
        return 1
    print("all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
