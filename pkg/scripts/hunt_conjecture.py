#!/usr/bin/env python3
"""Hunt for a fork-free graph that is not perfectly divisible.

Exhausts all non-isomorphic graphs up to --exhaustive-n, then samples seeded
G(n, p) beyond that, restricted to fork-free instances.  Any hit would be a
headline finding; it gets printed with full certificates, never swallowed.

    python scripts/hunt_conjecture.py --exhaustive-n 7 --samples 2000 --max-n 9
"""

import argparse
import json
import sys
import time

from forkdiv import formats
from forkdiv.divisibility import is_perfectly_divisible_exact, perfect_division
from forkdiv.graph import bits
from forkdiv.harness import enumerate_nonisomorphic, random_gnp
from forkdiv.limits import DEFAULT_CAPS, CapacityError
from forkdiv.oracles import chromatic_number, clique_number
from forkdiv.patterns import find_induced, pattern


def report_hit(g, origin: str) -> None:
    d = perfect_division(g)
    payload = {
        "origin": origin,
        "graph6": formats.emit_graph6(g),
        "edges": [list(e) for e in g.edges()],
        "omega": clique_number(g),
        "chi": chromatic_number(g),
        "division_of_whole": d.to_json() if d else None,
    }
    print("COUNTEREXAMPLE CANDIDATE")
    print(json.dumps(payload, indent=2))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive-n", type=int, default=7,
                    help="exhaust all graphs up to this order")
    ap.add_argument("--samples", type=int, default=1000, help="random samples per order")
    ap.add_argument("--max-n", type=int, default=DEFAULT_CAPS.exact_divisibility,
                    help="largest random order (exact divisibility capped at "
                         f"{DEFAULT_CAPS.exact_divisibility})")
    ap.add_argument("--p", type=float, default=0.5, help="edge probability for sampling")
    ap.add_argument("--seed", type=int, default=0, help="base seed")
    args = ap.parse_args()

    fork = pattern("fork")
    t0 = time.perf_counter()
    hits = 0

    for n in range(1, args.exhaustive_n + 1):
        scanned = fork_free = 0
        for g in enumerate_nonisomorphic(n):
            scanned += 1
            if find_induced(g, fork, "fork") is not None:
                continue
            fork_free += 1
            if not is_perfectly_divisible_exact(g):
                hits += 1
                report_hit(g, f"exhaustive n={n}")
        print(f"n={n}: {scanned} graphs, {fork_free} fork-free, "
              f"{hits} hits ({time.perf_counter() - t0:.1f}s)")

    for n in range(args.exhaustive_n + 1, args.max_n + 1):
        tried = fork_free = 0
        for k in range(args.samples):
            g = random_gnp(n, args.p, args.seed + 1_000_000 * n + k)
            tried += 1
            if find_induced(g, fork, "fork") is not None:
                continue
            fork_free += 1
            try:
                ok = is_perfectly_divisible_exact(g)
            except CapacityError:
                ok = perfect_division(g) is not None  # weaker: whole-graph division only
            if not ok:
                hits += 1
                report_hit(g, f"gnp n={n} p={args.p}")
        print(f"n={n}: {tried} samples, {fork_free} fork-free, "
              f"{hits} hits ({time.perf_counter() - t0:.1f}s)")

    if hits:
        print(f"{hits} candidate(s) above; verify by hand before celebrating")
        return 1
    print("no counterexample found")
    return 0


if __name__ == "__main__":
    sys.exit(main())
