#!/usr/bin/env python3
"""Run the full verification sweeps outside pytest and print a summary table.

Covers the same ground as tests/test_acceptance.py: window cardinalities,
localization with mutation testing, Euler-character balance, tilting
Ext-vanishing, K-matrix relations, and the golden regressions. Exit code 0
only if everything passes.
"""

import argparse
import sys
import time
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from schurwin.partitions import Context
from schurwin.shifts import cotwist_shift_amount
from schurwin.verify import (
    localization_mutation_sweep,
    verify_regression,
    verify_euler,
    verify_localization,
    verify_relations,
    verify_tilting,
)
from schurwin.windows import enumerate_window


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    failures = []

    def record(name, ok, elapsed, extra=""):
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name:<42} {elapsed * 1000:9.1f} ms  {extra}")
        if not ok:
            failures.append(name)

    t0 = time.perf_counter()
    ok = all(
        len(enumerate_window(Context(d, r), k)) == comb(d, r)
        for d in range(1, 9)
        for r in range(0, min(4, d) + 1)
        for k in range(-2, 3)
    )
    record("window cardinality d<=8 r<=4", ok, time.perf_counter() - t0)

    for d in range(1, 8):
        for r in range(1, min(3, d) + 1):
            ctx = Context(d, r)
            t0 = time.perf_counter()
            rep = verify_localization(ctx, samples=3, seed=args.seed)
            mut = localization_mutation_sweep(ctx, mutations=20, seed=args.seed)
            record(
                f"localization + mutations d={d} r={r}",
                rep.passed and mut.passed,
                time.perf_counter() - t0,
            )

    for d in range(1, 8):
        for r in range(1, min(3, d) + 1):
            t0 = time.perf_counter()
            rep = verify_euler(Context(d, r))
            record(f"euler balance d={d} r={r}", rep.passed, time.perf_counter() - t0)

    for d in range(1, 7):
        for r in range(0, min(3, d) + 1):
            t0 = time.perf_counter()
            rep = verify_tilting(Context(d, r))
            record(f"tilting d={d} r={r}", rep.passed, time.perf_counter() - t0)

    for d in range(1, 7):
        for r in range(0, min(3, d) + 1):
            ctx = Context(d, r)
            t0 = time.perf_counter()
            rep = verify_relations(ctx)
            record(
                f"relations d={d} r={r}",
                rep.passed,
                time.perf_counter() - t0,
                f"cotwist shift {cotwist_shift_amount(ctx)}",
            )

    for d, r in [(4, 2), (7, 3)] + [(d, 1) for d in range(2, 9)]:
        t0 = time.perf_counter()
        rep = verify_regression(Context(d, r))
        record(f"golden regression d={d} r={r}", rep.passed, time.perf_counter() - t0)

    if failures:
        print(f"\n{len(failures)} sweep(s) failed")
        return 1
    print("\nall sweeps passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
