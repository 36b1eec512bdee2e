"""Classify every signed configuration on |X| <= m with p + q <= s and
tabulate how many land on each (p, q) type.

    python3 scripts/classification_sweep.py --points 4 --total 5
"""

import argparse
import time
from collections import Counter

from frobhom import classify, ev_functional
from frobhom.suites import configurations


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=4)
    ap.add_argument("--total", type=int, default=5)
    args = ap.parse_args()

    t0 = time.perf_counter()
    table, mismatches = Counter(), []
    for cfg in configurations(args.points, args.total):
        t = classify(ev_functional(cfg), args.total, args.total)
        table[len(cfg.space), t.pq] += 1
        if t.pq != (cfg.p, cfg.q):
            mismatches.append((cfg.vector(), t.pq))
    elapsed = time.perf_counter() - t0

    print(f"{'|X|':>3} {'p':>2} {'q':>2} {'count':>6}")
    for (m, pq), n in sorted(table.items(), key=lambda kv: (kv[0][0], kv[0][1] or (-1, -1))):
        p, q = pq if pq else ("-", "-")
        print(f"{m:>3} {p:>2} {q:>2} {n:>6}")
    print(f"{sum(table.values())} configurations, {len(mismatches)} mismatches, {elapsed:.1f}s")
    for v, pq in mismatches[:10]:
        print(f"  mismatch {v}: classified as {pq}")


if __name__ == "__main__":
    main()
