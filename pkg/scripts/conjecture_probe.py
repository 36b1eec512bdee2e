"""Search small functionals for p|q-homomorphisms outside the image of
Sym^{p|q}(X).

On C(X) every functional in the search box is classified and, if it is a
p|q-homomorphism, recovered as a signed configuration; a solution with no
integral configuration of matching type would be a counterexample candidate.
On the non-reduced algebra Q[t]/(t^m) the solutions are listed for
inspection.

    python3 scripts/conjecture_probe.py --points 2 --bound 2 --den 2
"""

import argparse
import itertools
from fractions import Fraction

from frobhom import classify, recover_configuration
from frobhom.algebras import FiniteSpace, LinearMap, function_algebra, truncated_polynomial_algebra


def box(dim, bound, den):
    vals = sorted({Fraction(a, den) for a in range(-bound * den, bound * den + 1)})
    return itertools.product(vals, repeat=dim)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2)
    ap.add_argument("--bound", type=int, default=2)
    ap.add_argument("--den", type=int, default=2)
    ap.add_argument("--nilpotency", type=int, default=2)
    args = ap.parse_args()
    pq_max = args.bound * args.points

    A = function_algebra(FiniteSpace(tuple(range(args.points))))
    solutions, candidates = 0, []
    for v in box(A.dim, args.bound, args.den):
        f = LinearMap.functional(A, v)
        t = classify(f, pq_max, pq_max)
        if not t.ok:
            continue
        solutions += 1
        cfg = recover_configuration(f)
        if cfg is None or (cfg.p, cfg.q) != t.pq:
            candidates.append((v, t.pq))
    print(f"C(X), |X| = {args.points}: {solutions} p|q-homomorphisms in the box, "
          f"{len(candidates)} outside the image")
    for v, pq in candidates:
        print(f"  candidate {[str(x) for x in v]} of type {pq}")

    B = truncated_polynomial_algebra(args.nilpotency)
    found = []
    for v in box(B.dim, args.bound, args.den):
        if v[0].denominator != 1:
            continue
        t = classify(LinearMap.functional(B, v), pq_max, pq_max)
        if t.ok:
            found.append(([str(x) for x in v], t.pq))
    print(f"Q[t]/(t^{args.nilpotency}): {len(found)} p|q-homomorphisms in the box")
    for v, pq in found:
        print(f"  {v} of type {pq}")


if __name__ == "__main__":
    main()
