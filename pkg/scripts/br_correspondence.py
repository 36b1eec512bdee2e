"""Walk the Buchstaber-Rees correspondence on C(X): for each n-point
configuration, lift ev to a homomorphism S^n C(X) -> Q and read the point
back off the lift.

    python3 scripts/br_correspondence.py --points 3 --n 2
"""

import argparse
import itertools

from frobhom import br_lift, enumerate_homomorphisms, ev_functional, symmetric_power
from frobhom.algebras import FiniteSpace, function_algebra
from frobhom.frobenius import PointConfiguration


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=3)
    ap.add_argument("--n", type=int, default=2)
    args = ap.parse_args()

    X = FiniteSpace(tuple(f"x{i}" for i in range(args.points)))
    A = function_algebra(X)
    S = symmetric_power(A, args.n)
    homs = {tuple(h.matrix[0]) for h in enumerate_homomorphisms(S.algebra)}
    print(f"|X| = {args.points}, n = {args.n}: dim S^n C(X) = {S.dim}, "
          f"{len(homs)} homomorphisms S^n C(X) -> Q")
    hit = set()
    for pts in itertools.combinations_with_replacement(X.points, args.n):
        cfg = PointConfiguration.from_signed_points(X, pts)
        lift = br_lift(ev_functional(cfg, A), args.n, S)
        row = tuple(lift.matrix[0])
        hit.add(row)
        support = [S.labels[i] for i, v in enumerate(row) if v]
        print(f"  {'+'.join(pts):<12} -> lift supported on multiset {support}")
    print(f"bijective: {hit == homs}")


if __name__ == "__main__":
    main()
