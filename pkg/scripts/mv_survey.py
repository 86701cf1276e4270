"""Survey vertex-independence of the dimension count over SL3 Minkowski sums.

Genuine MV data (c1 * c2 = 0) should give one count at every vertex equal to
the height of top - bottom. Other coefficient vectors are listed with their
per-vertex counts.
"""

import argparse
import itertools

from afgr.dims import height
from afgr.errors import VertexDisagreement
from afgr.polytope import dimension_estimate, dominance_extremes, is_sl3_mv_datum, mv_polytope_sl3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-coeff", type=int, default=2)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    ok = mismatched = disagree = 0
    other = []
    for c in itertools.product(range(args.max_coeff + 1), repeat=4):
        P = mv_polytope_sl3(*c)
        try:
            d = dimension_estimate(P)
        except VertexDisagreement as e:
            if is_sl3_mv_datum(c):
                disagree += 1
            other.append((c, e.counts))
            continue
        lo, hi = dominance_extremes(P)
        want = height(tuple(a - b for a, b in zip(hi, lo)))
        if is_sl3_mv_datum(c):
            if d == want:
                ok += 1
            else:
                mismatched += 1
                print(f"MISMATCH {c}: count {d}, height {want}")
        else:
            other.append((c, d))
    print(f"MV data: {ok} agree, {mismatched} height mismatches, {disagree} vertex disagreements")
    print(f"non-MV coefficient vectors: {len(other)}")
    if args.verbose:
        for c, info in other:
            print(f"    {c}: {info}")


if __name__ == "__main__":
    main()
