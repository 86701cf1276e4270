"""Compare the lattice-flag and alcove-cone semi-infinite orders.

Agreement is exhaustive for the small windows in rank 2 and 3; in rank 4
the cone version is coarser, and the disagreeing pairs are counted.
"""

import argparse
import itertools

from afgr.orders import semiinf_leq_cone, semiinf_leq_lattice
from afgr.weyl import elements_up_to_length, finite_weyl_group, reduced_word, word_string


def compare(n: int, max_len: int, twist=None) -> tuple[int, int, list]:
    elts = elements_up_to_length(n, max_len)
    total, bad = 0, []
    for x, y in itertools.product(elts, repeat=2):
        total += 1
        a, b = semiinf_leq_lattice(x, y, twist), semiinf_leq_cone(x, y, twist)
        if a != b:
            bad.append((x, y, a, b))
    return total, len(bad), bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--ranks", default="2,3,4")
    ap.add_argument("--all-twists", action="store_true")
    args = ap.parse_args()
    for n in map(int, args.ranks.split(",")):
        twists = finite_weyl_group(n) if args.all_twists else [None]
        for w in twists:
            total, nbad, bad = compare(n, args.max_len, w)
            tag = "w0" if w is None else "".join(str(i + 1) for i in w)
            print(f"n={n} twist={tag} len<={args.max_len}: {total} pairs, {nbad} disagreements")
            for x, y, a, b in bad[:3]:
                print(f"    {word_string(reduced_word(x))} vs {word_string(reduced_word(y))}: lattice={a} cone={b}")


if __name__ == "__main__":
    main()
