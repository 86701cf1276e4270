"""Print the SL3 golden corpus table: dimension, bounds, enumerator effort."""

import argparse
import time

from afgr.degeneration import DEFAULT_CAP
from afgr.golden import CASES, run_case


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP)
    args = ap.parse_args()
    print(f"{'case':<10} {'mu':<12} {'dim':>3} {'lower':>5} {'known':>5} {'upper':>7} {'examined':>9} {'secs':>6}")
    for c in CASES:
        t0 = time.perf_counter()
        r = run_case(c, args.cap)
        dt = time.perf_counter() - t0
        mu = ",".join(map(str, c.mu))
        print(f"{c.name:<10} {mu:<12} {r.dim:>3} {r.lower_bound:>5} {c.components:>5} "
              f"{str(r.upper_bound):>7} {r.examined:>9} {dt:>6.2f}  {'ok' if r.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
