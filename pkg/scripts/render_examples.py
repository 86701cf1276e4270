"""Write SVG pictures of the golden polytopes and a few MV polytopes."""

import argparse
from pathlib import Path

from afgr.golden import CASES
from afgr.polytope import mv_polytope_sl3
from afgr.svg import render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for c in CASES:
        (out / f"{c.name}.svg").write_text(render(c.polytope, title=c.name))
    for coeffs in [(1, 0, 0, 1), (2, 0, 1, 1), (0, 2, 2, 0)]:
        name = "mv_" + "".join(map(str, coeffs))
        (out / f"{name}.svg").write_text(render(mv_polytope_sl3(*coeffs), title=name))
    print(f"wrote {len(list(out.glob('*.svg')))} files to {out}")


if __name__ == "__main__":
    main()
