"""Command-line front end: ``afgr <command> ...`` (see ``afgr -h``)."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from afgr import degeneration as dg
from afgr import dims, golden, orders, polytope as pt, weyl
from afgr.errors import DomainError, VertexDisagreement
from afgr.svg import render as render_svg

DEFAULT_CAP = dg.DEFAULT_CAP


@dataclass(frozen=True)
class RunConfig:
    rank: int | None
    mode: str
    enumeration_cap: int
    output: str


class UsageError(Exception):
    pass


# ------------------------------------------------------------- parsing

def parse_ints(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in s.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}")


def parse_coweight(s: str, cfg: RunConfig) -> tuple[int, ...]:
    lam = parse_ints(s)
    if cfg.rank is not None and len(lam) != cfg.rank:
        raise UsageError(f"{s!r} has {len(lam)} coordinates, --rank is {cfg.rank}")
    if cfg.mode == "SL" and sum(lam) != 0:
        raise DomainError(f"{list(lam)} has coordinate sum {sum(lam)} (SL mode)")
    return lam


def parse_perm(s: str) -> tuple[int, ...]:
    """One-line permutation, 1-indexed: '2,1,3'."""
    p = tuple(v - 1 for v in parse_ints(s))
    try:
        return weyl.perm_check(p)
    except (ValueError, DomainError):
        raise UsageError(f"{s!r} is not a permutation")


_WORD = re.compile(r"^(s\d+)+$")


def parse_elt(s: str, cfg: RunConfig) -> weyl.AffineWeylElt:
    """'e', a word such as 's0s1s0', or 'trans:perm' such as '1,-1:2,1'."""
    if ":" in s:
        a, b = s.split(":", 1)
        lam, p = parse_ints(a), parse_perm(b)
        if len(lam) != len(p):
            raise UsageError(f"{s!r}: translation and permutation ranks differ")
        if cfg.rank is not None and len(lam) != cfg.rank:
            raise UsageError(f"{s!r} has rank {len(lam)}, --rank is {cfg.rank}")
        return weyl.AffineWeylElt(lam, p)
    if cfg.rank is None:
        raise UsageError("--rank is needed to read words")
    if s in ("e", "1"):
        return weyl.identity(cfg.rank)
    if not _WORD.match(s):
        raise UsageError(f"cannot read element {s!r}")
    word = [int(v) for v in re.findall(r"s(\d+)", s)]
    if any(i >= cfg.rank for i in word):
        raise UsageError(f"{s!r} uses a generator outside rank {cfg.rank}")
    return weyl.from_word(word, cfg.rank)


def parse_points(s: str) -> list[tuple[Fraction, ...]]:
    """'1,0,-1;0,1,-1' (fractions such as 1/3 allowed)."""
    try:
        return [tuple(Fraction(v) for v in chunk.split(",")) for chunk in s.split(";") if chunk.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read point list {s!r}")


NAMED = {c.name: c.vertices for c in golden.CASES}


def polytope_arg(args, cfg: RunConfig) -> pt.Polytope:
    if getattr(args, "polytope", None):
        if args.polytope not in NAMED:
            raise UsageError(f"unknown polytope {args.polytope!r}; known: {', '.join(NAMED)}")
        return pt.convex_hull(NAMED[args.polytope])
    if getattr(args, "points", None):
        pts = parse_points(args.points)
        if cfg.rank is not None and any(len(p) != cfg.rank for p in pts):
            raise UsageError("point rank differs from --rank")
        return pt.convex_hull(pts)
    raise UsageError("give --polytope NAME or --points LIST")


# ------------------------------------------------------------ encoding

def rational(v) -> dict:
    v = Fraction(v)
    return {"num": v.numerator, "den": v.denominator}


def encode(obj: Any) -> Any:
    if isinstance(obj, weyl.AffineWeylElt):
        out = {"trans": list(obj.trans), "perm": [v + 1 for v in obj.perm]}
        if sum(obj.trans) == 0:
            out["word"] = weyl.word_string(weyl.reduced_word(obj))
            out["length"] = weyl.length(obj)
        return out
    if isinstance(obj, pt.Polytope):
        return {"vertices": [[rational(v) for v in p] for p in obj.vertices], "dim": obj.dim}
    if isinstance(obj, dims.DimResult):
        return {"value": obj.value, "empty": obj.empty, "equidimensional": obj.equidimensional,
                "kind": obj.kind, "note": obj.note}
    if isinstance(obj, weyl.AffineRoot):
        return {"root": [obj.root.i + 1, obj.root.j + 1], "level": obj.level}
    if isinstance(obj, dg.Component):
        return {"anchor": encode(obj.anchor), "dim": obj.dim,
                "polytope": None if obj.polytope is None else encode(obj.polytope)}
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else rational(obj)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def dumps(command: str, result: Any) -> str:
    return json.dumps({"command": command, "result": encode(result)}, sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


def _inline(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, (list, tuple)):
        return all(isinstance(x, (int, Fraction)) and not isinstance(x, bool) for x in v)
    return True


def text(obj: Any, indent: str = "") -> str:
    if isinstance(obj, weyl.AffineWeylElt):
        return weyl.word_string(weyl.reduced_word(obj)) if sum(obj.trans) == 0 else repr(obj)
    if isinstance(obj, pt.Polytope):
        verts = "; ".join(",".join(str(v) for v in p) for p in obj.vertices)
        return f"polytope dim {obj.dim}: {verts}"
    if isinstance(obj, dims.DimResult):
        s = "empty" if obj.empty else str(obj.value)
        return f"{s} ({obj.kind}{', equidimensional' if obj.equidimensional else ''}{'; ' + obj.note if obj.note else ''})"
    if isinstance(obj, dg.Component):
        return f"anchor {text(obj.anchor)}" + (f", dim {obj.dim}" if obj.dim is not None else "")
    if isinstance(obj, dict):
        return "\n".join(f"{indent}{k}: {text(v)}" if _inline(v) else f"{indent}{k}:\n{text(v, indent + '  ')}"
                         for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        if _inline(obj):
            return ",".join(map(str, obj))
        lines = []
        for v in obj:
            if isinstance(v, dict):
                block = text(v, indent + "  ")
                lines.append(indent + "- " + block[len(indent) + 2:])
            else:
                lines.append(f"{indent}- {text(v, indent + '  ')}")
        return "\n".join(lines)
    return str(obj)


# ------------------------------------------------------------ commands

def cmd_weyl(args, cfg):
    elts = [parse_elt(s, cfg) for s in args.elements]
    if args.op == "compose":
        x = weyl.identity(elts[0].rank)
        for y in elts:
            x = x * y
        return {"element": x}
    if len(elts) != (2 if args.op == "bruhat" else 1):
        raise UsageError(f"weyl {args.op} takes {2 if args.op == 'bruhat' else 1} element(s)")
    if args.op == "word":
        return {"element": elts[0], "word": weyl.word_string(weyl.reduced_word(elts[0]))}
    if args.op == "length":
        return {"element": elts[0], "length": weyl.length(elts[0])}
    return {"x": elts[0], "y": elts[1], "leq": weyl.bruhat_leq(elts[0], elts[1])}


def cmd_order(args, cfg):
    if args.op == "dominance":
        a, b = parse_coweight(args.x, cfg), parse_coweight(args.y, cfg)
        return {"x": list(a), "y": list(b), "leq": orders.dominance_leq(a, b)}
    x, y = parse_elt(args.x, cfg), parse_elt(args.y, cfg)
    w = parse_perm(args.w) if args.w else None
    f = orders.semiinf_leq_lattice if args.op == "lattice" else orders.semiinf_leq_cone
    return {"x": x, "y": y, "leq": f(x, y, w), "w": None if w is None else [v + 1 for v in w]}


def cmd_polytope(args, cfg):
    if args.op == "mv":
        c = parse_ints(args.coeffs)
        if len(c) != 4:
            raise UsageError("mv takes four coefficients c1,c2,c3,c4")
        P = pt.mv_polytope_sl3(*c)
        return {"polytope": P, "mv": pt.is_sl3_mv_datum(c)}
    if args.op == "regular":
        P, S = regular_example(args.example) if args.example else (polytope_arg(args, cfg), cells_arg(args))
        r = pt.regularity(P, S)
        out = {"regular": r.regular, "margin": r.margin}
        if r.regular:
            out["heights"] = {",".join(map(str, p)): h for p, h in zip(r.points, r.heights)}
        else:
            out["certificate"] = [{"cell": c, "point": [rational(v) for v in r.points[p]], "weight": rational(y)}
                                  for (c, p), y in sorted(r.certificate.items())]
            out["certificate_verified"] = pt.verify_certificate(P, S, r)
        return out
    P = polytope_arg(args, cfg)
    if args.op == "hull":
        return {"polytope": P}
    if args.op == "minkowski":
        if not args.points2:
            raise UsageError("minkowski needs --points2")
        return {"polytope": pt.minkowski_sum(P, pt.convex_hull(parse_points(args.points2)))}
    if args.op == "points":
        v = parse_points(args.at)[0] if args.at else P.vertices[0]
        return {"points": [[rational(x) for x in q] for q in pt.coset_lattice_points(P, v)]}
    if args.op == "dim":
        try:
            d = pt.dimension_estimate(P)
        except VertexDisagreement as e:
            raise DomainError("vertex counts disagree: " + "; ".join(
                f"{','.join(map(str, v))} -> {c}" for v, c in sorted(e.counts.items())))
        counts = {",".join(map(str, v)): c for v, c in sorted(pt.vertex_counts(P).items())}
        return {"dimension": d, "per_vertex": counts}
    raise UsageError(f"unknown polytope op {args.op}")


def cells_arg(args) -> pt.Subdivision:
    if not args.cells:
        raise UsageError("regular needs --example or --cells 'pts|pts|...'")
    return pt.Subdivision(tuple(pt.convex_hull(parse_points(c)) for c in args.cells.split("|")))


def regular_example(name: str):
    """Named subdivisions: trivial, rhombi, mother, mother-flip."""
    if name in ("trivial", "rhombi"):
        H = pt.convex_hull(golden.case("hexagon").vertices)
        if name == "trivial":
            return H, pt.Subdivision((H,))
        ring = H.cyclic_vertices()
        zero = (0,) * 3
        return H, pt.Subdivision(tuple(pt.convex_hull([zero, ring[2 * k], ring[2 * k + 1], ring[(2 * k + 2) % 6]])
                                       for k in range(3)))
    if name in ("mother", "mother-flip"):
        return mother_of_all_examples(flip=name == "mother-flip")
    raise UsageError(f"unknown subdivision example {name!r}")


def mother_of_all_examples(flip: bool = False):
    """A triangle with a shrunken copy inside and the three trapezoids cut
    cyclically; flipping one diagonal makes it regular."""
    A = [(8, -4, -4), (-4, 8, -4), (-4, -4, 8)]
    a = [(2, -1, -1), (-1, 2, -1), (-1, -1, 2)]
    cells = [pt.convex_hull(a)]
    for i in range(3):
        j = (i + 1) % 3
        if flip and i == 0:
            cells += [pt.convex_hull([A[i], A[j], a[i]]), pt.convex_hull([A[j], a[i], a[j]])]
        else:
            cells += [pt.convex_hull([A[i], A[j], a[j]]), pt.convex_hull([A[i], a[i], a[j]])]
    return pt.convex_hull(A), pt.Subdivision(tuple(cells))


def cmd_degen(args, cfg):
    op = args.op
    need = {"point": ["beta"], "p1": ["b1", "b2"], "root": ["root"], "semiinf": ["mu"],
            "admissible": ["lam"], "go-limit": ["lam"], "sl2-mv": ["lam", "mu"], "sl2-iwahori": ["gamma"]}
    for k in need.get(op, []):
        if getattr(args, k) is None:
            raise UsageError(f"degen {op} needs --{k}")
    if op == "point":
        return {"fixed_point": dg.degenerate_fixed_point(parse_coweight(args.beta, cfg))}
    if op == "p1":
        L = dg.degenerate_p1(parse_coweight(args.b1, cfg), parse_coweight(args.b2, cfg))
        return {"fixed_points": list(L.fixed_points), "edges": [list(e) for e in L.edges],
                "edge_roots": list(L.edge_roots), "moment_images": [weyl.moment_image(x) for x in L.fixed_points]}
    if op == "root":
        ij = parse_ints(args.root)
        if len(ij) != 2:
            raise UsageError("--root takes i,j (1-indexed) for e_i - e_j")
        g = weyl.AffineRoot(weyl.Root(ij[0] - 1, ij[1] - 1), args.level)
        return {"root": g, "limit": dg.degenerate_root_subgroup(g)}
    if op == "semiinf":
        mu = parse_coweight(args.mu, cfg)
        w = parse_perm(args.w) if args.w else weyl.longest_perm(len(mu))
        anchor = dg.degenerate_semiinfinite(w, mu)
        out = {"anchor": anchor, "w": [v + 1 for v in w]}
        if args.contains:
            y = parse_elt(args.contains, cfg)
            out["contains"] = {"element": y, "in_closure": dg.semiinfinite_closure_contains(anchor, y, w)}
        return out
    if op == "admissible":
        allx, tops = dg.admissible_set(parse_coweight(args.lam, cfg))
        return {"elements": allx, "maximal": tops, "size": len(allx)}
    if op == "go-limit":
        R = dg.go_orbit_limit(parse_coweight(args.lam, cfg))
        return {"polytope": R.polytope, "lower_bound": R.lower_bound, "upper_bound": R.upper_bound,
                "components": R.components}
    if op == "bounds":
        P = polytope_arg(args, cfg)
        d = args.d if args.d is not None else pt.dimension_estimate(P)
        ub = dg.component_upper_bound(P, d, cfg.enumeration_cap)
        return {"limit_polytope": dg.limit_polytope(P), "d": d, "lower_bound": dg.component_lower_bound(P),
                "upper_bound": ub.value, "examined": ub.examined, "candidates": ub.candidates,
                "note": "upper bound only; tightness is not claimed"}
    if op == "sl2-mv":
        L = dg.sl2_mv_limit(parse_coweight(args.lam, cfg), parse_coweight(args.mu, cfg))
        return {"d": L.d, "fixed_point_count": L.fixed_point_count, "cells_by_dim": L.cells_by_dim,
                "components": list(L.components)}
    if op == "sl2-iwahori":
        return {"components": list(dg.sl2_iwahori_limit(parse_coweight(args.gamma, cfg), args.opposite))}
    raise UsageError(f"unknown degen op {op}")


def cmd_dims(args, cfg):
    op = args.op
    if op == "height":
        return {"height": dims.height(parse_coweight(args.lam, cfg))}
    if op == "iwahori-gr":
        return {"dim": dims.iwahori_dim_gr(parse_coweight(args.lam, cfg))}
    if op == "iwahori-fl":
        return {"dim": dims.iwahori_dim_fl(parse_elt(args.x, cfg))}
    if op == "gr-int":
        return {"result": dims.gr_intersection_dim(parse_coweight(args.lam, cfg), parse_coweight(args.mu, cfg))}
    if op == "fl-bound":
        return {"result": dims.fl_intersection_bound(parse_elt(args.x, cfg), parse_elt(args.y, cfg))}
    raise UsageError(f"unknown dims op {op}")


def cmd_examples(args, cfg):
    names = [args.case] if args.case else None
    if args.case and args.case not in golden.CASE_NAMES:
        raise UsageError(f"unknown case {args.case!r}; known: {', '.join(golden.CASE_NAMES)}")
    rows = golden.run_all(cfg.enumeration_cap, names)
    out = [{
        "case": r.case.name, "mu": list(r.case.mu), "dim": r.dim,
        "lower_bound": r.lower_bound, "expected_lower_bound": r.case.lower_bound,
        "known_components": r.case.components, "upper_bound": r.upper_bound,
        "examined": r.examined, "pass": r.passed,
    } for r in rows]
    return {"cases": out, "all_pass": all(r.passed for r in rows)}


def cmd_render(args, cfg):
    P = polytope_arg(args, cfg)
    svg = render_svg(P, lattice=not args.no_lattice, title=args.polytope)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        return {"written": args.out, "vertices": len(P.vertices)}
    return svg


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, help="n for SL_n / GL_n")
    common.add_argument("--mode", choices=["SL", "GL"], default="SL")
    common.add_argument("--cap", type=int, help=f"enumeration cap (default {DEFAULT_CAP}, env AFGR_CAP)")
    common.add_argument("--output", choices=["json", "text", "svg"], default="text")

    p = argparse.ArgumentParser(prog="afgr", description="Affine Weyl combinatorics and degeneration limits.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("weyl", parents=[common], help="compose / reduced word / length / Bruhat")
    s.add_argument("op", choices=["compose", "word", "length", "bruhat"])
    s.add_argument("elements", nargs="+", help="'e', 's0s1', or 'trans:perm' e.g. 1,-1:2,1")

    s = sub.add_parser("order", parents=[common], help="semi-infinite or dominance comparison")
    s.add_argument("op", choices=["lattice", "cone", "dominance"])
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("--w", help="finite Weyl element (1-indexed one-line) for the U_w order")

    s = sub.add_parser("polytope", parents=[common], help="hulls, counts, MV polytopes, regularity")
    s.add_argument("op", choices=["hull", "dim", "mv", "minkowski", "points", "regular"])
    s.add_argument("--points")
    s.add_argument("--points2")
    s.add_argument("--polytope", help="named polytope: " + ", ".join(NAMED))
    s.add_argument("--coeffs", default="0,0,0,0")
    s.add_argument("--at", help="coset representative for 'points'")
    s.add_argument("--cells", help="cells separated by '|'")
    s.add_argument("--example", help="trivial, rhombi, mother, mother-flip")

    s = sub.add_parser("degen", parents=[common], help="degeneration rules and bounds")
    s.add_argument("op", choices=["point", "p1", "root", "semiinf", "admissible", "go-limit", "bounds",
                                  "sl2-mv", "sl2-iwahori"])
    for k in ("beta", "b1", "b2", "mu", "lam", "gamma", "w", "root", "contains", "points", "polytope"):
        s.add_argument(f"--{k}")
    s.add_argument("--level", type=int, default=0)
    s.add_argument("--d", type=int)
    s.add_argument("--opposite", action="store_true")

    s = sub.add_parser("dims", parents=[common], help="dimension formulas")
    s.add_argument("op", choices=["height", "iwahori-gr", "iwahori-fl", "gr-int", "fl-bound"])
    for k in ("lam", "mu", "x", "y"):
        s.add_argument(f"--{k}")

    s = sub.add_parser("examples", parents=[common], help="run the SL3 golden corpus")
    s.add_argument("--case", help=", ".join(golden.CASE_NAMES))

    s = sub.add_parser("render", parents=[common], help="SVG picture of a polytope (rank <= 3)")
    s.add_argument("--polytope")
    s.add_argument("--points")
    s.add_argument("--out")
    s.add_argument("--no-lattice", action="store_true")
    return p


_NEG_VALUE = re.compile(r"^-\d")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """'--b2 -1,1' -> '--b2=-1,1' so argparse does not read a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a.startswith("--") and "=" not in a and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


COMMANDS = {"weyl": cmd_weyl, "order": cmd_order, "polytope": cmd_polytope, "degen": cmd_degen,
            "dims": cmd_dims, "examples": cmd_examples, "render": cmd_render}


def _config(args) -> RunConfig:
    cap = args.cap
    if cap is None:
        env = os.environ.get("AFGR_CAP")
        try:
            cap = int(env) if env else DEFAULT_CAP
        except ValueError:
            raise UsageError(f"AFGR_CAP={env!r} is not an integer")
    if cap < 1:
        raise UsageError("the cap must be positive")
    if args.rank is not None and args.rank < 2:
        raise UsageError("--rank must be at least 2")
    return RunConfig(args.rank, args.mode, cap, args.output)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as e:
        return int(e.code or 0)
    command = args.command + (f" {args.op}" if hasattr(args, "op") else "")
    try:
        cfg = _config(args)
        result = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        stderr.write(f"afgr: usage error: {e}\n")
        return 2
    except DomainError as e:
        stderr.write(f"afgr: {e}\n")
        return 1
    if isinstance(result, str):
        stdout.write(result)
        return 0
    if cfg.output == "json":
        stdout.write(dumps(command, result))
    elif cfg.output == "svg":
        stderr.write("afgr: usage error: --output svg is only meaningful for 'render'\n")
        return 2
    else:
        stdout.write(text(result) + "\n")
    if args.command == "examples" and not result["all_pass"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
