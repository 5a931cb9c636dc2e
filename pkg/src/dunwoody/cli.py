"""Command-line front end.

    dunwoody verify --i-min 2 --i-max 6 --format json --seed 7
    dunwoody eval "(0 1)(0 1)"
    dunwoody reduce "w@2[A:g@2[z@2; ()]; B:g@3[v{-2,-1}; (-3 -2)]]"
    dunwoody classify "w@2[A:g@2[v{-1,0}; (-2 -1)]; B:g@3[v{-2,-1}; (-3 -2)]]"
    dunwoody tree-ball --i 1 --radius 1
    dunwoody census --i 1 --d 1
"""

from __future__ import annotations

import argparse
import json
import sys

from . import amalgam, certify, textio, tree
from .amalgam import Word
from .config import Limits, load_limits
from .errors import DunwoodyError


def _parse_word(text: str) -> Word:
    x = textio.parse(text)
    if not isinstance(x, Word):
        raise ValueError(f"expected a word w@i[...], got {type(x).__name__}")
    return x


def cmd_verify(args, limits: Limits) -> int:
    if args.i_min > args.i_max:
        print("error: empty range (--i-min exceeds --i-max)", file=sys.stderr)
        return 2
    if args.i_min < 2 or args.i_max > limits.verify_max_level:
        print(f"error: levels must lie in [2, {limits.verify_max_level}]", file=sys.stderr)
        return 2
    report = certify.run(
        args.i_min,
        args.i_max,
        seed=args.seed,
        samples=args.samples if args.samples is not None else limits.samples,
        max_level=limits.verify_max_level,
        landau_cap=limits.landau_cap,
    )
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_json(args.timings), indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text(args.timings))
    return 0 if report.passed else 1


def cmd_eval(args, limits: Limits) -> int:
    print(textio.format_element(textio.parse(args.expr)))
    return 0


def cmd_reduce(args, limits: Limits) -> int:
    w = amalgam.reduce(_parse_word(args.expr))
    print(amalgam.format_word(w))
    print(f"syllable length {len(w)}")
    return 0


def cmd_classify(args, limits: Limits) -> int:
    print(tree.classify(_parse_word(args.expr)))
    return 0


def cmd_tree_ball(args, limits: Limits) -> int:
    ball = tree.build_ball(
        args.i,
        args.radius,
        max_level=limits.ball_max_level,
        max_radius=limits.ball_max_radius,
        budget=limits.ball_vertex_budget,
    )
    text = ball.export()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{len(ball.vertices)} vertices, {len(ball.edges)} edges", file=sys.stderr)
    return 0


def cmd_census(args, limits: Limits) -> int:
    n = tree.joint_stabilizer_census(
        args.i,
        args.d,
        max_level=limits.census_max_level,
        max_distance=limits.census_max_distance,
    )
    print(n)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dunwoody", description=__doc__.split("\n")[0])
    parser.add_argument("--config", help="key = value file overriding caps and budgets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the certificate pipeline over a range of levels")
    p.add_argument("--i-min", type=int, default=2)
    p.add_argument("--i-max", type=int, default=6)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None, help="sampled two-path checks per level")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="print the canonical form of an element")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("reduce", help="reduce a word in the segment amalgam")
    p.add_argument("expr")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("classify", help="elliptic or loxodromic on the Bass-Serre tree")
    p.add_argument("expr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tree-ball", help="export a ball of the Bass-Serre tree as an edge list")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--output", help="write the edge list here instead of stdout")
    p.set_defaults(func=cmd_tree_ball)

    p = sub.add_parser("census", help="joint stabilizer size along a geodesic")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        limits = load_limits(args.config) if args.config else Limits()
    except (OSError, ValueError) as e:
        parser.error(str(e))
    try:
        return args.func(args, limits)
    except (DunwoodyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
