"""``partdyn``: command-line access to the library.

Exit status is 0 on success, 1 when a verification suite finds a failure
and 2 for usage errors (bad flags, malformed input, out-of-domain values).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .cfrac import cf_expand, convergents, mirror
from .counting import METHODS, count_report
from .extended_farey import ef_orbit
from .farey import binary_sequence, depth, farey_tree
from .mapdef import BUILTIN_MAPS, load_mapdef
from .mcf_zoo import map_orbit, resolve_map
from .parallel import ordered_map
from .partitions import Partition, conjugate, render_shape, young_shape
from .tables import (
    FORMATS,
    Table,
    count_table,
    farey_orbit_table,
    generation_table,
    partition_table,
    tree_table,
    triangle_orbit_table,
    zoo_orbit_table,
)
from .triangle import tri_orbit
from .verify import SUITES, run_suite

MAPS = ("farey", *BUILTIN_MAPS)


class UsageError(Exception):
    pass


def parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def parse_fraction(text: str) -> Fraction:
    p, sep, q = text.partition("/")
    try:
        x = Fraction(int(p), int(q)) if sep else Fraction(int(p))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed fraction {text!r}; expected p/q") from None
    if not 0 < x <= 1:
        raise UsageError(f"{text} is not in (0, 1]")
    return x


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected A..B") from None
    if not sep or a > b:
        raise UsageError(f"malformed range {text!r}; expected A..B with A <= B")
    return range(a, b + 1)


def _partition(args) -> Partition:
    if len(args.parts) != len(args.mults):
        raise UsageError("--parts and --mults must have the same length")
    return Partition(args.parts, args.mults)


def _fmt(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# Commands. Each returns (text to print, exit status).


def cmd_cf(args) -> tuple[str, int]:
    x = parse_fraction(args.fraction)
    digits = cf_expand(x)
    payload = {
        "fraction": _fmt(x),
        "digits": list(digits),
        "convergents": [f"{p}/{q}" for p, q in convergents(digits)],
        "mirror": _fmt(mirror(digits)),
        "depth": depth(x),
        "sequence": binary_sequence(x),
    }
    rows = [[key, " ".join(map(str, v)) if isinstance(v, list) else str(v)] for key, v in payload.items()]
    return Table(["field", "value"], rows, payload).render(args.format), 0


def cmd_tree(args) -> tuple[str, int]:
    if args.levels < 1:
        raise UsageError("--levels must be >= 1")
    return tree_table(farey_tree(args.levels, sort=args.sorted)).render(args.format), 0


def cmd_orbit(args) -> tuple[str, int]:
    lam = _partition(args)
    name = args.map
    if name == "farey":
        if lam.m != 2:
            raise UsageError("the Farey map acts on two-part partitions")
        table = farey_orbit_table(ef_orbit(lam))
    elif name == "triangle":
        if lam.m < 2:
            raise UsageError("the triangle map needs at least two parts")
        table = triangle_orbit_table(tri_orbit(lam, through_root=args.through_root))
    else:
        if name.startswith("custom:"):
            mapdef = load_mapdef(name[len("custom:"):])
        elif name in BUILTIN_MAPS:
            mapdef = resolve_map(name)
        else:
            raise UsageError(f"unknown map {name!r}; known: {', '.join(MAPS)}, custom:<path>")
        if lam.m != mapdef.dim:
            raise UsageError(f"{mapdef.name} acts in dimension {mapdef.dim}, got {lam.m} parts")
        table = zoo_orbit_table(mapdef.name, map_orbit(mapdef, lam.parts, lam.mults))
    return table.render(args.format), 0


def _count_one(job: tuple[int, tuple[str, ...], bool]):
    n, methods, witness = job
    return count_report(n, methods, witness)


def cmd_count(args) -> tuple[str, int]:
    if (args.n is None) == (args.range is None):
        raise UsageError("give exactly one of --n or --range")
    ns = [args.n] if args.n is not None else parse_range(args.range)
    if min(ns) < 2:
        raise UsageError("n must be >= 2")
    methods = tuple(m.strip() for m in args.methods.split(","))
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise UsageError(f"unknown methods {unknown}; known: {', '.join(METHODS)}")
    reports = ordered_map(_count_one, [(n, methods, args.witness) for n in ns])
    return count_table(reports).render(args.format), 0


def cmd_generations(args) -> tuple[str, int]:
    if args.n < 3:
        raise UsageError("n must be >= 3")
    return generation_table(args.n).render(args.format), 0


def cmd_conjugate(args) -> tuple[str, int]:
    lam = _partition(args)
    conj = conjugate(lam)
    text = partition_table(lam, conj).render(args.format)
    if args.shape and args.format != "json":
        text += "\n" + render_shape(young_shape(lam)) + "\n\n" + render_shape(young_shape(conj)) + "\n"
    elif args.shape:
        payload = {
            "input": lam.to_dict(),
            "conjugate": conj.to_dict(),
            "shapes": {"input": list(young_shape(lam)), "conjugate": list(young_shape(conj))},
        }
        text = json.dumps(payload, indent=2) + "\n"
    return text, 0


def cmd_verify(args) -> tuple[str, int]:
    if args.bound is not None and args.bound < 3:
        raise UsageError("--bound must be >= 3")
    report = run_suite(args.suite, args.bound)
    return json.dumps(report, indent=2) + "\n", 0 if report["passed"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partdyn", description="Extended Farey and triangle maps on partitions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, fmt_default="pretty"):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=FORMATS, default=fmt_default)
        p.set_defaults(func=func)
        return p

    p = add("cf", cmd_cf, "continued fraction, convergents, mirror and depth of p/q")
    p.add_argument("fraction")

    p = add("tree", cmd_tree, "levels of the Farey tree")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--sorted", action="store_true", help="sort each level ascending")

    p = add("orbit", cmd_orbit, "orbit of a partition under an extended map")
    p.add_argument("--parts", type=parse_ints, required=True)
    p.add_argument("--mults", type=parse_ints, required=True)
    p.add_argument("--map", default="farey", help=f"one of {', '.join(MAPS)} or custom:<path.toml>")
    p.add_argument("--through-root", action="store_true", help="triangle: continue past two parts to the root")

    p = add("count", cmd_count, "p(2, n) by several methods")
    p.add_argument("--n", type=int)
    p.add_argument("--range", help="A..B inclusive")
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--witness", action="store_true", help="include per-r orbit contributions in JSON")

    p = add("generations", cmd_generations, "generation table of r/n for all coprime r < n/2")
    p.add_argument("--n", type=int, required=True)

    p = add("conjugate", cmd_conjugate, "conjugate partition")
    p.add_argument("--parts", type=parse_ints, required=True)
    p.add_argument("--mults", type=parse_ints, required=True)
    p.add_argument("--shape", action="store_true", help="draw both Young shapes")

    p = sub.add_parser("verify", help="run an invariant suite; prints a JSON report")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad flags
    try:
        text, status = args.func(args)
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"partdyn {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
