"""Tabular views of orbits, generation tables and counts.

Every table is a header plus rows of strings, rendered as TSV, CSV, JSON
or an aligned plain-text layout.  TSV output is what the golden files
under ``tests/golden`` pin byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .counting import CountReport
from .extended_farey import Orbit, orbit_of_fraction
from .farey import TERMINAL
from .mcf_zoo import ZooRow
from .partitions import Partition, format_exponent
from .triangle import TriOrbitStep

FORMATS = ("json", "csv", "tsv", "pretty")


@dataclass
class Table:
    header: list[str]
    rows: list[list[str]]
    payload: dict = field(default_factory=dict)  # what --format json emits

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2) + "\n"
        if fmt in ("tsv", "csv"):
            buf = io.StringIO()
            writer = csv.writer(buf, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        if fmt == "pretty":
            return pretty(self.header, self.rows)
        raise ValueError(f"unknown format {fmt!r}")


def pretty(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(line, widths)).rstrip() for line in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def format_point(point: Sequence[tuple[int, int]]) -> str:
    """``(9/11, 4/11)``; the fractions are left unreduced."""
    return "(" + ", ".join(f"{p}/{q}" for p, q in point) + ")"


def _padded(values: Sequence[int], width: int) -> list[str]:
    return [str(v) for v in values] + [""] * (width - len(values))


def _label(branch: str) -> str:
    # the last row of a table has no outgoing map
    return "" if branch == TERMINAL else branch


def farey_orbit_table(orbit: Orbit) -> Table:
    header = ["m", "n1", "n2", "k1", "k2", "map"]
    rows = [
        [str(s.m), *map(str, s.state.parts), *map(str, s.state.mults), _label(s.branch)]
        for s in orbit.steps
    ]
    payload = {"map": "farey", **orbit.to_dict()}
    return Table(header, rows, payload)


def triangle_orbit_table(steps: Sequence[TriOrbitStep]) -> Table:
    dim = max(s.state.m for s in steps)
    header = ["a", "point", *(f"n{i}" for i in range(1, dim + 1)), *(f"k{i}" for i in range(1, dim + 1)), "map"]
    rows = [
        [
            str(s.a),
            format_point(s.point),
            *_padded(s.state.parts, dim),
            *_padded(s.state.mults, dim),
            _label(s.branch),
        ]
        for s in steps
    ]
    payload = {
        "map": "triangle",
        "root": steps[0].state.to_dict(),
        "steps": [
            {"m": s.a, "branch": s.branch, **s.state.to_dict(), "point": format_point(s.point)}
            for s in steps
        ],
    }
    return Table(header, rows, payload)


def zoo_orbit_table(name: str, rows_in: Sequence[ZooRow]) -> Table:
    dim = len(rows_in[0].parts)
    header = ["m", "point", *(f"n{i}" for i in range(1, dim + 1)), *(f"k{i}" for i in range(1, dim + 1)), "map"]
    rows = [
        [
            str(r.a),
            format_point([(v, r.parts[0]) for v in r.parts[1:]]),
            *map(str, r.parts),
            *map(str, r.mults),
            r.label,
        ]
        for r in rows_in
    ]
    payload = {
        "map": name,
        "root": {"parts": list(rows_in[0].parts), "mults": list(rows_in[0].mults)},
        "steps": [
            {
                "m": r.a,
                "branch": r.label,
                "parts": list(r.parts),
                "mults": list(r.mults),
                "point": format_point([(v, r.parts[0]) for v in r.parts[1:]]),
            }
            for r in rows_in
        ],
    }
    return Table(header, rows, payload)


def generation_table(n: int, rs: Sequence[int] | None = None) -> Table:
    """Generations of ``r/n`` side by side, one column per ``r``."""
    if rs is None:
        rs = [r for r in range(1, (n + 1) // 2) if gcd(r, n) == 1]
    columns = [orbit_of_fraction(r, n) for r in rs]
    depth = max((len(c) for c in columns), default=0)
    header = ["m", *(f"r={r}" for r in rs)]
    rows = [
        [str(m + 1), *(format_exponent(c[m]) if m < len(c) else "" for c in columns)]
        for m in range(depth)
    ]
    payload = {
        "n": n,
        "columns": {str(r): [p.to_dict() for p in c] for r, c in zip(rs, columns)},
    }
    return Table(header, rows, payload)


def count_table(reports: Sequence[CountReport]) -> Table:
    methods = [m for m in ("formula", "kim", "brute", "farey") if m in reports[0].values]
    header = ["n", *(f"p2_{m}" if m != "farey" else "pF2" for m in methods), "agree"]
    with_farey = "farey" in methods and len(methods) > 1
    if with_farey:
        header.append("farey_complete")
    rows = []
    for rep in reports:
        row = [str(rep.n), *(str(rep.values[m]) for m in methods), _flag(rep.agree)]
        if with_farey:
            row.append(_flag(rep.farey_complete))
        rows.append(row)
    payload = {"reports": [rep.to_dict() for rep in reports]}
    return Table(header, rows, payload)


def _flag(value: bool | None) -> str:
    return "" if value is None else ("yes" if value else "no")


def tree_table(levels: Sequence[Sequence]) -> Table:
    header = ["level", "fractions"]
    rows = [[str(i + 1), " ".join(f"{x.numerator}/{x.denominator}" for x in level)] for i, level in enumerate(levels)]
    payload = {"levels": [[f"{x.numerator}/{x.denominator}" for x in level] for level in levels]}
    return Table(header, rows, payload)


def partition_table(lam: Partition, conj: Partition) -> Table:
    header = ["role", "parts", "mults", "exponent"]
    rows = [
        ["input", ",".join(map(str, lam.parts)), ",".join(map(str, lam.mults)), format_exponent(lam)],
        ["conjugate", ",".join(map(str, conj.parts)), ",".join(map(str, conj.mults)), format_exponent(conj)],
    ]
    payload = {"input": lam.to_dict(), "conjugate": conj.to_dict()}
    return Table(header, rows, payload)
