"""Command-line interface: ``frieze <command> [options]``.

Exit codes: 0 success, 2 unparsable input, 3 domain error (for ``generate``
the grid is still printed up to the failing row).  ``FRIEZE_MAX_ROWS``
(default 64) caps how many rows are ever generated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .annulus import (
    PUNCTURE,
    PuncturedDiskTriangulation,
    annulus_from_quiddity,
    inner_quiddity,
    quiddity_of_disk,
    star_triangulation,
)
from .cluster import cluster_frieze, det_symbolic, expected_det_symbolic, symbolic_matrix
from .core import (
    Closed,
    FriezeGrid,
    Infinite,
    Invalid,
    QuidditySequence,
    classify,
    generate,
    growth_closed_form,
    growth_rate,
    growth_sequence,
    minimal_period,
)
from .errors import DomainError, FriezeError
from .polygon import (
    PolygonTriangulation,
    det_int,
    frieze_matrix,
    matchings,
    quiddity_of,
    triangulation_from_quiddity,
    validate,
)

SCHEMA_VERSION = "1"
MAX_SAFE_INT = 2**53 - 1
LIST_MODE_WIDTH = 120

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 2, 3


class ParseError(Exception):
    pass


# -- input parsing -----------------------------------------------------------


def parse_quiddity(text: str, stdin=None) -> QuidditySequence:
    if text == "-":
        text = (stdin or sys.stdin).read()
    parts = [p for p in text.replace(",", " ").split() if p]
    try:
        entries = tuple(int(p) for p in parts)
        return QuidditySequence(entries)
    except (ValueError, FriezeError) as exc:
        raise ParseError(f"bad quiddity {text.strip()!r}: {exc}") from None


def _parse_pairs(text: str, allow_puncture=False) -> list[tuple]:
    out = []
    for item in (p.strip() for p in text.split(",")):
        if not item:
            continue
        ends = item.split("-")
        if len(ends) != 2:
            raise ParseError(f"bad pair {item!r}, expected a-b")
        pair = []
        for e in ends:
            if allow_puncture and e == PUNCTURE:
                pair.append(PUNCTURE)
                continue
            try:
                pair.append(int(e))
            except ValueError:
                raise ParseError(f"bad vertex {e!r} in {item!r}") from None
        out.append(tuple(pair))
    return out


def max_rows_cap() -> int:
    raw = os.environ.get("FRIEZE_MAX_ROWS", "64")
    try:
        cap = int(raw)
    except ValueError:
        raise ParseError(f"FRIEZE_MAX_ROWS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ParseError("FRIEZE_MAX_ROWS must be >= 1")
    return cap


# -- output ------------------------------------------------------------------


def jsonable(obj):
    """Make big integers safe for JSON consumers limited to doubles."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > MAX_SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def envelope(command: str, result: dict, **extra) -> str:
    payload = {"schema_version": SCHEMA_VERSION, "command": command, "result": result}
    payload.update(extra)
    return json.dumps(jsonable(payload), sort_keys=True, indent=2) + "\n"


def classification_fields(cls) -> dict:
    if isinstance(cls, Closed):
        return {"classification": "closed", "order": cls.order}
    if isinstance(cls, Infinite):
        return {"classification": "infinite"}
    out = {"classification": "invalid", "reason": cls.reason}
    if cls.row is not None:
        out["row"] = cls.row
    if cls.index is not None:
        out["index"] = cls.index
    if cls.reduced is not None:
        out["reduced"] = list(cls.reduced)
    return out


def top_level(cls, q) -> dict:
    """Envelope-level fields: classification, order (closed only), min_period."""
    out = {"classification": classification_fields(cls)["classification"], "min_period": minimal_period(q)}
    if isinstance(cls, Closed):
        out["order"] = cls.order
    return out


def describe(cls, depth=None) -> str:
    if isinstance(cls, Closed):
        return f"closed (order {cls.order})"
    if isinstance(cls, Infinite):
        if cls.depth is None:
            return "infinite"
        return f"infinite (no termination within {cls.depth} rows)"
    where = []
    if cls.row is not None:
        where.append(f"row {cls.row}")
    if cls.index is not None:
        where.append(f"position {cls.index}")
    if cls.reduced is not None:
        where.append("reduced " + "(" + ",".join(map(str, cls.reduced)) + ")")
    return f"invalid: {cls.reason}" + (f" at {', '.join(where)}" if where else "")


def render_grid(grid: FriezeGrid) -> str:
    """Staggered layout: entry a(i, j) sits at half-cell column i + j."""
    n = grid.n
    shown = [(r, grid.row(r)) for r in range(-1, len(grid.rows) + 1)]
    width = max(len(str(v)) for _, row in shown for v in row)
    cell = 2 * ((width + 2) // 2)
    half = cell // 2
    if n * cell + half > LIST_MODE_WIDTH:
        lines = []
        for r, row in shown:
            lines.append(f"row {r}:")
            lines.extend(f"  {v}" for v in row)
        return "\n".join(lines) + "\n"
    lines = []
    for r, row in shown:
        shift = (r + 1) // 2
        cells = [str(row[(k - shift) % n]).rjust(width).center(cell) for k in range(n)]
        line = " " * (half * ((r + 1) % 2)) + "".join(cells)
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def _seq(q) -> list[int]:
    return list(q.entries if isinstance(q, QuidditySequence) else q)


def _fmt_seq(q) -> str:
    return "(" + ",".join(map(str, _seq(q))) + ")"


# -- commands ----------------------------------------------------------------
# Each returns (exit_code, stdout_text).


def cmd_generate(args):
    q = parse_quiddity(args.quiddity)
    cap = max_rows_cap()
    rows = min(args.rows if args.rows is not None else cap, cap)
    if rows < 1:
        raise ParseError("--rows must be >= 1")
    grid = generate(q, rows)
    cls = grid.classification
    code = EXIT_DOMAIN if isinstance(cls, Invalid) else EXIT_OK
    if args.format == "json":
        result = {"quiddity": _seq(q), "rows": [list(r) for r in grid.rows], "max_rows": rows}
        result.update(classification_fields(cls))
        return code, envelope("generate", result, **top_level(cls, q))
    return code, render_grid(grid) + describe(cls) + "\n"


def cmd_classify(args):
    q = parse_quiddity(args.quiddity)
    cls = classify(q)
    d = minimal_period(q)
    if args.format == "json":
        result = {"quiddity": _seq(q), "min_period": d}
        result.update(classification_fields(cls))
        return EXIT_OK, envelope("classify", result, **top_level(cls, q))
    return EXIT_OK, f"{_fmt_seq(q)}: {describe(cls)}\nminimal period: {d}\n"


def _triangulation(args) -> PolygonTriangulation:
    t = PolygonTriangulation(args.n, _parse_pairs(args.diagonals))
    validate(t)
    return t


def cmd_from_polygon(args):
    t = _triangulation(args)
    q = quiddity_of(t)
    if args.format == "json":
        result = {
            "triangulation": t.to_json(),
            "triangles": [list(tri) for tri in t.triangles()],
            "quiddity": _seq(q),
        }
        return EXIT_OK, envelope("from-polygon", result, **top_level(Closed(t.n), q))
    return EXIT_OK, f"quiddity: {_fmt_seq(q)}\n"


def cmd_to_polygon(args):
    q = parse_quiddity(args.quiddity)
    t = triangulation_from_quiddity(q)
    if args.format == "json":
        return EXIT_OK, envelope("to-polygon", t.to_json(), **top_level(Closed(t.n), q))
    diags = ",".join(f"{i}-{j}" for i, j in t.sorted_diagonals())
    return EXIT_OK, f"n: {t.n}\ndiagonals: {diags}\n"


def cmd_matchings(args):
    t = _triangulation(args)
    ms = matchings(t, args.i, args.j)
    entry = frieze_matrix(t)[args.i - 1, args.j - 1]
    if args.format == "json":
        result = {"i": args.i, "j": args.j, "vertices": list(ms.vertices), "count": len(ms), "frieze_entry": entry}
        if args.list:
            result["matchings"] = [[list(tri) for tri in m] for m in ms.matchings]
        return EXIT_OK, envelope("matchings", result)
    out = f"|M({args.i},{args.j})| = {len(ms)}\n"
    if args.list:
        for m in ms.matchings:
            out += "  " + " ".join(f"{v}:{''.join(map(str, tri))}" for v, tri in zip(ms.vertices, m)) + "\n"
    return EXIT_OK, out


def cmd_det(args):
    t = _triangulation(args)
    n = t.n
    if args.symbolic:
        det = det_symbolic(symbolic_matrix(cluster_frieze(t)))
        expected = expected_det_symbolic(n)
        value, exp_value = det.to_string(), expected.to_string()
    else:
        det = det_int(frieze_matrix(t))
        expected = -((-2) ** (n - 2))
        value, exp_value = det, expected
    if args.format == "json":
        result = {"n": n, "symbolic": bool(args.symbolic), "det": value, "expected": exp_value, "matches": det == expected}
        return EXIT_OK, envelope("det", result)
    return EXIT_OK, f"{value}\n"


def cmd_growth(args):
    q = parse_quiddity(args.quiddity)
    if args.k < 1:
        raise ParseError("--k must be >= 1")
    n0 = minimal_period(q)
    cap = max_rows_cap()
    if args.k * n0 > cap:
        raise DomainError(f"growth up to k={args.k} needs {args.k * n0} rows, above FRIEZE_MAX_ROWS={cap}")
    g = growth_sequence(q, args.k)
    cls = classify(q)
    s = g.s
    closed_form = [growth_closed_form(s, k) for k in range(args.k + 1)]
    rate = str(growth_rate(s, 30)) if s >= 3 else None
    if args.format == "json":
        result = {"quiddity": _seq(q), "n0": n0, "s": list(g.s_values), "closed_form": closed_form, "growth_rate": rate}
        return EXIT_OK, envelope("growth", result, **top_level(cls, q))
    out = f"n0: {n0}\ns = [{', '.join(map(str, g.s_values))}]\n"
    if rate is not None:
        out += f"growth rate: {rate}\n"
    return EXIT_OK, out


def cmd_annulus(args):
    q = parse_quiddity(args.quiddity)
    ann, trace = annulus_from_quiddity(q)
    inner = None if ann.spiral else inner_quiddity(ann)
    if args.format == "json":
        result = {
            "annulus": ann.to_json(),
            "glue_trace": [[s.removed, s.left, s.right] for s in trace],
            "outer_quiddity": _seq(ann.outer_quiddity()),
            "inner_quiddity": None if inner is None else _seq(inner),
        }
        return EXIT_OK, envelope("annulus", result, **top_level(Infinite(), q))
    out = f"outer: {ann.n_outer}\ninner: {ann.n_inner}\nspiral: {str(ann.spiral).lower()}\n"
    out += " ".join(["arcs:"] + [f"{a}-{b}" for a, b in ann.arcs]) + "\n"
    if inner is not None:
        out += f"inner quiddity: [{','.join(map(str, inner))}]\n"
    return EXIT_OK, out


def cmd_disk(args):
    if args.arcs is None:
        t = star_triangulation(args.n)
    else:
        t = PuncturedDiskTriangulation(args.n, _parse_pairs(args.arcs, allow_puncture=True))
    q = quiddity_of_disk(t)
    if args.format == "json":
        result = {"disk": t.to_json(), "quiddity": _seq(q), "triangles": [[str(v) for v in tri] for tri in t.triangles()]}
        return EXIT_OK, envelope("disk", result, **top_level(Infinite(), q))
    return EXIT_OK, f"quiddity: {_fmt_seq(q)}\n"


COMMANDS = {
    "generate": cmd_generate,
    "classify": cmd_classify,
    "from-polygon": cmd_from_polygon,
    "to-polygon": cmd_to_polygon,
    "matchings": cmd_matchings,
    "det": cmd_det,
    "growth": cmd_growth,
    "annulus": cmd_annulus,
    "disk": cmd_disk,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="frieze", description="integral frieze patterns")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def quiddity_cmd(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--quiddity", required=True, help="comma-separated entries, or - for stdin")
        return p

    def polygon_cmd(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--diagonals", default="", help="e.g. 1-3,1-4,1-5")
        return p

    p = quiddity_cmd("generate", "fill the frieze by the diamond rule")
    p.add_argument("--rows", type=int, default=None)
    quiddity_cmd("classify", "closed / infinite / invalid")
    polygon_cmd("from-polygon", "quiddity sequence of a triangulated polygon")
    quiddity_cmd("to-polygon", "triangulation of a closed quiddity sequence")
    p = polygon_cmd("matchings", "triangle-vertex matchings between two vertices")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list every matching")
    p = polygon_cmd("det", "frieze determinant")
    p.add_argument("--symbolic", action="store_true", help="over cluster variables")
    p = quiddity_cmd("growth", "growth coefficients s_0..s_K")
    p.add_argument("--k", type=int, default=1)
    quiddity_cmd("annulus", "annulus triangulation of an infinite quiddity")
    p = sub.add_parser("disk", parents=[common], help="quiddity of a punctured-disk triangulation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arcs", default=None, help="e.g. 1-3,1-p,3-p,4-p,5-p (default: star)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"frieze {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FriezeError, IndexError) as exc:
        print(f"frieze {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
