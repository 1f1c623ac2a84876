"""Command-line interface.

Exit codes: 0 success, 1 a negative mathematical answer (invalid coloring,
no coloring within the palette), 2 usage or input error, 3 internal failure
(including an exhausted search budget).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .compose import DEFAULT_SEARCH_BUDGET, construct
from .errors import BudgetExhausted, ConstructionError, DomainError, PaletteExhausted
from .formats import load_coloring, write_dimacs_col
from .graph import Graph, make_torus, parse_dimacs
from .plotting import render_svg
from .solver import THREADS_ENV, VertexOrder, star_chromatic_number
from .tiles import get_tile, tile_catalog
from .verify import ColoringDocument, verify_star

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("star_torus")


class UsageError(Exception):
    pass


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph_from_args(args, doc: ColoringDocument | None = None) -> tuple[Graph, bool]:
    """Resolve ``--graph``/``--torus``; returns the graph and whether it is a torus."""
    if args.graph:
        return parse_dimacs(_read(args.graph)), False
    if args.torus:
        return make_torus(*args.torus), True
    if doc is not None and doc.is_torus:
        return make_torus(doc.m, doc.n), True
    raise UsageError("one of --graph or --torus is required")


def cmd_construct(args) -> int:
    m, n = args.m, args.n
    coloring, plan = construct(m, n, budget=args.budget)
    doc = ColoringDocument(coloring.k, list(coloring.colors), m, n, {"plan": plan.trace})
    if args.format == "json":
        text = doc.to_json()
    else:
        text = write_dimacs_col(doc, comment=f"C{m} x C{n} star coloring\nplan {plan.expression}")
    _write(args.out, text)
    if args.render:
        render_svg(coloring.grid(n), args.render, title=f"C{m} x C{n}")
    summary = f"{m} {n} {coloring.k} verified plan={plan.expression}"
    print(summary, file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = load_coloring(_read(args.coloring))
    g, _ = _graph_from_args(args, doc)
    if args.torus and doc.is_torus and (doc.m, doc.n) != tuple(args.torus):
        raise UsageError(f"coloring is for C{doc.m} x C{doc.n}, not C{args.torus[0]} x C{args.torus[1]}")
    report = verify_star(g, doc.coloring_for(g))
    print(f"verdict {report.verdict.value}")
    if report.witness is not None:
        kind = "edge" if len(report.witness) == 2 else "path"
        print(f"witness {kind} " + " ".join(map(str, report.witness)))
    print(f"colors_used {report.colors_used} k {doc.k}")
    return EXIT_OK if report.ok else EXIT_NO


def cmd_chi(args) -> int:
    g, is_torus = _graph_from_args(args)
    order = VertexOrder.ROW_MAJOR if is_torus else VertexOrder.DEGREE_DESCENDING
    try:
        k, outcome = star_chromatic_number(
            g, args.kmax, vertex_order=order, node_budget=args.budget, thread_hint=args.threads
        )
    except PaletteExhausted as exc:
        print(f"UNSAT up to kmax={exc.kmax}")
        return EXIT_NO
    except BudgetExhausted as exc:
        print(f"budget exhausted at k={exc.k} after {exc.nodes} nodes; chi_s >= {exc.k}")
        return EXIT_INTERNAL
    print(k)
    if args.witness:
        m, n = (args.torus if is_torus else (None, None))
        doc = ColoringDocument(k, list(outcome.witness.colors), m, n)
        Path(args.witness).write_text(doc.to_json())
        print(f"witness {args.witness}")
    log.info("k=%d nodes=%d elapsed=%.3fs", k, outcome.nodes_explored, outcome.elapsed)
    return EXIT_OK


def cmd_render(args) -> int:
    doc = load_coloring(_read(args.coloring))
    if not doc.is_torus:
        raise UsageError("render needs a torus coloring (m and n set)")
    if max(doc.colors) > 6 or min(doc.colors) < 1:
        raise UsageError("render supports color ids 1..6")
    title = args.title if args.title is not None else f"C{doc.m} x C{doc.n}"
    render_svg([doc.colors[i : i + doc.n] for i in range(0, len(doc.colors), doc.n)], args.out, title)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_tiles(args) -> int:
    if args.action == "list":
        for t in tile_catalog():
            print(f"{t.source} {t.m} {t.w} {t.palette_size}")
        return EXIT_OK
    if not args.source:
        raise UsageError("tiles dump needs a tile name")
    _write(args.out, get_tile(args.source).to_document().to_json())
    return EXIT_OK


def _int_at_least(lo):
    def conv(s):
        v = int(s)
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="star-torus", description="Star colorings of torus grids C_m x C_n.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and verify a star coloring of C_m x C_n")
    c.add_argument("m", type=_int_at_least(3))
    c.add_argument("n", type=_int_at_least(3))
    c.add_argument("--out", help="output file (default stdout)")
    c.add_argument("--format", choices=("json", "dimacs-col"), default="json")
    c.add_argument("--render", metavar="SVG", help="also draw the coloring to this SVG file")
    c.add_argument("--budget", type=_int_at_least(1), default=DEFAULT_SEARCH_BUDGET,
                   help="node budget for the fallback search")
    c.set_defaults(func=cmd_construct)

    def add_graph_args(sp):
        grp = sp.add_mutually_exclusive_group()
        grp.add_argument("--graph", metavar="DIMACS")
        grp.add_argument("--torus", nargs=2, type=_int_at_least(3), metavar=("M", "N"))

    v = sub.add_parser("verify", help="check a coloring file")
    add_graph_args(v)
    v.add_argument("--coloring", required=True)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("chi", help="exact star chromatic number")
    add_graph_args(x)
    x.add_argument("--kmax", type=_int_at_least(1), required=True)
    x.add_argument("--budget", type=_int_at_least(1), default=None)
    x.add_argument("--threads", type=_int_at_least(1), default=None,
                   help=f"worker processes (default ${THREADS_ENV} or 1)")
    x.add_argument("--witness", metavar="PATH", help="write the optimal coloring here")
    x.set_defaults(func=cmd_chi)

    r = sub.add_parser("render", help="draw a torus coloring as SVG")
    r.add_argument("--coloring", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--title")
    r.set_defaults(func=cmd_render)

    t = sub.add_parser("tiles", help="inspect the tile catalog")
    t.add_argument("action", choices=("list", "dump"))
    t.add_argument("source", nargs="?")
    t.add_argument("--format", choices=("json",), default="json")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tiles)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        log.exception("internal failure")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
