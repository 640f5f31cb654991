"""Command-line front door.

Subcommands cover schema inspection (ingest), SVG rendering (render,
matrix), overlap statistics (stats), transition frame export (keyframes),
and running the HTTP service (serve).  The CLI is a thin client over the
same request pipeline the service uses, so both produce identical output
for identical parameters.

Exit codes: 0 success, 2 unreadable or malformed CSV, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .data import Dataset, ingest_csv
from .errors import EmptyInputError, GatherplotError, SchemaError
from .layout import gatherplot_matrix
from .request import PlotRequest, compute_layout, validate_request
from .serialize import canonical_json, layout_to_doc
from .service import DEFAULT_PORT, PORT_ENV_VAR
from .svg import Theme, render_matrix_svg, render_svg
from .transitions import TransitionPlan, keyframes

EXIT_OK = 0
EXIT_DATA = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit 2
        raise UsageError(message)


def _load_dataset(path: str) -> Dataset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return ingest_csv(text)


def _parse_size(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise UsageError(f"size must look like 640x480, got {text!r}") from None


def _build_request(args: argparse.Namespace) -> PlotRequest:
    width, height = _parse_size(args.size)
    bins = {}
    for item in args.bins or []:
        name, _, value = item.rpartition("=")
        if not name:
            raise UsageError(f"--bins expects dim=width, got {item!r}")
        try:
            bins[name] = float(value)
        except ValueError:
            raise UsageError(f"bin width must be numeric, got {value!r}") from None
    x_folds: dict[str, str] = {}
    y_folds: dict[str, str] = {}
    for item in args.fold or []:
        axis, _, rest = item.partition(":")
        label, _, state = rest.rpartition(":")
        if axis not in ("x", "y") or not label:
            raise UsageError(f"--fold expects axis:label:state, got {item!r}")
        (x_folds if axis == "x" else y_folds)[label] = state
    try:
        return PlotRequest(
            x=args.x,
            y=args.y,
            x_transform=args.x_transform,
            y_transform=args.y_transform,
            x_allocation=args.x_allocation,
            y_allocation=args.y_allocation,
            x_folds=x_folds,
            y_folds=y_folds,
            color=args.color,
            mode=args.mode,
            width=width,
            height=height,
            bins=bins,
            seed=args.seed,
            jitter=args.jitter,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _checked_layout(dataset: Dataset, req: PlotRequest):
    problems = validate_request(req, dataset)
    if problems:
        raise UsageError("; ".join(f"{field}: {msg}" for field, msg in problems))
    try:
        return compute_layout(dataset, req)
    except GatherplotError as exc:
        raise UsageError(str(exc)) from exc


def _add_plot_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x", default="undefined", help="X dimension name or 'undefined'")
    p.add_argument("--y", default="undefined", help="Y dimension name or 'undefined'")
    p.add_argument("--x-transform", default="gather", choices=["scatter", "jitter", "gather"])
    p.add_argument("--y-transform", default="gather", choices=["scatter", "jitter", "gather"])
    p.add_argument("--x-allocation", default="uniform", choices=["uniform", "proportional"])
    p.add_argument("--y-allocation", default="uniform", choices=["uniform", "proportional"])
    p.add_argument("--color", default=None, help="color dimension name")
    p.add_argument("--mode", default="absolute", choices=["absolute", "relative"])
    p.add_argument("--size", default="640x480", help="canvas size WxH")
    p.add_argument("--bins", action="append", metavar="DIM=WIDTH", help="bin width override")
    p.add_argument("--fold", action="append", metavar="AXIS:LABEL:STATE",
                   help="fold a segment (state: normal|minimized|maximized)")
    p.add_argument("--seed", type=int, default=0, help="jitter seed")
    p.add_argument("--jitter", type=float, default=None, help="jitter amplitude in px")


def _cmd_ingest(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.csv)
    doc = {
        "rows": len(dataset.points),
        "dimensions": [
            {
                "name": d.name,
                "kind": d.kind,
                "domain": list(d.domain),
                "missing": dataset.missing_counts[d.name],
            }
            for d in dataset.dimensions
        ],
    }
    print(canonical_json(doc))
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.csv)
    layout = _checked_layout(dataset, _build_request(args))
    Path(args.out).write_text(render_svg(layout, Theme()), encoding="utf-8")
    return EXIT_OK


def _cmd_matrix(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.csv)
    dims = [d for d in args.dims.split(",") if d]
    unknown = [d for d in dims if d not in set(dataset.names)]
    if unknown:
        raise UsageError(f"unknown dimension {unknown[0]!r}")
    try:
        grid = gatherplot_matrix(dataset, dims, _parse_size(args.cell_size), args.mode)
    except GatherplotError as exc:
        raise UsageError(str(exc)) from exc
    Path(args.out).write_text(render_matrix_svg(grid, Theme(), dims), encoding="utf-8")
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    from .layout import MARGIN_BOTTOM, MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, _numeric_value
    from .scales import VisualTransformation, linear_transform, overlap_index, overplotting_index

    dataset = _load_dataset(args.csv)
    width, height = _parse_size(args.size)
    for field, value in (("x", args.x), ("y", args.y)):
        if value not in set(dataset.names):
            raise UsageError(f"{field}: unknown dimension {value!r}")
    x_dim, y_dim = dataset.dimension(args.x), dataset.dimension(args.y)
    pairs = []
    for p in dataset.points:
        xv = _numeric_value(x_dim, p.values[args.x])
        yv = _numeric_value(y_dim, p.values[args.y])
        if xv is not None and yv is not None:
            pairs.append((xv, yv))
    xs, ys = [p[0] for p in pairs], [p[1] for p in pairs]

    def transform(values, extent):
        domain = (min(values), max(values)) if values else (0.0, 1.0)
        return VisualTransformation(linear_transform(domain, extent), args.mark_size)

    tx = transform(xs, (float(MARGIN_LEFT), float(width - MARGIN_RIGHT)))
    ty = transform(ys, (float(MARGIN_TOP), float(height - MARGIN_BOTTOM)))
    print(
        canonical_json(
            {
                "points": len(pairs),
                "x_overlap": overlap_index(xs, tx),
                "y_overlap": overlap_index(ys, ty),
                "overplotting": overplotting_index(pairs, tx, ty),
            }
        )
    )
    return EXIT_OK


def _cmd_keyframes(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args.csv)
    try:
        req_from = PlotRequest.from_query(args.start)
        req_to = PlotRequest.from_query(args.end)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    start = _checked_layout(dataset, req_from)
    end = _checked_layout(dataset, req_to)
    try:
        plan = TransitionPlan(start, end, duration_ms=args.duration)
        frames = keyframes(plan, args.fps)
    except (GatherplotError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    doc = {"frames": [layout_to_doc(f) for f in frames]}
    Path(args.out).write_text(canonical_json(doc), encoding="utf-8")
    return EXIT_OK


def resolve_port(cli_port: int | None) -> int:
    """Explicit flag wins, then GATHERPLOT_PORT, then the default."""
    if cli_port is not None:
        return cli_port
    return int(os.environ.get(PORT_ENV_VAR, DEFAULT_PORT))


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=resolve_port(args.port))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gatherplot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse a CSV and print the inferred schema")
    p.add_argument("csv")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("render", help="render one plot to SVG")
    p.add_argument("csv")
    _add_plot_flags(p)
    p.add_argument("-o", "--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("matrix", help="render a plot matrix to SVG")
    p.add_argument("csv")
    p.add_argument("--dims", required=True, help="comma-separated dimension names")
    p.add_argument("--cell-size", default="220x220", help="panel size WxH")
    p.add_argument("--mode", default="absolute", choices=["absolute", "relative"])
    p.add_argument("-o", "--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("stats", help="print overlap/overplotting indices")
    p.add_argument("csv")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--mark-size", type=float, default=8.0)
    p.add_argument("--size", default="640x480")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("keyframes", help="export transition frames as JSON")
    p.add_argument("csv")
    p.add_argument("--from", dest="start", required=True, metavar="QUERY",
                   help="start plot request as a query string, e.g. 'x=origin&mode=absolute'")
    p.add_argument("--to", dest="end", required=True, metavar="QUERY")
    p.add_argument("--duration", type=float, default=800.0, help="duration in ms")
    p.add_argument("--fps", type=float, default=30.0)
    p.add_argument("-o", "--out", required=True, help="output JSON path")
    p.set_defaults(func=_cmd_keyframes)

    p = sub.add_parser("serve", help="run the HTTP layout service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help=f"port (default: ${PORT_ENV_VAR} or {DEFAULT_PORT})")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SchemaError, EmptyInputError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
