"""HTTP layout service: upload CSV datasets, fetch computed layouts,
overlap statistics, and interpolated transition frames as canonical JSON.

The service is a thin adapter over the library; for identical parameters
its response body equals the library's canonical serialization byte for
byte.  Datasets are immutable snapshots in an insert-only registry, so
concurrent layout requests never observe mutation.
"""

from __future__ import annotations

import threading
from urllib.parse import parse_qs

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import __version__
from .data import Dataset, ingest_csv
from .errors import GatherplotError
from .layout import MARGIN_LEFT, MARGIN_RIGHT, MARGIN_BOTTOM, MARGIN_TOP, SCATTER_MARK
from .request import PlotRequest, compute_layout, validate_request
from .scales import VisualTransformation, linear_transform, overlap_index, overplotting_index
from .serialize import canonical_json, layout_json
from .transitions import TransitionPlan, interpolate

DEFAULT_PORT = 8080
PORT_ENV_VAR = "GATHERPLOT_PORT"


class DimensionInfo(BaseModel):
    name: str
    kind: str
    domain: list
    missing: int


class DatasetInfo(BaseModel):
    id: str
    rows: int
    dimensions: list[DimensionInfo]


class _Registry:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._datasets: dict[str, Dataset] = {}
        self._next = 0

    def add(self, dataset: Dataset) -> str:
        with self._lock:
            ds_id = f"ds-{self._next}"
            self._next += 1
            self._datasets[ds_id] = dataset
        return ds_id

    def get(self, ds_id: str) -> Dataset:
        try:
            return self._datasets[ds_id]
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown dataset {ds_id!r}") from None


app = FastAPI(title="gatherplot layout service", version=__version__)
# the explorer client is served from another origin during development
app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
registry = _Registry()


def _info(ds_id: str, dataset: Dataset) -> DatasetInfo:
    dims = [
        DimensionInfo(
            name=d.name,
            kind=d.kind,
            domain=list(d.domain),
            missing=dataset.missing_counts[d.name],
        )
        for d in dataset.dimensions
    ]
    return DatasetInfo(id=ds_id, rows=len(dataset.points), dimensions=dims)


def _field_errors(problems: list[tuple[str, str]]) -> HTTPException:
    detail = [{"loc": ["query", field], "msg": msg} for field, msg in problems]
    return HTTPException(status_code=422, detail=detail)


def _parse_request(params) -> PlotRequest:
    multi: dict[str, list[str]] = {}
    for key in params.keys():
        multi[key] = params.getlist(key) if hasattr(params, "getlist") else list(params[key])
    try:
        return PlotRequest.from_params(multi)
    except (ValueError, TypeError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _layout_for(dataset: Dataset, req: PlotRequest):
    problems = validate_request(req, dataset)
    if problems:
        raise _field_errors(problems)
    try:
        return compute_layout(dataset, req)
    except GatherplotError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _json_response(body: str) -> Response:
    return Response(content=body, media_type="application/json")


@app.post("/datasets", response_model=DatasetInfo)
async def create_dataset(request: Request) -> DatasetInfo:
    raw = await request.body()
    try:
        dataset = ingest_csv(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise HTTPException(status_code=422, detail="dataset body must be UTF-8 CSV") from exc
    except GatherplotError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    ds_id = registry.add(dataset)
    return _info(ds_id, dataset)


@app.get("/datasets/{ds_id}", response_model=DatasetInfo)
def dataset_info(ds_id: str) -> DatasetInfo:
    return _info(ds_id, registry.get(ds_id))


@app.get("/datasets/{ds_id}/layout")
def dataset_layout(ds_id: str, request: Request) -> Response:
    dataset = registry.get(ds_id)
    req = _parse_request(request.query_params)
    layout = _layout_for(dataset, req)
    return _json_response(layout_json(layout))


@app.get("/datasets/{ds_id}/stats")
def dataset_stats(
    ds_id: str,
    x: str,
    y: str,
    mark_size: float = SCATTER_MARK,
    width: int = 640,
    height: int = 480,
) -> Response:
    """Overlap indices per axis plus the 2D overplotting index, computed on
    linear scatter transforms over the plot area."""
    dataset = registry.get(ds_id)
    problems = [
        (field, f"unknown dimension {value!r}")
        for field, value in (("x", x), ("y", y))
        if value not in set(dataset.names)
    ]
    if mark_size <= 0:
        problems.append(("mark_size", "mark size must be positive"))
    if problems:
        raise _field_errors(problems)

    from .layout import _numeric_value  # numeric stand-ins for nominal values

    x_dim, y_dim = dataset.dimension(x), dataset.dimension(y)
    pairs = []
    for p in dataset.points:
        xv = _numeric_value(x_dim, p.values[x])
        yv = _numeric_value(y_dim, p.values[y])
        if xv is not None and yv is not None:
            pairs.append((xv, yv))
    x_extent = (float(MARGIN_LEFT), float(width - MARGIN_RIGHT))
    y_extent = (float(MARGIN_TOP), float(height - MARGIN_BOTTOM))

    def transform(values: list[float], extent: tuple[float, float]) -> VisualTransformation:
        domain = (min(values), max(values)) if values else (0.0, 1.0)
        return VisualTransformation(linear_transform(domain, extent), mark_size)

    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    tx, ty = transform(xs, x_extent), transform(ys, y_extent)
    body = canonical_json(
        {
            "points": len(pairs),
            "x_overlap": overlap_index(xs, tx),
            "y_overlap": overlap_index(ys, ty),
            "overplotting": overplotting_index(pairs, tx, ty),
        }
    )
    return _json_response(body)


@app.get("/datasets/{ds_id}/transition")
def dataset_transition(
    ds_id: str,
    t: float,
    request: Request,
) -> Response:
    """Interpolated layout between two plot requests.

    ``from`` and ``to`` are URL-encoded layout query strings (the same
    parameters /layout takes), nested as single values.
    """
    dataset = registry.get(ds_id)
    params = request.query_params
    query_from = params.get("from")
    query_to = params.get("to")
    problems = []
    if query_from is None:
        problems.append(("from", "missing transition start request"))
    if query_to is None:
        problems.append(("to", "missing transition end request"))
    if not 0 <= t <= 1:
        problems.append(("t", "t must lie in [0, 1]"))
    if problems:
        raise _field_errors(problems)
    try:
        req_from = PlotRequest.from_params(parse_qs(query_from, keep_blank_values=True))
        req_to = PlotRequest.from_params(parse_qs(query_to, keep_blank_values=True))
    except (ValueError, TypeError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    start = _layout_for(dataset, req_from)
    end = _layout_for(dataset, req_to)
    try:
        plan = TransitionPlan(start, end)
    except GatherplotError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return _json_response(layout_json(interpolate(plan, t)))
