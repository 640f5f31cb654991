"""Plot request model shared by the HTTP service and the CLI.

A PlotRequest is a flat, URL-encodable description of one plot: axis
bindings and transforms, allocation, folds, color, mode, canvas, and bin
widths.  Both front ends validate and compute through the same functions,
so their outputs agree byte for byte.
"""

from __future__ import annotations

from typing import Literal, Mapping, Sequence
from urllib.parse import parse_qs, urlencode

from pydantic import BaseModel, Field, field_validator

from .data import Dataset
from .layout import AxisConfig, FoldState, Layout, gatherplot, scatterplot

UNDEFINED = "undefined"

TransformName = Literal["scatter", "jitter", "gather"]
AllocationName = Literal["uniform", "proportional"]
ModeRequest = Literal["absolute", "relative"]


class PlotRequest(BaseModel):
    x: str = UNDEFINED
    y: str = UNDEFINED
    x_transform: TransformName = "gather"
    y_transform: TransformName = "gather"
    x_allocation: AllocationName = "uniform"
    y_allocation: AllocationName = "uniform"
    x_folds: dict[str, FoldState] = Field(default_factory=dict)
    y_folds: dict[str, FoldState] = Field(default_factory=dict)
    color: str | None = None
    mode: ModeRequest = "absolute"
    width: int = Field(default=640, gt=0)
    height: int = Field(default=480, gt=0)
    bins: dict[str, float] = Field(default_factory=dict)
    seed: int = 0
    jitter: float | None = Field(default=None, ge=0)

    @field_validator("bins")
    @classmethod
    def _positive_bins(cls, bins: dict[str, float]) -> dict[str, float]:
        for name, width in bins.items():
            if width <= 0:
                raise ValueError(f"bin width for {name!r} must be positive")
        return bins

    @classmethod
    def from_params(cls, params: Mapping[str, Sequence[str]]) -> "PlotRequest":
        """Build from a multi-dict of query parameters.

        Repeated keys: ``bin=dim:width`` and ``x_fold=label:state`` /
        ``y_fold=label:state`` (labels may contain colons; the state is
        split off the right).
        """
        kwargs: dict = {}
        scalar = {
            "x", "y", "x_transform", "y_transform", "x_allocation", "y_allocation",
            "color", "mode", "width", "height", "seed", "jitter",
        }
        for key, values in params.items():
            if key in scalar:
                kwargs[key] = values[-1]
            elif key == "bin":
                bins = kwargs.setdefault("bins", {})
                for item in values:
                    name, _, width = item.rpartition(":")
                    if not name:
                        raise ValueError(f"bin parameter must look like dim:width, got {item!r}")
                    bins[name] = float(width)
            elif key in ("x_fold", "y_fold"):
                folds = kwargs.setdefault(f"{key}s", {})
                for item in values:
                    label, _, state = item.rpartition(":")
                    if not label:
                        raise ValueError(f"fold parameter must look like label:state, got {item!r}")
                    folds[label] = state
            else:
                raise ValueError(f"unknown parameter {key!r}")
        return cls(**kwargs)

    @classmethod
    def from_query(cls, query: str) -> "PlotRequest":
        return cls.from_params(parse_qs(query, keep_blank_values=True))

    def to_query(self) -> str:
        """Inverse of from_query: a flat, deep-linkable encoding."""
        defaults = PlotRequest()
        pairs: list[tuple[str, str]] = []
        for name in (
            "x", "y", "x_transform", "y_transform", "x_allocation", "y_allocation",
            "color", "mode", "width", "height", "seed", "jitter",
        ):
            value = getattr(self, name)
            if value != getattr(defaults, name) and value is not None:
                pairs.append((name, str(value)))
        for dim, width in sorted(self.bins.items()):
            pairs.append(("bin", f"{dim}:{width}"))
        for key, folds in (("x_fold", self.x_folds), ("y_fold", self.y_folds)):
            for label, state in sorted(folds.items()):
                pairs.append((key, f"{label}:{state}"))
        return urlencode(pairs)


def validate_request(req: PlotRequest, dataset: Dataset) -> list[tuple[str, str]]:
    """Field-level problems as (field, message) pairs; empty means valid."""
    problems: list[tuple[str, str]] = []
    names = set(dataset.names)
    for field_name in ("x", "y"):
        value = getattr(req, field_name)
        if value != UNDEFINED and value not in names:
            problems.append((field_name, f"unknown dimension {value!r}"))
    if req.color is not None and req.color not in names:
        problems.append(("color", f"unknown dimension {req.color!r}"))
    for dim, _ in req.bins.items():
        if dim not in names:
            problems.append(("bin", f"unknown dimension {dim!r}"))
        elif dataset.dimension(dim).kind != "quantitative":
            problems.append(("bin", f"dimension {dim!r} is not quantitative"))
    for field_name, folds in (("x_fold", req.x_folds), ("y_fold", req.y_folds)):
        axis = req.x if field_name == "x_fold" else req.y
        if folds and axis != UNDEFINED and axis not in names:
            continue  # already reported as unknown dimension
        if folds:
            maximized = [l for l, s in folds.items() if s == "maximized"]
            if len(maximized) > 1:
                problems.append((field_name, "at most one segment may be maximized"))
    for field_name, allocation, transform, binding in (
        ("x_allocation", req.x_allocation, req.x_transform, req.x),
        ("y_allocation", req.y_allocation, req.y_transform, req.y),
    ):
        if allocation == "proportional" and transform != "gather" and binding != UNDEFINED:
            problems.append((field_name, "proportional allocation requires a gather transform"))
    return problems


def _axis_config(req: PlotRequest, axis: Literal["x", "y"]) -> AxisConfig:
    name = getattr(req, axis)
    binding = None if name == UNDEFINED else name
    return AxisConfig(
        binding=binding,
        transform=getattr(req, f"{axis}_transform"),
        allocation=getattr(req, f"{axis}_allocation"),
        folds=dict(getattr(req, f"{axis}_folds")),
        bin_width=req.bins.get(name) if binding else None,
        jitter_amplitude=req.jitter,
        jitter_seed=req.seed,
    )


def compute_layout(dataset: Dataset, req: PlotRequest) -> Layout:
    """Dispatch to the gather engine, or to the plain scatter/jitter path
    when neither axis gathers."""
    x_cfg = _axis_config(req, "x")
    y_cfg = _axis_config(req, "y")
    canvas = (req.width, req.height)
    if x_cfg.gathers or y_cfg.gathers:
        return gatherplot(dataset, x_cfg, y_cfg, req.color, req.mode, canvas)
    return scatterplot(dataset, x_cfg, y_cfg, req.color, req.mode, canvas)
