"""Position scales, deterministic jitter, and pairwise overlap metrics.

Two marks overlap on an axis when their mapped coordinates fall strictly
within one mark size of each other; a pair overplots when it overlaps on
both axes at once.  The indices below count unique such pairs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Callable, Literal, Sequence


@dataclass(frozen=True)
class VisualTransformation:
    """A value-to-pixel map plus the mark size drawn at each position."""

    transform: Callable[[float], float]
    mark_size: float

    def __post_init__(self) -> None:
        if self.mark_size <= 0:
            raise ValueError("mark size must be positive")


def linear_transform(domain: tuple[float, float], extent: tuple[float, float]) -> Callable[[float], float]:
    """Affine map of [domain] onto [extent]; a degenerate domain maps
    everything to the extent midpoint."""
    d_lo, d_hi = domain
    e_lo, e_hi = extent
    if e_hi <= e_lo:
        raise ValueError("pixel extent must be non-degenerate")
    if d_hi == d_lo:
        mid = (e_lo + e_hi) / 2
        return lambda v: mid
    scale = (e_hi - e_lo) / (d_hi - d_lo)
    return lambda v: e_lo + (v - d_lo) * scale


def linear_positions(values: Sequence[float], extent: tuple[float, float]) -> list[float]:
    """Map values onto the pixel extent with a linear scale over their range."""
    if not values:
        return []
    f = linear_transform((min(values), max(values)), extent)
    return [f(v) for v in values]


def _unit_uniform(seed: int, ident: int) -> float:
    """Deterministic uniform in [0, 1) keyed by (seed, id).

    Counter-based (a keyed hash per id) so per-point offsets do not depend
    on evaluation order or on which other points are present.
    """
    key = seed.to_bytes(8, "big", signed=True) + ident.to_bytes(8, "big", signed=True)
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return int.from_bytes(digest, "big") / 2**64


def jitter_offset(seed: int, ident: int, amplitude: float) -> float:
    """Deterministic offset in [-amplitude, +amplitude] for one point."""
    return (_unit_uniform(seed, ident) * 2 - 1) * amplitude


def jitter_positions(
    base: Sequence[float],
    amplitude: float,
    seed: int,
    extent: tuple[float, float] | None = None,
    ids: Sequence[int] | None = None,
) -> list[float]:
    """Displace each coordinate by a deterministic pseudo-random offset.

    Offsets are keyed by (seed, point id); ids default to sequence indices.
    Results are clamped into ``extent`` when given.
    """
    if amplitude < 0:
        raise ValueError("amplitude must be non-negative")
    if ids is None:
        ids = range(len(base))
    out = [b + jitter_offset(seed, i, amplitude) for b, i in zip(base, ids)]
    if extent is not None:
        lo, hi = extent
        out = [min(max(v, lo), hi) for v in out]
    return out


Method = Literal["auto", "pairs", "sorted"]


def _overlap_pairs(positions: Sequence[float], s: float) -> int:
    n = len(positions)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(positions[i] - positions[j]) < s:
                count += 1
    return count


def _overlap_sorted(positions: Sequence[float], s: float) -> int:
    ordered = sorted(positions)
    count = 0
    left = 0
    for right in range(len(ordered)):
        while ordered[right] - ordered[left] >= s:
            left += 1
        count += right - left
    return count


def overlap_index(
    values: Sequence[float],
    transform: VisualTransformation,
    method: Method = "auto",
) -> int:
    """Number of unique pairs whose mapped coordinates fall strictly within
    one mark size of each other (touching marks do not overlap).

    The quadratic pair scan and the sort-based path are interchangeable;
    "auto" picks by input size.
    """
    positions = [transform.transform(v) for v in values]
    s = transform.mark_size
    if method == "pairs" or (method == "auto" and len(values) <= 256):
        return _overlap_pairs(positions, s)
    return _overlap_sorted(positions, s)


def overplotting_index(
    points: Sequence[tuple[float, float]],
    tx: VisualTransformation,
    ty: VisualTransformation,
) -> int:
    """Number of unique pairs overlapping on the X and the Y axis at once."""
    xs = [tx.transform(p[0]) for p in points]
    ys = [ty.transform(p[1]) for p in points]
    sx, sy = tx.mark_size, ty.mark_size
    n = len(points)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(xs[i] - xs[j]) < sx and abs(ys[i] - ys[j]) < sy:
                count += 1
    return count
