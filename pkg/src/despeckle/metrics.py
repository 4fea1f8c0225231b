"""Despeckling quality metrics: NV, MSD, tiled ENL, and deflection ratio.

All statistics use the population convention (divisor N). ``noise_variance``
is deliberately the raw mean of squared pixels, with no mean subtraction;
lower after filtering indicates smoothing.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .image import validate_image

__all__ = [
    "DegenerateImageError",
    "MetricsReport",
    "noise_variance",
    "mean_square_difference",
    "enl_tiled",
    "deflection_ratio",
]


class DegenerateImageError(ValueError):
    """The image has no usable statistics for the requested metric."""


@dataclass(frozen=True)
class MetricsReport:
    """One row of a benchmark report: the four metrics for an (image, filter)
    pair. ``msd`` is absent on the unfiltered row; ``enl``/``dr`` are absent
    when the image is degenerate for them. ``msd_clean`` is a benchmark
    extension filled only when a clean reference exists.
    """

    filter_name: str
    nv: float
    msd: float | None
    enl: float | None
    dr: float | None
    tiles_used: int
    msd_clean: float | None = None


def noise_variance(img) -> float:
    """Mean of squared pixel values over the whole image."""
    arr = validate_image(img)
    return float((arr * arr).mean())


def mean_square_difference(filtered, original) -> float:
    """Mean squared per-pixel difference between two same-sized images."""
    a = validate_image(filtered, "filtered")
    b = validate_image(original, "original")
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    diff = a - b
    return float((diff * diff).mean())


def enl_tiled(img, tile: int = 25) -> tuple[float, int]:
    """Average equivalent number of looks over non-overlapping tiles.

    The image is cut into tile x tile blocks anchored at the top-left corner;
    partial blocks at the right/bottom edges are discarded. Each block
    contributes (mean/std)^2 with population std; blocks with zero std are
    excluded. Returns the mean over included blocks and their count.
    """
    arr = validate_image(img)
    if int(tile) != tile or tile < 1:
        raise ValueError(f"tile must be a positive integer, got {tile!r}")
    rows, cols = arr.shape
    if rows < tile or cols < tile:
        raise ValueError(f"image {rows} x {cols} is smaller than one {tile} x {tile} tile")
    nr, nc = rows // tile, cols // tile
    blocks = (
        arr[: nr * tile, : nc * tile]
        .reshape(nr, tile, nc, tile)
        .transpose(0, 2, 1, 3)
        .reshape(nr * nc, tile, tile)
    )
    mean = blocks.mean(axis=(1, 2))
    std = blocks.std(axis=(1, 2))
    usable = std > 0.0
    used = int(usable.sum())
    if used == 0:
        raise DegenerateImageError("every tile has zero variance; ENL undefined")
    ratio = mean[usable] / std[usable]
    return float((ratio * ratio).mean()), used


def deflection_ratio(img, window: int = 3) -> float:
    """Mean standardized residual (v - mean)/std over local neighborhoods.

    Each interior pixel is standardized against its window x window
    neighborhood (center included, population std); pixels whose neighborhood
    is constant are skipped. Higher at strong reflectors than background.
    """
    arr = validate_image(img)
    if int(window) != window or window < 3 or window % 2 == 0:
        raise ValueError(f"window must be an odd integer >= 3, got {window!r}")
    rows, cols = arr.shape
    if rows < window or cols < window:
        raise ValueError(f"image {rows} x {cols} is smaller than the {window} x {window} window")
    windows = sliding_window_view(arr, (window, window))
    mean = windows.mean(axis=(2, 3))
    std = np.sqrt(((windows - mean[..., None, None]) ** 2).mean(axis=(2, 3)))
    half = window // 2
    centers = arr[half : rows - half, half : cols - half]
    usable = std > 0.0
    if not usable.any():
        raise DegenerateImageError("every neighborhood is constant; deflection ratio undefined")
    ratios = (centers[usable] - mean[usable]) / std[usable]
    return float(ratios.mean())
