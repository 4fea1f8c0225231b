"""Directional-smoothing kernels and the homomorphic despeckling pipeline.

The kernel replaces each interior pixel with the mean of the neighbors
lying along one of four rays through the pixel (horizontal, vertical, and
the two diagonals, center excluded), choosing the ray whose mean deviates
least from the pixel itself. Smoothing is thereby steered along edges
rather than across them.

Two scan modes exist and give different results:

* ``in-place-sequential`` (default): interior pixels are visited in
  row-major order and each replacement is written immediately, so later
  pixels read already-updated neighbors. This is the literal reading of the
  published pseudocode and is inherently single-threaded.
* ``out-of-place``: every selection reads the original image and writes to
  a fresh buffer; the conventional filtering contract, parallelizable.

In both modes the border ring (width ``window // 2``) is copied through
unchanged; there is no mirroring or padding.

``ds_filter`` runs the selection pass directly in the linear intensity
domain. ``homomorphic_eds`` wraps the same pass in an 8-bit log-domain
pipeline (add one, log, filter, exp, round, subtract one, clamp) so the
multiplicative noise is handled additively.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .image import quantize, require_eight_bit, round_half_away, validate_image

__all__ = [
    "IN_PLACE",
    "OUT_OF_PLACE",
    "SCAN_MODES",
    "DirectionalConfig",
    "DirectionSelection",
    "directional_averages_3x3",
    "eds_pass",
    "ds_filter",
    "directional_pass",
    "homomorphic",
    "homomorphic_eds",
]

IN_PLACE = "in-place-sequential"
OUT_OF_PLACE = "out-of-place"
SCAN_MODES = (IN_PLACE, OUT_OF_PLACE)

_MAX_WINDOW = 33
_DIRECTIONS = 4


@dataclass(frozen=True)
class DirectionalConfig:
    """Scan mode, window size, and ray count for a directional pass."""

    scan_mode: str = IN_PLACE
    window: int = 3
    directions: int = _DIRECTIONS

    def __post_init__(self):
        if self.scan_mode not in SCAN_MODES:
            raise ValueError(f"scan_mode must be one of {SCAN_MODES}, got {self.scan_mode!r}")
        w = self.window
        if int(w) != w or w < 3 or w > _MAX_WINDOW or w % 2 == 0:
            raise ValueError(f"window must be an odd integer in [3, {_MAX_WINDOW}], got {w!r}")
        # Only the four principal rays are defined; other counts are rejected
        # rather than silently approximated.
        if self.directions != _DIRECTIONS:
            raise ValueError(f"directions must be {_DIRECTIONS}, got {self.directions!r}")


@dataclass(frozen=True)
class DirectionSelection:
    """Per-pixel result of the ray comparison.

    ``averages[n]`` is the mean along ray n (0 horizontal, 1 vertical,
    2 main diagonal, 3 anti-diagonal), ``deviations[n]`` its absolute
    difference from the center pixel, and ``chosen`` the smallest index
    attaining the minimum deviation.
    """

    averages: tuple[float, float, float, float]
    deviations: tuple[float, float, float, float]
    chosen: int


def directional_averages_3x3(img, r: int, c: int) -> DirectionSelection:
    """Evaluate the four 3x3 ray means and the winning direction at (r, c).

    (r, c) must be an interior pixel: 1 <= r <= rows-2, 1 <= c <= cols-2.
    """
    v = validate_image(img)
    rows, cols = v.shape
    if not (1 <= r <= rows - 2 and 1 <= c <= cols - 2):
        raise ValueError(f"({r}, {c}) is not an interior pixel of a {rows} x {cols} image")
    center = float(v[r, c])
    averages = (
        (float(v[r, c - 1]) + float(v[r, c + 1])) / 2.0,
        (float(v[r - 1, c]) + float(v[r + 1, c])) / 2.0,
        (float(v[r - 1, c - 1]) + float(v[r + 1, c + 1])) / 2.0,
        (float(v[r + 1, c - 1]) + float(v[r - 1, c + 1])) / 2.0,
    )
    deviations = tuple(abs(d - center) for d in averages)
    chosen = min(range(_DIRECTIONS), key=deviations.__getitem__)
    return DirectionSelection(averages, deviations, chosen)


def _ray_offsets(window: int) -> list[list[tuple[int, int]]]:
    half = window // 2
    span = [k for k in range(-half, half + 1) if k != 0]
    return [
        [(0, k) for k in span],   # horizontal
        [(k, 0) for k in span],   # vertical
        [(k, k) for k in span],   # main diagonal
        [(k, -k) for k in span],  # anti-diagonal
    ]


def _selection_scan(arr: np.ndarray, window: int, in_place: bool) -> np.ndarray:
    """Row-major selection-and-replace scan over the interior pixels."""
    rows, cols = arr.shape
    half = window // 2
    rays = _ray_offsets(window)
    count = float(window - 1)
    src = arr.tolist()
    dst = src if in_place else [row[:] for row in src]
    for r in range(half, rows - half):
        for c in range(half, cols - half):
            center = src[r][c]
            best = center
            best_dev = math.inf
            for ray in rays:
                total = 0.0
                for dr, dc in ray:
                    total += src[r + dr][c + dc]
                avg = total / count
                dev = abs(avg - center)
                if dev < best_dev:
                    best_dev = dev
                    best = avg
            dst[r][c] = best
    return np.array(dst, dtype=np.float64)


def directional_pass(img, cfg: DirectionalConfig) -> np.ndarray:
    """Directional selection pass for any odd window in [3, 33].

    With ``window=3`` this is exactly :func:`eds_pass`. Each ray spans the
    full window (``window - 1`` pixels, center excluded); the border of
    width ``window // 2`` is returned unchanged.
    """
    arr = validate_image(img)
    rows, cols = arr.shape
    if rows < cfg.window or cols < cfg.window:
        raise ValueError(
            f"image {rows} x {cols} is smaller than the {cfg.window} x {cfg.window} window"
        )
    return _selection_scan(arr, cfg.window, cfg.scan_mode == IN_PLACE)


def eds_pass(img, cfg: DirectionalConfig = DirectionalConfig()) -> np.ndarray:
    """The raw 3x3 selection pass (the kernel the homomorphic pipeline calls).

    Requires ``cfg.window == 3``; use :func:`directional_pass` for larger
    windows.
    """
    if cfg.window != 3:
        raise ValueError("eds_pass is the 3x3 kernel; use directional_pass for larger windows")
    return directional_pass(img, cfg)


def ds_filter(img, cfg: DirectionalConfig = DirectionalConfig()) -> np.ndarray:
    """Directional smoothing in the linear intensity domain.

    This is the same selection-and-replace pass as :func:`eds_pass`; the two
    differ only in the surrounding pipeline (no log transform here).
    """
    return eds_pass(img, cfg)


def homomorphic(img, filter_fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Run an arbitrary filter on an 8-bit image in the log domain.

    Pipeline: add 1 (avoids log 0), natural log, ``filter_fn``, exp, round
    to nearest integer, subtract 1, clamp to [0, 255]. Input pixels must be
    integers in [0, 255]; the output is again a valid 8-bit image.
    """
    arr = require_eight_bit(img)
    filtered = np.asarray(filter_fn(np.log(arr + 1.0)), dtype=np.float64)
    restored = round_half_away(np.exp(filtered)) - 1.0
    return quantize(restored)


def homomorphic_eds(img, cfg: DirectionalConfig | None = None) -> np.ndarray:
    """The full homomorphic despeckling pipeline around the selection pass.

    With the default config this is the literal published pipeline: window 3,
    in-place sequential scan. A config may be supplied so benchmark runs can
    vary window and scan mode.
    """
    if cfg is None:
        cfg = DirectionalConfig()
    return homomorphic(img, lambda v: directional_pass(v, cfg))
