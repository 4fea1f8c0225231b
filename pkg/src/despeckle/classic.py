"""Classic adaptive speckle filters: Median, Lee, Kuan, Frost, the enhanced
Lee/Frost variants, and the Gamma MAP filter.

All filters share the same sliding-window contract: each interior pixel is
re-estimated from the ``window x window`` neighborhood of the ORIGINAL image
(out-of-place), and the border ring where the window does not fit is copied
through unchanged. Local statistics use the population convention
(divisor N over all window pixels, center included).

The local coefficient of variation ``ci = std/mean`` is compared against
the noise coefficient of variation ``cu = 1/sqrt(L)`` (intensity-image
convention for L-look data). The three-region filters additionally use the
heterogeneity threshold ``cmax = sqrt(1 + 2/L)``:

    Lee:   u = m + W (v - m),      W = clamp(1 - cu^2/ci^2, 0, 1)
    Kuan:  u = m + W (v - m),      W = clamp((1 - cu^2/ci^2)/(1 + cu^2), 0, 1)
    Frost: u = sum(w v) / sum(w),  w = exp(-D ci^2 dist)
    Enhanced Lee:    ci <= cu: m;  ci >= cmax: v;
                     else m W + v (1 - W),  W = exp(-D (ci - cu)/(cmax - ci))
    Enhanced Frost:  ci <= cu: m;  ci >= cmax: v;
                     else Frost weights with exponent -D (ci - cu)/(cmax - ci) dist
    Gamma MAP:       ci <= cu: m;  ci >= cmax: v;
                     else (B m + sqrt(m^2 B^2 + 4 a m v)) / (2 a),
                     a = (1 + cu^2)/(ci^2 - cu^2),  B = a - L - 1

``dist`` is the Euclidean distance from the window center in pixel units
and ``D`` the damping factor. Windows with zero mean are treated as
homogeneous (ci = 0, output = mean), which avoids division by zero on
black regions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .image import validate_image

__all__ = [
    "ClassicFilterConfig",
    "LocalStats",
    "local_stats",
    "median_filter",
    "lee_filter",
    "kuan_filter",
    "frost_filter",
    "enhanced_lee_filter",
    "enhanced_frost_filter",
    "gamma_map_filter",
]


@dataclass(frozen=True)
class ClassicFilterConfig:
    """Window size, looks, damping, and the derived noise thresholds.

    ``cu`` defaults to 1/sqrt(looks) and ``cmax`` to sqrt(1 + 2/looks);
    either may be overridden explicitly.
    """

    window: int = 3
    looks: float = 1.0
    damping: float = 1.0
    cu: float | None = None
    cmax: float | None = None

    def __post_init__(self):
        w = self.window
        if int(w) != w or w < 3 or w % 2 == 0:
            raise ValueError(f"window must be an odd integer >= 3, got {w!r}")
        if not self.looks > 0:
            raise ValueError(f"looks must be positive, got {self.looks!r}")
        if not self.damping > 0:
            raise ValueError(f"damping must be positive, got {self.damping!r}")
        if self.cu is None:
            object.__setattr__(self, "cu", 1.0 / math.sqrt(self.looks))
        if self.cmax is None:
            object.__setattr__(self, "cmax", math.sqrt(1.0 + 2.0 / self.looks))
        if not self.cu > 0:
            raise ValueError(f"cu must be positive, got {self.cu!r}")
        if not self.cmax > self.cu:
            raise ValueError(f"cmax ({self.cmax!r}) must exceed cu ({self.cu!r})")


@dataclass(frozen=True)
class LocalStats:
    """Window mean, population variance, and coefficient of variation."""

    mean: float
    variance: float
    ci: float


def local_stats(img, r: int, c: int, window: int = 3) -> LocalStats:
    """Statistics of the window x window neighborhood centered at (r, c)."""
    arr = validate_image(img)
    if int(window) != window or window < 3 or window % 2 == 0:
        raise ValueError(f"window must be an odd integer >= 3, got {window!r}")
    half = window // 2
    rows, cols = arr.shape
    if not (half <= r < rows - half and half <= c < cols - half):
        raise ValueError(
            f"{window} x {window} window at ({r}, {c}) overruns a {rows} x {cols} image"
        )
    patch = arr[r - half : r + half + 1, c - half : c + half + 1]
    mean = float(patch.mean())
    variance = float(((patch - mean) ** 2).mean())
    ci = math.sqrt(variance) / mean if mean > 0 else 0.0
    return LocalStats(mean, variance, ci)


def _prepare(img, cfg: ClassicFilterConfig) -> tuple[np.ndarray, np.ndarray]:
    arr = validate_image(img)
    rows, cols = arr.shape
    if rows < cfg.window or cols < cfg.window:
        raise ValueError(
            f"image {rows} x {cols} is smaller than the {cfg.window} x {cfg.window} window"
        )
    return arr, sliding_window_view(arr, (cfg.window, cfg.window))


def _window_stats(windows: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-pixel window mean, population variance, and ci over the interior."""
    mean = windows.mean(axis=(2, 3))
    variance = ((windows - mean[..., None, None]) ** 2).mean(axis=(2, 3))
    ci = np.where(mean > 0.0, np.sqrt(variance) / np.where(mean > 0.0, mean, 1.0), 0.0)
    return mean, variance, ci


def _with_interior(arr: np.ndarray, window: int, interior: np.ndarray) -> np.ndarray:
    out = arr.copy()
    half = window // 2
    out[half : arr.shape[0] - half, half : arr.shape[1] - half] = interior
    return out


def _centers(arr: np.ndarray, window: int) -> np.ndarray:
    half = window // 2
    return arr[half : arr.shape[0] - half, half : arr.shape[1] - half]


def _distance_grid(window: int) -> np.ndarray:
    half = window // 2
    dy, dx = np.mgrid[-half : half + 1, -half : half + 1]
    return np.sqrt((dy * dy + dx * dx).astype(np.float64))


def median_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Window median (odd pixel count, so the unique middle element)."""
    arr, windows = _prepare(img, cfg)
    return _with_interior(arr, cfg.window, np.median(windows, axis=(2, 3)))


def lee_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Lee local-statistics filter."""
    arr, windows = _prepare(img, cfg)
    mean, _, ci = _window_stats(windows)
    weight = _lee_weight(ci, cfg.cu)
    interior = mean + weight * (_centers(arr, cfg.window) - mean)
    return _with_interior(arr, cfg.window, interior)


def _lee_weight(ci: np.ndarray, cu: float) -> np.ndarray:
    safe_ci2 = np.where(ci > 0.0, ci * ci, 1.0)
    weight = np.clip(1.0 - (cu * cu) / safe_ci2, 0.0, 1.0)
    return np.where(ci > 0.0, weight, 0.0)


def kuan_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Kuan filter; the Lee weight scaled by 1/(1 + cu^2)."""
    arr, windows = _prepare(img, cfg)
    mean, _, ci = _window_stats(windows)
    weight = _lee_weight(ci, cfg.cu) / (1.0 + cfg.cu * cfg.cu)
    interior = mean + weight * (_centers(arr, cfg.window) - mean)
    return _with_interior(arr, cfg.window, interior)


def frost_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Frost exponentially-weighted filter."""
    arr, windows = _prepare(img, cfg)
    _, _, ci = _window_stats(windows)
    dist = _distance_grid(cfg.window)
    weights = np.exp(-cfg.damping * (ci * ci)[..., None, None] * dist)
    interior = (weights * windows).sum(axis=(2, 3)) / weights.sum(axis=(2, 3))
    return _with_interior(arr, cfg.window, interior)


def _three_regions(ci: np.ndarray, cfg: ClassicFilterConfig):
    smooth = ci <= cfg.cu
    keep = ci >= cfg.cmax
    middle = ~(smooth | keep)
    return smooth, keep, middle


def enhanced_lee_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Enhanced Lee filter (three-region rule)."""
    arr, windows = _prepare(img, cfg)
    mean, _, ci = _window_stats(windows)
    centers = _centers(arr, cfg.window)
    smooth, keep, middle = _three_regions(ci, cfg)
    denom = np.where(middle, cfg.cmax - ci, 1.0)
    weight = np.exp(-cfg.damping * (ci - cfg.cu) / denom)
    blended = mean * weight + centers * (1.0 - weight)
    interior = np.where(smooth, mean, np.where(keep, centers, blended))
    return _with_interior(arr, cfg.window, interior)


def enhanced_frost_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Enhanced Frost filter (three-region rule)."""
    arr, windows = _prepare(img, cfg)
    mean, _, ci = _window_stats(windows)
    centers = _centers(arr, cfg.window)
    smooth, keep, middle = _three_regions(ci, cfg)
    dist = _distance_grid(cfg.window)
    denom = np.where(middle, cfg.cmax - ci, 1.0)
    factor = np.where(middle, cfg.damping * (ci - cfg.cu) / denom, 0.0)
    weights = np.exp(-factor[..., None, None] * dist)
    weighted = (weights * windows).sum(axis=(2, 3)) / weights.sum(axis=(2, 3))
    interior = np.where(smooth, mean, np.where(keep, centers, weighted))
    return _with_interior(arr, cfg.window, interior)


def gamma_map_filter(img, cfg: ClassicFilterConfig = ClassicFilterConfig()) -> np.ndarray:
    """Gamma maximum-a-posteriori filter (three-region rule).

    A negative discriminant in the quadratic MAP solution falls back to the
    window mean.
    """
    arr, windows = _prepare(img, cfg)
    mean, _, ci = _window_stats(windows)
    centers = _centers(arr, cfg.window)
    smooth, keep, middle = _three_regions(ci, cfg)
    cu2 = cfg.cu * cfg.cu
    denom = np.where(middle, ci * ci - cu2, 1.0)
    alpha = (1.0 + cu2) / denom
    bcoef = alpha - cfg.looks - 1.0
    disc = mean * mean * bcoef * bcoef + 4.0 * alpha * mean * centers
    root = (bcoef * mean + np.sqrt(np.maximum(disc, 0.0))) / (2.0 * alpha)
    solved = np.where(disc >= 0.0, root, mean)
    interior = np.where(smooth, mean, np.where(keep, centers, solved))
    return _with_interior(arr, cfg.window, interior)
