"""Grayscale image conventions: carrier validation and 8-bit quantization.

Throughout the package an image is a 2-D ``float64`` array of shape
``(rows, cols)``. Pixels stay real-valued between processing stages even
when they originate from 8-bit files, because the homomorphic pipeline
works in the log domain before re-quantizing; integer-only internals would
break it. File I/O lives in :mod:`despeckle.codecs`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PixelDepthPolicy",
    "EIGHT_BIT",
    "validate_image",
    "round_half_away",
    "quantize",
    "require_eight_bit",
]


@dataclass(frozen=True)
class PixelDepthPolicy:
    """Rounding-and-clamp rule that maps real pixels onto a storable range.

    Rounding is to the nearest integer with ties away from zero. This is the
    round() convention of the numeric environment the pipeline mirrors, and
    it is fixed here so an independent implementation can replicate outputs
    bit for bit.
    """

    low: int = 0
    high: int = 255


EIGHT_BIT = PixelDepthPolicy()


def validate_image(img, name: str = "image") -> np.ndarray:
    """Coerce ``img`` to a float64 2-D array and enforce carrier invariants.

    Raises ``ValueError`` if the array is not 2-D, has an empty axis, or
    contains NaN/infinity.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{name} must have at least one row and one column")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite pixel values")
    return arr


def round_half_away(x):
    """Round to the nearest integer with ties away from zero.

    Unlike ``np.round`` (ties to even): 12.5 -> 13, -12.5 -> -13.
    """
    x = np.asarray(x, dtype=np.float64)
    return np.copysign(np.floor(np.abs(x) + 0.5), x)


def quantize(img, policy: PixelDepthPolicy = EIGHT_BIT) -> np.ndarray:
    """Round every pixel to the nearest integer, then clamp to the policy range.

    Idempotent on integers already inside the range, and monotone
    non-decreasing in each pixel value. Returns float64 with integral values.
    """
    arr = validate_image(img)
    # + 0.0 normalizes any -0.0 produced by the signed rounding
    return np.clip(round_half_away(arr), float(policy.low), float(policy.high)) + 0.0


def require_eight_bit(img, name: str = "image") -> np.ndarray:
    """Validate that every pixel is an integer in [0, 255].

    Returns the validated float64 array; raises ``ValueError`` naming the
    first offending pixel's coordinates otherwise.
    """
    arr = validate_image(img, name)
    bad = (arr != np.floor(arr)) | (arr < 0.0) | (arr > 255.0)
    if bad.any():
        r, c = np.argwhere(bad)[0]
        raise ValueError(
            f"{name} pixel ({r}, {c}) = {arr[r, c]!r} is not an integer in [0, 255]"
        )
    return arr
