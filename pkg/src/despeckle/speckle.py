"""Multiplicative speckle synthesis.

A speckled observation is the per-pixel product of the clean scene with a
unit-mean noise field. Three field families are provided:

* ``rayleigh-amplitude`` -- Rayleigh with scale sqrt(2/pi), for amplitude
  imagery (mean 1, variance 4/pi - 1).
* ``exponential-intensity`` -- exponential with rate 1, for single-look
  intensity imagery (mean 1, variance 1).
* ``gamma-multilook`` -- gamma with shape L and scale 1/L, for L-look
  intensity imagery (mean 1, variance 1/L). With L = 1 this is the
  exponential family.

Fields are drawn from numpy's seeded PCG64 generator, so a given
(seed, rows, cols, family, looks) tuple always reproduces the same field
within this implementation. Integer-shape gamma variates are formed as the
mean of L exponential draws, which keeps the L = 1 case stream-identical to
the exponential family.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import validate_image

__all__ = [
    "RAYLEIGH_AMPLITUDE",
    "EXPONENTIAL_INTENSITY",
    "GAMMA_MULTILOOK",
    "FAMILIES",
    "SpeckleParams",
    "generate_speckle_field",
    "apply_speckle",
]

RAYLEIGH_AMPLITUDE = "rayleigh-amplitude"
EXPONENTIAL_INTENSITY = "exponential-intensity"
GAMMA_MULTILOOK = "gamma-multilook"
FAMILIES = (RAYLEIGH_AMPLITUDE, EXPONENTIAL_INTENSITY, GAMMA_MULTILOOK)

# Rayleigh scale that makes the mean exactly 1: mean = scale * sqrt(pi/2).
_RAYLEIGH_SCALE = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class SpeckleParams:
    """Distribution family, number of looks, and RNG seed for a noise field."""

    family: str
    seed: int
    looks: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown speckle family {self.family!r}; choose from {FAMILIES}")
        if int(self.looks) != self.looks or self.looks < 1:
            raise ValueError(f"looks must be a positive integer, got {self.looks!r}")


def generate_speckle_field(rows: int, cols: int, params: SpeckleParams) -> np.ndarray:
    """Draw a rows x cols field of i.i.d. unit-mean speckle samples."""
    if rows < 1 or cols < 1:
        raise ValueError(f"field dimensions must be positive, got {rows} x {cols}")
    rng = np.random.default_rng(params.seed)
    if params.family == RAYLEIGH_AMPLITUDE:
        return rng.rayleigh(_RAYLEIGH_SCALE, size=(rows, cols))
    if params.family == EXPONENTIAL_INTENSITY:
        return rng.exponential(1.0, size=(rows, cols))
    looks = int(params.looks)
    draws = rng.exponential(1.0, size=(looks, rows, cols))
    return draws.sum(axis=0) / looks


def apply_speckle(clean, field) -> np.ndarray:
    """Per-pixel product of a clean scene with a noise field.

    No quantization happens here; quantize the result if an 8-bit image is
    needed downstream.
    """
    clean = validate_image(clean, "clean")
    field = validate_image(field, "field")
    if clean.shape != field.shape:
        raise ValueError(f"shape mismatch: clean {clean.shape} vs field {field.shape}")
    return clean * field
