"""Grayscale SAR despeckling toolkit.

Directional-smoothing filters (linear-domain DS and the homomorphic EDS
pipeline), the classic adaptive filter bank (Median, Lee, Kuan, Frost,
enhanced Lee/Frost, Gamma MAP), multiplicative speckle synthesis, the
NV/MSD/ENL/DR quality metrics, bit-exact PGM/BMP codecs, and a benchmark
runner that ties them together.
"""
from .image import (
    EIGHT_BIT,
    PixelDepthPolicy,
    quantize,
    require_eight_bit,
    round_half_away,
    validate_image,
)
from .codecs import DecodeError, read_bmp8, read_pgm, write_bmp8, write_pgm
from .speckle import (
    EXPONENTIAL_INTENSITY,
    FAMILIES,
    GAMMA_MULTILOOK,
    RAYLEIGH_AMPLITUDE,
    SpeckleParams,
    apply_speckle,
    generate_speckle_field,
)
from .directional import (
    IN_PLACE,
    OUT_OF_PLACE,
    SCAN_MODES,
    DirectionSelection,
    DirectionalConfig,
    directional_averages_3x3,
    directional_pass,
    ds_filter,
    eds_pass,
    homomorphic,
    homomorphic_eds,
)
from .classic import (
    ClassicFilterConfig,
    LocalStats,
    enhanced_frost_filter,
    enhanced_lee_filter,
    frost_filter,
    gamma_map_filter,
    kuan_filter,
    lee_filter,
    local_stats,
    median_filter,
)
from .metrics import (
    DegenerateImageError,
    MetricsReport,
    deflection_ratio,
    enl_tiled,
    mean_square_difference,
    noise_variance,
)
from .bench import (
    FILTER_NAMES,
    BenchmarkResult,
    BenchmarkSpec,
    SyntheticScene,
    run_benchmark,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # image
    "PixelDepthPolicy", "EIGHT_BIT", "validate_image", "round_half_away",
    "quantize", "require_eight_bit",
    # codecs
    "DecodeError", "read_pgm", "write_pgm", "read_bmp8", "write_bmp8",
    # speckle
    "RAYLEIGH_AMPLITUDE", "EXPONENTIAL_INTENSITY", "GAMMA_MULTILOOK",
    "FAMILIES", "SpeckleParams", "generate_speckle_field", "apply_speckle",
    # directional
    "IN_PLACE", "OUT_OF_PLACE", "SCAN_MODES", "DirectionalConfig",
    "DirectionSelection", "directional_averages_3x3", "eds_pass", "ds_filter",
    "directional_pass", "homomorphic", "homomorphic_eds",
    # classic
    "ClassicFilterConfig", "LocalStats", "local_stats", "median_filter",
    "lee_filter", "kuan_filter", "frost_filter", "enhanced_lee_filter",
    "enhanced_frost_filter", "gamma_map_filter",
    # metrics
    "DegenerateImageError", "MetricsReport", "noise_variance",
    "mean_square_difference", "enl_tiled", "deflection_ratio",
    # bench
    "FILTER_NAMES", "SyntheticScene", "BenchmarkSpec", "BenchmarkResult",
    "run_benchmark",
]
