"""Command-line driver for the despeckling benchmark.

Example::

    despeckle-bench --synthetic constant:100:256x256 --speckle exponential \\
        --seed 7 --out ./run

Exit codes: 0 on success, 1 on runtime failure (unreadable input,
unwritable output, ...), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import FILTER_NAMES, BenchmarkSpec, SyntheticScene, run_benchmark
from .directional import IN_PLACE, OUT_OF_PLACE
from .speckle import EXPONENTIAL_INTENSITY, GAMMA_MULTILOOK, RAYLEIGH_AMPLITUDE

__all__ = ["cli_parse", "main"]

_SCAN_MODES = {"in-place": IN_PLACE, "out-of-place": OUT_OF_PLACE}
_FAMILIES = {
    "rayleigh": RAYLEIGH_AMPLITUDE,
    "exponential": EXPONENTIAL_INTENSITY,
    "gamma": GAMMA_MULTILOOK,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="despeckle-bench",
        description=(
            "Run a bank of despeckling filters over a grayscale image and "
            "report NV, MSD, ENL, and DR per filter."
        ),
    )
    parser.add_argument(
        "--input", type=Path, metavar="PATH",
        help="noisy input image (binary PGM or 8-bit indexed BMP)",
    )
    parser.add_argument(
        "--synthetic", metavar="constant:VALUE:ROWSxCOLS",
        help="synthesize a constant clean scene instead of reading a file",
    )
    parser.add_argument(
        "--speckle", metavar="FAMILY[:LOOKS]",
        help="multiply the clean scene by a speckle field; FAMILY is "
             "rayleigh, exponential, or gamma (gamma takes :LOOKS)",
    )
    parser.add_argument(
        "--seed", type=int, metavar="N",
        help="RNG seed (required with --synthetic or --speckle)",
    )
    parser.add_argument(
        "--filters", default=",".join(FILTER_NAMES), metavar="LIST",
        help=f"comma-separated filters to run (default: {','.join(FILTER_NAMES)})",
    )
    parser.add_argument(
        "--window", type=int, default=3, metavar="N",
        help="filter window size, odd (default: 3)",
    )
    parser.add_argument(
        "--looks", type=float, metavar="N",
        help="looks parameter for the adaptive filters "
             "(default: tiled-ENL estimate of the input)",
    )
    parser.add_argument(
        "--scan-mode", choices=sorted(_SCAN_MODES), default="in-place",
        help="directional scan semantics (default: in-place)",
    )
    parser.add_argument(
        "--enl-tile", type=int, default=25, metavar="N",
        help="tile side for the ENL metric (default: 25)",
    )
    parser.add_argument(
        "--out", type=Path, required=True, metavar="DIR",
        help="output directory for the report and filtered images",
    )
    parser.add_argument(
        "--format", choices=("csv", "markdown"), default="csv",
        dest="report_format", help="report format (default: csv)",
    )
    return parser


def _parse_synthetic(parser: argparse.ArgumentParser, text: str) -> SyntheticScene:
    parts = text.split(":")
    if len(parts) != 3 or parts[0] != "constant":
        parser.error(f"--synthetic must look like constant:VALUE:ROWSxCOLS, got {text!r}")
    try:
        value = int(parts[1])
        rows_text, _, cols_text = parts[2].partition("x")
        rows, cols = int(rows_text), int(cols_text)
    except ValueError:
        parser.error(f"--synthetic has a malformed number in {text!r}")
    if not 0 <= value <= 255:
        parser.error(f"--synthetic value must be in [0, 255], got {value}")
    if rows < 1 or cols < 1:
        parser.error(f"--synthetic dimensions must be positive, got {rows}x{cols}")
    return SyntheticScene(value=value, rows=rows, cols=cols)


def _parse_speckle(parser: argparse.ArgumentParser, text: str) -> tuple[str, int]:
    name, _, looks_text = text.partition(":")
    family = _FAMILIES.get(name)
    if family is None:
        parser.error(f"--speckle family must be one of {sorted(_FAMILIES)}, got {name!r}")
    looks = 1
    if looks_text:
        try:
            looks = int(looks_text)
        except ValueError:
            parser.error(f"--speckle looks must be an integer, got {looks_text!r}")
        if looks < 1:
            parser.error(f"--speckle looks must be >= 1, got {looks}")
    return family, looks


def cli_parse(argv=None) -> BenchmarkSpec:
    """Parse argv into a validated BenchmarkSpec; usage errors exit with 2."""
    parser = _build_parser()
    ns = parser.parse_args(argv)

    if (ns.input is None) == (ns.synthetic is None):
        parser.error("exactly one of --input or --synthetic is required")
    synthetic = None if ns.synthetic is None else _parse_synthetic(parser, ns.synthetic)
    family, speckle_looks = (None, 1)
    if ns.speckle is not None:
        family, speckle_looks = _parse_speckle(parser, ns.speckle)
    if (ns.synthetic is not None or ns.speckle is not None) and ns.seed is None:
        parser.error("--seed is required with --synthetic or --speckle")

    filters = tuple(name.strip() for name in ns.filters.split(",") if name.strip())
    if not filters:
        parser.error("--filters must name at least one filter")
    unknown = [name for name in filters if name not in FILTER_NAMES]
    if unknown:
        parser.error(f"unknown filter(s): {', '.join(unknown)} (choose from {', '.join(FILTER_NAMES)})")
    if len(set(filters)) != len(filters):
        parser.error("--filters must not repeat a filter")
    if ns.window < 3 or ns.window % 2 == 0:
        parser.error(f"--window must be an odd integer >= 3, got {ns.window}")
    if ns.enl_tile < 1:
        parser.error(f"--enl-tile must be positive, got {ns.enl_tile}")
    if ns.looks is not None and not ns.looks > 0:
        parser.error(f"--looks must be positive, got {ns.looks}")

    try:
        return BenchmarkSpec(
            output_dir=ns.out,
            input_path=ns.input,
            synthetic=synthetic,
            speckle_family=family,
            speckle_looks=speckle_looks,
            seed=ns.seed,
            filters=filters,
            window=ns.window,
            looks=ns.looks,
            scan_mode=_SCAN_MODES[ns.scan_mode],
            enl_tile=ns.enl_tile,
            report_format=ns.report_format,
        )
    except ValueError as exc:
        parser.error(str(exc))


def main(argv=None) -> int:
    spec = cli_parse(argv)
    try:
        result = run_benchmark(spec)
    except (OSError, ValueError) as exc:
        print(f"despeckle-bench: error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {result.report_path} and {len(result.image_paths)} image(s)")
    return 0
