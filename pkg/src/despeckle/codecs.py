"""Bit-exact codecs for binary PGM (P5) and 8-bit indexed, uncompressed BMP.

PGM is the canonical interchange format here because its encoding is simple
to make bit-exact; BMP support covers the one variant the benchmark inputs
use (8 bpp, 256-entry palette, no compression). Round-trips are exact:
``read(write(img)) == img`` for any image with integral pixels in [0, 255].
"""
from __future__ import annotations

import struct

import numpy as np

from .image import require_eight_bit, round_half_away

__all__ = ["DecodeError", "read_pgm", "write_pgm", "read_bmp8", "write_bmp8"]

_WHITESPACE = b" \t\n\r\x0b\x0c"


class DecodeError(ValueError):
    """Byte stream is not a supported image encoding."""


def _next_token(data: bytes, pos: int, field: str) -> tuple[bytes, int]:
    # Skip whitespace and '#' comments (comment runs to end of line).
    n = len(data)
    while pos < n:
        ch = data[pos : pos + 1]
        if ch == b"#":
            while pos < n and data[pos : pos + 1] not in b"\r\n":
                pos += 1
        elif ch in _WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise DecodeError(f"PGM header ended while reading {field}")
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, field: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos, field)
    try:
        value = int(token)
    except ValueError:
        raise DecodeError(f"PGM {field}: {token!r} is not an integer") from None
    if value < 1:
        raise DecodeError(f"PGM {field}: must be positive, got {value}")
    return value, pos


def read_pgm(data: bytes) -> np.ndarray:
    """Decode a binary PGM (magic P5, maxval 255) into a float64 image."""
    if data[:2] != b"P5":
        raise DecodeError("PGM magic: expected 'P5'")
    pos = 2
    cols, pos = _header_int(data, pos, "width")
    rows, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if maxval != 255:
        raise DecodeError(f"PGM maxval: {maxval} unsupported (only 255)")
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise DecodeError("PGM payload: missing whitespace separator after maxval")
    pos += 1
    need = rows * cols
    payload = data[pos : pos + need]
    if len(payload) < need:
        raise DecodeError(f"PGM payload: expected {need} bytes, found {len(payload)}")
    return np.frombuffer(payload, dtype=np.uint8).astype(np.float64).reshape(rows, cols)


def write_pgm(img) -> bytes:
    """Encode an 8-bit-valued image in the canonical P5 layout."""
    arr = require_eight_bit(img)
    rows, cols = arr.shape
    header = f"P5\n{cols} {rows}\n255\n".encode("ascii")
    return header + arr.astype(np.uint8).tobytes()


_PALETTE_OFFSET = 14 + 40
_DATA_OFFSET = _PALETTE_OFFSET + 4 * 256


def read_bmp8(data: bytes) -> np.ndarray:
    """Decode an uncompressed 8-bit indexed BMP into a float64 image.

    Indices map through the palette: grayscale entries (R=G=B) map to that
    value, anything else through luminance 0.299R + 0.587G + 0.114B, rounded.
    """
    if data[:2] != b"BM":
        raise DecodeError("BMP magic: expected 'BM'")
    if len(data) < _PALETTE_OFFSET:
        raise DecodeError("BMP header: truncated")
    data_offset = struct.unpack_from("<I", data, 10)[0]
    info_size = struct.unpack_from("<I", data, 14)[0]
    if info_size < 40:
        raise DecodeError(f"BMP header: info header size {info_size} unsupported")
    width, height = struct.unpack_from("<ii", data, 18)
    depth = struct.unpack_from("<H", data, 28)[0]
    compression = struct.unpack_from("<I", data, 30)[0]
    colors_used = struct.unpack_from("<I", data, 46)[0]
    if depth != 8:
        raise DecodeError(f"BMP depth: {depth}-bit unsupported (only 8-bit indexed)")
    if compression != 0:
        raise DecodeError("BMP compression: only uncompressed (BI_RGB) supported")
    top_down = height < 0
    rows = -height if top_down else height
    cols = width
    if rows < 1 or cols < 1:
        raise DecodeError(f"BMP dimensions: {width} x {height} invalid")
    n_colors = colors_used if colors_used else 256
    if n_colors > 256:
        raise DecodeError(f"BMP palette: {n_colors} entries exceed 8-bit index range")
    pal_off = 14 + info_size
    raw = np.frombuffer(data[pal_off : pal_off + 4 * n_colors], dtype=np.uint8)
    if raw.size < 4 * n_colors:
        raise DecodeError("BMP palette: truncated")
    bgr = raw.reshape(-1, 4).astype(np.float64)
    b, g, r = bgr[:, 0], bgr[:, 1], bgr[:, 2]
    gray = np.where(
        (r == g) & (g == b), r, round_half_away(0.299 * r + 0.587 * g + 0.114 * b)
    )
    stride = (cols + 3) & ~3
    need = stride * rows
    payload = data[data_offset : data_offset + need]
    if len(payload) < need:
        raise DecodeError(f"BMP payload: expected {need} bytes, found {len(payload)}")
    idx = np.frombuffer(payload, dtype=np.uint8).reshape(rows, stride)[:, :cols]
    if int(idx.max()) >= n_colors:
        raise DecodeError("BMP payload: pixel index outside palette")
    img = gray[idx]
    if not top_down:
        img = img[::-1]
    return np.ascontiguousarray(img, dtype=np.float64)


def write_bmp8(img) -> bytes:
    """Encode an 8-bit-valued image as an indexed BMP with an identity
    grayscale palette (entry i = (i, i, i)), bottom-up rows, 4-byte padding.
    """
    arr = require_eight_bit(img)
    rows, cols = arr.shape
    stride = (cols + 3) & ~3
    image_size = stride * rows
    file_header = struct.pack(
        "<2sIHHI", b"BM", _DATA_OFFSET + image_size, 0, 0, _DATA_OFFSET
    )
    info_header = struct.pack(
        "<IiiHHIIiiII", 40, cols, rows, 1, 8, 0, image_size, 0, 0, 256, 0
    )
    palette = bytes(v for i in range(256) for v in (i, i, i, 0))
    padded = np.zeros((rows, stride), dtype=np.uint8)
    padded[:, :cols] = arr.astype(np.uint8)[::-1]
    return file_header + info_header + palette + padded.tobytes()
