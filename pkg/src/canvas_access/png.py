"""Minimal PNG reader for 8-bit grayscale/RGB/RGBA, non-interlaced streams.

Kept deliberately small: the pipeline only ever ingests synthetic canvas
snapshots, and decode errors must name the byte offset where parsing failed,
which general-purpose codecs do not expose.
"""

from __future__ import annotations

import struct
import zlib

_SIGNATURE = b"\x89PNG\r\n\x1a\n"

# bytes per pixel for the supported color types
_CHANNELS = {0: 1, 2: 3, 6: 4}


class PngDecodeError(ValueError):
    """Malformed or unsupported PNG stream; carries the failing byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


def _paeth(a: int, b: int, c: int) -> int:
    p = a + b - c
    pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
    if pa <= pb and pa <= pc:
        return a
    if pb <= pc:
        return b
    return c


def _unfilter(raw: bytes, width: int, height: int, bpp: int) -> bytearray:
    stride = width * bpp
    out = bytearray(height * stride)
    prev = bytearray(stride)
    pos = 0
    for y in range(height):
        ftype = raw[pos]
        pos += 1
        row = bytearray(raw[pos : pos + stride])
        pos += stride
        if ftype == 0:
            pass
        elif ftype == 1:
            for i in range(bpp, stride):
                row[i] = (row[i] + row[i - bpp]) & 0xFF
        elif ftype == 2:
            for i in range(stride):
                row[i] = (row[i] + prev[i]) & 0xFF
        elif ftype == 3:
            for i in range(stride):
                left = row[i - bpp] if i >= bpp else 0
                row[i] = (row[i] + (left + prev[i]) // 2) & 0xFF
        elif ftype == 4:
            for i in range(stride):
                left = row[i - bpp] if i >= bpp else 0
                upleft = prev[i - bpp] if i >= bpp else 0
                row[i] = (row[i] + _paeth(left, prev[i], upleft)) & 0xFF
        else:
            raise PngDecodeError(f"unknown scanline filter type {ftype}", 0)
        out[y * stride : (y + 1) * stride] = row
        prev = row
    return out


def decode(data: bytes) -> tuple[int, int, bytearray]:
    """Decode a PNG stream to (width, height, flat RGBA bytes).

    Raises PngDecodeError for truncated/corrupt streams and for PNG variants
    outside the supported subset (8-bit gray/RGB/RGBA, non-interlaced).
    """
    if len(data) < 8:
        raise PngDecodeError("stream shorter than PNG signature", len(data))
    if data[:8] != _SIGNATURE:
        raise PngDecodeError("bad PNG signature", 0)

    pos = 8
    width = height = -1
    color_type = -1
    idat = bytearray()
    seen_end = False
    while pos < len(data):
        if pos + 8 > len(data):
            raise PngDecodeError("truncated chunk header", pos)
        length = struct.unpack(">I", data[pos : pos + 4])[0]
        ctype = data[pos + 4 : pos + 8]
        body_at = pos + 8
        if body_at + length + 4 > len(data):
            raise PngDecodeError(f"truncated {ctype!r} chunk", pos)
        body = data[body_at : body_at + length]
        crc = struct.unpack(">I", data[body_at + length : body_at + length + 4])[0]
        if zlib.crc32(ctype + body) & 0xFFFFFFFF != crc:
            raise PngDecodeError(f"bad CRC for {ctype!r} chunk", pos)

        if ctype == b"IHDR":
            if length != 13:
                raise PngDecodeError("IHDR length is not 13", pos)
            width, height = struct.unpack(">II", body[:8])
            bit_depth, color_type, _comp, _filt, interlace = body[8:13]
            if width < 1 or height < 1:
                raise PngDecodeError("non-positive image dimensions", pos)
            if bit_depth != 8:
                raise PngDecodeError(f"unsupported bit depth {bit_depth}", pos)
            if color_type not in _CHANNELS:
                raise PngDecodeError(f"unsupported color type {color_type}", pos)
            if interlace != 0:
                raise PngDecodeError("interlaced PNG not supported", pos)
        elif ctype == b"IDAT":
            idat.extend(body)
        elif ctype == b"IEND":
            seen_end = True
            pos = body_at + length + 4
            break
        pos = body_at + length + 4

    if width < 0:
        raise PngDecodeError("missing IHDR chunk", 8)
    if not seen_end:
        raise PngDecodeError("missing IEND chunk", pos)
    if not idat:
        raise PngDecodeError("no IDAT data", pos)

    try:
        raw = zlib.decompress(bytes(idat))
    except zlib.error as exc:
        raise PngDecodeError(f"IDAT inflate failed: {exc}", pos) from None

    bpp = _CHANNELS[color_type]
    expected = height * (width * bpp + 1)
    if len(raw) != expected:
        raise PngDecodeError(
            f"decompressed size {len(raw)} != expected {expected}", pos
        )
    flat = _unfilter(raw, width, height, bpp)

    rgba = bytearray(width * height * 4)
    n = width * height
    if color_type == 6:
        rgba[:] = flat
    elif color_type == 2:
        for i in range(n):
            rgba[4 * i : 4 * i + 3] = flat[3 * i : 3 * i + 3]
            rgba[4 * i + 3] = 255
    else:  # grayscale
        for i in range(n):
            g = flat[i]
            rgba[4 * i] = g
            rgba[4 * i + 1] = g
            rgba[4 * i + 2] = g
            rgba[4 * i + 3] = 255
    return width, height, rgba
