"""Pixel buffers, region extraction, grayscale conversion and 3x3 filtering.

The entry point of the recognition pipeline mirrors the canvas pixel-access
contract: an RGBA buffer plus width/height, from which rectangular regions can
be copied out. Everything downstream works on real-valued single-channel
buffers so filter responses keep their sign and precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .png import PngDecodeError, decode as _decode_png

__all__ = [
    "PixelBuffer",
    "GrayBuffer",
    "Kernel3x3",
    "BoundsError",
    "DecodeError",
    "GAUSSIAN_3X3",
    "decode_image",
    "get_image_data",
    "to_gray",
    "denoise",
    "convolve3x3",
]

DecodeError = PngDecodeError


class BoundsError(ValueError):
    """Requested pixel rectangle falls outside the buffer."""

    def __init__(self, x: int, y: int, w: int, h: int, width: int, height: int):
        super().__init__(
            f"rectangle x={x} y={y} w={w} h={h} outside buffer {width}x{height}"
        )
        self.rect = (x, y, w, h)


@dataclass(eq=False)
class PixelBuffer:
    """RGBA raster: 4 uint8 samples per pixel, row-major."""

    width: int
    height: int
    data: np.ndarray  # flat uint8, length width*height*4

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.uint8).ravel()
        if self.width < 1 or self.height < 1:
            raise ValueError(f"bad dimensions {self.width}x{self.height}")
        if self.data.size != self.width * self.height * 4:
            raise ValueError(
                f"data length {self.data.size} != {self.width}x{self.height}x4"
            )

    def as_rgba(self) -> np.ndarray:
        """View as (height, width, 4)."""
        return self.data.reshape(self.height, self.width, 4)


@dataclass(eq=False)
class GrayBuffer:
    """Single scalar per pixel; values are unbounded reals when holding
    filter responses."""

    width: int
    height: int
    data: np.ndarray  # flat float64, length width*height

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64).ravel()
        if self.data.size != self.width * self.height:
            raise ValueError(
                f"data length {self.data.size} != {self.width}x{self.height}"
            )

    def as_array(self) -> np.ndarray:
        return self.data.reshape(self.height, self.width)


@dataclass(frozen=True)
class Kernel3x3:
    """Nine signed coefficients, row-major."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        if len(self.coefficients) != 9:
            raise ValueError("a 3x3 kernel needs exactly 9 coefficients")


GAUSSIAN_3X3 = Kernel3x3(
    tuple(c / 16.0 for c in (1, 2, 1, 2, 4, 2, 1, 2, 1))
)


def decode_image(data: bytes) -> PixelBuffer:
    """Decode a PNG stream; images without alpha get alpha = 255."""
    width, height, rgba = _decode_png(data)
    return PixelBuffer(width, height, np.frombuffer(bytes(rgba), dtype=np.uint8))


def get_image_data(buf: PixelBuffer, x: int, y: int, w: int, h: int) -> PixelBuffer:
    """Copy the pixel rectangle [x, x+w) x [y, y+h) into a fresh buffer.

    Out-of-bounds rectangles raise BoundsError rather than zero-filling.
    """
    if w < 1 or h < 1 or x < 0 or y < 0 or x + w > buf.width or y + h > buf.height:
        raise BoundsError(x, y, w, h, buf.width, buf.height)
    region = buf.as_rgba()[y : y + h, x : x + w].copy()
    return PixelBuffer(w, h, region)


def to_gray(buf: PixelBuffer) -> GrayBuffer:
    """Rec. 601 luma: 0.299 R + 0.587 G + 0.114 B, alpha ignored."""
    rgba = buf.as_rgba().astype(np.float64)
    luma = 0.299 * rgba[:, :, 0] + 0.587 * rgba[:, :, 1] + 0.114 * rgba[:, :, 2]
    return GrayBuffer(buf.width, buf.height, luma)


def convolve3x3(buf: GrayBuffer, kernel: Kernel3x3) -> GrayBuffer:
    """Signed correlation response at every pixel, border by edge replication.

    Accumulated as center*sum(k) + sum_i k_i*(tap_i - center): identical in
    exact arithmetic, but constant inputs cancel exactly in floats, so
    zero-sum kernels respond with exact 0.0 on flat areas.
    """
    grid = buf.as_array()
    padded = np.pad(grid, 1, mode="edge")
    center = padded[1:-1, 1:-1]
    ksum = 0.0
    for c in kernel.coefficients:
        ksum += c
    resp = center * ksum
    k = kernel.coefficients
    idx = 0
    for dy in (0, 1, 2):
        for dx in (0, 1, 2):
            coeff = k[idx]
            idx += 1
            if dy == 1 and dx == 1:
                continue
            tap = padded[dy : dy + buf.height, dx : dx + buf.width]
            resp = resp + coeff * (tap - center)
    return GrayBuffer(buf.width, buf.height, resp)


def denoise(buf: GrayBuffer) -> GrayBuffer:
    """3x3 binomial Gaussian smoothing (weights sum to 1)."""
    return convolve3x3(buf, GAUSSIAN_3X3)
