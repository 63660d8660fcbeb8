"""Laplacian-of-Gaussian response and zero-crossing edge extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .raster import GrayBuffer, Kernel3x3, convolve3x3

__all__ = ["EdgeMap", "LOG_KERNEL", "log_response", "zero_crossings"]

LOG_KERNEL = Kernel3x3((1, 1, 1, 1, -8, 1, 1, 1, 1))


@dataclass(eq=False)
class EdgeMap:
    """One boolean per pixel, true = edge, row-major."""

    width: int
    height: int
    data: np.ndarray  # flat bool, length width*height

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=bool).ravel()
        if self.data.size != self.width * self.height:
            raise ValueError(
                f"data length {self.data.size} != {self.width}x{self.height}"
            )

    def as_array(self) -> np.ndarray:
        return self.data.reshape(self.height, self.width)

    @classmethod
    def from_array(cls, grid: np.ndarray) -> "EdgeMap":
        grid = np.asarray(grid, dtype=bool)
        h, w = grid.shape
        return cls(w, h, grid)


def log_response(buf: GrayBuffer) -> GrayBuffer:
    """Correlate with the 3x3 discrete Laplacian-of-Gaussian kernel."""
    return convolve3x3(buf, LOG_KERNEL)


def zero_crossings(resp: GrayBuffer, threshold: float = 8.0) -> EdgeMap:
    """Mark pixels where the response changes sign across a 4-neighbor.

    A pixel is an edge if some 4-neighbor has strictly opposite sign and the
    absolute response difference exceeds the threshold. Pixels whose response
    is exactly 0 and that have both a positive and a negative 4-neighbor are
    edges regardless of the threshold.
    """
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    r = resp.as_array()
    h, w = r.shape
    # pad with 0: a padded neighbor is neither positive nor negative, so it
    # can never satisfy the strict-sign rules
    p = np.pad(r, 1, mode="constant", constant_values=0.0)
    edge = np.zeros((h, w), dtype=bool)
    has_pos = np.zeros((h, w), dtype=bool)
    has_neg = np.zeros((h, w), dtype=bool)
    for dy, dx in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        nb = p[1 + dy : 1 + dy + h, 1 + dx : 1 + dx + w]
        opposite = ((r > 0) & (nb < 0)) | ((r < 0) & (nb > 0))
        edge |= opposite & (np.abs(r - nb) > threshold)
        has_pos |= nb > 0
        has_neg |= nb < 0
    edge |= (r == 0.0) & has_pos & has_neg
    return EdgeMap(resp.width, resp.height, edge)
