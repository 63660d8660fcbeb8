"""Connected-component labeling by flood filling.

Three interchangeable variants are provided: a plain recursive fill (only
safe for small maps, guarded), an iterative depth-first fill with its own
stack, and an iterative breadth-first fill backed by a queue. The breadth
first version is the production default; all variants label 8-connected
foreground components 1..k in first-encounter order under a row-major scan,
so their outputs are bit-identical.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass

import numpy as np

from .edges import EdgeMap
from .raster import GrayBuffer

__all__ = [
    "LabelMap",
    "Region",
    "SizeError",
    "RECURSIVE_PIXEL_LIMIT",
    "flood_fill_bfs",
    "flood_fill_dfs",
    "flood_fill_recursive",
    "extract_regions",
    "binarize_dark",
]

RECURSIVE_PIXEL_LIMIT = 4096


class SizeError(ValueError):
    """Input too large for the recursive variant's stack-depth guard."""


@dataclass(eq=False)
class LabelMap:
    width: int
    height: int
    labels: np.ndarray  # flat int32, 0 = background
    label_count: int

    def as_array(self) -> np.ndarray:
        return self.labels.reshape(self.height, self.width)


@dataclass(eq=False)
class Region:
    """One labeled component: tight bbox (inclusive) plus its local mask."""

    label: int
    bbox: tuple[int, int, int, int]  # min_x, min_y, max_x, max_y
    pixel_count: int
    mask: np.ndarray  # bool, shape (bbox height, bbox width)

    @property
    def bbox_width(self) -> int:
        return self.bbox[2] - self.bbox[0] + 1

    @property
    def bbox_height(self) -> int:
        return self.bbox[3] - self.bbox[1] + 1


def _as_bool_grid(binary: EdgeMap | np.ndarray) -> np.ndarray:
    if isinstance(binary, EdgeMap):
        return binary.as_array()
    grid = np.asarray(binary, dtype=bool)
    if grid.ndim != 2:
        raise ValueError("binary foreground must be 2-D")
    return grid


# 8-neighborhood offsets
_NEIGHBORS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def flood_fill_bfs(binary: EdgeMap | np.ndarray) -> LabelMap:
    """Label 8-connected components, filling each via a FIFO queue."""
    grid = _as_bool_grid(binary)
    h, w = grid.shape
    fg = grid.ravel().tolist()
    labels = [0] * (h * w)
    label = 0
    for start in range(h * w):
        if not fg[start] or labels[start]:
            continue
        label += 1
        labels[start] = label
        queue = deque((start,))
        while queue:
            idx = queue.popleft()
            y, x = divmod(idx, w)
            for dy, dx in _NEIGHBORS:
                ny, nx = y + dy, x + dx
                if 0 <= ny < h and 0 <= nx < w:
                    nidx = ny * w + nx
                    if fg[nidx] and not labels[nidx]:
                        labels[nidx] = label
                        queue.append(nidx)
    return LabelMap(w, h, np.array(labels, dtype=np.int32), label)


def flood_fill_dfs(binary: EdgeMap | np.ndarray) -> LabelMap:
    """Label 8-connected components, filling each via an explicit stack."""
    grid = _as_bool_grid(binary)
    h, w = grid.shape
    fg = grid.ravel().tolist()
    labels = [0] * (h * w)
    label = 0
    for start in range(h * w):
        if not fg[start] or labels[start]:
            continue
        label += 1
        labels[start] = label
        stack = [start]
        while stack:
            idx = stack.pop()
            y, x = divmod(idx, w)
            for dy, dx in _NEIGHBORS:
                ny, nx = y + dy, x + dx
                if 0 <= ny < h and 0 <= nx < w:
                    nidx = ny * w + nx
                    if fg[nidx] and not labels[nidx]:
                        labels[nidx] = label
                        stack.append(nidx)
    return LabelMap(w, h, np.array(labels, dtype=np.int32), label)


def flood_fill_recursive(binary: EdgeMap | np.ndarray) -> LabelMap:
    """Label 8-connected components by genuine recursion.

    Recursion depth grows with component size, so inputs above
    RECURSIVE_PIXEL_LIMIT pixels are rejected.
    """
    grid = _as_bool_grid(binary)
    h, w = grid.shape
    if h * w > RECURSIVE_PIXEL_LIMIT:
        raise SizeError(
            f"{w}x{h} = {w * h} pixels exceeds the recursive-fill limit "
            f"of {RECURSIVE_PIXEL_LIMIT}"
        )
    fg = grid.ravel().tolist()
    labels = [0] * (h * w)

    def fill(y: int, x: int, label: int) -> None:
        labels[y * w + x] = label
        for dy, dx in _NEIGHBORS:
            ny, nx = y + dy, x + dx
            if 0 <= ny < h and 0 <= nx < w:
                nidx = ny * w + nx
                if fg[nidx] and not labels[nidx]:
                    fill(ny, nx, label)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, RECURSIVE_PIXEL_LIMIT * 2 + 100))
    try:
        label = 0
        for start in range(h * w):
            if fg[start] and not labels[start]:
                label += 1
                fill(start // w, start % w, label)
    finally:
        sys.setrecursionlimit(old_limit)
    return LabelMap(w, h, np.array(labels, dtype=np.int32), label)


def extract_regions(lm: LabelMap) -> list[Region]:
    """Materialize one Region per label, sorted by label."""
    grid = lm.as_array()
    regions: list[Region] = []
    for label in range(1, lm.label_count + 1):
        ys, xs = np.nonzero(grid == label)
        min_x, max_x = int(xs.min()), int(xs.max())
        min_y, max_y = int(ys.min()), int(ys.max())
        mask = grid[min_y : max_y + 1, min_x : max_x + 1] == label
        regions.append(
            Region(
                label=label,
                bbox=(min_x, min_y, max_x, max_y),
                pixel_count=int(len(xs)),
                mask=mask,
            )
        )
    return regions


def binarize_dark(buf: GrayBuffer, cutoff: float = 128.0) -> EdgeMap:
    """Foreground = pixels darker than the cutoff (luma < cutoff)."""
    return EdgeMap.from_array(buf.as_array() < cutoff)
