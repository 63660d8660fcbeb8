import io
import sys
from pathlib import Path

import numpy as np
import pytest
from PIL import Image

from canvas_access.raster import GrayBuffer, PixelBuffer

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

# make the repo-root tools package (fixture renderer) importable from tests
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


def encode_png_reference(rgba: np.ndarray) -> bytes:
    """Encode (h, w, 4) uint8 via Pillow: the reference codec for round trips."""
    img = Image.fromarray(rgba, mode="RGBA")
    out = io.BytesIO()
    img.save(out, format="PNG")
    return out.getvalue()


def make_pixel_buffer(rgba: np.ndarray) -> PixelBuffer:
    h, w = rgba.shape[:2]
    return PixelBuffer(w, h, rgba)


def make_gray(grid) -> GrayBuffer:
    arr = np.asarray(grid, dtype=np.float64)
    h, w = arr.shape
    return GrayBuffer(w, h, arr)


def union_find_labels(grid: np.ndarray) -> np.ndarray:
    """Independent connected-components oracle: two-pass union-find over the
    8-neighborhood, relabeled to first-encounter order."""
    grid = np.asarray(grid, dtype=bool)
    h, w = grid.shape
    parent = list(range(h * w))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for y in range(h):
        for x in range(w):
            if not grid[y, x]:
                continue
            idx = y * w + x
            for dy, dx in ((-1, -1), (-1, 0), (-1, 1), (0, -1)):
                ny, nx = y + dy, x + dx
                if 0 <= ny < h and 0 <= nx < w and grid[ny, nx]:
                    union(idx, ny * w + nx)

    labels = np.zeros((h, w), dtype=np.int32)
    next_label = 0
    seen: dict[int, int] = {}
    for y in range(h):
        for x in range(w):
            if grid[y, x]:
                root = find(y * w + x)
                if root not in seen:
                    next_label += 1
                    seen[root] = next_label
                labels[y, x] = seen[root]
    return labels


def rasterize_circle_outline(r: int) -> np.ndarray:
    """Midpoint circle of radius r in a (2r+1)^2 grid, 1-px stroke."""
    size = 2 * r + 1
    grid = np.zeros((size, size), dtype=bool)
    cx = cy = r
    x, y = 0, r
    d = 1 - r
    while x <= y:
        for px, py in (
            (x, y), (y, x), (-x, y), (-y, x),
            (x, -y), (y, -x), (-x, -y), (-y, -x),
        ):
            grid[cy + py, cx + px] = True
        x += 1
        if d < 0:
            d += 2 * x + 1
        else:
            y -= 1
            d += 2 * (x - y) + 1
    return grid


def rasterize_disk(r: int) -> np.ndarray:
    """Filled midpoint disk of radius r in a (2r+1)^2 grid."""
    outline = rasterize_circle_outline(r)
    size = 2 * r + 1
    disk = np.zeros((size, size), dtype=bool)
    for y in range(size):
        xs = np.nonzero(outline[y])[0]
        if len(xs):
            disk[y, xs.min() : xs.max() + 1] = True
    return disk


def rectangle_outline(w: int, h: int) -> np.ndarray:
    grid = np.zeros((h, w), dtype=bool)
    grid[0, :] = grid[-1, :] = True
    grid[:, 0] = grid[:, -1] = True
    return grid


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    if not FIXTURES.exists():
        pytest.skip("vendored fixtures not generated yet")
    return FIXTURES
