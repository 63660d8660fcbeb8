"""Per-region descriptors: line segments, right angles, interior-label code,
area agreement, shape compliance and extent equality.

All geometry is computed on a region's binary mask; endpoints are reported in
image coordinates. The nine-dimensional vector assembled here is what the
classifier compares against its reference base.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .labeling import Region

__all__ = [
    "LineSegment",
    "FeatureVector",
    "FEATURE_DIMENSIONS",
    "LINE_RESPONSE_MIN",
    "LINE_MIN_RUN",
    "detect_lines",
    "count_right_angles",
    "count_equal_and_adjacent_lines",
    "region_area",
    "filled_interior_count",
    "label_count_code",
    "shape_compliance",
    "extent_equality",
    "interior_letter_regions",
    "build_feature_vector",
]

# line-filter acceptance: response >= 4 of a possible 6, runs of >= 4 pixels
LINE_RESPONSE_MIN = 4.0
LINE_MIN_RUN = 4
# pairs of segments count as equal within 2 px of length, adjacent within
# 3 px Chebyshev between endpoints
LENGTH_EQUAL_TOL = 2
ADJACENCY_TOL = 3

FEATURE_DIMENSIONS = (
    "num_lines",
    "num_equal_lines",
    "num_adjacent_equal_lines",
    "num_right_angles",
    "label_count_code",
    "square_compliance",
    "circle_compliance",
    "rect_compliance",
    "xy_extent_equality",
)


@dataclass(frozen=True)
class LineSegment:
    orientation: str  # "horizontal" | "vertical"
    start: tuple[int, int]
    end: tuple[int, int]
    length: int

    def __post_init__(self):
        if self.orientation == "horizontal":
            assert self.start[1] == self.end[1]
        elif self.orientation == "vertical":
            assert self.start[0] == self.end[0]
        else:
            raise ValueError(f"bad orientation {self.orientation!r}")


@dataclass(frozen=True)
class FeatureVector:
    num_lines: int
    num_equal_lines: int
    num_adjacent_equal_lines: int
    num_right_angles: int
    label_count_code: int
    square_compliance: float
    circle_compliance: float
    rect_compliance: float
    xy_extent_equality: float

    def __post_init__(self):
        if self.label_count_code not in (0, 10, 20):
            raise ValueError(f"label_count_code {self.label_count_code} not in {{0,10,20}}")
        for name in ("square_compliance", "circle_compliance", "rect_compliance",
                     "xy_extent_equality"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [0,1]")
        for name in ("num_lines", "num_equal_lines", "num_adjacent_equal_lines",
                     "num_right_angles"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} negative")

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(float(getattr(self, name)) for name in FEATURE_DIMENSIONS)

    @classmethod
    def from_mapping(cls, values: dict) -> "FeatureVector":
        return cls(**{name: values[name] for name in FEATURE_DIMENSIONS})


def _line_responses(mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vertical- and horizontal-line filter responses on a zero-padded mask."""
    h, w = mask.shape
    p = np.zeros((h + 2, w + 2), dtype=np.float64)
    p[1:-1, 1:-1] = mask
    col3 = p[0:h, :] + p[1 : h + 1, :] + p[2 : h + 2, :]
    resp_v = 2.0 * col3[:, 1 : w + 1] - col3[:, 0:w] - col3[:, 2 : w + 2]
    row3 = p[:, 0:w] + p[:, 1 : w + 1] + p[:, 2 : w + 2]
    resp_h = 2.0 * row3[1 : h + 1, :] - row3[0:h, :] - row3[2 : h + 2, :]
    return resp_v, resp_h


def _runs(flags: np.ndarray) -> list[tuple[int, int]]:
    """Maximal runs of consecutive True values as (start, end) inclusive."""
    runs = []
    start = None
    for i, f in enumerate(flags):
        if f and start is None:
            start = i
        elif not f and start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(flags) - 1))
    return runs


def detect_lines(region: Region) -> list[LineSegment]:
    """Find straight 1-px strokes in the region mask.

    The two 3x3 line filters are applied to the mask (foreground 1,
    background 0, zero padding outside the bbox); pixels responding at
    LINE_RESPONSE_MIN or above form line pixels, and maximal runs of at
    least LINE_MIN_RUN along the filter axis become segments.
    """
    if region.pixel_count == 0:
        raise ValueError("region mask is empty")
    mask = region.mask.astype(np.float64)
    resp_v, resp_h = _line_responses(mask)
    ox, oy = region.bbox[0], region.bbox[1]
    segments: list[LineSegment] = []
    vert = resp_v >= LINE_RESPONSE_MIN
    for x in range(vert.shape[1]):
        for y0, y1 in _runs(vert[:, x]):
            length = y1 - y0 + 1
            if length >= LINE_MIN_RUN:
                segments.append(
                    LineSegment("vertical", (ox + x, oy + y0), (ox + x, oy + y1), length)
                )
    horiz = resp_h >= LINE_RESPONSE_MIN
    for y in range(horiz.shape[0]):
        for x0, x1 in _runs(horiz[y, :]):
            length = x1 - x0 + 1
            if length >= LINE_MIN_RUN:
                segments.append(
                    LineSegment("horizontal", (ox + x0, oy + y), (ox + x1, oy + y), length)
                )
    return segments


def _endpoints_close(a: LineSegment, b: LineSegment, tol: int) -> bool:
    for pa in (a.start, a.end):
        for pb in (b.start, b.end):
            if max(abs(pa[0] - pb[0]), abs(pa[1] - pb[1])) <= tol:
                return True
    return False


def count_right_angles(lines: list[LineSegment]) -> int:
    """Count horizontal/vertical pairs whose endpoints meet within tolerance."""
    horizontals = [s for s in lines if s.orientation == "horizontal"]
    verticals = [s for s in lines if s.orientation == "vertical"]
    count = 0
    for h in horizontals:
        for v in verticals:
            if _endpoints_close(h, v, ADJACENCY_TOL):
                count += 1
    return count


def count_equal_and_adjacent_lines(lines: list[LineSegment]) -> tuple[int, int]:
    """Pairs of near-equal-length segments, and the subset that also touch."""
    equal = 0
    adjacent = 0
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if abs(lines[i].length - lines[j].length) <= LENGTH_EQUAL_TOL:
                equal += 1
                if _endpoints_close(lines[i], lines[j], ADJACENCY_TOL):
                    adjacent += 1
    return equal, adjacent


def filled_interior_count(region: Region) -> int:
    """Pixels of the bbox not reachable from its border through background.

    Background is flooded 8-connected from every background border cell; the
    remainder (mask plus enclosed holes) is the filled interior.
    """
    mask = region.mask
    h, w = mask.shape
    outside = np.zeros((h, w), dtype=bool)
    queue: deque[tuple[int, int]] = deque()
    for x in range(w):
        for y in (0, h - 1):
            if not mask[y, x] and not outside[y, x]:
                outside[y, x] = True
                queue.append((y, x))
    for y in range(h):
        for x in (0, w - 1):
            if not mask[y, x] and not outside[y, x]:
                outside[y, x] = True
                queue.append((y, x))
    while queue:
        y, x = queue.popleft()
        for dy in (-1, 0, 1):
            for dx in (-1, 0, 1):
                ny, nx = y + dy, x + dx
                if 0 <= ny < h and 0 <= nx < w and not mask[ny, nx] and not outside[ny, nx]:
                    outside[ny, nx] = True
                    queue.append((ny, nx))
    return int(h * w - outside.sum())


def _near_equal_extents(region: Region) -> bool:
    w, h = region.bbox_width, region.bbox_height
    return min(w, h) / max(w, h) >= 0.75


def _corners_empty(region: Region) -> bool:
    m = region.mask
    return not (m[0, 0] or m[0, -1] or m[-1, 0] or m[-1, -1])


def region_area(region: Region) -> tuple[int, float, float]:
    """Pixel count, analytic area from bbox geometry, and their agreement.

    The analytic side treats the region as an ellipse when the bbox is
    near-square with empty corners, otherwise as a rectangle; the pixel side
    of the agreement ratio uses the filled-interior count so outlines compare
    against the area they enclose.
    """
    if region.pixel_count == 0:
        raise ValueError("region mask is empty")
    w, h = region.bbox_width, region.bbox_height
    if _near_equal_extents(region) and _corners_empty(region):
        analytic = math.pi * (w / 2.0) * (h / 2.0)
    else:
        analytic = float(w * h)
    filled = filled_interior_count(region)
    agreement = min(filled, analytic) / max(filled, analytic)
    return region.pixel_count, analytic, agreement


def label_count_code(region: Region, letter_regions: list[Region]) -> int:
    """Encode how many interior components sit inside the region: none -> 0,
    exactly one -> 10, more -> 20."""
    n = len(letter_regions)
    if n == 0:
        return 0
    if n == 1:
        return 10
    return 20


def _ratio(a: float, b: float) -> float:
    if a <= 0 or b <= 0:
        return 0.0
    return min(a, b) / max(a, b)


def shape_compliance(region: Region) -> tuple[float, float, float]:
    """Square/circle/rectangle compliance from bbox aspect and filled area."""
    if region.pixel_count == 0:
        raise ValueError("region mask is empty")
    w, h = region.bbox_width, region.bbox_height
    aspect = min(w, h) / max(w, h)
    filled = float(filled_interior_count(region))
    square = aspect * _ratio(filled, float(w * h))
    circle = aspect * _ratio(filled, math.pi * w * h / 4.0)
    rect = _ratio(filled, float(w * h)) * (1.0 - aspect)
    clip = lambda v: min(1.0, max(0.0, v))
    return clip(square), clip(circle), clip(rect)


def extent_equality(region: Region) -> float:
    """min/max of the bbox extents; 1.0 for squares, small for bars."""
    if region.pixel_count == 0:
        raise ValueError("region mask is empty")
    w, h = region.bbox_width, region.bbox_height
    return min(w, h) / max(w, h)


# a widget's own stroke sits 1-2 px inside the detected bbox (the edge band
# extends up to 2 px beyond the stroke); real interior content sits deeper
LETTER_MARGIN = 3


def interior_letter_regions(region: Region, dark_regions: list[Region]) -> list[Region]:
    """Interior components (marks, dots, glyphs) belonging to a widget region.

    A dark component counts when its bbox sits strictly inside the widget
    bbox with at least LETTER_MARGIN px on every side (excluding the widget's
    own stroke) and it is small relative to the bbox interior.
    """
    rx0, ry0, rx1, ry1 = region.bbox
    cap = 0.25 * max(1, (region.bbox_width - 2) * (region.bbox_height - 2))
    inside = []
    for d in dark_regions:
        dx0, dy0, dx1, dy1 = d.bbox
        if (
            dx0 >= rx0 + LETTER_MARGIN
            and dy0 >= ry0 + LETTER_MARGIN
            and dx1 <= rx1 - LETTER_MARGIN
            and dy1 <= ry1 - LETTER_MARGIN
            and d.pixel_count < cap
        ):
            inside.append(d)
    return inside


def build_feature_vector(region: Region, letter_regions: list[Region]) -> FeatureVector:
    """Assemble all nine descriptors for one region."""
    lines = detect_lines(region)
    equal, adjacent = count_equal_and_adjacent_lines(lines)
    square, circle, rect = shape_compliance(region)
    return FeatureVector(
        num_lines=len(lines),
        num_equal_lines=equal,
        num_adjacent_equal_lines=adjacent,
        num_right_angles=count_right_angles(lines),
        label_count_code=label_count_code(region, letter_regions),
        square_compliance=square,
        circle_compliance=circle,
        rect_compliance=rect,
        xy_extent_equality=extent_equality(region),
    )
