"""Reference feature base and nearest-neighbor widget classification.

Distances follow the Minkowski family with p in {1, 2, inf}; every dimension
is divided by a per-dimension scale factor first so mixed-unit features
(counts, the 0/10/20 interior-label code, unit-interval scores) contribute
comparably.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum

from .features import FEATURE_DIMENSIONS, FeatureVector
from .raster import PixelBuffer
from .scene import analyze_scene

__all__ = [
    "WidgetClass",
    "FeatureBase",
    "Classification",
    "ConfigurationError",
    "FixtureError",
    "minkowski_distance",
    "classify",
    "build_feature_base",
    "base_to_json",
    "base_from_json",
]


class ConfigurationError(ValueError):
    pass


class FixtureError(ValueError):
    pass


class WidgetClass(Enum):
    """The eight reference classes; declaration order is the tie-break order."""

    TEXT_BOX = "TextBox"
    CHECKBOX_SELECTED = "CheckBoxSelected"
    CHECKBOX_UNSELECTED = "CheckBoxUnselected"
    RADIO_SELECTED = "RadioSelected"
    RADIO_UNSELECTED = "RadioUnselected"
    RECT_BUTTON = "RectButton"
    CIRC_BUTTON = "CircButton"
    LETTERS = "Letters"


_CLASS_ORDER = {cls: i for i, cls in enumerate(WidgetClass)}


@dataclass
class FeatureBase:
    entries: list[tuple[WidgetClass, FeatureVector]]
    scales: tuple[float, ...]

    def __post_init__(self):
        if len(self.scales) != len(FEATURE_DIMENSIONS):
            raise ConfigurationError("one scale factor per feature dimension required")
        if any(s <= 0 for s in self.scales):
            raise ConfigurationError("scale factors must be strictly positive")
        present = {cls for cls, _ in self.entries}
        missing = [cls.value for cls in WidgetClass if cls not in present]
        if missing:
            raise ConfigurationError(f"feature base missing classes: {', '.join(missing)}")


@dataclass(frozen=True)
class Classification:
    widget_class: WidgetClass
    distance: float
    runner_up_distance: float

    def __post_init__(self):
        if self.distance > self.runner_up_distance:
            raise ValueError("distance exceeds runner-up distance")


def minkowski_distance(
    a: FeatureVector,
    b: FeatureVector,
    p: float = 2,
    scales: tuple[float, ...] | None = None,
) -> float:
    """Scaled L_p distance between two feature vectors, p in {1, 2, inf}."""
    if scales is None:
        scales = (1.0,) * len(FEATURE_DIMENSIONS)
    if any(s <= 0 for s in scales):
        raise ConfigurationError("scale factors must be strictly positive")
    diffs = [
        abs(av - bv) / s for av, bv, s in zip(a.as_tuple(), b.as_tuple(), scales)
    ]
    if p == 1:
        return sum(diffs)
    if p == 2:
        return math.sqrt(sum(d * d for d in diffs))
    if p == math.inf:
        return max(diffs) if diffs else 0.0
    raise ConfigurationError(f"unsupported p={p}; use 1, 2 or inf")


def classify(query: FeatureVector, base: FeatureBase, p: float = 2) -> Classification:
    """Nearest reference entry; ties break on the fixed class order."""
    if not base.entries:
        raise ConfigurationError("feature base is empty")
    best_cls: WidgetClass | None = None
    best = math.inf
    for cls, vector in base.entries:
        d = minkowski_distance(query, vector, p, base.scales)
        if d < best or (d == best and best_cls is not None and _CLASS_ORDER[cls] < _CLASS_ORDER[best_cls]):
            best = d
            best_cls = cls
    runner_up = math.inf
    for cls, vector in base.entries:
        if cls is best_cls:
            continue
        d = minkowski_distance(query, vector, p, base.scales)
        runner_up = min(runner_up, d)
    assert best_cls is not None
    return Classification(best_cls, best, runner_up)


def build_feature_base(
    reference_scenes: list[tuple[PixelBuffer, list[WidgetClass]]],
    zero_crossing_threshold: float = 8.0,
) -> FeatureBase:
    """Run the pipeline over annotated reference scenes and collect vectors.

    Annotations list one class per widget candidate in first-encounter
    (row-major) order; a count mismatch means the fixture does not show what
    it claims to.
    """
    entries: list[tuple[WidgetClass, FeatureVector]] = []
    for i, (buf, annotations) in enumerate(reference_scenes):
        analysis = analyze_scene(buf, zero_crossing_threshold)
        if len(analysis.candidates) != len(annotations):
            raise FixtureError(
                f"reference scene {i}: {len(analysis.candidates)} candidate regions "
                f"but {len(annotations)} annotations"
            )
        entries.extend(zip(annotations, analysis.vectors))

    present = {cls for cls, _ in entries}
    missing = [cls.value for cls in WidgetClass if cls not in present]
    if missing:
        raise ConfigurationError(f"reference scenes missing classes: {', '.join(missing)}")

    scales = []
    for dim in range(len(FEATURE_DIMENSIONS)):
        peak = max(vec.as_tuple()[dim] for _, vec in entries)
        scales.append(peak if peak > 0 else 1.0)
    return FeatureBase(entries=entries, scales=tuple(scales))


def base_to_json(base: FeatureBase) -> str:
    doc = {
        "version": 1,
        "dimensions": list(FEATURE_DIMENSIONS),
        "scales": {dim: s for dim, s in zip(FEATURE_DIMENSIONS, base.scales)},
        "entries": [
            {
                "class": cls.value,
                "vector": {dim: v for dim, v in zip(FEATURE_DIMENSIONS, vec.as_tuple())},
            }
            for cls, vec in base.entries
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def base_from_json(text: str) -> FeatureBase:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"feature base is not valid JSON: {exc}") from None
    if doc.get("version") != 1:
        raise ConfigurationError("unsupported feature base version")
    by_value = {cls.value: cls for cls in WidgetClass}
    entries = []
    for entry in doc.get("entries", []):
        cls = by_value.get(entry.get("class"))
        if cls is None:
            raise ConfigurationError(f"unknown widget class {entry.get('class')!r}")
        raw = entry["vector"]
        vector = FeatureVector(
            num_lines=int(raw["num_lines"]),
            num_equal_lines=int(raw["num_equal_lines"]),
            num_adjacent_equal_lines=int(raw["num_adjacent_equal_lines"]),
            num_right_angles=int(raw["num_right_angles"]),
            label_count_code=int(raw["label_count_code"]),
            square_compliance=float(raw["square_compliance"]),
            circle_compliance=float(raw["circle_compliance"]),
            rect_compliance=float(raw["rect_compliance"]),
            xy_extent_equality=float(raw["xy_extent_equality"]),
        )
        entries.append((cls, vector))
    scales = tuple(float(doc["scales"][dim]) for dim in FEATURE_DIMENSIONS)
    return FeatureBase(entries=entries, scales=scales)
