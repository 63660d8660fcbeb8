"""Associates trace text commands with recognized widgets.

The trace is authoritative for text content (the string argument of the draw
call); detected letter regions only confirm where the text landed on the
raster. Text inside a widget becomes that widget's value, anything else a
standalone label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .labeling import Region
from .trace import CanvasTrace

if TYPE_CHECKING:
    from .emit import WidgetNode

__all__ = ["TextAssignment", "resolve_text", "unresolved_letters"]

# letter regions within this Chebyshev distance of a text origin belong to it
ORIGIN_TOL = 5
# fallback text box when no letter region matches: origin-anchored above the
# baseline, 7 px per character, 12 px tall
FALLBACK_CHAR_W = 7
FALLBACK_HEIGHT = 12


@dataclass(frozen=True)
class TextAssignment:
    text: str
    target: str | None  # widget id, or None for a standalone label
    role: str  # "value" | "label"
    origin: tuple[float, float]

    def __post_init__(self):
        if self.role not in ("value", "label"):
            raise ValueError(f"bad role {self.role!r}")
        if self.role == "value" and self.target is None:
            raise ValueError("value assignments need a target widget")


def _near_origin(region: Region, x: float, y: float, tol: int = ORIGIN_TOL) -> bool:
    x0, y0, x1, y1 = region.bbox
    return x0 - tol <= x <= x1 + tol and y0 - tol <= y <= y1 + tol


def _text_bbox(
    cluster: list[Region], x: float, y: float, text: str
) -> tuple[float, float, float, float]:
    if cluster:
        return (
            min(r.bbox[0] for r in cluster),
            min(r.bbox[1] for r in cluster),
            max(r.bbox[2] for r in cluster),
            max(r.bbox[3] for r in cluster),
        )
    return (x, y - FALLBACK_HEIGHT, x + FALLBACK_CHAR_W * max(1, len(text)), y)


def _contains(outer: tuple[int, int, int, int], inner: tuple[float, float, float, float]) -> bool:
    return (
        outer[0] <= inner[0]
        and outer[1] <= inner[1]
        and inner[2] <= outer[2]
        and inner[3] <= outer[3]
    )


def resolve_text(
    letter_regions: list[Region],
    trace: CanvasTrace,
    widgets: "Sequence[WidgetNode]",
) -> list[TextAssignment]:
    """One assignment per fillText/strokeText command, in seq order.

    The first text landing inside a widget becomes its value; any further
    text inside the same widget degrades to a standalone label.
    """
    assignments: list[TextAssignment] = []
    taken: set[str] = set()
    for cmd in trace.commands:
        if cmd.kind not in ("fillText", "strokeText"):
            continue
        text = cmd.arg("text")
        x, y = cmd.arg("x"), cmd.arg("y")
        cluster = [r for r in letter_regions if _near_origin(r, x, y)]
        tb = _text_bbox(cluster, x, y, text)
        target = next((w for w in widgets if _contains(w.bbox, tb)), None)
        if target is not None and target.id not in taken:
            taken.add(target.id)
            assignments.append(TextAssignment(text, target.id, "value", (x, y)))
        else:
            assignments.append(TextAssignment(text, None, "label", (x, y)))
    return assignments


def unresolved_letters(
    letter_regions: list[Region],
    trace: CanvasTrace,
    widget_boxes: Sequence[tuple[int, int, int, int]] = (),
) -> list[Region]:
    """Letter regions nothing accounts for (diagnostic aid).

    A region is accounted for when it overlaps some text command's span
    (generous width allowance: fonts vary) or sits inside a widget bbox,
    where it already fed the interior-label feature.
    """
    spans = []
    for cmd in trace.commands:
        if cmd.kind not in ("fillText", "strokeText"):
            continue
        x, y = cmd.arg("x"), cmd.arg("y")
        width = 2 * FALLBACK_CHAR_W * max(1, len(cmd.arg("text")))
        spans.append((x - ORIGIN_TOL, y - 2 * FALLBACK_HEIGHT, x + width, y + ORIGIN_TOL))
    leftovers = []
    for region in letter_regions:
        x0, y0, x1, y1 = region.bbox
        in_span = any(
            x0 <= sx1 and sx0 <= x1 and y0 <= sy1 and sy0 <= y1
            for sx0, sy0, sx1, sy1 in spans
        )
        in_widget = any(
            x0 >= wx0 and y0 >= wy0 and x1 <= wx1 and y1 <= wy1
            for wx0, wy0, wx1, wy1 in widget_boxes
        )
        if not in_span and not in_widget:
            leftovers.append(region)
    return leftovers
