"""Scene specifications: validation, rendering and ground-truth expectations.

A scene spec lists non-overlapping widgets (plus standalone text and event
bindings) on a canvas; rendering yields the matched (PNG, trace, expectation)
triple the recognition pipeline is tested against.
"""

from __future__ import annotations

from .canvas_render import (
    CanvasRecorder,
    draw_checkbox,
    draw_circ_button,
    draw_label,
    draw_radio,
    draw_rect_button,
    draw_textbox,
)
from .font5x7 import GLYPHS, text_height, text_width

# minimum empty pixels between any two element territories; keeps the edge
# bands of neighboring widgets from merging
SEPARATION = 8


class SceneSpecError(ValueError):
    pass


def _widget_bbox(w: dict) -> tuple[int, int, int, int]:
    """Ground-truth bbox as (x, y, width, height)."""
    t = w["type"]
    if t in ("textbox", "rectButton"):
        return (w["x"], w["y"], w["w"], w["h"])
    if t == "checkbox":
        return (w["x"], w["y"], w["size"], w["size"])
    if t in ("radio", "circButton"):
        r = w["r"]
        return (w["cx"] - r, w["cy"] - r, 2 * r + 1, 2 * r + 1)
    raise SceneSpecError(f"unknown widget type {t!r}")


def _label_bbox(label: dict) -> tuple[int, int, int, int]:
    tw = text_width(label["text"])
    th = text_height()
    return (label["x"], label["y"] - th, tw, th)


EXPECTED_CLASS = {
    "textbox": "TextBox",
    "rectButton": "RectButton",
    "circButton": "CircButton",
}


def widget_class_name(w: dict) -> str:
    t = w["type"]
    if t == "checkbox":
        return "CheckBoxSelected" if w.get("selected") else "CheckBoxUnselected"
    if t == "radio":
        return "RadioSelected" if w.get("selected") else "RadioUnselected"
    return EXPECTED_CLASS[t]


def _check_text(text: str) -> None:
    for ch in text.upper():
        if ch != " " and ch not in GLYPHS:
            raise SceneSpecError(f"character {ch!r} not in the fixture font")


def validate_scene(spec: dict) -> None:
    """Reject overlapping or out-of-bounds scenes before rendering."""
    canvas = spec["canvas"]
    cw, ch = canvas["width"], canvas["height"]
    if cw < 1 or ch < 1:
        raise SceneSpecError("canvas dimensions must be positive")
    territories = []
    for w in spec.get("widgets", []):
        x, y, bw, bh = _widget_bbox(w)
        if w.get("text"):
            _check_text(w["text"])
        if x < 2 or y < 2 or x + bw > cw - 2 or y + bh > ch - 2:
            raise SceneSpecError(
                f"widget {w} exceeds the canvas (needs a 2 px quiet border)"
            )
        territories.append((x, y, x + bw - 1, y + bh - 1, f"widget {w['type']}"))
    for label in spec.get("labels", []):
        _check_text(label["text"])
        x, y, bw, bh = _label_bbox(label)
        if x < 2 or y < 2 or x + bw > cw - 2 or y + bh > ch - 2:
            raise SceneSpecError(f"label {label} exceeds the canvas")
        territories.append((x, y, x + bw - 1, y + bh - 1, f"label {label['text']!r}"))
    half = SEPARATION // 2
    for i in range(len(territories)):
        for j in range(i + 1, len(territories)):
            a, b = territories[i], territories[j]
            if (
                a[0] - half <= b[2] + half
                and b[0] - half <= a[2] + half
                and a[1] - half <= b[3] + half
                and b[1] - half <= a[3] + half
            ):
                raise SceneSpecError(f"{a[4]} overlaps {b[4]} (separation < {SEPARATION})")


def render_scene(spec: dict) -> tuple[bytes, dict, dict]:
    """Render a validated spec to (PNG bytes, trace doc, expectation doc)."""
    validate_scene(spec)
    canvas = spec["canvas"]
    c = CanvasRecorder(canvas["width"], canvas["height"])
    c.set_font("14px monospace")
    c.set_text_align("left")
    for w in spec.get("widgets", []):
        t = w["type"]
        if t == "textbox":
            draw_textbox(c, w["x"], w["y"], w["w"], w["h"])
        elif t == "checkbox":
            draw_checkbox(c, w["x"], w["y"], w["size"], bool(w.get("selected")))
        elif t == "radio":
            draw_radio(c, w["cx"], w["cy"], w["r"], bool(w.get("selected")))
        elif t == "rectButton":
            draw_rect_button(c, w["x"], w["y"], w["w"], w["h"], w["text"])
        elif t == "circButton":
            draw_circ_button(c, w["cx"], w["cy"], w["r"], w["text"])
        else:
            raise SceneSpecError(f"unknown widget type {t!r}")
    for label in spec.get("labels", []):
        draw_label(c, label["text"], label["x"], label["y"])
    for b in spec.get("bindings", []):
        c.add_binding(b["event"], b["positionDependent"], b["handler"])
    return c.png_bytes(), c.trace_doc(), expectation_from_scene(spec)


def expectation_from_scene(spec: dict) -> dict:
    """Ground truth: classes, bboxes, text roles and tab order."""
    widgets = []
    for w in spec.get("widgets", []):
        x, y, bw, bh = _widget_bbox(w)
        checked = None
        if w["type"] in ("checkbox", "radio"):
            checked = bool(w.get("selected"))
        widgets.append(
            {
                "class": widget_class_name(w),
                "bbox": [x, y, bw, bh],
                "text": w.get("text"),
                "checked": checked,
            }
        )
    for tab, i in enumerate(
        sorted(range(len(widgets)), key=lambda i: (widgets[i]["bbox"][1], widgets[i]["bbox"][0])),
        start=1,
    ):
        widgets[i]["tabIndex"] = tab
    return {
        "version": 1,
        "canvas": dict(spec["canvas"]),
        "widgets": widgets,
        "standaloneLabels": [
            {"text": l["text"], "x": l["x"], "y": l["y"]} for l in spec.get("labels", [])
        ],
    }
