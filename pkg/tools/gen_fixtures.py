"""Regenerates the vendored fixture corpus under fixtures/.

Everything here is deterministic: reference scenes for the feature base, the
two use-case fixtures, a non-UI degenerate graphic, and a seeded corpus of
mixed scenes. Run from the repo root:

    python3 -m tools.gen_fixtures
"""

from __future__ import annotations

import hashlib
import json
import math
import random
import shutil
import sys
from pathlib import Path

from .canvas_render import CanvasRecorder
from .font5x7 import text_width
from .scenespec import render_scene

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

BUTTON_WORDS = ("OK", "GO", "ON", "UP", "NO")
RECT_WORDS = ("OK", "GO", "RUN", "SET", "YES", "TOP")
LABEL_WORDS = ("NAME", "AGE", "CITY", "NOTE")

CORPUS_SIZE = 56

REFERENCE_SCENES = [
    ("textbox", {"canvas": {"width": 120, "height": 80},
                 "widgets": [{"type": "textbox", "x": 20, "y": 30, "w": 70, "h": 18}]},
     ["TextBox"]),
    ("checkbox_unselected", {"canvas": {"width": 80, "height": 80},
                             "widgets": [{"type": "checkbox", "x": 30, "y": 30, "size": 16,
                                          "selected": False}]},
     ["CheckBoxUnselected"]),
    ("checkbox_selected", {"canvas": {"width": 80, "height": 80},
                           "widgets": [{"type": "checkbox", "x": 30, "y": 30, "size": 16,
                                        "selected": True}]},
     ["CheckBoxSelected"]),
    ("radio_unselected", {"canvas": {"width": 80, "height": 80},
                          "widgets": [{"type": "radio", "cx": 40, "cy": 40, "r": 8,
                                       "selected": False}]},
     ["RadioUnselected"]),
    ("radio_selected", {"canvas": {"width": 80, "height": 80},
                        "widgets": [{"type": "radio", "cx": 40, "cy": 40, "r": 8,
                                     "selected": True}]},
     ["RadioSelected"]),
    ("rect_button_small", {"canvas": {"width": 100, "height": 72},
                           "widgets": [{"type": "rectButton", "x": 20, "y": 24, "w": 46,
                                        "h": 22, "text": "GO"}]},
     ["RectButton"]),
    ("rect_button_large", {"canvas": {"width": 110, "height": 76},
                           "widgets": [{"type": "rectButton", "x": 16, "y": 22, "w": 64,
                                        "h": 26, "text": "SET"}]},
     ["RectButton"]),
    ("rect_button_square", {"canvas": {"width": 90, "height": 78},
                            "widgets": [{"type": "rectButton", "x": 24, "y": 24, "w": 36,
                                         "h": 26, "text": "OK"}]},
     ["RectButton"]),
    ("circ_button_small", {"canvas": {"width": 104, "height": 104},
                           "widgets": [{"type": "circButton", "cx": 52, "cy": 52, "r": 18,
                                        "text": "OK"}]},
     ["CircButton"]),
    ("circ_button_large", {"canvas": {"width": 110, "height": 110},
                           "widgets": [{"type": "circButton", "cx": 55, "cy": 55, "r": 20,
                                        "text": "UP"}]},
     ["CircButton"]),
    ("letters_name", {"canvas": {"width": 110, "height": 60},
                      "labels": [{"text": "NAME", "x": 20, "y": 40}]},
     ["Letters"]),
    ("letters_ab", {"canvas": {"width": 70, "height": 60},
                    "labels": [{"text": "AB", "x": 20, "y": 40}]},
     ["Letters"]),
    ("letters_age", {"canvas": {"width": 90, "height": 60},
                     "labels": [{"text": "AGE", "x": 20, "y": 40}]},
     ["Letters"]),
]

USECASE1 = {
    "name": "usecase1",
    "canvas": {"width": 300, "height": 150},
    "widgets": [
        {"type": "checkbox", "x": 40, "y": 30, "size": 16, "selected": False},
        {"type": "checkbox", "x": 40, "y": 78, "size": 16, "selected": True},
    ],
    "bindings": [
        {"event": "click", "positionDependent": True, "handler": "onCanvasClick"},
        {"event": "keyup", "positionDependent": False, "handler": "onCanvasKey"},
    ],
}

USECASE2 = {
    "name": "usecase2",
    "canvas": {"width": 360, "height": 140},
    "widgets": [
        {"type": "circButton", "cx": 70, "cy": 70, "r": 18, "text": "ON"},
        {"type": "circButton", "cx": 180, "cy": 70, "r": 18, "text": "GO"},
        {"type": "circButton", "cx": 290, "cy": 70, "r": 18, "text": "UP"},
    ],
    "bindings": [
        {"event": "click", "positionDependent": True, "handler": "onButtonClick"},
    ],
}


def _scene_widget(kind: str, rng: random.Random, x: int, y: int) -> tuple[dict, int, int]:
    """Build one widget of the given kind at (x, y); returns (widget, w, h)."""
    if kind == "textbox":
        w = rng.randrange(56, 92, 2)
        h = rng.randrange(14, 25, 2)
        return {"type": "textbox", "x": x, "y": y, "w": w, "h": h}, w, h
    if kind == "checkbox_unselected":
        size = rng.randrange(12, 23, 2)
        return {"type": "checkbox", "x": x, "y": y, "size": size, "selected": False}, size, size
    if kind == "checkbox_selected":
        size = rng.randrange(14, 21, 2)
        return {"type": "checkbox", "x": x, "y": y, "size": size, "selected": True}, size, size
    if kind in ("radio_unselected", "radio_selected"):
        r = rng.randrange(7, 10)
        selected = kind == "radio_selected"
        return (
            {"type": "radio", "cx": x + r, "cy": y + r, "r": r, "selected": selected},
            2 * r + 1,
            2 * r + 1,
        )
    if kind == "rect_button":
        text = rng.choice(RECT_WORDS)
        w = text_width(text) + rng.randrange(14, 26, 2)
        h = rng.randrange(22, 29, 2)
        return {"type": "rectButton", "x": x, "y": y, "w": w, "h": h, "text": text}, w, h
    if kind == "circ_button":
        r = rng.randrange(18, 21)
        text = rng.choice(BUTTON_WORDS)
        return (
            {"type": "circButton", "cx": x + r, "cy": y + r, "r": r, "text": text},
            2 * r + 1,
            2 * r + 1,
        )
    raise ValueError(kind)


WIDGET_KINDS = (
    "textbox",
    "checkbox_unselected",
    "checkbox_selected",
    "radio_unselected",
    "radio_selected",
    "rect_button",
    "circ_button",
)


def make_corpus_scene(index: int) -> dict:
    """One deterministic mixed scene; widgets in y-separated rows."""
    rng = random.Random(5000 + index)
    n_widgets = 1 + index % 6
    # round-robin base guarantees full class coverage across the corpus
    kinds = [WIDGET_KINDS[(index + k) % len(WIDGET_KINDS)] for k in range(n_widgets)]
    rng.shuffle(kinds)
    add_label = index % 3 == 0

    width = rng.randrange(300, 421, 10)
    widgets = []
    labels = []
    y = rng.randrange(12, 25)
    for kind in kinds:
        x = rng.randrange(14, width - 120)
        widget, bw, bh = _scene_widget(kind, rng, x, y)
        widgets.append(widget)
        y += bh + rng.randrange(12, 20)
    if add_label:
        text = rng.choice(LABEL_WORDS)
        lx = rng.randrange(14, width - text_width(text) - 10)
        labels.append({"text": text, "x": lx, "y": y + 16})
        y += 16 + 14
    height = y + 12

    bindings = []
    if index % 2 == 0:
        bindings.append({"event": "click", "positionDependent": True, "handler": f"onClick{index}"})
    if index % 4 == 0:
        bindings.append({"event": "keyup", "positionDependent": False, "handler": f"onKey{index}"})

    return {
        "name": f"scene_{index:03d}",
        "seed": 5000 + index,
        "canvas": {"width": width, "height": height},
        "widgets": widgets,
        "labels": labels,
        "bindings": bindings,
    }


def draw_degenerate(width: int = 300, height: int = 150) -> bytes:
    """Freehand non-UI content: curves and scribbles, no widget geometry."""
    c = CanvasRecorder(width, height)
    for x in range(8, width - 8):
        y = int(height / 2 + 28 * math.sin(x / 17.0) + 12 * math.sin(x / 5.0))
        if 2 <= y < height - 2:
            c.rgba[y, x] = (0, 0, 0, 255)
            c.rgba[y + 1, x] = (0, 0, 0, 255)
    for t in range(700):
        ang = t / 40.0
        r = 3 + t / 22.0
        x = int(width * 0.3 + r * math.cos(ang))
        y = int(height * 0.36 + r * math.sin(ang))
        if 2 <= x < width - 2 and 2 <= y < height - 2:
            c.rgba[y, x] = (0, 0, 0, 255)
    c.arc(int(width * 0.78), int(height * 0.3), 3)
    c.arc(int(width * 0.85), int(height * 0.62), 4)
    return c.png_bytes()


def _write_triple(directory: Path, name: str, spec: dict) -> list[Path]:
    png, trace, expect = render_scene(spec)
    paths = []
    png_path = directory / f"{name}.png"
    png_path.write_bytes(png)
    paths.append(png_path)
    trace_path = directory / f"{name}.trace.json"
    trace_path.write_text(json.dumps(trace, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    paths.append(trace_path)
    expect_path = directory / f"{name}.expect.json"
    expect_path.write_text(json.dumps(expect, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    paths.append(expect_path)
    spec_path = directory / f"{name}.scene.json"
    spec_path.write_text(json.dumps(spec, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    paths.append(spec_path)
    return paths


def main() -> int:
    from canvas_access.cbir import base_to_json
    from canvas_access.pipeline import build_base_from_dir

    if FIXTURES.exists():
        shutil.rmtree(FIXTURES)
    (FIXTURES / "references").mkdir(parents=True)
    (FIXTURES / "corpus").mkdir()

    written: list[Path] = []

    annotations = {"scenes": []}
    for name, spec, classes in REFERENCE_SCENES:
        png, _trace, _expect = render_scene({"name": name, **spec})
        path = FIXTURES / "references" / f"{name}.png"
        path.write_bytes(png)
        written.append(path)
        annotations["scenes"].append({"image": f"{name}.png", "classes": classes})
    ann_path = FIXTURES / "references" / "annotations.json"
    ann_path.write_text(json.dumps(annotations, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    written.append(ann_path)

    base = build_base_from_dir(FIXTURES / "references", ann_path)
    base_path = FIXTURES / "feature_base.json"
    base_path.write_text(base_to_json(base), encoding="utf-8")
    written.append(base_path)
    package_base = ROOT / "src" / "canvas_access" / "data" / "feature_base.json"
    package_base.parent.mkdir(parents=True, exist_ok=True)
    package_base.write_text(base_to_json(base), encoding="utf-8")

    written += _write_triple(FIXTURES, "usecase1", USECASE1)
    written += _write_triple(FIXTURES, "usecase2", USECASE2)

    degenerate = FIXTURES / "degenerate.png"
    degenerate.write_bytes(draw_degenerate())
    written.append(degenerate)

    for i in range(CORPUS_SIZE):
        written += _write_triple(FIXTURES / "corpus", f"scene_{i:03d}", make_corpus_scene(i))

    manifest = {
        "version": 1,
        "entries": [
            {
                "path": str(p.relative_to(FIXTURES)),
                "sha256": hashlib.sha256(p.read_bytes()).hexdigest(),
            }
            for p in sorted(written)
        ],
    }
    (FIXTURES / "manifest.json").write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(written) + 1} fixture files under {FIXTURES}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
