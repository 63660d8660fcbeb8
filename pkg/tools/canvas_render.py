"""Deterministic software rasterizer for the canvas-2D call subset fixtures use.

Every draw call both rasterizes (no anti-aliasing, hard 1-px strokes) and
records a v1 trace command, so PNG and trace stay in sync by construction.
Text uses the 5x7 bitmap font at scale 2; fillText's y argument is the
baseline, glyphs render above it.
"""

from __future__ import annotations

import io
import math

import numpy as np
from PIL import Image

from .font5x7 import ADVANCE, GLYPH_H, GLYPHS, SCALE, text_width

BLACK = (0, 0, 0, 255)
WHITE = (255, 255, 255, 255)


class CanvasRecorder:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.rgba = np.empty((height, width, 4), dtype=np.uint8)
        self.rgba[:] = WHITE
        self.commands: list[dict] = []
        self.bindings: list[dict] = []
        self._seq = 0

    def _record(self, kind: str, **args) -> None:
        self._seq += 1
        self.commands.append({"seq": self._seq, "kind": kind, **args})

    def _set(self, x: int, y: int, color=BLACK) -> None:
        if 0 <= x < self.width and 0 <= y < self.height:
            self.rgba[y, x] = color

    # canvas API subset -----------------------------------------------------

    def set_font(self, font: str = "10px monospace") -> None:
        self._record("setFont", font=font)

    def set_text_align(self, align: str = "left") -> None:
        self._record("setTextAlign", align=align)

    def fill_rect(self, x: int, y: int, w: int, h: int, color=BLACK) -> None:
        self._record("fillRect", x=x, y=y, w=w, h=h)
        self.rgba[max(0, y) : y + h, max(0, x) : x + w] = color

    def stroke_rect(self, x: int, y: int, w: int, h: int, color=BLACK) -> None:
        self._record("strokeRect", x=x, y=y, w=w, h=h)
        for px in range(x, x + w):
            self._set(px, y, color)
            self._set(px, y + h - 1, color)
        for py in range(y, y + h):
            self._set(x, py, color)
            self._set(x + w - 1, py, color)

    def arc(self, cx: int, cy: int, r: int, start: float = 0.0,
            end: float = 2 * math.pi, color=BLACK) -> None:
        """Full-circle outline via the midpoint algorithm (fixtures only ever
        draw complete circles)."""
        self._record("arc", cx=cx, cy=cy, r=r, startAngle=start, endAngle=end)
        x, y, d = 0, r, 1 - r
        while x <= y:
            for px, py in (
                (x, y), (y, x), (-x, y), (-y, x),
                (x, -y), (y, -x), (-x, -y), (-y, -x),
            ):
                self._set(cx + px, cy + py, color)
            x += 1
            if d < 0:
                d += 2 * x + 1
            else:
                y -= 1
                d += 2 * (x - y) + 1

    def _draw_glyphs(self, text: str, x: int, y: int, color=BLACK) -> None:
        top = y - GLYPH_H * SCALE
        for i, ch in enumerate(text.upper()):
            if ch == " ":
                continue
            glyph = GLYPHS[ch]
            gx = x + i * ADVANCE
            for row, line in enumerate(glyph):
                for col, bit in enumerate(line):
                    if bit == "#":
                        for sy in range(SCALE):
                            for sx in range(SCALE):
                                self._set(
                                    gx + col * SCALE + sx,
                                    top + row * SCALE + sy,
                                    color,
                                )

    def fill_text(self, text: str, x: int, y: int, color=BLACK) -> None:
        self._record("fillText", text=text, x=x, y=y)
        self._draw_glyphs(text, x, y, color)

    def stroke_text(self, text: str, x: int, y: int, color=BLACK) -> None:
        self._record("strokeText", text=text, x=x, y=y)
        self._draw_glyphs(text, x, y, color)

    def add_binding(self, event: str, position_dependent: bool, handler: str) -> None:
        self.bindings.append(
            {"event": event, "positionDependent": position_dependent, "handler": handler}
        )

    # outputs ---------------------------------------------------------------

    def trace_doc(self) -> dict:
        return {
            "version": 1,
            "canvas": {"width": self.width, "height": self.height},
            "commands": self.commands,
            "bindings": self.bindings,
        }

    def png_bytes(self) -> bytes:
        img = Image.fromarray(self.rgba, mode="RGBA")
        out = io.BytesIO()
        img.save(out, format="PNG", optimize=False)
        return out.getvalue()

    def pixel_buffer(self):
        from canvas_access.raster import PixelBuffer

        return PixelBuffer(self.width, self.height, self.rgba)


# widget drawing ------------------------------------------------------------

CHECK_MARK = 6  # side of the filled inner square marking a selected checkbox
RADIO_DOT = 4  # side of the filled square marking a selected radio


def draw_textbox(c: CanvasRecorder, x: int, y: int, w: int, h: int) -> None:
    c.stroke_rect(x, y, w, h)


def draw_checkbox(c: CanvasRecorder, x: int, y: int, size: int, selected: bool) -> None:
    c.stroke_rect(x, y, size, size)
    if selected:
        m = (size - CHECK_MARK) // 2
        c.fill_rect(x + m, y + m, CHECK_MARK, CHECK_MARK)


def draw_radio(c: CanvasRecorder, cx: int, cy: int, r: int, selected: bool) -> None:
    c.arc(cx, cy, r)
    if selected:
        c.fill_rect(cx - RADIO_DOT // 2, cy - RADIO_DOT // 2, RADIO_DOT, RADIO_DOT)


def centered_text_origin(text: str, x: int, y: int, w: int, h: int) -> tuple[int, int]:
    tx = x + (w - text_width(text)) // 2
    ty = y + h // 2 + GLYPH_H * SCALE // 2
    return tx, ty


def draw_rect_button(c: CanvasRecorder, x: int, y: int, w: int, h: int, text: str) -> None:
    c.stroke_rect(x, y, w, h)
    tx, ty = centered_text_origin(text, x, y, w, h)
    c.fill_text(text, tx, ty)


def draw_circ_button(c: CanvasRecorder, cx: int, cy: int, r: int, text: str) -> None:
    c.arc(cx, cy, r)
    tx = cx - text_width(text) // 2
    ty = cy + GLYPH_H * SCALE // 2
    c.fill_text(text, tx, ty)


def draw_label(c: CanvasRecorder, text: str, x: int, y: int) -> None:
    c.fill_text(text, x, y)
