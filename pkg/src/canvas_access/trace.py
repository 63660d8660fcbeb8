"""Canvas draw-command trace: schema v1 parsing, serialization and queries.

The trace file stands in for observing the page's Canvas 2D API calls: every
rect/arc/text call with its arguments in order, plus the event bindings the
page had registered on the canvas element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = [
    "DrawCommand",
    "EventBinding",
    "CanvasTrace",
    "TraceParseError",
    "KNOWN_KINDS",
    "parse_trace",
    "serialize_trace",
    "commands_near",
]

KNOWN_KINDS = (
    "fillRect",
    "strokeRect",
    "arc",
    "fillText",
    "strokeText",
    "setFont",
    "setTextAlign",
)

_TEXT_ALIGNS = ("left", "right", "center", "start", "end")

# required argument fields (besides seq/kind) per command kind
_ARG_FIELDS = {
    "fillRect": ("x", "y", "w", "h"),
    "strokeRect": ("x", "y", "w", "h"),
    "arc": ("cx", "cy", "r", "startAngle", "endAngle"),
    "fillText": ("text", "x", "y"),
    "strokeText": ("text", "x", "y"),
    "setFont": ("font",),
    "setTextAlign": ("align",),
}


class TraceParseError(ValueError):
    """Schema violation; message carries the path to the offending node."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{message} at {path}")
        self.path = path


@dataclass(frozen=True)
class DrawCommand:
    seq: int
    kind: str
    args: tuple[tuple[str, object], ...]  # (name, value) pairs in field order

    def arg(self, name: str):
        for key, value in self.args:
            if key == name:
                return value
        raise KeyError(name)

    def anchor(self) -> tuple[float, float] | None:
        """Rect origin, arc center or text origin; None for property sets."""
        if self.kind in ("fillRect", "strokeRect", "fillText", "strokeText"):
            return (self.arg("x"), self.arg("y"))
        if self.kind == "arc":
            return (self.arg("cx"), self.arg("cy"))
        return None


@dataclass(frozen=True)
class EventBinding:
    event_name: str
    position_dependent: bool
    handler_ref: str


@dataclass
class CanvasTrace:
    canvas_width: int
    canvas_height: int
    commands: list[DrawCommand] = field(default_factory=list)
    bindings: list[EventBinding] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        raise TraceParseError(f"missing required field {key!r}", f"{path}.{key}")
    return obj[key]


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TraceParseError(f"expected a number, got {value!r}", path)
    return value


def parse_trace(text: str) -> CanvasTrace:
    """Parse and validate a v1 trace document.

    Unknown command kinds are skipped with a recorded warning; structural
    violations (missing fields, non-positive sizes) are errors.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TraceParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise TraceParseError("trace document must be an object", "$")
    version = doc.get("version")
    if version != 1:
        raise TraceParseError(f"unsupported trace version {version!r}", "$.version")
    canvas = _require(doc, "canvas", "$")
    width = _number(_require(canvas, "width", "$.canvas"), "$.canvas.width")
    height = _number(_require(canvas, "height", "$.canvas"), "$.canvas.height")
    if width < 1 or height < 1:
        raise TraceParseError("canvas dimensions must be >= 1", "$.canvas")

    trace = CanvasTrace(int(width), int(height))
    prev_seq = None
    for i, raw in enumerate(doc.get("commands", [])):
        path = f"$.commands[{i}]"
        if not isinstance(raw, dict):
            raise TraceParseError("command must be an object", path)
        seq = _require(raw, "seq", path)
        if not isinstance(seq, int) or isinstance(seq, bool):
            raise TraceParseError("seq must be an integer", f"{path}.seq")
        if prev_seq is not None and seq <= prev_seq:
            raise TraceParseError(
                f"seq {seq} not strictly increasing after {prev_seq}", f"{path}.seq"
            )
        prev_seq = seq
        kind = _require(raw, "kind", path)
        if kind not in KNOWN_KINDS:
            trace.warnings.append(f"skipped unknown command kind {kind!r} at {path}")
            continue
        args = []
        for name in _ARG_FIELDS[kind]:
            value = _require(raw, name, path)
            if name in ("text", "font", "align"):
                if not isinstance(value, str):
                    raise TraceParseError(f"{name} must be a string", f"{path}.{name}")
            else:
                value = _number(value, f"{path}.{name}")
            args.append((name, value))
        argmap = dict(args)
        if kind in ("fillRect", "strokeRect") and (argmap["w"] <= 0 or argmap["h"] <= 0):
            raise TraceParseError("rect width/height must be positive", f"{path}.w")
        if kind == "arc" and argmap["r"] <= 0:
            raise TraceParseError("arc radius must be positive", f"{path}.r")
        if kind == "setTextAlign" and argmap["align"] not in _TEXT_ALIGNS:
            raise TraceParseError(
                f"align must be one of {_TEXT_ALIGNS}", f"{path}.align"
            )
        trace.commands.append(DrawCommand(seq=seq, kind=kind, args=tuple(args)))

    for i, raw in enumerate(doc.get("bindings", [])):
        path = f"$.bindings[{i}]"
        if not isinstance(raw, dict):
            raise TraceParseError("binding must be an object", path)
        event = _require(raw, "event", path)
        if not isinstance(event, str) or not event:
            raise TraceParseError("event must be a nonempty string", f"{path}.event")
        dependent = _require(raw, "positionDependent", path)
        if not isinstance(dependent, bool):
            raise TraceParseError("positionDependent must be a boolean", f"{path}.positionDependent")
        handler = _require(raw, "handler", path)
        if not isinstance(handler, str):
            raise TraceParseError("handler must be a string", f"{path}.handler")
        trace.bindings.append(EventBinding(event, dependent, handler))
    return trace


def serialize_trace(trace: CanvasTrace) -> str:
    """Canonical JSON for a trace; parse(serialize(t)) == t (minus warnings)."""
    doc = {
        "version": 1,
        "canvas": {"width": trace.canvas_width, "height": trace.canvas_height},
        "commands": [
            {"seq": c.seq, "kind": c.kind, **dict(c.args)} for c in trace.commands
        ],
        "bindings": [
            {
                "event": b.event_name,
                "positionDependent": b.position_dependent,
                "handler": b.handler_ref,
            }
            for b in trace.bindings
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def commands_near(
    trace: CanvasTrace, bbox: tuple[int, int, int, int], pad: int = 5
) -> list[DrawCommand]:
    """Commands whose anchor lies within the bbox expanded by pad (inclusive)."""
    x0, y0, x1, y1 = bbox
    hits = []
    for cmd in trace.commands:
        anchor = cmd.anchor()
        if anchor is None:
            continue
        ax, ay = anchor
        if x0 - pad <= ax <= x1 + pad and y0 - pad <= ay <= y1 + pad:
            hits.append(cmd)
    return hits
