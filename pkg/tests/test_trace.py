import json

import pytest

from canvas_access.trace import (
    CanvasTrace,
    DrawCommand,
    EventBinding,
    TraceParseError,
    commands_near,
    parse_trace,
    serialize_trace,
)


def doc(**overrides) -> str:
    base = {"version": 1, "canvas": {"width": 300, "height": 150}, "commands": [], "bindings": []}
    base.update(overrides)
    return json.dumps(base)


class TestParseTrace:
    def test_minimal(self):
        trace = parse_trace(doc())
        assert trace.canvas_width == 300
        assert trace.canvas_height == 150
        assert trace.commands == []
        assert trace.bindings == []

    def test_stroke_rect(self):
        trace = parse_trace(doc(commands=[{"seq": 1, "kind": "strokeRect", "x": 10, "y": 10, "w": 20, "h": 20}]))
        assert len(trace.commands) == 1
        cmd = trace.commands[0]
        assert cmd.kind == "strokeRect"
        assert cmd.arg("w") == 20
        assert cmd.anchor() == (10, 10)

    def test_negative_rect_width_names_path(self):
        with pytest.raises(TraceParseError, match=r"\$\.commands\[0\]\.w"):
            parse_trace(doc(commands=[{"seq": 1, "kind": "strokeRect", "x": 0, "y": 0, "w": -5, "h": 5}]))

    def test_arc_and_text_anchors(self):
        trace = parse_trace(doc(commands=[
            {"seq": 1, "kind": "arc", "cx": 50, "cy": 60, "r": 10, "startAngle": 0, "endAngle": 6.283},
            {"seq": 2, "kind": "fillText", "text": "OK", "x": 44, "y": 66},
            {"seq": 3, "kind": "setFont", "font": "10px monospace"},
        ]))
        assert trace.commands[0].anchor() == (50, 60)
        assert trace.commands[1].anchor() == (44, 66)
        assert trace.commands[2].anchor() is None

    def test_unknown_kind_skipped_with_warning(self):
        trace = parse_trace(doc(commands=[
            {"seq": 1, "kind": "bezierCurveTo", "x": 1},
            {"seq": 2, "kind": "fillRect", "x": 0, "y": 0, "w": 5, "h": 5},
        ]))
        assert len(trace.commands) == 1
        assert len(trace.warnings) == 1
        assert "bezierCurveTo" in trace.warnings[0]

    def test_seq_must_increase(self):
        with pytest.raises(TraceParseError, match="strictly increasing"):
            parse_trace(doc(commands=[
                {"seq": 2, "kind": "fillRect", "x": 0, "y": 0, "w": 5, "h": 5},
                {"seq": 2, "kind": "fillRect", "x": 9, "y": 9, "w": 5, "h": 5},
            ]))

    def test_missing_field_path(self):
        with pytest.raises(TraceParseError, match=r"\$\.commands\[0\]\.h"):
            parse_trace(doc(commands=[{"seq": 1, "kind": "fillRect", "x": 0, "y": 0, "w": 5}]))

    def test_bad_version(self):
        with pytest.raises(TraceParseError, match=r"\$\.version"):
            parse_trace(doc(version=7))

    def test_malformed_json(self):
        with pytest.raises(TraceParseError, match="invalid JSON"):
            parse_trace("{")

    def test_nonpositive_canvas(self):
        with pytest.raises(TraceParseError):
            parse_trace(doc(canvas={"width": 0, "height": 10}))

    def test_arc_radius_validation(self):
        with pytest.raises(TraceParseError, match=r"\.r"):
            parse_trace(doc(commands=[{"seq": 1, "kind": "arc", "cx": 0, "cy": 0, "r": 0,
                                       "startAngle": 0, "endAngle": 1}]))

    def test_binding_parse(self):
        trace = parse_trace(doc(bindings=[{"event": "click", "positionDependent": True, "handler": "h"}]))
        assert trace.bindings == [EventBinding("click", True, "h")]

    def test_binding_validation(self):
        with pytest.raises(TraceParseError, match=r"\$\.bindings\[0\]"):
            parse_trace(doc(bindings=[{"event": "", "positionDependent": True, "handler": "h"}]))

    def test_text_align_whitelist(self):
        with pytest.raises(TraceParseError, match="align"):
            parse_trace(doc(commands=[{"seq": 1, "kind": "setTextAlign", "align": "middle"}]))


class TestSerializeRoundTrip:
    def sample(self) -> CanvasTrace:
        return parse_trace(doc(
            commands=[
                {"seq": 1, "kind": "setFont", "font": "14px monospace"},
                {"seq": 2, "kind": "strokeRect", "x": 10, "y": 12, "w": 30, "h": 20},
                {"seq": 5, "kind": "fillText", "text": "GO", "x": 15, "y": 26},
            ],
            bindings=[{"event": "click", "positionDependent": True, "handler": "onClick"}],
        ))

    def test_fixed_point(self):
        trace = self.sample()
        text = serialize_trace(trace)
        again = parse_trace(text)
        assert serialize_trace(again) == text
        assert again.commands == trace.commands
        assert again.bindings == trace.bindings


class TestCommandsNear:
    def trace(self) -> CanvasTrace:
        return parse_trace(doc(commands=[
            {"seq": 1, "kind": "fillText", "text": "A", "x": 15, "y": 20},
            {"seq": 2, "kind": "fillText", "text": "B", "x": 100, "y": 100},
            {"seq": 3, "kind": "arc", "cx": 35, "cy": 20, "r": 4, "startAngle": 0, "endAngle": 6.0},
        ]))

    def test_containment(self):
        hits = commands_near(self.trace(), (10, 10, 30, 30))
        assert [c.seq for c in hits] == [1, 3]

    def test_exclusion(self):
        hits = commands_near(self.trace(), (10, 10, 30, 30))
        assert all(c.arg("x") != 100 for c in hits if c.kind == "fillText")

    def test_expanded_border_inclusive(self):
        trace = parse_trace(doc(commands=[
            {"seq": 1, "kind": "arc", "cx": 35, "cy": 20, "r": 2, "startAngle": 0, "endAngle": 6.0},
        ]))
        hits = commands_near(trace, (10, 10, 30, 30))  # expanded max x = 35
        assert len(hits) == 1

    def test_subsequence_order_preserved(self):
        hits = commands_near(self.trace(), (0, 0, 200, 200))
        assert [c.seq for c in hits] == [1, 2, 3]


class TestDrawCommand:
    def test_missing_arg_raises(self):
        cmd = DrawCommand(1, "fillRect", (("x", 1), ("y", 2), ("w", 3), ("h", 4)))
        with pytest.raises(KeyError):
            cmd.arg("r")
