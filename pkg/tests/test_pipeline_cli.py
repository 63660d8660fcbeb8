import io
import json
from pathlib import Path

import pytest
from PIL import Image

from canvas_access.cbir import ConfigurationError
from canvas_access.cli import main
from canvas_access.pipeline import (
    EXIT_BASE,
    EXIT_IMAGE,
    EXIT_OK,
    EXIT_TRACE,
    PipelineConfig,
    build_base_from_dir,
    load_default_base,
    run,
)


def blank_png(path: Path, width=200, height=120):
    img = Image.new("RGBA", (width, height), (255, 255, 255, 255))
    out = io.BytesIO()
    img.save(out, format="PNG")
    path.write_bytes(out.getvalue())
    return path


class TestPipelineConfig:
    def test_defaults(self):
        config = PipelineConfig()
        assert config.zero_crossing_threshold == 8.0
        assert config.distance_p == 2
        assert config.rejection_cutoff == 0.35
        assert config.emit_formats == ("html", "json")

    def test_empty_emit_formats_rejected(self):
        with pytest.raises(ConfigurationError):
            PipelineConfig(emit_formats=())

    def test_bad_p_rejected(self):
        with pytest.raises(ConfigurationError):
            PipelineConfig(distance_p=3)


class TestRun:
    def test_usecase1_from_fixtures(self, fixtures_dir, tmp_path):
        result = run(
            fixtures_dir / "usecase1.png",
            fixtures_dir / "usecase1.trace.json",
            PipelineConfig(feature_base_path=fixtures_dir / "feature_base.json"),
            out_dir=tmp_path,
        )
        assert result.exit_code == EXIT_OK
        assert len(result.document.nodes) == 2
        names = sorted(n.widget_class.value for n in result.document.nodes)
        assert names == ["CheckBoxSelected", "CheckBoxUnselected"]
        assert (tmp_path / "usecase1.a11y.html").exists()
        assert (tmp_path / "usecase1.a11y.json").exists()

    def test_blank_image_is_empty_success(self, tmp_path, fixtures_dir):
        png = blank_png(tmp_path / "blank.png")
        result = run(
            png,
            None,
            PipelineConfig(feature_base_path=fixtures_dir / "feature_base.json"),
            out_dir=tmp_path,
        )
        assert result.exit_code == EXIT_OK
        assert result.document.nodes == []
        payload = json.loads((tmp_path / "blank.a11y.json").read_text())
        assert payload["nodes"] == []

    def test_missing_image_exit_2(self, tmp_path):
        result = run(tmp_path / "missing.png", None, PipelineConfig())
        assert result.exit_code == EXIT_IMAGE

    def test_undecodable_image_exit_2(self, tmp_path, fixtures_dir):
        bad = tmp_path / "bad.png"
        bad.write_bytes(b"not a png at all")
        result = run(bad, None, PipelineConfig(feature_base_path=fixtures_dir / "feature_base.json"))
        assert result.exit_code == EXIT_IMAGE

    def test_invalid_trace_exit_3(self, tmp_path, fixtures_dir):
        png = blank_png(tmp_path / "img.png")
        bad = tmp_path / "trace.json"
        bad.write_text('{"version": 9}')
        result = run(png, bad, PipelineConfig(feature_base_path=fixtures_dir / "feature_base.json"))
        assert result.exit_code == EXIT_TRACE

    def test_missing_base_exit_4(self, tmp_path):
        png = blank_png(tmp_path / "img.png")
        result = run(png, None, PipelineConfig(feature_base_path=tmp_path / "nope.json"))
        assert result.exit_code == EXIT_BASE

    def test_outputs_beside_image_by_default(self, tmp_path, fixtures_dir):
        png = blank_png(tmp_path / "img.png")
        result = run(png, None, PipelineConfig(feature_base_path=fixtures_dir / "feature_base.json"))
        assert result.exit_code == EXIT_OK
        assert (tmp_path / "img.a11y.html").exists()

    def test_deterministic_json(self, fixtures_dir, tmp_path):
        config = PipelineConfig(feature_base_path=fixtures_dir / "feature_base.json")
        out1 = tmp_path / "a"
        out2 = tmp_path / "b"
        run(fixtures_dir / "usecase2.png", fixtures_dir / "usecase2.trace.json", config, out1)
        run(fixtures_dir / "usecase2.png", fixtures_dir / "usecase2.trace.json", config, out2)
        assert (out1 / "usecase2.a11y.json").read_bytes() == (out2 / "usecase2.a11y.json").read_bytes()
        assert (out1 / "usecase2.a11y.html").read_bytes() == (out2 / "usecase2.a11y.html").read_bytes()


class TestDefaultBase:
    def test_packaged_base_loads(self):
        base = load_default_base()
        assert len(base.entries) >= 8


class TestBuildBaseFromDir:
    def test_matches_vendored_base(self, fixtures_dir):
        base = build_base_from_dir(
            fixtures_dir / "references", fixtures_dir / "references" / "annotations.json"
        )
        from canvas_access.cbir import base_to_json

        assert base_to_json(base) == (fixtures_dir / "feature_base.json").read_text()


class TestCliMain:
    def test_recognition_run(self, fixtures_dir, tmp_path, capsys):
        code = main([
            "--image", str(fixtures_dir / "usecase1.png"),
            "--trace", str(fixtures_dir / "usecase1.trace.json"),
            "--base", str(fixtures_dir / "feature_base.json"),
            "--out", str(tmp_path),
        ])
        assert code == EXIT_OK
        assert "recognized 2 widget" in capsys.readouterr().out

    def test_missing_image_flag(self, capsys):
        assert main([]) == EXIT_IMAGE

    def test_json_only_emit(self, fixtures_dir, tmp_path):
        code = main([
            "--image", str(fixtures_dir / "usecase2.png"),
            "--base", str(fixtures_dir / "feature_base.json"),
            "--out", str(tmp_path),
            "--emit", "json",
        ])
        assert code == EXIT_OK
        assert (tmp_path / "usecase2.a11y.json").exists()
        assert not (tmp_path / "usecase2.a11y.html").exists()

    def test_nonexistent_image_exit_code(self, tmp_path, capsys):
        assert main(["--image", str(tmp_path / "x.png")]) == EXIT_IMAGE

    def test_build_base_mode(self, fixtures_dir, tmp_path, capsys):
        out = tmp_path / "base.json"
        code = main([
            "--build-base", str(fixtures_dir / "references"),
            "--annotations", str(fixtures_dir / "references" / "annotations.json"),
            "--base", str(out),
        ])
        assert code == EXIT_OK
        assert out.exists()
        # deterministic rebuild
        out2 = tmp_path / "base2.json"
        main([
            "--build-base", str(fixtures_dir / "references"),
            "--annotations", str(fixtures_dir / "references" / "annotations.json"),
            "--base", str(out2),
        ])
        assert out.read_bytes() == out2.read_bytes()

    def test_build_base_missing_coverage(self, fixtures_dir, tmp_path, capsys):
        ann = json.loads((fixtures_dir / "references" / "annotations.json").read_text())
        ann["scenes"] = [s for s in ann["scenes"] if "Letters" not in s["classes"]]
        partial = tmp_path / "partial.json"
        partial.write_text(json.dumps(ann))
        code = main([
            "--build-base", str(fixtures_dir / "references"),
            "--annotations", str(partial),
            "--base", str(tmp_path / "base.json"),
        ])
        assert code == EXIT_BASE
        assert "Letters" in capsys.readouterr().err

    def test_build_base_requires_annotations(self, fixtures_dir, capsys):
        assert main(["--build-base", str(fixtures_dir / "references")]) == EXIT_BASE

    def test_p_flag_accepts_inf(self, fixtures_dir, tmp_path):
        code = main([
            "--image", str(fixtures_dir / "usecase1.png"),
            "--base", str(fixtures_dir / "feature_base.json"),
            "--out", str(tmp_path),
            "--p", "inf",
            "--emit", "json",
        ])
        assert code == EXIT_OK
