"""End-to-end pipeline: configuration, stage wiring and file I/O.

One invocation processes one canvas snapshot: decode the raster, recognize
widget regions, match trace text and bindings, and write the accessible
document. Recognition failures degrade to diagnostics; only infrastructure
problems (missing files, bad trace, unusable feature base) are errors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .cbir import (
    ConfigurationError,
    FeatureBase,
    WidgetClass,
    base_from_json,
    base_to_json,
    build_feature_base,
    classify,
)
from .emit import (
    AccessibleDocument,
    Diagnostics,
    assign_tab_indices,
    classify_or_reject,
    emit_html,
    emit_json,
    make_node,
    map_bindings,
)
from .raster import DecodeError, PixelBuffer, decode_image
from .scene import analyze_scene
from .textmap import resolve_text, unresolved_letters
from .trace import CanvasTrace, TraceParseError, parse_trace

__all__ = [
    "PipelineConfig",
    "RunResult",
    "EXIT_OK",
    "EXIT_IMAGE",
    "EXIT_TRACE",
    "EXIT_BASE",
    "recognize",
    "run",
    "build_base_from_dir",
    "load_default_base",
]

EXIT_OK = 0
EXIT_IMAGE = 2
EXIT_TRACE = 3
EXIT_BASE = 4


@dataclass
class PipelineConfig:
    zero_crossing_threshold: float = 8.0
    distance_p: float = 2
    rejection_cutoff: float = 0.35
    feature_base_path: Path | None = None
    emit_formats: tuple[str, ...] = ("html", "json")

    def __post_init__(self):
        if self.zero_crossing_threshold < 0:
            raise ConfigurationError("zero-crossing threshold must be nonnegative")
        if self.distance_p not in (1, 2, math.inf):
            raise ConfigurationError("p must be 1, 2 or inf")
        if self.rejection_cutoff <= 0:
            raise ConfigurationError("rejection cutoff must be positive")
        if not self.emit_formats:
            raise ConfigurationError("at least one emit format is required")
        for fmt in self.emit_formats:
            if fmt not in ("html", "json"):
                raise ConfigurationError(f"unknown emit format {fmt!r}")


@dataclass
class RunResult:
    exit_code: int
    outputs: list[Path] = field(default_factory=list)
    message: str = ""
    document: AccessibleDocument | None = None
    diagnostics: Diagnostics | None = None


def recognize(
    buf: PixelBuffer,
    trace: CanvasTrace | None,
    base: FeatureBase,
    config: PipelineConfig | None = None,
) -> tuple[AccessibleDocument, Diagnostics]:
    """Recognize widgets in a decoded snapshot and build the document."""
    config = config or PipelineConfig()
    analysis = analyze_scene(buf, config.zero_crossing_threshold)
    diagnostics = Diagnostics()
    if trace is not None:
        diagnostics.warnings.extend(trace.warnings)

    nodes = []
    for region, vector in zip(analysis.candidates, analysis.vectors):
        result = classify(vector, base, config.distance_p)
        accepted = classify_or_reject(result, config.rejection_cutoff)
        if accepted is None or accepted is WidgetClass.LETTERS:
            diagnostics.rejected.append(
                {
                    "bbox": list(region.bbox),
                    "nearestClass": result.widget_class.value,
                    "distance": round(result.distance, 6),
                }
            )
            continue
        nodes.append(make_node(region, accepted))

    nodes = assign_tab_indices(nodes)
    for node in nodes:
        node.id = f"elem{node.tab_index}"

    standalone = []
    if trace is not None:
        nodes = map_bindings(trace, nodes)
        assignments = resolve_text(analysis.dark_regions, trace, nodes)
        by_id = {node.id: node for node in nodes}
        for assignment in assignments:
            if assignment.role == "value" and assignment.target in by_id:
                by_id[assignment.target].value = assignment.text
            else:
                standalone.append(assignment)
        diagnostics.unresolved_letters = [
            r.bbox
            for r in unresolved_letters(
                analysis.dark_regions, trace, [n.bbox for n in nodes]
            )
        ]
    elif analysis.dark_regions:
        diagnostics.unresolved_letters = [r.bbox for r in analysis.dark_regions]

    doc = AccessibleDocument(
        width=buf.width, height=buf.height, nodes=nodes, standalone_labels=standalone
    )
    return doc, diagnostics


def load_default_base() -> FeatureBase:
    """The feature base shipped as package data."""
    ref = resources.files("canvas_access").joinpath("data/feature_base.json")
    try:
        text = ref.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigurationError(
            "no packaged feature base; pass --base or rebuild with --build-base"
        ) from None
    return base_from_json(text)


def _load_base(config: PipelineConfig) -> FeatureBase:
    if config.feature_base_path is not None:
        path = Path(config.feature_base_path)
        if not path.exists():
            raise ConfigurationError(f"feature base not found: {path}")
        return base_from_json(path.read_text(encoding="utf-8"))
    return load_default_base()


def run(
    image_path: str | Path,
    trace_path: str | Path | None = None,
    config: PipelineConfig | None = None,
    out_dir: str | Path | None = None,
) -> RunResult:
    """Process one snapshot; returns outputs and a CLI-style exit code."""
    config = config or PipelineConfig()
    image_path = Path(image_path)
    if not image_path.exists():
        return RunResult(EXIT_IMAGE, message=f"image not found: {image_path}")
    try:
        buf = decode_image(image_path.read_bytes())
    except DecodeError as exc:
        return RunResult(EXIT_IMAGE, message=f"cannot decode {image_path}: {exc}")

    trace = None
    if trace_path is not None:
        trace_path = Path(trace_path)
        if not trace_path.exists():
            return RunResult(EXIT_TRACE, message=f"trace not found: {trace_path}")
        try:
            trace = parse_trace(trace_path.read_text(encoding="utf-8"))
        except TraceParseError as exc:
            return RunResult(EXIT_TRACE, message=f"invalid trace {trace_path}: {exc}")

    try:
        base = _load_base(config)
    except ConfigurationError as exc:
        return RunResult(EXIT_BASE, message=str(exc))

    doc, diagnostics = recognize(buf, trace, base, config)

    target_dir = Path(out_dir) if out_dir is not None else image_path.parent
    target_dir.mkdir(parents=True, exist_ok=True)
    stem = image_path.stem
    outputs = []
    if "html" in config.emit_formats:
        path = target_dir / f"{stem}.a11y.html"
        path.write_text(emit_html(doc), encoding="utf-8")
        outputs.append(path)
    if "json" in config.emit_formats:
        path = target_dir / f"{stem}.a11y.json"
        path.write_text(emit_json(doc, diagnostics), encoding="utf-8")
        outputs.append(path)
    return RunResult(EXIT_OK, outputs=outputs, document=doc, diagnostics=diagnostics)


def build_base_from_dir(
    reference_dir: str | Path,
    annotations_path: str | Path,
    zero_crossing_threshold: float = 8.0,
) -> FeatureBase:
    """Build a feature base from a directory of annotated reference scenes.

    The annotations file maps each scene image to its widget classes in
    first-encounter order:
      {"scenes": [{"image": "textbox.png", "classes": ["TextBox"]}, ...]}
    """
    reference_dir = Path(reference_dir)
    annotations_path = Path(annotations_path)
    spec = json.loads(annotations_path.read_text(encoding="utf-8"))
    by_value = {cls.value: cls for cls in WidgetClass}
    scenes = []
    for entry in spec["scenes"]:
        image = reference_dir / entry["image"]
        classes = []
        for name in entry["classes"]:
            if name not in by_value:
                raise ConfigurationError(f"unknown widget class {name!r} in annotations")
            classes.append(by_value[name])
        buf = decode_image(image.read_bytes())
        scenes.append((buf, classes))
    return build_feature_base(scenes, zero_crossing_threshold)


def write_base(base: FeatureBase, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(base_to_json(base), encoding="utf-8")
    return path
