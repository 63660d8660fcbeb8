"""Canvas widget recognition and accessible-document synthesis."""

from .cbir import Classification, FeatureBase, WidgetClass, classify, minkowski_distance
from .emit import AccessibleDocument, WidgetNode, emit_html, emit_json
from .features import FeatureVector
from .pipeline import PipelineConfig, recognize, run
from .raster import PixelBuffer, decode_image
from .trace import CanvasTrace, parse_trace

__version__ = "0.1.0"

__all__ = [
    "AccessibleDocument",
    "CanvasTrace",
    "Classification",
    "FeatureBase",
    "FeatureVector",
    "PipelineConfig",
    "PixelBuffer",
    "WidgetClass",
    "WidgetNode",
    "classify",
    "decode_image",
    "emit_html",
    "emit_json",
    "minkowski_distance",
    "parse_trace",
    "recognize",
    "run",
]
