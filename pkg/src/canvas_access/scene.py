"""Shared raster-to-features stage wiring.

One scene analysis runs the full front half of the pipeline: grayscale,
smoothing, edge detection, two labeling passes (edge map for widget outlines,
dark-pixel binarization for interior marks and glyphs), interior-region
suppression and feature extraction for each surviving candidate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .edges import log_response, zero_crossings
from .features import FeatureVector, build_feature_vector, interior_letter_regions
from .labeling import Region, binarize_dark, extract_regions, flood_fill_bfs
from .raster import PixelBuffer, denoise, get_image_data, to_gray

__all__ = ["SceneAnalysis", "analyze_scene"]


@dataclass
class SceneAnalysis:
    width: int
    height: int
    candidates: list[Region] = field(default_factory=list)
    vectors: list[FeatureVector] = field(default_factory=list)
    suppressed: list[Region] = field(default_factory=list)
    dark_regions: list[Region] = field(default_factory=list)


def _strictly_inside(inner: Region, outer: Region) -> bool:
    ix0, iy0, ix1, iy1 = inner.bbox
    ox0, oy0, ox1, oy1 = outer.bbox
    return ix0 > ox0 and iy0 > oy0 and ix1 < ox1 and iy1 < oy1


def analyze_scene(buf: PixelBuffer, zero_crossing_threshold: float = 8.0) -> SceneAnalysis:
    """Extract widget candidate regions and their feature vectors."""
    snapshot = get_image_data(buf, 0, 0, buf.width, buf.height)
    smooth = denoise(to_gray(snapshot))

    edge_map = zero_crossings(log_response(smooth), zero_crossing_threshold)
    regions = extract_regions(flood_fill_bfs(edge_map))

    dark_regions = extract_regions(flood_fill_bfs(binarize_dark(smooth)))

    # a region nested strictly inside another is interior content (check
    # marks, radio dots, glyph outlines, inner stroke flanks), not a widget
    candidates: list[Region] = []
    suppressed: list[Region] = []
    for region in regions:
        if any(other is not region and _strictly_inside(region, other) for other in regions):
            suppressed.append(region)
        else:
            candidates.append(region)

    vectors = [
        build_feature_vector(region, interior_letter_regions(region, dark_regions))
        for region in candidates
    ]
    return SceneAnalysis(
        width=buf.width,
        height=buf.height,
        candidates=candidates,
        vectors=vectors,
        suppressed=suppressed,
        dark_regions=dark_regions,
    )
