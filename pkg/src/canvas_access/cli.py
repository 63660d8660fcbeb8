"""Command-line entry point.

Two modes share one binary: the default recognition run over an image (plus
optional trace), and feature-base construction from a reference directory
when --build-base is given. Exit codes: 0 success, 2 image problems,
3 trace problems, 4 feature-base problems.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .cbir import ConfigurationError, FixtureError
from .pipeline import (
    EXIT_BASE,
    EXIT_IMAGE,
    EXIT_OK,
    PipelineConfig,
    build_base_from_dir,
    run,
    write_base,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canvas-access",
        description=(
            "Recognize GUI widgets drawn on an HTML5 canvas raster and emit an "
            "equivalent accessible HTML/JSON document."
        ),
    )
    parser.add_argument("--image", type=Path, help="canvas snapshot PNG to process")
    parser.add_argument("--trace", type=Path, help="draw-command trace JSON (v1)")
    parser.add_argument(
        "--base",
        type=Path,
        help="feature base JSON; in --build-base mode this is the output path",
    )
    parser.add_argument("--out", type=Path, help="output directory (default: beside the image)")
    parser.add_argument(
        "--emit",
        default="html,json",
        help="comma-separated output formats: html,json (default both)",
    )
    parser.add_argument(
        "--threshold",
        type=float,
        default=8.0,
        help="zero-crossing threshold on the 0-255 luma scale (default 8.0)",
    )
    parser.add_argument(
        "--p",
        choices=("1", "2", "inf"),
        default="2",
        help="Minkowski distance order (default 2, Euclidean)",
    )
    parser.add_argument(
        "--cutoff",
        type=float,
        default=0.35,
        help="rejection cutoff in normalized distance units (default 0.35)",
    )
    parser.add_argument(
        "--build-base",
        type=Path,
        metavar="DIR",
        help="build a feature base from the reference scenes in DIR",
    )
    parser.add_argument(
        "--annotations",
        type=Path,
        help="annotations JSON for --build-base",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    p = {"1": 1, "2": 2, "inf": math.inf}[args.p]
    formats = tuple(f.strip() for f in args.emit.split(",") if f.strip())
    try:
        config = PipelineConfig(
            zero_crossing_threshold=args.threshold,
            distance_p=p,
            rejection_cutoff=args.cutoff,
            feature_base_path=args.base,
            emit_formats=formats,
        )
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BASE

    if args.build_base is not None:
        if args.annotations is None:
            print("error: --build-base requires --annotations", file=sys.stderr)
            return EXIT_BASE
        out_path = args.base if args.base is not None else args.build_base / "feature_base.json"
        try:
            base = build_base_from_dir(args.build_base, args.annotations, args.threshold)
        except (ConfigurationError, FixtureError, FileNotFoundError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BASE
        write_base(base, out_path)
        print(f"wrote feature base with {len(base.entries)} entries to {out_path}")
        return EXIT_OK

    if args.image is None:
        print("error: --image is required unless --build-base is given", file=sys.stderr)
        return EXIT_IMAGE

    result = run(args.image, args.trace, config, args.out)
    if result.exit_code != EXIT_OK:
        print(f"error: {result.message}", file=sys.stderr)
        return result.exit_code
    assert result.document is not None
    print(
        f"recognized {len(result.document.nodes)} widget(s); "
        f"wrote {', '.join(str(p) for p in result.outputs)}"
    )
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
