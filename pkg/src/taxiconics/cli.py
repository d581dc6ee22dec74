"""Command-line interface.

Subcommands: classify, section, verify, atlas, ukappa, render.  Exit codes:
0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._rat import rat
from .atlas import DEFAULT_BBOX, atlas_sweep, ukappa_sweep
from .cones import cone_from_json, normalize_plane
from .errors import TaxiconicsError
from .oracle import OracleConfig, verify_cone
from .render import RenderSpec, render_raster, render_section
from .sections import build_section, classify, section_from_json, section_to_json


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_cone(path: str):
    data = json.loads(Path(path).read_text())
    return cone_from_json(data)


def _parse_triple(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated rationals, got {text!r}")
    return [rat(p) for p in parts]


def _parse_bbox(text: str | None):
    if text is None:
        return DEFAULT_BBOX
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected x0,y0,x1,y1, got {text!r}")
    return tuple(parts)


def _cmd_classify(args) -> int:
    cone = _load_cone(args.spec)
    print(classify(cone))
    return 0


def _cmd_section(args) -> int:
    cone = _load_cone(args.spec)
    section = build_section(cone)
    _write(_dump_json(section_to_json(section)), args.output)
    return 0


def _cmd_verify(args) -> int:
    cone = _load_cone(args.spec)
    cfg = OracleConfig(grid_n=args.grid)
    report = verify_cone(cone, cfg)
    _write(_dump_json(report), args.output)
    if report["violations"]:
        print(f"FAIL: {len(report['violations'])} violation(s)", file=sys.stderr)
        return 2
    print(
        f"ok: {report['vertices_checked']} vertices, "
        f"{report['piece_points_checked']} piece points, "
        f"{report['grid']['points_checked']} grid points",
        file=sys.stderr,
    )
    return 0


def _cmd_atlas(args) -> int:
    plane = normalize_plane(_parse_triple(args.plane))
    bbox = _parse_bbox(args.bbox)
    rows = atlas_sweep(plane, rat(args.kappa), args.grid, bbox, workers=args.workers)
    payload = {
        "plane": plane.to_json(),
        "kappa": args.kappa,
        "bbox": list(bbox),
        "rows": rows,
    }
    _write(_dump_json(payload), args.output)
    if args.svg:
        Path(args.svg).write_text(render_raster(rows, bbox, width=args.width))
    return 0


def _cmd_ukappa(args) -> int:
    bbox = _parse_bbox(args.bbox)
    rows, bad = ukappa_sweep(rat(args.kappa), args.grid, bbox, workers=args.workers)
    payload = {
        "kappa": args.kappa,
        "bbox": list(bbox),
        "rows": rows,
        "inconsistencies": bad,
    }
    _write(_dump_json(payload), args.output)
    if args.svg:
        Path(args.svg).write_text(
            render_raster(rows, bbox, kappa=rat(args.kappa), width=args.width,
                          ukappa_boundary=True)
        )
    if bad:
        print(f"FAIL: {len(bad)} classification inconsistencies", file=sys.stderr)
        return 2
    return 0


def _cmd_render(args) -> int:
    data = json.loads(Path(args.section).read_text())
    section = section_from_json(data)
    viewport = None
    if args.viewport:
        viewport = tuple(rat(p.strip()) for p in args.viewport.split(","))
        if len(viewport) != 4:
            raise ValueError("viewport must be x0,y0,x1,y1")
    spec = RenderSpec(viewport=viewport, width=args.width)
    _write(render_section(section, spec), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taxiconics",
        description="Taxicab conic sections: classify, construct, verify, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the section class of a cone spec")
    p.add_argument("spec", help="cone spec JSON file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("section", help="construct the section as JSON")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_section)

    p = sub.add_parser("verify", help="run the numeric/brute-force oracle suite")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--grid", type=int, default=201, help="odd grid resolution")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("atlas", help="classification raster over line parameters")
    p.add_argument("--plane", required=True, help='plane triple, e.g. "2/3,1/5,1"')
    p.add_argument("--kappa", required=True)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--bbox", default=None, help="x0,y0,x1,y1 (default -2,-2,2,2)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--svg", default=None, help="also write an SVG heat-map")
    p.add_argument("--width", type=int, default=480)
    p.set_defaults(func=_cmd_atlas)

    p = sub.add_parser("ukappa", help="perpendicular-case classification map")
    p.add_argument("--kappa", required=True)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--bbox", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--svg", default=None)
    p.add_argument("--width", type=int, default=480)
    p.set_defaults(func=_cmd_ukappa)

    p = sub.add_parser("render", help="render a section JSON file to SVG")
    p.add_argument("section")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--viewport", default=None, help="x0,y0,x1,y1 in world units")
    p.add_argument("--width", type=int, default=480)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TaxiconicsError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
