"""Command line surface.

Exit codes: 0 = pass/valid, 1 = violations found, 2 = input/parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .arrangement import BuildError, GeometryError, minimal_regions
from .duality import (BlockingConfig, PrimalConfig, dualize_config,
                      emit_lineconfig, emit_primal, ngon_certificate,
                      parse_dual_file, pipeline_classify, quadrangle_example,
                      region_blocking_audit, verify_primal_blocking)
from .fileio import TbaParseError, emit_tba, parse_tba
from .fuzz import fuzz_driver
from .render import RenderSpec, render_svg
from .taxonomy import classify, generate, hexagrid_recognize, parse_tag
from .validator import parity_audit, validate


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_arrangement(path: str):
    try:
        return parse_tba(_read(path))
    except (OSError, TbaParseError, BuildError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_gen(args) -> int:
    try:
        tag = parse_tag(args.type)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    arr, _ = generate(tag, args.seed)
    _write(args.output, emit_tba(arr))
    return 0


def cmd_validate(args) -> int:
    arr = _load_arrangement(args.file)
    verdict = validate(arr, "STRONG" if args.strong else "TBA")
    print(verdict)
    return 0 if verdict.ok else 1


def cmd_classify(args) -> int:
    arr = _load_arrangement(args.file)
    result = classify(arr)
    if result is None:
        print("no type")
        return 1
    print(result.tag)
    for other in result.ambiguities:
        print(f"ambiguous with {other}")
    for name in sorted(result.labeling):
        p = result.labeling[name]
        from .kernel import rat_str
        print(f"{name}={rat_str(p.x)},{rat_str(p.y)}")
    return 0


def cmd_regions(args) -> int:
    arr = _load_arrangement(args.file)
    faces = minimal_regions(arr)
    print(f"{len(faces)} minimal regions")
    for face in faces:
        pts = " ".join(str(p) for p in face.points())
        print(f"region [{len(face.region_vertices())} vertices] {pts}")
    return 0


def cmd_audit_parity(args) -> int:
    arr = _load_arrangement(args.file)
    verdict = validate(arr, "TBA")
    if not verdict.ok:
        print(verdict)
        return 1
    report = parity_audit(arr, args.seed, args.samples)
    print(report)
    return 0 if report.ok else 1


def cmd_render(args) -> int:
    arr = _load_arrangement(args.file)
    spec = RenderSpec(width=args.width)
    _write(args.output, render_svg(arr, spec))
    return 0


def cmd_fuzz(args) -> int:
    summary = fuzz_driver(args.seed, args.iters)
    print(summary)
    return 0 if summary.ok else 1


def cmd_hexgrid(args) -> int:
    arr = _load_arrangement(args.file)
    if arr.blocking:
        print("error: hexgrid input must not contain blocking segments",
              file=sys.stderr)
        return 2
    result = hexagrid_recognize(arr.corners, list(arr.initial))
    if result.ok:
        print(f"hexagonal grid of size k={result.k}")
        return 0
    print(f"not a hexagonal grid: {result.message} at {result.witness}")
    return 1


def cmd_dual(args) -> int:
    if args.mode == "quadrangle":
        cfg = quadrangle_example()
        if args.lines:
            _write(args.output, emit_lineconfig(dualize_config(cfg)))
        else:
            _write(args.output, emit_primal(cfg))
        report = verify_primal_blocking(cfg)
        print(report, file=sys.stderr)
        return 0 if report.fully_blocked else 1
    if args.mode == "ngon":
        report = ngon_certificate(args.n)
        print(report)
        return 0 if report.covered else 1
    try:
        cfg = parse_dual_file(_read(args.file))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.mode == "verify":
        if not isinstance(cfg, PrimalConfig):
            print("error: expected a primal P/B configuration", file=sys.stderr)
            return 2
        report = verify_primal_blocking(cfg)
        print(report)
        return 0 if report.fully_blocked and report.meets_lower_bound else 1
    if not isinstance(cfg, BlockingConfig):
        print("error: expected a line L/BL configuration", file=sys.stderr)
        return 2
    if args.mode == "pipeline":
        report = pipeline_classify(cfg)
        print(report)
        return 0 if report.ok else 1
    if args.mode == "audit":
        report = region_blocking_audit(cfg)
        print(report)
        return 0 if report.ok else 1
    print(f"error: unknown dual mode {args.mode!r}", file=sys.stderr)
    return 2


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="triblock",
        description="exact tools for triangle blocking arrangements")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a typed arrangement")
    p.add_argument("--type", required=True,
                   help="tag expression, e.g. 'B1{first=x1,n=4}'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="check the intersection conditions")
    p.add_argument("file")
    p.add_argument("--strong", action="store_true",
                   help="also check the five-vertex concurrency condition")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="match against the seven schemas")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("regions", help="list minimal regions")
    p.add_argument("file")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("audit-parity", help="even-blocking audit over subsets")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_audit_parity)

    p = sub.add_parser("render", help="render to SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--width", type=int, default=480)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fuzz", help="seeded generate/mutate property loop")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=20)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("hexgrid", help="recognize a three-family grid")
    p.add_argument("file")
    p.set_defaults(func=cmd_hexgrid)

    p = sub.add_parser("dual", help="point/line blocking configurations")
    p.add_argument("mode", choices=["quadrangle", "ngon", "verify",
                                    "pipeline", "audit"])
    p.add_argument("file", nargs="?")
    p.add_argument("--n", type=int, default=5, help="polygon size for ngon")
    p.add_argument("--lines", action="store_true",
                   help="emit the dualized line configuration (quadrangle)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_dual)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "dual" and args.mode in ("verify", "pipeline", "audit") \
            and not args.file:
        print("error: this dual mode needs a file", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (BuildError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
