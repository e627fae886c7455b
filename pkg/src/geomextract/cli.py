"""Command-line front end.

Subcommands: gen, color, extract, verify, bounds, render. Each invocation
handles one instance and prints a JSON report to stdout; --out writes the
payload document (instance, coloring, or SVG) as a whole file only after it
was fully computed, so failures leave no partial output.

Exit codes: 0 success, 2 parse or class errors, 3 size caps, 4 algorithm
invariant violations (including an improper supplied coloring), 5 depth
precondition violations.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import axis2d, docio, extraction, generators, intervals, octants, oracle, render
from .core import (
    AlgorithmInvariantError,
    ClassMismatchError,
    Coloring,
    DepthPreconditionError,
    GeomExtractError,
    ImproperColoringError,
    Instance,
    NoFourColoringError,
    ObjectClass,
    ParseError,
    SizeCapError,
    UnboundedExtractionError,
    UncoverablePointError,
    rational_repr,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4
EXIT_DEPTH = 5


def color_instance(instance: Instance, size_cap: Optional[int] = None) -> Coloring:
    """Dispatch to the class-appropriate colorer."""
    if instance.cls is ObjectClass.INTERVALS:
        return intervals.color_intervals(instance)
    if instance.cls is ObjectClass.SEGMENTS:
        return axis2d.color_segments(instance)
    if instance.cls is ObjectClass.RAYS:
        return axis2d.color_rays(instance)
    return octants.color_octants(instance, size_cap or octants.DEFAULT_SIZE_CAP)


def _read_instance(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return docio.parse_instance(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _read_coloring(path: str) -> Coloring:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return docio.parse_coloring(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _write_out(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _report(command: str, instance: Optional[Instance], result: dict,
            started: float) -> dict:
    report = {
        "command": command,
        "instance_digest": docio.instance_digest(instance) if instance else None,
        "result": result,
        "timings_ms": int((time.perf_counter() - started) * 1000),
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return report


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    started = time.perf_counter()
    if args.kind == "interval-pair":
        instance = generators.gen_interval_pair()
    elif args.kind == "kbox":
        instance = generators.gen_kbox(args.k)
    elif args.kind == "kbox-rays":
        instance = generators.gen_kbox_rays(args.k)
    elif args.kind == "rayfan":
        instance = generators.gen_rayfan(args.k)
    elif args.kind == "octant4":
        instance = generators.gen_octant4()
    else:
        try:
            cls = ObjectClass(args.klass)
        except ValueError:
            raise ParseError(f"unknown class {args.klass!r}") from None
        instance = generators.gen_random(cls, args.n, args.seed)
    text = docio.instance_to_json(instance)
    if args.out:
        _write_out(args.out, text)
    else:
        sys.stdout.write(text)
    _report("gen", instance, {
        "kind": args.kind,
        "m": instance.m,
        "points": len(instance.points),
        "written": args.out,
    }, started)
    return EXIT_OK


def _cmd_color(args) -> int:
    started = time.perf_counter()
    instance = _read_instance(args.input)
    if args.klass and instance.cls is not ObjectClass(args.klass):
        raise ClassMismatchError(
            f"instance class {instance.cls.value} does not match --class {args.klass}"
        )
    coloring = color_instance(instance, args.size_cap)
    result = {
        "class": instance.cls.value,
        "kappa": coloring.kappa,
        "colors": list(coloring.colors),
        "colors_used": sorted(coloring.used_colors()),
    }
    if instance.cls is ObjectClass.RAYS:
        profile = axis2d.ray_type_profile(instance.objects)
        result["ray_type"] = profile.type
        if profile.type == 1:
            result["notes"] = (
                "single-orientation rays: 2-coloring provided, but no "
                "extraction guarantee is claimed for type 1"
            )
    if args.out:
        _write_out(args.out, docio.coloring_to_json(coloring))
    _report("color", instance, result, started)
    return EXIT_OK


def _cmd_extract(args) -> int:
    started = time.perf_counter()
    instance = _read_instance(args.input)
    if args.coloring:
        coloring = _read_coloring(args.coloring)
    else:
        coloring = color_instance(instance, args.size_cap)
    res = extraction.extract(instance, coloring)
    result = {
        "sol": sorted(res.sol),
        "extracted": sorted(res.extracted),
        "extracted_weight": rational_repr(res.extracted_weight),
        "ratio": rational_repr(res.ratio),
        "kappa": res.kappa,
    }
    if args.out:
        _write_out(args.out, json.dumps(result, indent=2, sort_keys=True) + "\n")
    _report("extract", instance, result, started)
    return EXIT_OK


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    instance = _read_instance(args.input)
    if (args.coloring is None) == (args.cover is None):
        raise ParseError("verify needs exactly one of --coloring or --cover")
    if args.coloring:
        coloring = _read_coloring(args.coloring)
        if len(coloring.colors) != instance.m:
            raise ParseError("coloring length does not match instance")
        verdict = oracle.check_proper(instance, coloring,
                                      size_cap=args.size_cap or 60)
        result = {"verdict": "proper" if verdict.proper else "improper"}
        if not verdict.proper:
            result["monochromatic_edge"] = sorted(verdict.edge)
            result["witness"] = [rational_repr(v) for v in verdict.witness]
    else:
        try:
            subset = [int(tok) for tok in args.cover.split(",") if tok.strip()]
        except ValueError:
            raise ParseError(f"bad --cover list: {args.cover!r}") from None
        try:
            verdict = oracle.check_cover(instance, subset)
        except IndexError as exc:
            raise ParseError(str(exc)) from None
        result = {"verdict": "covers" if verdict.covered else "uncovered"}
        if not verdict.covered:
            result["uncovered_point"] = [rational_repr(v) for v in verdict.point]
            result["point_index"] = verdict.point_index
    _report("verify", instance, result, started)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    started = time.perf_counter()
    instance = _read_instance(args.input)
    cover, weight = extraction.exact_min_cover(
        instance, size_cap=args.size_cap or extraction.DEFAULT_COVER_CAP
    )
    result = {
        "min_cover": sorted(cover),
        "min_cover_weight": rational_repr(weight),
    }
    try:
        result["extraction_number"] = rational_repr(
            extraction.exact_extraction_number(
                instance, size_cap=args.size_cap or extraction.DEFAULT_COVER_CAP
            )
        )
    except UnboundedExtractionError:
        result["extraction_number"] = "unbounded"
    chromatic_cap = args.chromatic_cap or extraction.DEFAULT_CHROMATIC_CAP
    if instance.m <= chromatic_cap:
        result["chromatic"] = extraction.exact_chromatic(
            instance, size_cap=chromatic_cap
        )
    else:
        result["chromatic"] = None
        result["notes"] = f"chromatic skipped: {instance.m} objects over cap"
    _report("bounds", instance, result, started)
    return EXIT_OK


def _cmd_render(args) -> int:
    started = time.perf_counter()
    instance = _read_instance(args.input)
    coloring = _read_coloring(args.coloring) if args.coloring else None
    if coloring is not None and len(coloring.colors) != instance.m:
        raise ParseError("coloring length does not match instance")
    svg = render.render_svg(instance, coloring)
    if args.out:
        _write_out(args.out, svg)
    else:
        sys.stdout.write(svg)
    _report("render", instance, {
        "objects": instance.m,
        "points": len(instance.points),
        "written": args.out,
    }, started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and entry
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomextract",
        description="Geometric hypergraph colorings and residual-cover extraction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--kind", required=True, choices=[
        "interval-pair", "kbox", "kbox-rays", "rayfan", "octant4", "random",
    ])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--class", dest="klass",
                   choices=[c.value for c in ObjectClass])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("color", help="compute a proper coloring")
    p.add_argument("input")
    p.add_argument("--class", dest="klass",
                   choices=[c.value for c in ObjectClass])
    p.add_argument("--size-cap", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("extract", help="extract a heavy residual class")
    p.add_argument("input")
    p.add_argument("--coloring")
    p.add_argument("--size-cap", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("verify", help="check a coloring or a cover")
    p.add_argument("input")
    p.add_argument("--coloring")
    p.add_argument("--cover")
    p.add_argument("--size-cap", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="exact min cover, extraction, chromatic")
    p.add_argument("input")
    p.add_argument("--size-cap", type=int)
    p.add_argument("--chromatic-cap", type=int)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("render", help="emit an SVG figure")
    p.add_argument("input")
    p.add_argument("--coloring")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ClassMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (AlgorithmInvariantError, NoFourColoringError,
            ImproperColoringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DepthPreconditionError, UncoverablePointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEPTH
    except GeomExtractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
