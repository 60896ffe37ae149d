"""Command-line front end.

Subcommands
-----------
compute           evaluate the Morse intersection number for one configuration
search            scan hypersurface/log degrees d = 1..d_max for positivity
validate-weights  check a weight vector against a positivity basis

Exit codes: 0 success, 1 validation/usage error, 2 internal pipeline
disagreement (the cross-check failed; exact arithmetic means that is a bug).

JSON output is deterministic (sorted keys) and serializes every rational as a
"numerator/denominator" string; timings_ms carries wall-clock milliseconds
and is the only nondeterministic field.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .demailly import TowerConfig
from .graded_ring import chern_of_geometry
from .morse import (
    PipelineDisagreementError,
    WeightVector,
    minimal_degree_search,
    morse_number,
    weights_valid_L,
    weights_valid_demailly,
)

_GEOMETRY_KINDS = {
    "pn": "projective_space",
    "hypersurface": "hypersurface_tangent",
    "log-pn": "log_projective",
}


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        weights = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"weights must be comma-separated integers, got {text!r}")
    if not weights:
        raise ValueError("weights must be nonempty")
    return weights


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _emit(document: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(document, sort_keys=True))
        return
    for key in sorted(document):
        value = document[key]
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item}")
        else:
            print(f"{key}: {value}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demres",
        description="Exact Morse-inequality intersection numbers on jet towers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--geometry", required=True, choices=sorted(_GEOMETRY_KINDS))
        p.add_argument("--n", type=int, required=True, help="dimension of the base")
        p.add_argument("--degree", type=int, default=None,
                       help="degree d (hypersurface / log divisor kinds only)")
        p.add_argument("--kappa", type=int, required=True, help="tower height")
        p.add_argument("--weights", required=True,
                       help="comma-separated twist weights a1,...,akappa")
        p.add_argument("--ample-power", type=int, default=1,
                       help="power l of the base hyperplane twist (default 1)")
        p.add_argument("--pipeline", default="residue",
                       choices=["residue", "stepwise", "phi", "all"])
        p.add_argument("--output", default="json", choices=["json", "text"])

    compute = sub.add_parser("compute", help="one exact Morse number")
    add_common(compute)

    search = sub.add_parser("search", help="scan degrees for positivity")
    add_common(search)
    search.add_argument("--d-max", type=int, required=True,
                        help="largest degree to scan (from 1)")

    validate = sub.add_parser("validate-weights", help="check a weight vector")
    validate.add_argument("--basis", required=True, choices=["taut", "L"])
    validate.add_argument("--weights", required=True)
    validate.add_argument("--output", default="json", choices=["json", "text"])
    return parser


def _geometry_from_args(args) -> tuple:
    kind = _GEOMETRY_KINDS[args.geometry]
    if kind == "projective_space":
        if args.degree is not None:
            raise ValueError("degree not applicable")
        geom = chern_of_geometry(kind, args.n)
    else:
        if args.degree is None:
            raise ValueError(f"--degree is required for geometry {args.geometry!r}")
        geom = chern_of_geometry(kind, args.n, args.degree)
    return kind, geom


def _weight_vector_from_args(args) -> WeightVector:
    weights = _parse_weights(args.weights)
    if len(weights) != args.kappa:
        raise ValueError("length mismatch: --weights must list exactly kappa weights")
    return WeightVector(weights, args.ample_power)


def _cmd_compute(args) -> int:
    _, geom = _geometry_from_args(args)
    weights = _weight_vector_from_args(args)
    cfg = TowerConfig.for_geometry(geom, args.kappa)
    report = morse_number(
        geom, cfg, weights, args.pipeline,
        geometry_label=args.geometry, degree=args.degree,
    )
    document = {
        "geometry": args.geometry,
        "n": report.n,
        "degree": report.degree,
        "kappa": report.kappa,
        "r": report.r,
        "n_kappa": report.n_kappa,
        "weights": list(report.weights),
        "ample_power": report.ample_power,
        "pipeline": report.pipeline,
        "value": _fraction_str(report.value),
        "positive": report.positive,
        "timings_ms": {k: round(v, 3) for k, v in report.timings_ms.items()},
    }
    if args.pipeline == "all":
        document["values"] = {k: _fraction_str(v) for k, v in report.values.items()}
    _emit(document, args.output)
    return 0


def _cmd_search(args) -> int:
    kind = _GEOMETRY_KINDS[args.geometry]
    weights = _weight_vector_from_args(args)
    scan = minimal_degree_search(kind, args.n, args.kappa, weights,
                                 args.d_max, args.pipeline)
    signs = [
        {
            "degree": rep.degree,
            "value": _fraction_str(rep.value),
            "positive": rep.positive,
        }
        for rep in scan.reports
    ]
    sample = scan.reports[0]
    document = {
        "geometry": args.geometry,
        "n": sample.n,
        "kappa": sample.kappa,
        "r": sample.r,
        "n_kappa": sample.n_kappa,
        "weights": list(sample.weights),
        "ample_power": sample.ample_power,
        "pipeline": sample.pipeline,
        "d_max": args.d_max,
        "found_degree": scan.found_degree,
        "signs": signs,
    }
    _emit(document, args.output)
    return 0


def _cmd_validate_weights(args) -> int:
    weights = _parse_weights(args.weights)
    kappa = len(weights)
    predicate = weights_valid_demailly if args.basis == "taut" else weights_valid_L
    valid = predicate(weights, kappa)
    document = {
        "basis": args.basis,
        "kappa": kappa,
        "weights": list(weights),
        "valid": valid,
    }
    _emit(document, args.output)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits 2 on usage errors; 2 is reserved for pipeline
        # disagreement here, so usage problems are reported as 1.
        code = exit_request.code
        return 0 if code in (0, None) else 1
    handlers = {
        "compute": _cmd_compute,
        "search": _cmd_search,
        "validate-weights": _cmd_validate_weights,
    }
    try:
        return handlers[args.command](args)
    except PipelineDisagreementError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
