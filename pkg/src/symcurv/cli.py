"""Command-line front end.

Subcommands: symmetrizer, lr, fourier, xi, eta, gamma-hat, check-tensor,
rank, verify-paper. Output is text in the package's bracket notation by
default, or JSON with --json. Exit codes: 0 success, 1 failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from .dft import fourier_eta, fourier_transform, fourier_xi
from .group_ring import GroupRingElement
from .littlewood_richardson import lr_product
from .rationals import Rational, format_rational, parse_rational
from .tableaux import (
    curvature_tableau,
    format_partition,
    partitions_of,
    standard_tableaux,
    validate_partition,
    young_symmetrizer,
)
from .tensor import (
    DEFAULT_RANK_CAP,
    DenseTensor,
    gamma_hat,
    is_acdc,
    is_algebraic_curvature,
    projector_rank,
)
from .verify import run_all

RANK_CAP_ENV = "SYMCURV_MAX_RANK_DIM"


def _rational_arg(text: str) -> Rational:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _partition_arg(text: str):
    try:
        return validate_partition([int(v) for v in text.replace(",", " ").split()])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _print_element(element: GroupRingElement, as_json: bool) -> None:
    if as_json:
        print(element.to_json())
    else:
        print(element.pretty())


def _rank_cap(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(RANK_CAP_ENV)
    return int(env) if env else DEFAULT_RANK_CAP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcurv",
        description="Exact symmetric-group algebra and curvature-tensor toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("symmetrizer", help="print a Young symmetrizer")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--shape", type=_partition_arg, help="partition, e.g. 3,2")
    group.add_argument("--curvature", type=int, metavar="U",
                       help="curvature tableau family parameter (0 for order 4, 1 for order 5)")
    p.add_argument("--index", type=int, default=0,
                   help="standard tableau index in last-letter order (with --shape)")
    p.add_argument("--star", action="store_true", help="apply the star involution")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lr", help="Littlewood-Richardson product of two partitions")
    p.add_argument("--left", type=_partition_arg, required=True)
    p.add_argument("--right", type=_partition_arg, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fourier", help="Fourier blocks of a group-ring element")
    p.add_argument("element", help="path to group-ring JSON, or - for stdin")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("xi", help="rational family of primitive idempotents in Q[S_3]")
    p.add_argument("--nu", type=_rational_arg, required=True, metavar="NUM/DEN")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eta", help="the complementary primitive idempotent in Q[S_3]")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gamma-hat", help="order-5 generator from a symmetric pair")
    p.add_argument("--s", required=True, metavar="FILE",
                   help="order-2 symmetric tensor JSON (- for stdin)")
    p.add_argument("--shat", required=True, metavar="FILE",
                   help="order-3 totally symmetric tensor JSON (- for stdin)")
    p.add_argument("--out", metavar="FILE", help="output path (default stdout)")

    p = sub.add_parser("check-tensor", help="curvature identity diagnostics")
    p.add_argument("tensor", help="path to tensor JSON (order 4 or 5), or - for stdin")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("rank", help="rank of a symmetry operator on tensors")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--element", metavar="FILE", help="group-ring JSON (- for stdin)")
    group.add_argument("--xi-nu", type=_rational_arg, metavar="NUM/DEN")
    group.add_argument("--eta", action="store_true")
    group.add_argument("--curvature", type=int, metavar="U")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--star", action="store_true", help="apply star before acting")
    p.add_argument("--max-dim", type=int, default=None,
                   help=f"override the matrix-size cap (default {DEFAULT_RANK_CAP} "
                        f"or ${RANK_CAP_ENV})")

    p = sub.add_parser("verify-paper", help="run the bundled claim-verification suite")
    p.add_argument("--only", metavar="NAME", help="run checks matching this name prefix")
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_symmetrizer(args) -> int:
    if args.curvature is not None:
        tableau = curvature_tableau(args.curvature)
    else:
        tableaux = standard_tableaux(args.shape)
        if not 0 <= args.index < len(tableaux):
            print(f"error: index must be in 0..{len(tableaux) - 1} for shape "
                  f"{format_partition(args.shape)}", file=sys.stderr)
            return 2
        tableau = tableaux[args.index]
    element = young_symmetrizer(tableau)
    if args.star:
        element = element.star()
    if not args.json:
        print(tableau.pretty())
    _print_element(element, args.json)
    return 0


def _cmd_lr(args) -> int:
    decomposition = lr_product(args.left, args.right)
    if args.json:
        print(json.dumps({
            "left": list(decomposition.left),
            "right": list(decomposition.right),
            "terms": [
                {"partition": list(shape), "multiplicity": c}
                for shape, c in decomposition.sorted_terms()
            ],
        }))
    else:
        print(decomposition.pretty())
    return 0


def _cmd_fourier(args) -> int:
    element = GroupRingElement.from_json(_read_text(args.element))
    image = fourier_transform(element)
    if args.json:
        print(json.dumps({
            "degree": image.degree,
            "blocks": [
                {
                    "partition": list(shape),
                    "matrix": [[format_rational(v) for v in row] for row in block],
                }
                for shape, block in zip(partitions_of(image.degree), image.blocks)
            ],
        }))
    else:
        for shape, block in zip(partitions_of(image.degree), image.blocks):
            print(format_partition(shape))
            for row in block:
                print("  [" + "  ".join(format_rational(v) for v in row) + "]")
    return 0


def _cmd_gamma_hat(args) -> int:
    s = DenseTensor.from_json(_read_text(args.s))
    shat = DenseTensor.from_json(_read_text(args.shat))
    result = gamma_hat(s, shat)
    _write_text(args.out, result.to_json())
    return 0


def _cmd_check_tensor(args) -> int:
    tensor = DenseTensor.from_json(_read_text(args.tensor))
    if tensor.order == 4:
        report = is_algebraic_curvature(tensor)
        kind = "algebraic curvature tensor"
    elif tensor.order == 5:
        report = is_acdc(tensor)
        kind = "algebraic covariant derivative curvature tensor"
    else:
        print(f"error: expected an order-4 or order-5 tensor, got order {tensor.order}",
              file=sys.stderr)
        return 2
    checks = asdict(report)
    if args.json:
        print(json.dumps({"kind": kind, "passed": report.ok, "checks": checks}))
    else:
        for name, good in checks.items():
            print(f"{'ok  ' if good else 'FAIL'} {name}")
        print(("is" if report.ok else "is NOT") + f" an {kind}")
    return 0 if report.ok else 1


def _cmd_rank(args) -> int:
    if args.element is not None:
        element = GroupRingElement.from_json(_read_text(args.element))
    elif args.xi_nu is not None:
        element = fourier_xi(args.xi_nu)
    elif args.eta:
        element = fourier_eta()
    else:
        element = young_symmetrizer(curvature_tableau(args.curvature))
    if args.star:
        element = element.star()
    print(projector_rank(element, args.dim, max_dim=_rank_cap(args.max_dim)))
    return 0


def _cmd_verify(args) -> int:
    reports = run_all(only=args.only)
    if args.only and not reports:
        print(f"error: no check matches {args.only!r}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for report in reports:
            print(report.line())
        n_pass = sum(1 for r in reports if r.passed)
        print(f"{n_pass}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "symmetrizer": _cmd_symmetrizer,
        "lr": _cmd_lr,
        "fourier": _cmd_fourier,
        "xi": lambda a: (_print_element(fourier_xi(a.nu), a.json), 0)[1],
        "eta": lambda a: (_print_element(fourier_eta(), a.json), 0)[1],
        "gamma-hat": _cmd_gamma_hat,
        "check-tensor": _cmd_check_tensor,
        "rank": _cmd_rank,
        "verify-paper": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
