import argparse
import logging
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from fs_lab.config import get_settings
from fs_lab.errors import CoefficientParseError, FsLabError
from fs_lab.schemas import coerce_alpha
from fs_lab.services.bounds import fs_bound, proof_case
from fs_lab.services.concave import DEFAULT_MAX_RADIUS, check_concave
from fs_lab.services.render import (
    bound_payload,
    csv_lines,
    curve_header,
    curve_rows,
    extremal_payload,
    fmt,
    lambda_grid,
    thresholds_dict,
    to_json,
)
from fs_lab.services.series import ComplexSeries
from fs_lab.services.verify import DEFAULT_ALPHAS, DEFAULT_STEPS, run_verification

logger = logging.getLogger("fs_lab")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

COMPARE_CHOICES = ("oracle", "classical", "koepf")

TRUNCATION_WARN = 1e-6
MIN_RELIABLE_ORDER = math.ceil(math.log(TRUNCATION_WARN) / math.log(DEFAULT_MAX_RADIUS))


def parse_real(text: str) -> float:
    """Decimal or rational literal, e.g. '0.5' or '2/3'."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fs_lab",
        description="Fekete-Szego bounds on concave univalent functions Co(alpha).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="closed-form bound for one (alpha, lambda)")
    p.add_argument("--alpha", type=parse_real, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_real, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("curve", help="bound as a function of lambda, as CSV")
    p.add_argument("--alpha", type=parse_real, required=True)
    p.add_argument("--lambda-min", type=parse_real, required=True)
    p.add_argument("--lambda-max", type=parse_real, required=True)
    p.add_argument("--steps", type=int, default=45)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--compare", nargs="*", choices=COMPARE_CHOICES, default=[])

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--alpha", dest="alphas", type=parse_real, nargs="+", default=list(DEFAULT_ALPHAS))
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)

    p = sub.add_parser("extremal", help="coefficients of the extremal function")
    p.add_argument("--alpha", type=parse_real, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_real, required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("check-concave", help="sampled Re P_f screen for a coefficient file")
    p.add_argument("coeff_file")
    p.add_argument("--alpha", type=parse_real, required=True)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def cmd_bound(args, out: TextIO) -> int:
    alpha = coerce_alpha(args.alpha)
    result = fs_bound(alpha, args.lam)
    if args.format == "json":
        out.write(to_json(bound_payload(alpha.alpha, args.lam, result)) + "\n")
        return EXIT_OK

    th = " ".join(f"{k}={fmt(v)}" for k, v in thresholds_dict(result.thresholds).items())
    extremal = result.extremal.model_dump()
    kind = extremal.pop("kind")
    params = " ".join(f"{k}={fmt(v)}" for k, v in extremal.items())
    out.write(f"alpha       {fmt(alpha.alpha)}\n")
    out.write(f"lambda      {fmt(args.lam)}\n")
    out.write(f"bound       {fmt(result.value)}\n")
    out.write(f"regime      {result.regime.value}\n")
    out.write(f"proof case  {proof_case(alpha, args.lam)}\n")
    out.write(f"thresholds  {th}\n")
    out.write(f"extremal    {kind}{' ' + params if params else ''}\n")
    return EXIT_OK


def cmd_curve(args, out: TextIO) -> int:
    alpha = coerce_alpha(args.alpha)
    if not args.lambda_min < args.lambda_max:
        raise FsLabError("lambda-min must be smaller than lambda-max")
    if args.steps < 2:
        raise FsLabError("steps must be >= 2")
    lambdas = lambda_grid(args.lambda_min, args.lambda_max, args.steps)
    workers = get_settings().worker_count()
    rows = curve_rows(alpha.alpha, lambdas, args.compare, workers)
    text = "\n".join(csv_lines(curve_header(args.compare), rows)) + "\n"
    if args.out == "-":
        out.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.steps < 2:
        raise FsLabError("steps must be >= 2")
    report = run_verification(args.alphas, args.steps, workers=get_settings().worker_count())
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = (
            f"{check.name:<20} max_deviation={fmt(check.max_deviation)} "
            f"tolerance={fmt(check.tolerance)} {status}"
        )
        if not check.passed:
            line += f" at alpha={fmt(check.worst_alpha)} lambda={fmt(check.worst_lambda)}"
        out.write(line + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_extremal(args, out: TextIO) -> int:
    alpha = coerce_alpha(args.alpha)
    order = args.order if args.order is not None else get_settings().order
    if order < 1:
        raise FsLabError("order must be >= 1")
    payload = extremal_payload(alpha.alpha, args.lam, order)
    if args.format == "json":
        out.write(to_json(payload) + "\n")
        return EXIT_OK
    if payload["note"]:
        print(f"note: {payload['note']}", file=sys.stderr)
    rows = [
        [n, re, im, payload["achieved"], payload["bound"]]
        for n, (re, im) in enumerate(payload["coefficients"], start=1)
    ]
    out.write("\n".join(csv_lines(["n", "re", "im", "achieved", "bound"], rows)) + "\n")
    return EXIT_OK


def parse_coefficients(lines: Sequence[str]) -> ComplexSeries:
    """One 're,im' pair per line, starting with a0."""
    coeffs = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise CoefficientParseError(line_no, line)
        try:
            coeffs.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise CoefficientParseError(line_no, line)
    if len(coeffs) < 3:
        raise FsLabError("need at least a0, a1 and a2")
    return ComplexSeries(coeffs)


def cmd_check_concave(args, out: TextIO) -> int:
    alpha = coerce_alpha(args.alpha)
    try:
        with open(args.coeff_file) as fh:
            f = parse_coefficients(fh.readlines())
    except OSError as e:
        print(f"error: cannot read {args.coeff_file}: {e}", file=sys.stderr)
        return EXIT_USAGE
    tail = DEFAULT_MAX_RADIUS ** f.order
    if tail > TRUNCATION_WARN:
        print(
            f"warning: a series of order {f.order} leaves a tail of size {tail:.1e} at |z| = {DEFAULT_MAX_RADIUS}; "
            f"the sampled minimum may not reflect the function (use order >= {MIN_RELIABLE_ORDER})",
            file=sys.stderr,
        )
    min_re = check_concave(f, alpha)
    verdict = "PASS" if min_re > 0 else "FAIL"
    out.write(f"min_re_p={fmt(min_re)} verdict={verdict}\n")
    return EXIT_OK


def cmd_serve(args, out: TextIO) -> int:
    import uvicorn

    uvicorn.run("fs_lab.main:app", host=args.host, port=args.port)
    return EXIT_OK


COMMANDS = {
    "bound": cmd_bound,
    "curve": cmd_curve,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "check-concave": cmd_check_concave,
    "serve": cmd_serve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        settings = get_settings()
    except RuntimeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=settings.logging_level("WARNING"), stream=sys.stderr)

    try:
        return COMMANDS[args.command](args, sys.stdout)
    except FsLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
