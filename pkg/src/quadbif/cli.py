"""Command-line interface: ``quadbif {orbit,diagram,divergence,fixed-points}``.

Exit status is 0 on success, 1 for a mathematical domain error (for
example ``a < -1/4`` with a preimage seed) and 2 for invalid flags.
"""

import argparse
import math
import sys

from . import __version__
from .analysis import DEFAULT_N_MAX, DEFAULT_TOLERANCE, precision_sweep
from .bifurcation import (
    ConstantSeed,
    DiagramConfig,
    DiscardTransient,
    FirstIterateOnly,
    PreimageSeed,
    build_diagram,
)
from .errors import ConfigError, QuadBifError
from .highprec import arithmetic, parse_precision
from .map_core import SeedBranch, fixed_points, iterate, seed_initial_condition
from .output import render_svg, write_csv


def _decimal(text):
    if "," in text:
        raise argparse.ArgumentTypeError(
            f"{text!r}: use a decimal point (e.g. 1.9), not a decimal comma"
        )
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal number") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be >= 1")
    return value


def _count(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be >= 0")
    return value


def _precision(text):
    try:
        return parse_precision(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _precision_list(text):
    parts = [part for part in text.split(",") if part.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty precision list")
    return [_precision(part) for part in parts]


def _seed(text):
    """``preimage-pos``, ``preimage-neg`` or ``constant:X``."""
    t = text.strip().lower()
    if t in ("preimage-pos", "preimage", "preimage-positive"):
        return PreimageSeed(SeedBranch.POSITIVE)
    if t in ("preimage-neg", "preimage-negative"):
        return PreimageSeed(SeedBranch.NEGATIVE)
    if t.startswith("constant:"):
        return ConstantSeed(_decimal(t[len("constant:"):]))
    raise argparse.ArgumentTypeError(
        f"invalid seed {text!r}; expected preimage-pos, preimage-neg or constant:X"
    )


def _open_output(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline="\n", encoding="utf-8"), True


def _emit(args, header, rows, xy=None, labels=("x", "y")):
    stream, close = _open_output(args.output)
    try:
        if getattr(args, "format", "csv") == "svg":
            xs, ys = xy
            stream.write(render_svg(xs, ys, *labels))
        else:
            write_csv(stream, header, rows)
    finally:
        if close:
            stream.close()
        else:
            stream.flush()


def cmd_orbit(args):
    ar = arithmetic(args.precision)
    seed = args.seed if args.x0 is None else ConstantSeed(args.x0)
    if isinstance(seed, PreimageSeed):
        x0 = seed_initial_condition(args.a, seed.branch, ar, args.closed_form_seed)
    else:
        x0 = seed.x0
    orbit = iterate(args.a, x0, args.n, ar)
    if orbit.escaped:
        print(f"note: orbit escaped at n={orbit.escaped_at}", file=sys.stderr)
    rows = [(str(n), ar.fmt(x)) for n, x in orbit.samples]
    _emit(
        args,
        ("n", "x"),
        rows,
        xy=(range(len(orbit)), orbit.values),
        labels=("n", "x"),
    )
    return 0


def cmd_diagram(args, parser):
    iterate_policy = (
        FirstIterateOnly()
        if args.first_iterate_only
        else DiscardTransient(args.transient, args.keep)
    )
    seed = args.seed
    if isinstance(seed, PreimageSeed) and args.closed_form_seed:
        seed = PreimageSeed(seed.branch, closed_form=True)
    try:
        cfg = DiagramConfig(
            a_min=args.a_min,
            a_max=args.a_max,
            n_samples=args.samples,
            seed_policy=seed,
            iterate_policy=iterate_policy,
            precision=args.precision,
        )
    except ConfigError as exc:
        parser.error(str(exc))
    ar = arithmetic(cfg.precision)
    points = build_diagram(cfg, jobs=args.jobs)
    rows = [(repr(p.a), str(p.n), ar.fmt(p.x), "1" if p.escaped else "0") for p in points]
    _emit(
        args,
        ("a", "n", "x", "escaped"),
        rows,
        xy=([p.a for p in points], [p.x for p in points]),
        labels=("a", "x"),
    )
    return 0


def cmd_divergence(args):
    reports = precision_sweep(args.a, args.precisions, args.tolerance, args.n_max, jobs=args.jobs)
    rows = [
        (
            repr(args.a),
            str(r.bits),
            "" if r.divergence_index is None else str(r.divergence_index),
            repr(r.max_deviation_before),
        )
        for r in reports
    ]
    _emit(args, ("a", "bits", "divergence_index", "max_deviation_before"), rows)
    return 0


def cmd_fixed_points(args):
    ar = arithmetic(args.precision)
    pair = fixed_points(args.a, ar)
    rows = [
        ("x_plus", ar.fmt(pair.x_plus)),
        ("x_minus", ar.fmt(pair.x_minus)),
        ("seed_positive", ar.fmt(seed_initial_condition(args.a, SeedBranch.POSITIVE, ar))),
        ("seed_negative", ar.fmt(seed_initial_condition(args.a, SeedBranch.NEGATIVE, ar))),
    ]
    _emit(args, ("quantity", "value"), rows)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadbif",
        description="Quadratic map x -> a - x^2: orbits, bifurcation diagrams "
        "and floating-point divergence of preimage-seeded orbits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=False):
        p.add_argument("--precision", type=_precision, default=53,
                       help="'double' (53 bits) or 'bits:N' (default: double)")
        p.add_argument("--output", "-o", default="-", help="output file (default: stdout)")
        if formats:
            p.add_argument("--format", choices=("csv", "svg"), default="csv")

    p = sub.add_parser("orbit", help="iterate one orbit and write n,x rows")
    p.add_argument("--a", type=_decimal, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--x0", type=_decimal, help="initial condition")
    g.add_argument("--seed", type=_seed, default=ConstantSeed(0.2),
                   help="preimage-pos, preimage-neg or constant:X (default: constant:0.2)")
    p.add_argument("--closed-form-seed", action="store_true",
                   help="seed preimage policies with +-|x_plus| instead of the nested radical")
    p.add_argument("--n", type=_count, default=50, help="number of steps (default: 50)")
    common(p, formats=True)

    p = sub.add_parser("diagram", help="bifurcation diagram as a,n,x,escaped rows or SVG")
    p.add_argument("--a-min", type=_decimal, default=-0.25)
    p.add_argument("--a-max", type=_decimal, default=2.0)
    p.add_argument("--samples", type=_positive_int, default=2000)
    p.add_argument("--seed", type=_seed, default=ConstantSeed(0.2),
                   help="preimage-pos, preimage-neg or constant:X (default: constant:0.2)")
    p.add_argument("--closed-form-seed", action="store_true")
    p.add_argument("--transient", type=_count, default=1000)
    p.add_argument("--keep", type=_positive_int, default=100)
    p.add_argument("--first-iterate-only", action="store_true",
                   help="emit only x_1 per parameter value")
    p.add_argument("--jobs", "-j", type=_positive_int, default=1)
    common(p, formats=True)

    p = sub.add_parser("divergence", help="first exit of the seeded orbit from the tolerance ball")
    p.add_argument("--a", type=_decimal, required=True)
    p.add_argument("--precisions", type=_precision_list, default=[53],
                   help="comma-separated widths, e.g. 53,113,256")
    p.add_argument("--tolerance", type=_decimal, default=DEFAULT_TOLERANCE)
    p.add_argument("--n-max", type=_positive_int, default=DEFAULT_N_MAX)
    p.add_argument("--jobs", "-j", type=_positive_int, default=1)
    p.add_argument("--output", "-o", default="-")

    p = sub.add_parser("fixed-points", help="both fixed points and both preimage seeds")
    p.add_argument("--a", type=_decimal, required=True)
    common(p)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "divergence" and not args.tolerance > 0:
        parser.error("--tolerance must be positive")
    try:
        if args.command == "orbit":
            return cmd_orbit(args)
        if args.command == "diagram":
            return cmd_diagram(args, parser)
        if args.command == "divergence":
            return cmd_divergence(args)
        return cmd_fixed_points(args)
    except QuadBifError as exc:
        print(f"quadbif: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
