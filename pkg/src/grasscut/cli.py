"""Command-line entry point: ``grasscut <campaign> [options]``.

Runs one verification campaign (or all of them), writes a deterministic
JSON or CSV report, and exits 0 when every check passed, 1 when any check
failed, and 2 on configuration or I/O problems.  The default tolerance can
be pinned globally through the GRASSCUT_DEFAULT_TOL environment variable.
"""

import argparse
import os
import sys

from . import harness
from ._version import __version__
from .errors import ConfigError

_CAMPAIGN_DEFAULTS = {
    "cpn": (1, 2),
    "polar-vs-cutlocus": (2, 2),
    "cauchy": (2, 2),
    "wong": (2, 2),
    "atlas": (2, 2),
    "all": (2, 2),
}


def _default_tol() -> float:
    raw = os.environ.get("GRASSCUT_DEFAULT_TOL")
    if raw is None:
        return 1e-8
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"GRASSCUT_DEFAULT_TOL is not a number: {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasscut",
        description="Seeded verification campaigns for Grassmannian geometry.",
    )
    parser.add_argument("campaign", choices=harness.CAMPAIGNS)
    parser.add_argument("--n", type=int, default=None, help="plane dimension n")
    parser.add_argument("--m", type=int, default=None, help="complement dimension m")
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0, help="base seed (unsigned 64-bit)")
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="divisor/cut-locus tolerance (default 1e-8, or GRASSCUT_DEFAULT_TOL)",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default="", help="report path (stdout when omitted)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        default_n, default_m = _CAMPAIGN_DEFAULTS[args.campaign]
        cfg = harness.config_new(
            args.campaign,
            n=args.n if args.n is not None else default_n,
            m=args.m if args.m is not None else default_m,
            trials=args.trials,
            seed=args.seed,
            tol=args.tol if args.tol is not None else _default_tol(),
            fmt=args.format,
            out=args.out,
        )
        report = harness.run_campaign(cfg)
        harness.emit_report(report, cfg.fmt, cfg.out)
    except ConfigError as exc:
        print(f"grasscut: configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"grasscut: i/o error: {exc}", file=sys.stderr)
        return 2
    print(harness.summary_line(report), file=sys.stderr)
    return 1 if report.failed else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
