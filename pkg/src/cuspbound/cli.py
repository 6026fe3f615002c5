"""Command line interface.

Every subcommand that certifies something writes a `ReportDocument` as JSON,
to `--json PATH` or stdout. Exit codes: 0 when every report passes, 1 when a
check fails, 2 for usage and input errors.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from . import __version__
from .basis import echelon_basis, echelon_reports, genfunc_crosscheck
from .core.config import BoundConfiguration, RigorConfiguration
from .core.constants import LfuncDefaults
from .errors import (
    CertificationError,
    CuspBoundError,
    IndeterminateComparisonError,
    NonSummableTailError,
    UnsupportedParameterError,
)
from .forms import FormRegistry, check_bp_envelope, dual_construction_mismatches
from .reports import BoundReport, ReportDocument, check_exact
from .series import read_coefficient_vector, series_to_frame, write_series_csv

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

SECTIONS = ("3", "4", "5", "6")


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emit(
    command: str,
    reports: list[BoundReport],
    json_out: Path | None,
    seed: int,
) -> int:
    document = ReportDocument(
        tool_version=__version__, command=command, seed=seed, reports=reports
    )
    text = document.to_json()
    if json_out is None:
        print(text)
    else:
        json_out.write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %d reports to %s", len(reports), json_out)
    for failure in document.failures():
        print(f"FAIL: {failure.claim}", file=sys.stderr)
    return EXIT_PASS if document.status == "pass" else EXIT_FAIL


# === Subcommands ===
def cmd_expand(args: argparse.Namespace, config: BoundConfiguration) -> int:
    descriptor = FormRegistry.resolve(args.form)
    series = descriptor.expand(args.terms + 1)
    if args.out is None:
        frame = series_to_frame(series, args.terms + 1)
        sys.stdout.write(frame.write_csv(include_header=False))
    else:
        write_series_csv(series, args.out, args.terms + 1)
    return EXIT_PASS


def cmd_basis(args: argparse.Namespace, config: BoundConfiguration) -> int:
    k = args.weight
    basis = echelon_basis(k, max(args.terms + 1, k // 4 + 1))
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for m in range(1, basis.ell):
            path = args.out_dir / f"F{k}_{m}.csv"
            write_series_csv(basis.form(m), path, args.terms + 1)
    reports = echelon_reports([k], args.terms + 1)
    reports.append(genfunc_crosscheck(k, min(args.terms, 20)))
    return _emit("basis", reports, args.json, config.runtime.seed)


def _partition_reports(
    chain: bool = True, thm3: int | None = 2000, trend: int | None = 4000
) -> list[BoundReport]:
    from .partitions import (
        chain_reports,
        distinct_parts_reports,
        profile_reports,
        sign_pattern_violations,
        thm2_trend_reports,
        verify_thm3,
    )

    reports: list[BoundReport] = []
    if chain:
        reports.extend(chain_reports())
        reports.extend(distinct_parts_reports())
    if thm3 is not None:
        signs = sign_pattern_violations(thm3)
        reports.append(verify_thm3(thm3))
        reports.append(
            check_exact(
                f"(-1)^(n+1) s(n) > 0 and b(n) > 0 for n <= {thm3}",
                sum(signs.values()),
                provenance="Hauptmodul coefficients",
                details=signs,
            )
        )
    if trend is not None:
        reports.extend(profile_reports())
        reports.extend(thm2_trend_reports(trend))
    return reports


def cmd_partitions(args: argparse.Namespace, config: BoundConfiguration) -> int:
    if not (args.chain or args.verify_thm3 or args.thm2_trend):
        reports = _partition_reports()
    else:
        reports = _partition_reports(args.chain, args.verify_thm3, args.thm2_trend)
    return _emit("partitions", reports, args.json, config.runtime.seed)


def _rigor_config(
    args: argparse.Namespace, config: BoundConfiguration
) -> RigorConfiguration:
    if getattr(args, "quick", False):
        quick = RigorConfiguration.create_quick()
        return RigorConfiguration(
            precision_bits=config.rigor.precision_bits,
            max_precision_bits=config.rigor.max_precision_bits,
            grid_points=quick.grid_points,
            s4_grid_points=quick.s4_grid_points,
        )
    return config.rigor


def _rigor_reports(
    args: argparse.Namespace, config: BoundConfiguration
) -> list[BoundReport]:
    from .envelopes import (
        check_sector_one_envelope,
        envelope_constants_from_rigor,
        envelope_reports,
    )
    from .rigor.identities import transformation_reports
    from .rigor.suite import paper_constants_suite, suite_values

    reports: list[BoundReport] = []
    if args.suite == "paper-constants":
        rigor = _rigor_config(args, config)
        suite = paper_constants_suite(rigor, config.runtime.threads)
        reports.extend(suite)
        if all(r.passed for r in suite):
            constants = envelope_constants_from_rigor(
                suite_values(suite), rigor.precision_bits
            )
            reports.extend(envelope_reports(constants))
            reports.append(check_sector_one_envelope(8, 40, constants))
    if args.transform_check:
        reports.extend(transformation_reports())
    return reports


def cmd_rigor(args: argparse.Namespace, config: BoundConfiguration) -> int:
    if args.suite is None and not args.transform_check:
        raise UnsupportedParameterError(
            "Give --suite paper-constants or --transform-check."
        )
    return _emit("rigor", _rigor_reports(args, config), args.json, config.runtime.seed)


def cmd_bounds(args: argparse.Namespace, config: BoundConfiguration) -> int:
    from .envelopes import theorem

    reports: list[BoundReport] = []
    if args.inner_product is not None:
        k, m = args.inner_product
        breakdown = theorem.inner_product_breakdown(k, m)
        print(breakdown.model_dump_json(indent=2), file=sys.stderr)
        reports.extend(theorem.inner_product_reports(max(k, 8)))
    if args.b_of_k is not None:
        frame, _ = theorem.b_of_k_scan([args.b_of_k])
        print(frame, file=sys.stderr)
        reports.extend(theorem.pre_c_reports())
        reports.append(theorem.b_of_k_agreement(args.b_of_k))
    if not reports:
        reports.extend(theorem.integral_constant_reports())
        reports.extend(theorem.pre_c_reports())
    return _emit("bounds", reports, args.json, config.runtime.seed)


def cmd_lfunc(args: argparse.Namespace, config: BoundConfiguration) -> int:
    from .envelopes import lfunc

    reports = lfunc.residue_reports(args.residue or LfuncDefaults.RESIDUE_POINTS)
    if args.suite:
        reports.extend(
            lfunc.lfunc_constants_suite(
                precision_bits=config.rigor.precision_bits
            )
        )
    return _emit("lfunc", reports, args.json, config.runtime.seed)


def cmd_certify(args: argparse.Namespace, config: BoundConfiguration) -> int:
    from .envelopes import certify_form, certify_level_one

    a = read_coefficient_vector(args.coeffs)
    if args.level == 1:
        report = certify_level_one(args.weight, a, args.nmax)
    else:
        report = certify_form(
            args.weight, a, args.nmax, precision_bits=config.rigor.precision_bits
        )
    return _emit("certify", [report], args.json, config.runtime.seed)


def _parse_sections(text: str) -> list[str]:
    sections = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in sections if s not in SECTIONS]
    if unknown or not sections:
        raise UnsupportedParameterError(
            f"Sections must be drawn from {', '.join(SECTIONS)}, got '{text}'."
        )
    return sorted(set(sections))


def cmd_reproduce_paper(args: argparse.Namespace, config: BoundConfiguration) -> int:
    sections = _parse_sections(args.sections)
    seed = config.runtime.seed
    reports: list[BoundReport] = []
    for section in sections:
        logger.info("reproducing section %s", section)
        if section == "3":
            reports.extend(_partition_reports())
        elif section == "4":
            from .envelopes import lfunc

            reports.extend(lfunc.residue_reports())
            reports.extend(
                lfunc.lfunc_constants_suite(precision_bits=config.rigor.precision_bits)
            )
        elif section == "5":
            mismatches = dual_construction_mismatches(config.series.truncation)
            reports.append(
                check_exact(
                    "independent constructions of psi, phi and F_2 agree",
                    sum(mismatches.values()),
                    provenance="dual construction",
                    details=mismatches,
                )
            )
            reports.append(check_bp_envelope(300))
            reports.extend(echelon_reports())
            for k in (8, 10, 12, 16, 20):
                reports.append(genfunc_crosscheck(k))
            rigor_args = argparse.Namespace(
                suite="paper-constants", transform_check=True, quick=args.quick
            )
            reports.extend(_rigor_reports(rigor_args, config))
        elif section == "6":
            from .envelopes import theorem_reports

            reports.extend(theorem_reports(seed=seed))
    return _emit("reproduce-paper", reports, args.json, seed)


# === Parser ===
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspbound",
        description="Certified coefficient bounds for level 2 cusp forms.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress, -vv for per-sample detail (stderr)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", type=Path, help="Write the report document here")

    p = add("expand", cmd_expand, "Write a q-expansion as n,coefficient CSV")
    p.add_argument(
        "--form", required=True, help="psi, phi, f2, s4, delta8, e<k>, f<k>_<m>, ..."
    )
    p.add_argument("--terms", type=int, default=50, help="Largest exponent written")
    p.add_argument("--out", type=Path)

    p = add("basis", cmd_basis, "Echelon basis of S_k(Gamma_0(2)) and its checks")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--terms", type=int, default=40)
    p.add_argument("--out-dir", type=Path)
    add_json(p)

    p = add("partitions", cmd_partitions, "Partition chain and Hauptmodul bounds")
    p.add_argument("--chain", action="store_true", help="Doubling chain and Q_1 checks")
    p.add_argument("--verify-thm3", type=int, metavar="N", help="Envelopes for n <= N")
    p.add_argument("--thm2-trend", type=int, metavar="N", help="Ratio trend up to N")
    add_json(p)

    p = add("rigor", cmd_rigor, "Certified evaluation table and identities")
    p.add_argument("--suite", choices=["paper-constants"])
    p.add_argument("--transform-check", action="store_true")
    p.add_argument("--quick", action="store_true", help="Coarse grids for smoke runs")
    add_json(p)

    p = add("bounds", cmd_bounds, "Integral, Petersson norm and B(k) constants")
    p.add_argument("--inner-product", type=int, nargs=2, metavar=("K", "M"))
    p.add_argument("--b-of-k", type=int, metavar="K")
    add_json(p)

    p = add("lfunc", cmd_lfunc, "Symmetric square L-function constants")
    p.add_argument("--suite", action="store_true")
    p.add_argument("--residue", type=int, nargs="+", metavar="X")
    add_json(p)

    p = add("certify", cmd_certify, "Certify a form against the coefficient bound")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--coeffs", type=Path, required=True)
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--level", type=int, choices=[1, 2], default=2)
    add_json(p)

    p = add("reproduce-paper", cmd_reproduce_paper, "Run every reproduction check")
    p.add_argument("--sections", default=",".join(SECTIONS))
    p.add_argument("--quick", action="store_true", help="Coarse grids for smoke runs")
    add_json(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args.verbose)
    try:
        config = BoundConfiguration.from_environment()
        return args.handler(args, config)
    except (
        CertificationError,
        IndeterminateComparisonError,
        NonSummableTailError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (CuspBoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
