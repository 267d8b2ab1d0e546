"""
main.py

Command-line entry point for flipcount.

Subcommands:
- gen: write a generated point set in the standard point file format
- analyze: flippability report for a triangulation of a point set (the initial
  one unless --triangulation names a JSON file)
- enumerate: exact triangulation and crossing-free graph counts
- bounds: per-point bases of every bound, or the B(c) curve as CSV
- verify: property suites over generated and seeded random sets

Exit codes: 0 pass, 1 violation, 2 usage or input error.
"""

import argparse
import logging
import math
import sys
from typing import List, Optional, TextIO

import config
from bounds.theorems import all_bounds, curve_csv, emit_curve, pgc_bound, pgcc_bound, pgccc_bound, quadrangulation_bound
from enumeration.plane_graphs import (
    SegmentTable,
    count_quadrangulations,
    edge_count_histogram,
    enumerate_plane_graphs,
    forest_counts,
    histogram_csv,
    parse_predicate,
)
from enumeration.support import verify_support_identity
from enumeration.triangulations import enumerate_triangulations
from flippability.decomposition import exact_max_ps_flippable, greedy_ps_flippable
from flippability.flippable import flippable_set, simultaneously_flippable
from flippability.separability import decomposition_check, separability_report
from generators.generators import generate
from geometry.pointset import PointSet, format_points, read_point_file
from stem.exceptions import (
    BoundViolation,
    ConfigError,
    DomainError,
    FlipcountError,
    IdentityViolation,
    InstanceTooLarge,
    ValidationError,
)
from stem.jsonutils import from_json, to_json
from stem.logging import log_duration, log_error, log_info, setup_logging_config
from stem.models import AnalysisReport, Caps, CountReport, GeneratorSpec, RunConfig
from triangulation.triangulation import (
    Triangulation,
    build_initial,
    check_invariants,
    triangulation_from_dict,
    triangulation_to_dict,
)
from verification.suites import SUITE_ALIASES, SUITES, SuiteContext, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


# --- Argument parsing ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", help="Cap overrides, e.g. pg=10,tri=12 (kinds: pg, tri, ps, mis)")
    common.add_argument("--log-level", default=None, help="Logging level (default from FLIPCOUNT_LOG_LEVEL)")
    common.add_argument("--output", "-o", default=None, help="Write output to this file instead of stdout")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", "-i", help="Point file: one 'x y' per line, '#' comments")
    source.add_argument("--kind", choices=["convex", "low-flip", "double-chain", "random"], help="Generate instead of reading")
    source.add_argument("--n", type=int, help="Number of points to generate")
    source.add_argument("--seed", type=int, default=0, help="Seed for --kind random")

    parser = argparse.ArgumentParser(prog="flipcount", description="Flippability analysis and exact plane-graph counting")
    parser.add_argument("--version", action="version", version=f"flipcount {config.APP_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("gen", parents=[common, source], help="Generate a point file")

    p_analyze = sub.add_parser("analyze", parents=[common, source], help="Flippability report as JSON")
    p_analyze.add_argument("--triangulation", "-t", help="JSON triangulation of the points (default: the initial one)")

    p_enum = sub.add_parser("enumerate", parents=[common, source], help="Exact counts as JSON or CSV")
    p_enum.add_argument("--predicate", help="all, exactly:M, at-most:M, at-least:M, forest, spanning-tree, "
                                            "k-forest:K, quadrangulation, triangulation")
    p_enum.add_argument("--format", choices=["json", "csv"], default="json", help="csv emits the m,count histogram")
    p_enum.add_argument("--parallel", action="store_true", help="Use the process pool")
    p_enum.add_argument("--verify", action="store_true", help="Also check the support identity and pg/tri ratio bound")

    p_bounds = sub.add_parser("bounds", parents=[common], help="Evaluate bound constants")
    p_bounds.add_argument("--all", action="store_true", help="Every base (default when no other flag is given)")
    p_bounds.add_argument("--curve", nargs=3, type=float, metavar=("MIN", "MAX", "STEP"), help="Emit c,t,B as CSV")
    p_bounds.add_argument("--quadrangulation", action="store_true", help="Quadrangulation base only")
    p_bounds.add_argument("--c", type=float, help="Bases for exactly / at most / at least cN edges")

    p_verify = sub.add_parser("verify", parents=[common], help="Run property suites")
    p_verify.add_argument("--suite", action="append", choices=sorted(SUITES) + sorted(SUITE_ALIASES) + ["all"], help="Repeatable; default all")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--max-n", type=int, default=12, help="Largest N any suite may use")
    return parser


def resolve_caps(args: argparse.Namespace) -> Caps:
    return config.parse_caps(args.caps, config.CAPS) if args.caps else config.CAPS


def resolve_run_config(args: argparse.Namespace, caps: Caps) -> RunConfig:
    generator = None
    if getattr(args, "kind", None):
        if args.n is None:
            raise ConfigError("--kind needs --n")
        generator = GeneratorSpec(kind=args.kind, n=args.n, seed=args.seed)
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        generator=generator,
        caps=caps,
        output_format=getattr(args, "format", "json"),
        parallel=getattr(args, "parallel", False),
        seed=getattr(args, "seed", 0) or 0,
    )


def load_points(run: RunConfig) -> PointSet:
    if run.input_path:
        return read_point_file(run.input_path)
    if run.generator:
        return generate(run.generator)[0]
    raise ConfigError("give --input FILE or --kind KIND --n N")


# --- Commands ---

def cmd_gen(run: RunConfig) -> str:
    if run.generator is None:
        raise ConfigError("gen needs --kind and --n")
    ps, _ = generate(run.generator)
    return format_points(ps)


def load_triangulation(ps: PointSet, path: Optional[str]) -> Triangulation:
    if path is None:
        return build_initial(ps)
    try:
        with open(path, encoding="utf-8") as f:
            data = from_json(f.read(), key="triangulation")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    if not isinstance(data, dict) or "edges" not in data:
        raise ConfigError(f"{path}: expected a triangulation with n_points and edges")
    try:
        tri = triangulation_from_dict(ps, data)
        check_invariants(tri)
        return tri
    except (IdentityViolation, KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"{path}: not a triangulation of these points ({e})") from e


def cmd_analyze(run: RunConfig, triangulation_path: Optional[str] = None) -> str:
    ps = load_points(run)
    tri = load_triangulation(ps, triangulation_path)
    caps = run.caps
    with log_duration("analyze", __name__):
        flippable = flippable_set(tri)
        simultaneous, exact = simultaneously_flippable(tri, caps.mis)
        removed, decomposition = greedy_ps_flippable(tri)
        ps_exact = len(exact_max_ps_flippable(tri, caps.ps)) if ps.N <= caps.ps else None
        report = separability_report(decomposition)
        diagnostics = decomposition_check(decomposition, report)

    lower_bounds = {
        "flip": math.ceil(ps.N / 2) - 2,
        "flip_s": max(0, math.ceil((ps.N - 4) / 5)),
        "ps": max(ps.N // 2 - 2, ps.h - 3),
    }
    analysis = AnalysisReport(
        n_points=ps.N,
        hull_size=ps.h,
        interior=ps.n,
        flip=len(flippable),
        flip_s=len(simultaneous),
        flip_s_exact=exact,
        ps_greedy=len(removed),
        ps_exact=ps_exact,
        lower_bounds=lower_bounds,
        separability=report,
        diagnostics=diagnostics,
        triangulation=triangulation_to_dict(tri),
    )
    for name, observed in (("flip", analysis.flip), ("flip_s", analysis.flip_s), ("ps", analysis.ps_greedy)):
        if (name != "flip_s" or exact) and observed < lower_bounds[name]:
            raise BoundViolation(f"{name} lower bound", f"{observed} < {lower_bounds[name]}")
    return to_json(analysis, indent=2)


def cmd_enumerate(run: RunConfig, predicate_text: Optional[str], verify: bool) -> str:
    ps = load_points(run)
    caps = run.caps
    with log_duration("enumerate", __name__):
        if predicate_text:
            report = enumerate_plane_graphs(
                ps, parse_predicate(predicate_text), caps.pg, run.parallel, tri_cap=caps.tri
            )
        else:
            report = CountReport(n_points=ps.N, hull_size=ps.h)
            if ps.N <= caps.tri:
                report.tri = len(enumerate_triangulations(ps, caps.tri, run.parallel))
                if ps.N > caps.pg:
                    log_info(
                        f"N={ps.N} exceeds pg cap {caps.pg}: reporting tri only "
                        f"(raise with --caps pg={ps.N} for pg, forests and quadrangulations)",
                        __name__,
                    )
                    return _enumerate_output(run, report, verify, ps)
            table = SegmentTable.build(ps)
            report.by_edge_count = edge_count_histogram(ps, caps.pg, run.parallel, table=table)
            report.pg = sum(report.by_edge_count.values())
            report.forests = forest_counts(ps, caps.pg, run.parallel, table=table)
            report.st = report.forests.by_k.get(1, 0)
            report.quadrangulations = count_quadrangulations(ps, caps.pg)
    return _enumerate_output(run, report, verify, ps)


def _enumerate_output(run: RunConfig, report: CountReport, verify: bool, ps: PointSet) -> str:
    if verify:
        with log_duration("support identity", __name__):
            report.verified = verify_support_identity(ps, run.caps.pg, run.caps.tri, run.parallel)
    if run.output_format == "csv":
        if not report.by_edge_count:
            raise ConfigError(f"--format csv needs the edge-count histogram; predicate '{report.predicate}' has none")
        return histogram_csv(report.by_edge_count)
    return to_json(report, indent=2)


def cmd_bounds(args: argparse.Namespace) -> str:
    if args.curve:
        c_min, c_max, step = args.curve
        return curve_csv(emit_curve(c_min, c_max, step))
    reports = []
    if args.quadrangulation:
        reports.append(quadrangulation_bound())
    if args.c is not None:
        reports.extend([pgc_bound(args.c), pgcc_bound(args.c), pgccc_bound(args.c)])
    if args.all or not reports:
        reports = all_bounds() + [r for r in reports if r.name != "quadrangulations"]
    return to_json(reports, indent=2)


def cmd_verify(args: argparse.Namespace, caps: Caps) -> tuple[str, bool]:
    ctx = SuiteContext(seed=args.seed, max_n=args.max_n, caps=caps)
    summary = run_suites(args.suite or ["all"], ctx)
    payload = {
        "passed": summary.passed,
        "suites": summary.suites,
        "checks": len(summary.checks),
        "failures": [f.model_dump() for f in summary.failures],
        "skipped": [f"{c.suite}: {c.name}" for c in summary.skipped],
        "seconds": round(summary.seconds, 3),
    }
    return to_json(payload, indent=2), summary.passed


# --- Entry ---

def _emit(text: str, output: Optional[str], stream: TextIO) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text if text.endswith("\n") else text + "\n")
        log_info(f"Wrote {output}", __name__)
    else:
        stream.write(text if text.endswith("\n") else text + "\n")


def _fail(message: str, code: int) -> int:
    log_error(message, __name__)
    return code


def main(argv: Optional[List[str]] = None, stdout: TextIO = sys.stdout) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging_config(args.log_level or config.LOG_LEVEL, config.LOG_FILE)

    passed = True
    try:
        caps = resolve_caps(args)
        if args.command == "bounds":
            text = cmd_bounds(args)
        elif args.command == "verify":
            text, passed = cmd_verify(args, caps)
        else:
            run = resolve_run_config(args, caps)
            logger.debug(f"Run config: {run.model_dump()}")
            if args.command == "gen":
                text = cmd_gen(run)
            elif args.command == "analyze":
                text = cmd_analyze(run, args.triangulation)
            else:
                text = cmd_enumerate(run, args.predicate, args.verify)
    except (IdentityViolation, BoundViolation) as e:
        return _fail(f"violation: {e}", EXIT_VIOLATION)
    except (InstanceTooLarge, ValidationError, ConfigError, DomainError, ValueError) as e:
        return _fail(f"error: {e}", EXIT_USAGE)
    except FlipcountError as e:
        return _fail(f"unexpected failure: {e}", EXIT_VIOLATION)

    # to_json signals a serialization failure with an empty string
    if not text:
        return _fail(f"{args.command}: report could not be serialized", EXIT_VIOLATION)
    try:
        _emit(text, args.output, stdout)
    except OSError as e:
        return _fail(f"error: cannot write {args.output}: {e}", EXIT_USAGE)
    return EXIT_OK if passed else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
