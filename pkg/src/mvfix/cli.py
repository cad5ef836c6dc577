"""Command line interface.

Subcommands: ``certify`` sweeps pairs and reports the empirical
contraction modulus, ``solve`` runs the nearest-point iteration and
validates its decay law, ``paper-demo`` audits the built-in worked
example against its published values, and ``check-f`` probes the axioms
of a gauge function.

Reports carry a human-readable section followed by a fenced
``---machine---`` block of ``key=value`` rows; floats are printed with
17 significant digits so they round-trip to the exact binary64 value,
and repeated runs with the same seed produce byte-identical blocks.

Exit codes: 0 ok, 1 error, 2 iteration budget exhausted, 3 certificate
violated, 4 certificate vacuous.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .analysis import MODES, CertificateReport, certify
from .config import (
    ProblemConfig,
    build_ffunction,
    build_integrand,
    build_map,
    load_config,
)
from .errors import ConfigError, MvfixError
from .ffunctions import F_KINDS, FFunction, check_f1, check_f2_f3, check_f4, f_eval
from .integrand import integrand_label
from .maps import MultiMap
from .sets1d import CompactSet
from .solver import (
    FixedPointFound,
    IterationError,
    IterationTrace,
    MaxIterReached,
    TraceVerdict,
    iterate,
    validate_trace,
)
from .worked_example import WorkedExampleReport, run_worked_example

__all__ = [
    "EXIT_OK",
    "EXIT_ERROR",
    "EXIT_BUDGET",
    "EXIT_VIOLATED",
    "EXIT_VACUOUS",
    "TRACE_COLUMNS",
    "fmt_value",
    "machine_block",
    "extract_machine_block",
    "write_trace_csv",
    "read_trace_csv",
    "main",
    "run",
]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2
EXIT_VIOLATED = 3
EXIT_VACUOUS = 4

TRACE_COLUMNS = ("n", "x", "next", "d_to_set", "gamma", "F_gamma", "n_gamma_k")


def fmt_value(v) -> str:
    """Render one machine-block value; floats keep 17 significant digits."""
    if v is None:
        return "undefined"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def machine_block(rows: Sequence[tuple[str, object]]) -> str:
    lines = ["---machine---"]
    lines.extend(f"{key}={fmt_value(value)}" for key, value in rows)
    lines.append("---end---")
    return "\n".join(lines) + "\n"


def extract_machine_block(text: str) -> dict[str, str]:
    """Parse the fenced key=value block out of a report."""
    inside = False
    rows: dict[str, str] = {}
    for line in text.splitlines():
        if line.strip() == "---machine---":
            inside = True
            continue
        if line.strip() == "---end---":
            break
        if inside and "=" in line:
            key, _, value = line.partition("=")
            rows[key] = value
    return rows


def write_trace_csv(path: Path, trace: IterationTrace, F: FFunction, k: float) -> None:
    """Serialize the recorded steps; every float round-trips exactly."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for s in trace.steps:
            writer.writerow(
                [
                    s.n,
                    fmt_value(s.x),
                    fmt_value(s.next_point),
                    fmt_value(s.d_to_set),
                    fmt_value(s.gamma),
                    fmt_value(f_eval(F, s.gamma)),
                    fmt_value(s.n * s.gamma**k),
                ]
            )


def read_trace_csv(path: Path) -> list[tuple[int, float, float, float, float, float, float]]:
    """Read a trace CSV back; raises on a header mismatch."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != TRACE_COLUMNS:
            raise MvfixError(f"unexpected trace header {header!r}")
        rows = []
        for row in reader:
            rows.append((int(row[0]),) + tuple(float(v) for v in row[1:]))
    return rows


def _describe_domain(domain: CompactSet) -> str:
    return repr(domain)


def _write_report(out_dir: Path | None, filename: str, text: str) -> None:
    if out_dir is None:
        return
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / filename, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _format_certify_report(
    cfg: ProblemConfig, T: MultiMap, report: CertificateReport
) -> str:
    lines = [
        "contraction certificate",
        "=======================",
        f"map: {T.describe()}",
        f"domain: {_describe_domain(T.domain)}",
        f"mode: {report.mode}   F: {cfg.f.kind} (k = {cfg.f.k:g})   integrand: "
        f"{integrand_label(build_integrand(cfg))}",
        f"pairs: {report.evaluated_pairs} evaluated, {report.vacuous_pairs} vacuous, "
        f"{len(report.errors)} errors, {len(report.violations)} violations",
    ]
    if report.tau_star is None:
        lines.append("tau_star: undefined (no pair produced distinct value sets)")
    else:
        lines.append(f"tau_star: {fmt_value(report.tau_star)}")
        w = report.worst_pair
        lines.append(
            f"worst pair: x = {fmt_value(w.x)}, y = {fmt_value(w.y)} "
            f"(h = {fmt_value(w.h)}, m = {fmt_value(w.m)}, margin = {fmt_value(w.margin)})"
        )
    if report.errors:
        lines.append("first error: x = {}, y = {}: {}".format(*report.errors[0]))
    lines.append("note: empirical modulus over sampled pairs, not a proof")
    lines.append("")

    rows: list[tuple[str, object]] = [
        ("command", "certify"),
        ("mode", report.mode),
        ("seed", report.seed),
        ("grid_size", report.grid_size),
        ("random_pairs", report.random_pairs),
        ("evaluated_pairs", report.evaluated_pairs),
        ("vacuous_pairs", report.vacuous_pairs),
        ("error_count", len(report.errors)),
        ("violation_count", len(report.violations)),
        ("tau_star", report.tau_star),
    ]
    if report.worst_pair is not None:
        rows.extend(
            [
                ("worst_x", report.worst_pair.x),
                ("worst_y", report.worst_pair.y),
                ("worst_h", report.worst_pair.h),
                ("worst_m", report.worst_pair.m),
                ("worst_margin", report.worst_pair.margin),
            ]
        )
    lines.append(machine_block(rows))
    return "\n".join(lines)


def _certify_exit_code(report: CertificateReport) -> int:
    if report.tau_star is None:
        return EXIT_ERROR if report.errors else EXIT_VACUOUS
    if report.violations:
        return EXIT_VIOLATED
    return EXIT_OK


def cmd_certify(cfg: ProblemConfig, out_dir: Path | None) -> int:
    T = build_map(cfg)
    report = certify(
        T,
        build_ffunction(cfg),
        build_integrand(cfg),
        grid_size=cfg.grid_size,
        random_pairs=cfg.random_pairs,
        seed=cfg.seed,
        mode=cfg.mode,
    )
    text = _format_certify_report(cfg, T, report)
    print(text, end="")
    _write_report(out_dir, "certify_report.txt", text)
    return _certify_exit_code(report)


def _outcome_fields(trace: IterationTrace) -> tuple[str, float]:
    outcome = trace.outcome
    if isinstance(outcome, FixedPointFound):
        return "fixed_point_found", outcome.x
    if isinstance(outcome, MaxIterReached):
        return "max_iter_reached", outcome.last_x
    return "error", outcome.last_x


def _format_solve_report(
    cfg: ProblemConfig,
    T: MultiMap,
    trace: IterationTrace,
    verdict: TraceVerdict | None,
    skip_reason: str | None,
    trace_path: Path | None,
) -> str:
    name, final_x = _outcome_fields(trace)
    lines = [
        "fixed-point iteration",
        "=====================",
        f"map: {T.describe()}",
        f"domain: {_describe_domain(T.domain)}",
        f"x0 = {fmt_value(cfg.x0)}   tol = {fmt_value(cfg.tol)}   max_iter = {cfg.max_iter}",
        f"outcome: {name}",
        f"final x: {fmt_value(final_x)}",
        f"recorded steps: {len(trace.steps)}",
    ]
    if isinstance(trace.outcome, FixedPointFound):
        lines.append(f"halted at step {trace.outcome.step}")
    if isinstance(trace.outcome, IterationError):
        lines.append(f"error: {trace.outcome.detail}")
    if trace_path is not None:
        lines.append(f"trace written to {trace_path.name}")
    if verdict is None:
        lines.append(f"validation: skipped ({skip_reason})")
    else:
        lines.append(
            "validation: decay_chain_ok = {}, n1 = {}, rate_bound_ok = {}".format(
                fmt_value(verdict.decay_chain_ok),
                fmt_value(verdict.n1),
                fmt_value(verdict.rate_bound_ok),
            )
        )
        if verdict.first_failure is not None:
            lines.append(f"first decay failure at n = {verdict.first_failure}")
        lines.append(f"cauchy tail bound: {fmt_value(verdict.cauchy_tail_bound)}")
    lines.append("")

    rows: list[tuple[str, object]] = [
        ("command", "solve"),
        ("outcome", name),
        ("final_x", final_x),
        ("steps", len(trace.steps)),
        ("tol", cfg.tol),
        ("max_iter", cfg.max_iter),
    ]
    if verdict is None:
        rows.append(("validated", "skipped"))
        rows.append(("decay_chain_ok", "skipped"))
        rows.append(("rate_bound_ok", "skipped"))
    else:
        rows.extend(
            [
                ("validated", True),
                ("decay_chain_ok", verdict.decay_chain_ok),
                ("first_failure", verdict.first_failure),
                ("n1", verdict.n1),
                ("rate_bound_ok", verdict.rate_bound_ok),
                ("cauchy_tail_bound", verdict.cauchy_tail_bound),
            ]
        )
    lines.append(machine_block(rows))
    return "\n".join(lines)


def cmd_solve(cfg: ProblemConfig, out_dir: Path | None) -> int:
    if cfg.x0 is None:
        raise ConfigError("solve requires 'x0' in the configuration")
    T = build_map(cfg)
    F = build_ffunction(cfg)
    f = build_integrand(cfg)
    trace = iterate(T, cfg.x0, tol=cfg.tol, max_iter=cfg.max_iter, f=f)
    trace = replace(
        trace, params=replace(trace.params, f_kind=cfg.f.kind, tau=cfg.tau, k=cfg.f.k)
    )

    verdict: TraceVerdict | None = None
    skip_reason: str | None = None
    positive_steps = sum(1 for s in trace.steps if s.gamma > 0.0)
    if cfg.tau is None:
        skip_reason = "no tau configured"
    elif positive_steps < 2:
        skip_reason = f"only {positive_steps} positive-gamma steps recorded"
    else:
        verdict = validate_trace(trace, F, cfg.tau, k=cfg.f.k)

    trace_path = None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        trace_path = out_dir / "trace.csv"
        write_trace_csv(trace_path, trace, F, cfg.f.k)

    text = _format_solve_report(cfg, T, trace, verdict, skip_reason, trace_path)
    print(text, end="")
    _write_report(out_dir, "solve_report.txt", text)

    if isinstance(trace.outcome, IterationError):
        return EXIT_ERROR
    if isinstance(trace.outcome, MaxIterReached):
        return EXIT_BUDGET
    if verdict is not None and not (verdict.decay_chain_ok and verdict.rate_bound_ok):
        return EXIT_VIOLATED
    return EXIT_OK


def _format_demo_report(report: WorkedExampleReport) -> str:
    lines = [
        "worked example audit: T(x) = [x/4, (x+1)/2] on [0, 1]",
        "=====================================================",
    ]
    for line in report.lines:
        if line.published is not None:
            lines.append(
                f"{line.label} = {fmt_value(line.value)} "
                f"(paper: {line.published} -- {line.note})"
            )
        else:
            lines.append(f"{line.label} = {fmt_value(line.value)} ({line.note})")
    lines.append("")
    lines.append("step-size table, h_n = 1/(4 n (n+1)), phi = 1, F = ln, k = 0.5:")
    lines.append(f"{'n':>4} {'h':>12} {'gamma':>12} {'F(gamma)':>12} {'n*g^k':>12} {'g^k*F':>12}")
    for row in report.probe.rows:
        lines.append(
            f"{row.n:>4} {row.h:>12.6g} {row.gamma:>12.6g} {row.f_gamma:>12.6g} "
            f"{row.n_gamma_k:>12.6g} {row.gamma_k_f_gamma:>12.6g}"
        )
    lines.append(
        f"F(gamma_n) strictly decreasing: {fmt_value(report.probe.f_gamma_decreasing)}; "
        f"|gamma^k F| eventually decreasing: {fmt_value(report.probe.weight_decreasing)}"
    )
    lines.append("")
    lines.append("value-set convergence toward T(0) = [0, 1/2]:")
    for n, dist in report.set_limit_rows:
        lines.append(f"  n = {n:>9}: hausdorff(T(1/n), T(0)) = {fmt_value(dist)}")
    lines.append("")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    lines.append("")

    rows: list[tuple[str, object]] = [("command", "paper-demo")]
    for line in report.lines:
        rows.append((line.key, line.value))
        rows.append((line.key + "_ok", line.matches))
    rows.append(("f_gamma_decreasing", report.probe.f_gamma_decreasing))
    rows.append(("weight_decreasing", report.probe.weight_decreasing))
    rows.append(("overall", "pass" if report.passed else "fail"))
    lines.append(machine_block(rows))
    return "\n".join(lines)


def cmd_paper_demo(out_dir: Path | None) -> int:
    report = run_worked_example()
    text = _format_demo_report(report)
    print(text, end="")
    _write_report(out_dir, "paper_demo_report.txt", text)
    return EXIT_OK if report.passed else EXIT_VIOLATED


def cmd_check_f(kind: str, k: float, out_dir: Path | None) -> int:
    F = FFunction(kind, k_witness=k)
    v1 = check_f1(F)
    v23 = check_f2_f3(F, k)
    v4 = check_f4(F, CompactSet([(1.0, 2.0), (5.0, 5.0)]))
    lines = [
        f"gauge function check: kind = {kind}, k = {k:g}",
        f"(F1) strictly increasing on the default grid: "
        f"{'pass' if v1.passed else f'fail at pair {v1.first_violation}'}",
        f"(F2) {'pass' if v23.f2_passed else 'fail'}: {v23.f2_detail}",
        f"(F3) {'pass' if v23.f3_passed else 'fail'}: {v23.f3_detail}",
        f"(F4) infimum commutes on [1, 2] U {{5}}: {'pass' if v4.passed else 'fail'} "
        f"(F(min) = {fmt_value(v4.lhs)}, grid min = {fmt_value(v4.rhs)})",
        "",
    ]
    all_passed = v1.passed and v23.passed and v4.passed
    rows = [
        ("command", "check-f"),
        ("kind", kind),
        ("k", k),
        ("f1_passed", v1.passed),
        ("f2_passed", v23.f2_passed),
        ("f3_passed", v23.f3_passed),
        ("f4_passed", v4.passed),
        ("overall", "pass" if all_passed else "fail"),
    ]
    lines.append(machine_block(rows))
    text = "\n".join(lines)
    print(text, end="")
    _write_report(out_dir, "check_f_report.txt", text)
    return EXIT_OK if all_passed else EXIT_VIOLATED


def _apply_overrides(cfg: ProblemConfig, args: argparse.Namespace) -> ProblemConfig:
    if getattr(args, "mode", None) is not None:
        cfg = replace(cfg, mode=args.mode)
    if getattr(args, "seed", None) is not None:
        cfg = replace(cfg, seed=args.seed)
    return cfg


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--mode",
        choices=MODES,
        default=None,
        help="pair distance mode: two-sided hausdorff or one-sided excess",
    )
    common.add_argument("--seed", type=int, default=None, help="override the sweep seed")
    common.add_argument(
        "--out",
        type=Path,
        default=None,
        metavar="DIR",
        help="directory to write report and trace files into",
    )
    parser = argparse.ArgumentParser(
        prog="mvfix",
        description="certify and solve multivalued integral-type contractions on the line",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser(
        "certify",
        parents=[common],
        help="sweep pairs and report the empirical contraction modulus",
    )
    p.add_argument("config", type=Path, help="problem configuration JSON")
    p = sub.add_parser(
        "solve",
        parents=[common],
        help="run the nearest-point iteration and validate its decay law",
    )
    p.add_argument("config", type=Path, help="problem configuration JSON")
    sub.add_parser(
        "paper-demo",
        parents=[common],
        help="audit the built-in worked example against its published values",
    )
    p = sub.add_parser(
        "check-f", parents=[common], help="probe the axioms of a gauge function"
    )
    p.add_argument("--kind", choices=F_KINDS, required=True)
    p.add_argument("--k", type=float, default=0.5, help="witness exponent in (0, 1)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "certify":
            cfg = _apply_overrides(load_config(args.config), args)
            return cmd_certify(cfg, args.out)
        if args.command == "solve":
            cfg = _apply_overrides(load_config(args.config), args)
            return cmd_solve(cfg, args.out)
        if args.command == "paper-demo":
            return cmd_paper_demo(args.out)
        return cmd_check_f(args.kind, args.k, args.out)
    except MvfixError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())
