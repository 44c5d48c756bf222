"""Command-line front end.

Subcommands: analyze (one signature + map), enumerate (all maps for a
signature), census (all signatures and maps at one order), verify (oracle
cross-checks), max-order (largest order acting at a given genus).

Exit codes: 0 success / oracle agreement, 2 parse or configuration error,
3 oracle disagreement, 4 validation failure on analyze.  Results go to
stdout; json and csv output carry no extraneous text.  Diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass

from .census import (
    CSV_COLUMNS,
    _row_from_epi,
    census_row_csv,
    enumerate_epimorphisms,
    max_cyclic_order,
    run_census,
    write_census_csv,
    write_census_jsonl,
)
from .epimorphism import format_map_text, parse_map_text, validate
from .fixedpoints import full_report, twists_field
from .oracle import cross_check, involution_sweep
from .signature import ParseError, format_signature, parse_signature

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3
EXIT_INVALID = 4


@dataclass
class CliConfig:
    subcommand: str
    fmt: str = "table"
    signature: str | None = None
    order: int | None = None
    map_text: str = ""
    up_to_aut: bool = False
    verify: bool = False
    max_genus: int | None = None
    workers: int = 1
    all_v: bool = False
    output: str | None = None
    genus: int | None = None
    cap: int = 12


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="necfix",
        description="Fixed points, ovals and twist types of cyclic actions on "
        "closed non-orientable surfaces, from NEC signature data.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p, choices=("table", "json", "csv")):
        p.add_argument("--format", default="table", choices=choices, dest="fmt")

    p = sub.add_parser("analyze", help="validate one map and report its fixed-point data")
    p.add_argument("signature")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--map", default="", dest="map_text")
    add_format(p)

    p = sub.add_parser("enumerate", help="list all valid maps for a signature")
    p.add_argument("signature")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-aut", action="store_true", dest="up_to_aut")
    add_format(p)

    p = sub.add_parser("census", help="enumerate signatures and maps at one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-genus", type=int, required=True, dest="max_genus")
    p.add_argument("--up-to-aut", action="store_true", dest="up_to_aut")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="write rows to a file instead of stdout")
    add_format(p)

    p = sub.add_parser("verify", help="brute-force oracle cross-checks")
    p.add_argument("signature", nargs="?")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--map", default="", dest="map_text")
    p.add_argument("--all-v", action="store_true", dest="all_v",
                   help="sweep every connecting image v in [0, order)")
    add_format(p, choices=("table", "json"))

    p = sub.add_parser("max-order", help="largest cyclic order acting at a genus")
    p.add_argument("genus", type=int)
    p.add_argument("--cap", type=int, default=12)
    add_format(p, choices=("table", "json"))

    return parser


def _print_validation(report, fmt):
    if fmt == "json":
        return
    for check in report.checks:
        status = "ok  " if check.passed else "FAIL"
        print(f"{status} {check.name:<22} {check.detail}")


def _print_report_table(sig_text, order, report):
    print(f"signature {sig_text}  order {order}  kernel genus {report.kernel_genus}")
    print("power  order  isolated")
    for row in report.per_power:
        print(f"t^{row.i:<4} {row.order:>5} {row.isolated_count:>9}")
    inv = report.involution
    if inv is None:
        print("no involution (odd order)")
        return
    cycles = twists_field(report) or "-"
    eq = "equality" if inv.scherrer_equality else "strict"
    print(
        f"involution: F={inv.isolated_total} V={inv.oval_total} [{cycles}] "
        f"Scherrer {inv.scherrer_lhs} <= {inv.scherrer_rhs} ({eq})"
    )


def _cmd_analyze(config):
    sig = parse_signature(config.signature)
    epi = parse_map_text(sig, config.order, config.map_text)
    validation = validate(epi)
    if not validation.valid:
        if config.fmt == "json":
            print(json.dumps({"validation": asdict(validation), "report": None}, sort_keys=True))
        else:
            _print_validation(validation, config.fmt)
        return EXIT_INVALID
    report = full_report(epi)
    if config.fmt == "json":
        print(
            json.dumps(
                {"validation": asdict(validation), "report": asdict(report)}, sort_keys=True
            )
        )
    elif config.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerow(census_row_csv(_row_from_epi(epi)))
    else:
        _print_validation(validation, config.fmt)
        _print_report_table(format_signature(sig), config.order, report)
    return EXIT_OK


def _cmd_enumerate(config):
    sig = parse_signature(config.signature)
    epis = enumerate_epimorphisms(sig, config.order, up_to_aut=config.up_to_aut)
    sig_text = format_signature(sig)
    if config.fmt == "json":
        payload = {
            "signature": sig_text,
            "modulus": config.order,
            "count": len(epis),
            "maps": [
                {
                    "map": format_map_text(e),
                    "x_images": list(e.x_images),
                    "e_images": list(e.e_images),
                    "c_images": list(e.c_images),
                    "orient_images": list(e.orient_images),
                }
                for e in epis
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    elif config.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["signature", "M", "images"])
        for e in epis:
            writer.writerow([sig_text, str(config.order), format_map_text(e)])
    else:
        print(f"{len(epis)} valid map(s) for {sig_text} onto C_{config.order}")
        for e in epis:
            print(f"  {format_map_text(e)}")
    return EXIT_OK


def _cmd_census(config):
    rows, disagreements = run_census(
        config.order,
        config.max_genus,
        up_to_aut=config.up_to_aut,
        verify=config.verify,
        workers=config.workers,
    )
    sink = open(config.output, "w", encoding="utf-8") if config.output else sys.stdout
    try:
        if config.fmt == "json":
            write_census_jsonl(rows, sink)
        elif config.fmt == "csv":
            write_census_csv(rows, sink)
        else:
            print(f"census: order {config.order}, max genus {config.max_genus}, "
                  f"{len(rows)} row(s)", file=sink)
            for row in rows:
                inv = row.report.involution
                fv = f"F={inv.isolated_total} V={inv.oval_total}" if inv else "no involution"
                print(
                    f"  {format_signature(row.signature)} M={row.modulus} "
                    f"{format_map_text(row.epi)} p={row.kernel_genus} {fv}"
                    f"{' *' if row.scherrer_equality else ''}",
                    file=sink,
                )
    finally:
        if config.output:
            sink.close()
    if disagreements:
        print(f"oracle disagreement: {disagreements[0]}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_verify(config):
    if config.all_v:
        if config.order % 2:
            print(f"--all-v needs an even order, got {config.order}", file=sys.stderr)
            return EXIT_USAGE
        transcript = involution_sweep(config.order)
        if config.fmt == "json":
            print(json.dumps(asdict(transcript), sort_keys=True))
        else:
            print(f"order {config.order}: swept v=0..{config.order - 1}, "
                  f"agreement={transcript.agreement}")
    else:
        if not config.signature:
            print("verify needs a signature (or --all-v)", file=sys.stderr)
            return EXIT_USAGE
        sig = parse_signature(config.signature)
        epi = parse_map_text(sig, config.order, config.map_text)
        validation = validate(epi)
        if not validation.valid:
            print(
                f"invalid epimorphism (failed checks: {', '.join(validation.failed())})",
                file=sys.stderr,
            )
            return EXIT_USAGE
        transcript = cross_check(epi)
        if config.fmt == "json":
            print(json.dumps(asdict(transcript), sort_keys=True))
        else:
            print(f"{format_signature(sig)} M={config.order}: agreement={transcript.agreement}")
    if not transcript.agreement:
        print(f"first disagreement: {transcript.disagreements[0]}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_max_order(config):
    largest = max_cyclic_order(config.genus, cap=config.cap)
    if config.fmt == "json":
        print(json.dumps({"genus": config.genus, "max_order": largest}, sort_keys=True))
    else:
        print(f"max cyclic order at genus {config.genus}: {largest}")
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "enumerate": _cmd_enumerate,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "max-order": _cmd_max_order,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = CliConfig(subcommand=args.subcommand)
    for name, value in vars(args).items():
        if name != "subcommand" and hasattr(config, name):
            setattr(config, name, value)
    try:
        return _COMMANDS[config.subcommand](config)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_entry():
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
