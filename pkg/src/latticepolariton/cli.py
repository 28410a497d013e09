"""Command-line interface.

Subcommands: check (derived quantities), dispersion (branch tables),
hopfield (mixing weights), spectra (probe response plus peak summary),
oracle (closed forms vs brute force).  Exit codes: 0 success, 2 bad
configuration or usage, 3 evaluation outside the valid domain, 4 oracle
mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .config import PRESETS, ScenarioConfig, load_config_file, preset_config
from .errors import ConfigError, DomainError, OracleMismatchError
from .runner import (
    DISPERSION_TABLES,
    check_text,
    oracle_text,
    run_check,
    run_dispersion,
    run_oracle,
    run_spectra,
    spectra_csv,
    spectra_json,
    table_csv,
    table_json,
)

import json


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latpol",
        description="Lattice excitons and cavity polaritons: dispersions, mixing, spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--config", help="path to a JSON configuration file")
        group.add_argument(
            "--preset", choices=sorted(PRESETS), help="named built-in parameter set"
        )
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument(
            "--format",
            choices=("csv", "json"),
            default="csv",
            help="output format (default csv)",
        )

    p_check = sub.add_parser("check", help="report derived quantities and verdicts")
    add_common(p_check)

    p_disp = sub.add_parser("dispersion", help="tabulate dispersions along kx")
    add_common(p_disp)
    p_disp.add_argument(
        "--what",
        choices=DISPERSION_TABLES,
        default="polariton",
        help="which table to emit (default polariton)",
    )

    p_hop = sub.add_parser("hopfield", help="tabulate branch mixing weights")
    add_common(p_hop)

    p_spec = sub.add_parser("spectra", help="probe transmission/reflection/absorption")
    add_common(p_spec)
    p_spec.add_argument(
        "--k",
        type=float,
        action="append",
        help="in-plane wavevector in rad/m (repeatable; default from config)",
    )

    p_oracle = sub.add_parser("oracle", help="cross-check closed forms vs brute force")
    add_common(p_oracle)

    return parser


def _load(args) -> ScenarioConfig:
    if args.preset is not None:
        return preset_config(args.preset)
    return load_config_file(args.config)


def _write(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        scenario = _load(args).build()
        if args.command == "check":
            report = run_check(scenario)
            if args.format == "json":
                _write(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
            else:
                _write(check_text(report), args.out)
        elif args.command == "dispersion":
            columns, rows = run_dispersion(scenario, args.what)
            if args.format == "json":
                _write(table_json(scenario, columns, rows), args.out)
            else:
                _write(table_csv(scenario, columns, rows), args.out)
        elif args.command == "hopfield":
            columns, rows = run_dispersion(scenario, "hopfield")
            if args.format == "json":
                _write(table_json(scenario, columns, rows), args.out)
            else:
                _write(table_csv(scenario, columns, rows), args.out)
        elif args.command == "spectra":
            responses, summary = run_spectra(scenario, args.k)
            if args.format == "json":
                _write(spectra_json(scenario, responses, summary), args.out)
            else:
                _write(spectra_csv(scenario, responses), args.out)
                if args.out is not None:
                    peaks_path = str(args.out) + ".peaks.json"
                    _write(
                        json.dumps(summary, sort_keys=True, indent=2) + "\n", peaks_path
                    )
        elif args.command == "oracle":
            report = run_oracle(scenario)
            if args.format == "json":
                _write(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
            else:
                _write(oracle_text(report), args.out)
        else:  # pragma: no cover
            parser.error(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
