"""Command-line interface.

Subcommands:

* ``analyze <cfg>``: single-scenario report with the dB ledger, SNR,
  capacity bounds, and regulatory checks if the config names a profile.
* ``sweep <cfg> --out <csv>``: evaluate the config's sweep block.
* ``figure <preset> --out <csv>``: one of the named figure presets.
* ``profiles``: list the built-in band profiles.

Exit codes: 0 success, 1 any error, 2 regulatory violations under
``--strict``. No other codes are used.
"""

from __future__ import annotations

import argparse
import math
import sys

from .ambient import AmbientScenario, ambient_capacity, ambient_link_budget
from .capacity import capacity
from .config import ConfigError, ScenarioConfig, load_config
from .figures import FIGURE_PRESETS, build_figure
from .linkmodel import Bistatic, LinkBudget, Monostatic, Scenario, link_budget
from .regulatory import builtin_profiles, effective_eirp_limit, validate
from .sweeps import fmt, sweep_table
from .units import dbm_from_watts


def _describe(scenario: Scenario | AmbientScenario) -> str:
    f_mhz = float(scenario.carrier_frequency) / 1e6
    w = "inf" if scenario.bandwidth is None else f"{float(scenario.bandwidth):g} Hz"
    if isinstance(scenario, AmbientScenario):
        return f"ambient, r_rx = {float(scenario.r_rx):g} m, f_c = {f_mhz:g} MHz, W = {w}"
    if isinstance(scenario.geometry, Monostatic):
        geo = f"monostatic, R = {float(scenario.geometry.r):g} m"
    else:
        geo = (
            f"bistatic, R_C = {float(scenario.geometry.r_c):g} m,"
            f" R_RX = {float(scenario.geometry.r_rx):g} m"
        )
    return f"{geo}, f_c = {f_mhz:g} MHz, W = {w}"


def _print_budget(budget: LinkBudget, out) -> None:
    print("Link budget:", file=out)
    width = max(len(label) for label, _ in budget.entries)
    for i, (label, value) in enumerate(budget.entries):
        unit = "dBm" if i == 0 else "dB"
        print(f"  {label:<{width}}  {float(value):+12.3f} {unit}", file=out)
    print(
        f"  {'received power':<{width}}  {float(budget.received_power_dbm):+12.3f} dBm"
        f"  ({float(budget.received_power):.6g} W)",
        file=out,
    )


def _analyze(cfg: ScenarioConfig, strict: bool, quiet: bool, out) -> int:
    scenario = cfg.scenario
    if isinstance(scenario, AmbientScenario):
        budget = ambient_link_budget(scenario)
        result = ambient_capacity(scenario)
    else:
        budget = link_budget(scenario)
        result = capacity(scenario)

    violations = []
    if cfg.profile is not None and isinstance(scenario, Scenario):
        violations = validate(scenario, cfg.profile)

    if not quiet:
        print(f"Scenario: {_describe(scenario)}", file=out)
        _print_budget(budget, out)
        if result.snr_linear is not None:
            print(f"SNR: {10.0 * math.log10(result.snr_linear):.3f} dB", file=out)
        print(f"Absolute bound: {float(result.c_infinity):.6g} bps", file=out)
        if result.c_bandwidth is not None:
            print(
                f"Bandwidth-limited bound: {float(result.c_bandwidth):.6g} bps", file=out
            )
            print(f"Regime: {result.regime.value}", file=out)
        if cfg.profile is not None:
            if isinstance(scenario, AmbientScenario):
                print(
                    f"Regulatory ({cfg.profile.id}): not applicable to ambient sources",
                    file=out,
                )
            elif violations:
                print(f"Regulatory ({cfg.profile.id}):", file=out)
                for v in violations:
                    print(f"  {v}", file=out)
            else:
                print(f"Regulatory ({cfg.profile.id}): compliant", file=out)
        print(file=out)

    # Stable machine-readable block, one key=value per line.
    print("--- machine ---", file=out)
    print("schema=1", file=out)
    print(f"p_rx_w={fmt(float(budget.received_power))}", file=out)
    print(f"p_rx_dbm={fmt(float(budget.received_power_dbm))}", file=out)
    if result.snr_linear is not None:
        print(f"snr_db={fmt(10.0 * math.log10(result.snr_linear))}", file=out)
    print(f"c_infinity_bps={fmt(float(result.c_infinity))}", file=out)
    if result.c_bandwidth is not None:
        print(f"c_w_bps={fmt(float(result.c_bandwidth))}", file=out)
        print(f"regime={result.regime.value}", file=out)
    if cfg.profile is not None:
        print(f"profile={cfg.profile.id}", file=out)
        print(f"violations={';'.join(v.kind.value for v in violations)}", file=out)

    if strict and violations:
        return 2
    return 0


def _write_csv(table, path: str, quiet: bool, out) -> int:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(table.render())
    except OSError as exc:
        print(f"error: cannot write {path!r}: {exc.strerror}", file=sys.stderr)
        return 1
    if not quiet:
        print(f"wrote {len(table.rows)} rows to {path}", file=out)
    return 0


def _profiles(out) -> int:
    print(f"{'id':<16}{'region':<8}{'f_center':<12}{'max_bw':<12}{'limit':<28}eff_eirp_w", file=out)
    for p in builtin_profiles():
        limit = p.limit
        kind = type(limit).__name__
        if kind == "ConductedPlusGain":
            desc = f"{float(limit.power):g} W + {float(limit.max_gain):g} dBi"
        elif kind == "Erp":
            desc = f"{float(limit.power):g} W ERP"
        else:
            desc = f"{float(limit.power):g} W EIRP"
        print(
            f"{p.id:<16}{p.region:<8}"
            f"{float(p.center_frequency) / 1e6:<12g}"
            f"{float(p.max_bandwidth) / 1e6:<12g}"
            f"{desc:<28}{fmt(float(effective_eirp_limit(p)))}",
            file=out,
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsclink",
        description="Backscatter link budgets and capacity bounds.",
    )
    parser.add_argument("--strict", action="store_true", help="exit 2 on regulatory violations")
    parser.add_argument("--quiet", action="store_true", help="suppress informational output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one scenario config")
    p_analyze.add_argument("config", help="scenario config path")

    p_sweep = sub.add_parser("sweep", help="run the config's sweep block to CSV")
    p_sweep.add_argument("config", help="scenario config path with sweep block")
    p_sweep.add_argument("--out", required=True, help="output CSV path")

    p_figure = sub.add_parser("figure", help="emit a named preset CSV")
    p_figure.add_argument("preset", help=f"one of: {', '.join(sorted(FIGURE_PRESETS))}")
    p_figure.add_argument("--out", required=True, help="output CSV path")

    sub.add_parser("profiles", help="list built-in regulatory band profiles")
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    """Entry point returning the exit code; ``out`` overrides stdout for tests."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "analyze":
            return _analyze(load_config(args.config), args.strict, args.quiet, out)
        if args.command == "sweep":
            cfg = load_config(args.config)
            if cfg.sweep is None:
                print("error: config has no sweep block", file=sys.stderr)
                return 1
            return _write_csv(sweep_table(cfg), args.out, args.quiet, out)
        if args.command == "figure":
            try:
                table = build_figure(args.preset)
            except KeyError as exc:
                print(f"error: {exc.args[0]}", file=sys.stderr)
                return 1
            return _write_csv(table, args.out, args.quiet, out)
        if args.command == "profiles":
            return _profiles(out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


def main() -> None:
    sys.exit(run())
