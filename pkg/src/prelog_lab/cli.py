"""Command-line front end: scenario JSON in, plot-ready CSV out.

Every value is reported with 12 significant digits and natural-log units
(column suffix `_nats`); `--bits` rescales those columns at presentation.
Runs are pure functions of (scenario, seed): repeating a run, with any value
of PRELOG_LAB_THREADS, produces byte-identical CSV.

Exit codes: 0 success, 1 numerical failure, 2 validation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys

import numpy as np

from . import asymptotics, bounds, fading, mcsim, scenario, spectra
from ._parallel import parallel_map
from .errors import NumericalError


def _require_output(scen, artifact):
    if artifact not in scen.outputs:
        raise scenario.ScenarioError(
            f"scenario {scen.name!r} does not list the {artifact!r} artifact "
            f"in its outputs")


def run_bound(scen):
    """Rows: snr, gamma, tail, coherent, penalty, bound, clamped bound, ratio."""
    _require_output(scen, "bound")
    model = scen.model

    def evaluate(snr):
        if scen.gamma_mode == "optimized":
            gamma, report = bounds.optimize_gamma(model, snr)
        else:
            gamma = float(scen.gamma_mode)
            report = bounds.capacity_lower_bound(model, snr, gamma)
        tail = fading.marginal_tail(model, gamma)
        clamped = max(report.bound, 0.0)
        ratio = clamped / math.log(snr) if snr > 1 else float("nan")
        return [snr, gamma, tail, report.coherent, report.penalty_spectral,
                report.bound, clamped, ratio]

    rows = parallel_map(evaluate, scen.snr_grid)
    header = ["snr", "gamma", "tail", "coherent_nats", "penalty_nats",
              "bound_nats", "bound_clamped_nats", "ratio"]
    return header, rows, None


def run_prelog(scen):
    """Per-SNR bound ratios plus a summary line with the extrapolated pre-log."""
    _require_output(scen, "prelog")
    if len(scen.snr_grid) < 4:
        raise scenario.ScenarioError("prelog needs an snr grid with at least 4 points")
    gamma = None if scen.gamma_mode == "optimized" else float(scen.gamma_mode)
    est = asymptotics.prelog_lower_estimate(scen.model, scen.snr_grid, gamma=gamma)
    target = asymptotics.gaussian_prelog(scen.model.spectrum)
    tol = scen.tolerance("fit", 0.05)
    verdict = "PASS" if est.intercept >= target - tol else "FAIL"
    rows = [[s, r] for s, r in zip(est.snr_grid, est.ratios)]
    summary = f"prelog_estimate={est.intercept:.12g}±{tol:g} target={target:.12g} {verdict}"
    return ["snr", "ratio"], rows, summary


def run_szego(scen):
    """Finite-n log-det penalties against the spectral integral at one snr."""
    _require_output(scen, "szego")
    snr = scen.snr if scen.snr is not None else scen.snr_grid[0]
    spectrum = scen.model.spectrum
    integral = bounds.penalty_spectral(spectrum, snr)
    warning = "point-masses-excluded-from-integral" if spectrum.point_masses else ""

    def evaluate(n):
        logdet = bounds.penalty_logdet(spectrum, snr, n)
        return [n, logdet, integral, logdet - integral, warning]

    rows = parallel_map(evaluate, scen.n_list)
    header = ["n", "penalty_logdet_nats", "penalty_spectral_nats", "gap_nats",
              "warning"]
    return header, rows, None


def run_mi(scen):
    """Stratified MC estimate of the coherent MI against its analytic bound."""
    _require_output(scen, "mi")
    if scen.mc_samples is None:
        raise scenario.ScenarioError("mi needs mc_samples in the scenario")
    if scen.mc_samples < 10**4:
        raise scenario.ScenarioError("mi needs mc_samples >= 10000")
    model = scen.model
    rows = []
    for i, snr in enumerate(scen.snr_grid):
        params = bounds.ChannelParams.from_snr(snr)
        est = mcsim.estimate_coherent_mi(model, params, scen.mc_samples,
                                         [scen.seed, i])
        if scen.gamma_mode == "optimized" and snr > 1:
            _, report = bounds.optimize_gamma(model, snr)
            analytic = report.coherent
        else:
            gamma = 1.0 if scen.gamma_mode == "optimized" else float(scen.gamma_mode)
            analytic = bounds.coherent_term(snr, gamma,
                                            fading.marginal_tail(model, gamma))
        margin = est.value - analytic
        rows.append([snr, est.value, est.standard_error, analytic, margin,
                     margin >= -3.0 * est.standard_error])
    header = ["snr", "mi_estimate_nats", "se_nats", "analytic_bound_nats",
              "margin_nats", "pass"]
    return header, rows, None


def run_spectrum_check(scen):
    """Welch density of one simulated path against the analytic density."""
    _require_output(scen, "spectrum-check")
    path = fading.simulate_path(scen.model, scen.path_length, scen.seed)
    grid, density = mcsim.empirical_spectrum(path, scen.segment_length)
    rows = [[lam, emp, spectra.density_at(scen.model.spectrum, lam)]
            for lam, emp in zip(grid, density)]
    return ["lambda", "empirical_density", "analytic_density"], rows, None


_RUNNERS = {
    "bound": run_bound,
    "prelog": run_prelog,
    "szego": run_szego,
    "mi": run_mi,
    "spectrum-check": run_spectrum_check,
}


def _to_bits(header, rows):
    nat_cols = {i for i, h in enumerate(header) if h.endswith("_nats")}
    header = [h[:-5] + "_bits" if i in nat_cols else h for i, h in enumerate(header)]
    ln2 = math.log(2.0)
    rows = [[v / ln2 if i in nat_cols else v for i, v in enumerate(row)]
            for row in rows]
    return header, rows


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.12g}"
    return str(value)


def render_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="prelog-lab",
        description="Capacity lower bounds and pre-log asymptotics for "
                    "peak-limited non-coherent fading channels with memory.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "bound": "evaluate the capacity lower bound over the snr grid",
        "prelog": "extrapolate the pre-log from bound ratios",
        "szego": "compare finite-n log-det penalties with the spectral integral",
        "mi": "Monte Carlo check of the coherent mutual-information term",
        "spectrum-check": "compare a simulated path's Welch spectrum with the model",
    }
    for name, help_text in helps.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scenario", required=True, help="scenario JSON file")
        p.add_argument("--out", help="write the CSV table here instead of stdout")
        p.add_argument("--seed", type=int, help="override the scenario seed")
        p.add_argument("--bits", action="store_true",
                       help="report logarithmic columns in bits instead of nats")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        scen = scenario.load_scenario(args.scenario)
        if args.seed is not None:
            scen = scen.with_seed(args.seed)
        header, rows, summary = _RUNNERS[args.command](scen)
        if args.bits:
            header, rows = _to_bits(header, rows)
        text = render_csv(header, rows)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        if summary is not None:
            print(summary)
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0
