"""Command-line front end: single-point computations and grid sweeps to CSV.

Subcommands
    conductivity   sigma(omega)/sigma0 versus Fermi energy at fixed omega
    interaction    shifts, decay channels and gradient versus distance
    sensitivity    kappa^-1 and figure of merit on a (distance, mu) grid
    squeeze        conditional-variance trajectory under homodyne monitoring

Scenario resolution precedence: command-line flags > CASIMIR_SENSE_CONFIG
environment variable > built-in reference operating point.  Every CSV starts
with a '#' header echoing the resolved scenario, so an output file is
reproducible from itself.  Exit codes: 0 ok, 2 usage/config, 3 numerical
failure, 4 physicality violation.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys
from dataclasses import replace

import numpy as np

from . import __version__
from .dynamics import PhysicalityError, simulate
from .graphene import sigma_real_axis
from .interaction import NumericsError, decay_rates, transition_gradient
from .measurement import evaluate_coupling
from .params import (ConfigError, ENV_CONFIG, GrapheneParams, ScenarioParams,
                     load_scenario, reference_scenario, scenario_to_config)
from .quadrature import QuadratureError

USAGE_ERROR, NUMERICAL_ERROR, PHYSICALITY_ERROR = 2, 3, 4


def _resolve_scenario(args) -> ScenarioParams:
    if args.config is not None:
        with open(args.config) as fh:
            s = load_scenario(fh.read())
    elif os.environ.get(ENV_CONFIG):
        with open(os.environ[ENV_CONFIG]) as fh:
            s = load_scenario(fh.read())
    else:
        s = reference_scenario()
    if getattr(args, "distance", None) is not None:
        s = replace(s, distance=args.distance)
    if getattr(args, "mu", None) is not None:
        s = replace(s, graphene=GrapheneParams.from_fractions(
            args.mu, s.emitter.omega0,
            s.emitter.omega0 / s.graphene.gamma_g,
            sigma_zero=s.graphene.sigma_zero))
    if getattr(args, "epsilon", None) is not None:
        s = replace(s, drive=replace(s.drive, epsilon=args.epsilon))
    if getattr(args, "eta_det", None) is not None:
        s = replace(s, drive=replace(s.drive, eta_det=args.eta_det))
    if getattr(args, "sigma_zero", False):
        s = replace(s, graphene=replace(s.graphene, sigma_zero=True))
    return s


def _axis(args, name: str, log_flag: bool = False) -> np.ndarray:
    lo = getattr(args, f"{name}_min")
    hi = getattr(args, f"{name}_max")
    count = getattr(args, f"{name}_count")
    log = getattr(args, f"log_{name}", False) if log_flag else False
    if count < 1:
        raise ConfigError(f"--{name}-count must be >= 1")
    if count == 1:
        if lo != hi:
            raise ConfigError(f"--{name}-count 1 requires equal endpoints")
        return np.array([lo])
    if not lo < hi:
        raise ConfigError(f"--{name}-min must be < --{name}-max")
    if log:
        if lo <= 0:
            raise ConfigError(f"log scale needs positive --{name}-min")
        return np.geomspace(lo, hi, count)
    return np.linspace(lo, hi, count)


def _open_out(args):
    return open(args.out, "w") if args.out else sys.stdout


def _write_header(fh, s: ScenarioParams, argv: list[str], columns: list[str]):
    fh.write(f"# casimir-sense {__version__}\n")
    fh.write(f"# command: {' '.join(argv)}\n")
    for line in scenario_to_config(s).splitlines():
        fh.write(f"# {line}\n")
    fh.write(",".join(columns) + "\n")


def _fmt(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        return ""
    return f"{x:.12e}"


# ---------------------------------------------------------------------------
# workers (module level so process pools can pickle them)

def _interaction_point(task):
    s, d = task
    ir = decay_rates(d, s.emitter, s.graphene, s.constants)
    cg = transition_gradient(d, s.emitter, s.graphene, s.constants)
    return (d, ir.delta_g, ir.delta_e, ir.delta_omega, ir.gamma,
            ir.gamma_rad, ir.gamma_nonrad, abs(cg.g_value))


def _sensitivity_point(task):
    s, d, mu = task
    point = replace(
        s, distance=d,
        graphene=GrapheneParams.from_fractions(
            mu, s.emitter.omega0, s.emitter.omega0 / s.graphene.gamma_g,
            sigma_zero=s.graphene.sigma_zero))
    ir, cg, cr = evaluate_coupling(point)
    x_zpm = s.mechanics.x_zpm
    quantum = cr.kappa_inv_si < x_zpm / np.sqrt(s.mechanics.omega_m)
    return (d, mu, cr.kappa_inv_si, cr.merit, quantum)


def _map_points(worker, tasks, jobs: int):
    if jobs <= 1:
        return [worker(t) for t in tasks]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))   # map keeps submission order


# ---------------------------------------------------------------------------
# subcommands

def cmd_conductivity(args, argv) -> int:
    s = _resolve_scenario(args)
    mus = _axis(args, "mu")
    omega = args.omega * s.emitter.omega0
    fh = _open_out(args)
    try:
        _write_header(fh, s, argv, ["mu_over_hbar_omega0", "re_sigma_sigma0",
                                    "im_sigma_sigma0"])
        for mu in mus:
            g = GrapheneParams.from_fractions(
                mu, s.emitter.omega0, s.emitter.omega0 / s.graphene.gamma_g,
                sigma_zero=s.graphene.sigma_zero)
            val = sigma_real_axis(omega, g).sigma0_units
            fh.write(f"{_fmt(mu)},{_fmt(val.real)},{_fmt(val.imag)}\n")
    finally:
        if args.out:
            fh.close()
    return 0


def cmd_interaction(args, argv) -> int:
    s = _resolve_scenario(args)
    ds = _axis(args, "d", log_flag=True)
    rows = _map_points(_interaction_point, [(s, d) for d in ds], args.jobs)
    fh = _open_out(args)
    try:
        _write_header(fh, s, argv,
                      ["d_m", "delta_g_rad_s", "delta_e_rad_s",
                       "delta_omega_rad_s", "gamma_rad_s", "gamma_rad_rad_s",
                       "gamma_nonrad_rad_s", "g_abs_rad_s_per_m"])
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    finally:
        if args.out:
            fh.close()
    return 0


def cmd_sensitivity(args, argv) -> int:
    s = _resolve_scenario(args)
    ds = _axis(args, "d", log_flag=True)
    mus = _axis(args, "mu")
    tasks = [(s, d, mu) for d in ds for mu in mus]   # row-major: d outer
    rows = _map_points(_sensitivity_point, tasks, args.jobs)
    fh = _open_out(args)
    try:
        _write_header(fh, s, argv,
                      ["d_m", "mu_over_hbar_omega0", "kappa_inv_m_rthz",
                       "merit", "quantum_regime"])
        for d, mu, kinv, merit, quantum in rows:
            fh.write(f"{_fmt(d)},{_fmt(mu)},{_fmt(kinv)},{_fmt(merit)},"
                     f"{str(bool(quantum)).lower()}\n")
    finally:
        if args.out:
            fh.close()
    return 0


def cmd_squeeze(args, argv) -> int:
    s = _resolve_scenario(args)
    traj = simulate(s, args.damping, args.t_end, tau=args.tau,
                    record_every=args.record_every)
    t_min, v_min = traj.min_vx()
    summary = f"# summary: min_vx = {v_min:.6e} at t = {t_min:.6e} s"
    fh = _open_out(args)
    try:
        _write_header(fh, s, argv, ["t_s", "vx", "vp", "vxp", "frame",
                                    "damping"])
        for i in range(len(traj.t)):
            fh.write(f"{_fmt(traj.t[i])},{_fmt(traj.vx[i])},"
                     f"{_fmt(traj.vp[i])},{_fmt(traj.vxp[i])},"
                     f"{traj.frame},{traj.damping}\n")
        fh.write(summary + "\n")
    finally:
        if args.out:
            fh.close()
    if args.out:
        print(summary.lstrip("# "), file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="scenario config file (INI)")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers for grid sweeps")
    p.add_argument("--distance", type=float, help="override distance, m")
    p.add_argument("--mu", type=float,
                   help="override Fermi energy, units of hbar*omega0")
    p.add_argument("--epsilon", type=float, help="override drive epsilon")
    p.add_argument("--eta-det", dest="eta_det", type=float,
                   help="override collection efficiency")
    p.add_argument("--sigma-zero", action="store_true",
                   help="force sigma = 0 (transparent sheet, test override)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="casimir-sense", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conductivity", help="sigma versus Fermi energy")
    _add_common(p)
    p.add_argument("--omega", type=float, default=1.0,
                   help="evaluation frequency, units of omega0")
    p.add_argument("--mu-min", type=float, default=0.0)
    p.add_argument("--mu-max", type=float, default=1.2)
    p.add_argument("--mu-count", type=int, default=121)
    p.set_defaults(func=cmd_conductivity)

    p = sub.add_parser("interaction", help="shifts and rates versus distance")
    _add_common(p)
    p.add_argument("--d-min", type=float, default=5e-9)
    p.add_argument("--d-max", type=float, default=50e-9)
    p.add_argument("--d-count", type=int, default=10)
    p.add_argument("--log-d", action="store_true")
    p.set_defaults(func=cmd_interaction)

    p = sub.add_parser("sensitivity", help="kappa^-1 on a (d, mu) grid")
    _add_common(p)
    p.add_argument("--d-min", type=float, default=10e-9)
    p.add_argument("--d-max", type=float, default=40e-9)
    p.add_argument("--d-count", type=int, default=4)
    p.add_argument("--log-d", action="store_true")
    p.add_argument("--mu-min", type=float, default=0.2)
    p.add_argument("--mu-max", type=float, default=1.0)
    p.add_argument("--mu-count", type=int, default=5)
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("squeeze", help="conditional squeezing trajectory")
    _add_common(p)
    p.add_argument("--damping", choices=("symmetric", "momentum"),
                   default="momentum")
    p.add_argument("--t-end", dest="t_end", type=float, default=3e-6,
                   help="simulated time, s")
    p.add_argument("--tau", type=float, default=None, help="step size, s")
    p.add_argument("--record-every", dest="record_every", type=int,
                   default=None)
    p.set_defaults(func=cmd_squeeze)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, ["casimir-sense", *argv])
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (QuadratureError, NumericsError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    except PhysicalityError as exc:
        print(f"physicality violation: {exc}", file=sys.stderr)
        return PHYSICALITY_ERROR


if __name__ == "__main__":
    sys.exit(main())
