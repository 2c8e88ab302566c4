"""Command-line front end.

    abvortex cross-section --alpha 0.25 --energy 2 --e-bound-n 1
    abvortex resonance --alpha 0.25 --e-bound-n 1
    abvortex phase-shift --alpha 1.25 --energy 2 --e-bound-n 1 --e-bound-n1 3
    abvortex hall --alpha 0.25 --energy 2 --e-bound-n 1 --n-v 0.01 --n-e 1
    abvortex sweep --alpha-grid 0.05 0.95 19 --energy 2 --e-bound-n 1
    abvortex verify

Exit codes: 0 success, 1 usage error, 2 numeric/validation failure,
3 verify failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__
from .cross_section import (DEFAULT_PHI_MIN, asymmetry, modified_cross_section,
                            oracle_cross_section, phi_grid, standard_cross_section,
                            transverse_cross_section)
from .errors import ABVortexError, IntegerFluxWarning
from .flux import ExtensionSpec, Kinematics, UnitSystem, decompose_flux, validate_extension, wavenumber
from .hall import _threads, hall_resistivity
from .phase import (channel_exponent, corrections, find_resonance_numeric, resonance_bracket,
                    resonance_energy, total_phase_shift)
from .tables import ResultTable
from .verify import run_checks

SUBCOMMANDS = ("phase-shift", "cross-section", "resonance", "hall", "sweep", "verify")
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    alpha: Optional[float] = None
    energy: Optional[float] = None
    e_bound_n: Optional[float] = None
    e_bound_n1: Optional[float] = None
    phi_min: float = DEFAULT_PHI_MIN
    phi_max: float = math.pi
    phi_steps: int = 720
    n_v: Optional[float] = None
    n_e: Optional[float] = None
    output_format: str = "csv"
    output_path: Optional[str] = None
    unit_system: str = "natural"
    mass: Optional[float] = None
    hbar: Optional[float] = None
    hc2_over_e2: float = 1.0
    l_min: Optional[int] = None
    l_max: Optional[int] = None
    alpha_grid: Optional[tuple] = None
    energy_grid: Optional[tuple] = None
    quadrature_steps: int = 2 ** 14

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        data = dict(data)
        for key in ("alpha_grid", "energy_grid"):
            if data.get(key) is not None:
                data[key] = tuple(data[key])
        return cls(**data)

    @property
    def spec(self) -> ExtensionSpec:
        return ExtensionSpec(self.e_bound_n, self.e_bound_n1)

    def kinematics(self, energy: float) -> Kinematics:
        if self.unit_system == "explicit":
            return Kinematics(energy, self.mass, self.hbar, UnitSystem.EXPLICIT)
        return Kinematics.natural(energy)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text):
    value = float(text)
    if not (value > 0.0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _finite(text):
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _build_parser():
    parser = _Parser(prog="abvortex", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"abvortex {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def output(p):
        p.add_argument("--format", dest="output_format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", dest="output_path", default=None,
                       help="write the table here instead of stdout")

    def physics(p, alpha=True, energy=True):
        if alpha:
            p.add_argument("--alpha", type=_finite, required=True, help="flux in units of hc/|e|")
        if energy:
            p.add_argument("--energy", type=_positive, required=True)
        p.add_argument("--e-bound-n", type=_positive, help="|E_-n|, bound energy in channel l=-n")
        p.add_argument("--e-bound-n1", type=_positive, help="|E_-n-1|, bound energy in channel l=-n-1")
        p.add_argument("--unit-system", choices=("natural", "explicit"), default="natural")
        p.add_argument("--mass", type=_positive, help="particle mass (explicit units)")
        p.add_argument("--hbar", type=_positive, help="hbar (explicit units)")
        output(p)

    def densities(p):
        p.add_argument("--n-v", type=_positive, default=None, help="vortex density (default 1)")
        p.add_argument("--n-e", type=_positive, default=None, help="electron density (default 1)")
        p.add_argument("--hc2-over-e2", type=_positive, default=1.0,
                       help="value of hc^2/e^2 in the output unit (default 1)")
        p.add_argument("--quadrature-steps", type=int, default=2 ** 14)

    p = sub.add_parser("phase-shift", help="per-channel phase shifts")
    physics(p)
    p.add_argument("--l-min", type=int)
    p.add_argument("--l-max", type=int)

    p = sub.add_parser("cross-section", help="differential cross section on a phi grid")
    physics(p)
    p.add_argument("--phi-min", type=_positive, default=DEFAULT_PHI_MIN)
    p.add_argument("--phi-max", type=_positive, default=math.pi)
    p.add_argument("--phi-steps", type=int, default=720)

    p = sub.add_parser("resonance", help="resonance energy, closed form and bisection")
    physics(p, energy=False)

    p = sub.add_parser("hall", help="dilute-vortex Hall resistivity")
    physics(p)
    densities(p)

    p = sub.add_parser("sweep", help="grid over alpha and energy")
    physics(p, alpha=False, energy=False)
    p.add_argument("--alpha", type=_finite)
    p.add_argument("--energy", type=_positive)
    p.add_argument("--alpha-grid", type=float, nargs=3, metavar=("START", "STOP", "NUM"))
    p.add_argument("--energy-grid", type=float, nargs=3, metavar=("START", "STOP", "NUM"))
    densities(p)

    p = sub.add_parser("verify", help="run the built-in invariant and oracle checks")
    output(p)
    return parser


def parse_config(argv) -> RunConfig:
    """Parse and validate ``argv``; raises :class:`UsageError`."""
    args = vars(_build_parser().parse_args(list(argv)))
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    config = RunConfig(**{k: v for k, v in args.items() if k in fields and v is not None})
    for key in ("alpha_grid", "energy_grid"):
        grid = getattr(config, key)
        if grid is not None:
            if grid[2] < 1 or grid[2] != int(grid[2]):
                raise UsageError(f"--{key.replace('_', '-')}: NUM must be a positive integer")
            config = dataclasses.replace(config, **{key: (grid[0], grid[1], int(grid[2]))})
    c = config
    if c.subcommand == "sweep":
        if (c.alpha is None) == (c.alpha_grid is None):
            raise UsageError("sweep: give exactly one of --alpha, --alpha-grid")
        if (c.energy is None) == (c.energy_grid is None):
            raise UsageError("sweep: give exactly one of --energy, --energy-grid")
        if c.energy_grid is not None and min(c.energy_grid[:2]) <= 0:
            raise UsageError("sweep: energies must be positive")
    if c.subcommand == "cross-section":
        if not 0.0 < c.phi_min < c.phi_max <= math.pi:
            raise UsageError("need 0 < --phi-min < --phi-max <= pi")
        if c.phi_steps < 2:
            raise UsageError("--phi-steps must be >= 2")
    if c.subcommand in ("hall", "sweep") and c.quadrature_steps < 64:
        raise UsageError("--quadrature-steps must be >= 64")
    if c.unit_system == "explicit" and (c.mass is None or c.hbar is None):
        raise UsageError("explicit units need --mass and --hbar")
    if c.unit_system == "natural" and (c.mass is not None or c.hbar is not None):
        raise UsageError("--mass/--hbar only apply with --unit-system explicit")
    if c.subcommand == "resonance" and c.e_bound_n is None and c.e_bound_n1 is None:
        raise UsageError("resonance: give --e-bound-n and/or --e-bound-n1")
    return config


def _table(config, columns, units):
    metadata = {"tool": "abvortex", "version": __version__,
                "unit_system": config.unit_system, "config": config.to_dict()}
    return ResultTable(list(columns), list(units), metadata=metadata)


def _run_phase_shift(c):
    flux = decompose_flux(c.alpha)
    spec = validate_extension(c.spec, flux)
    lo = c.l_min if c.l_min is not None else -flux.n - 2
    hi = c.l_max if c.l_max is not None else -flux.n + 1
    table = _table(c, ["l", "delta0", "correction", "total", "status"],
                   ["1", "rad", "rad", "rad", "-"])
    for l in range(lo, hi + 1):
        ph = total_phase_shift(l, flux, c.energy, spec)
        table.append([l, ph.delta0, ph.correction, ph.total, "ok"])
    return table, EXIT_OK


def _run_cross_section(c):
    flux = decompose_flux(c.alpha)
    spec = validate_extension(c.spec, flux)
    k = wavenumber(c.kinematics(c.energy))
    grid = phi_grid(c.phi_min, c.phi_max, c.phi_steps)
    total = modified_cross_section(k, grid, flux, c.energy, spec)
    std = standard_cross_section(k, grid, c.alpha)
    oracle = oracle_cross_section(k, grid, flux, c.energy, spec)
    asym = asymmetry(k, grid, flux, c.energy, spec)
    table = _table(c, ["phi", "dsigma_total", "dsigma_standard", "dsigma_oracle", "asymmetry", "status"],
                   ["rad", "length/rad", "length/rad", "length/rad", "length/rad", "-"])
    for row in zip(grid, total, std, oracle, asym):
        row = [float(v) for v in row]
        table.append(row + ["ok" if row[1] >= 0.0 else "negative-closed-form"])
    return table, EXIT_OK


def _run_resonance(c):
    flux = decompose_flux(c.alpha)
    spec = validate_extension(c.spec, flux)
    table = _table(c, ["eta", "channel", "e_bound", "e_res_closed", "e_res_numeric", "status"],
                   ["1", "1", "energy", "energy", "energy", "-"])
    nan = float("nan")
    channel = -flux.n if flux.eta < 0.5 else -flux.n - 1
    e_bound = spec.bound_energy(channel, flux)
    closed = resonance_energy(flux, spec)
    if flux.eta == 0.0 or flux.eta == 0.5:
        table.append([flux.eta, channel, e_bound if e_bound else nan, nan, nan,
                      f"no-resonance: eta={flux.eta}"])
        return table, EXIT_OK
    if e_bound is None:
        table.append([flux.eta, channel, nan, nan, nan, f"no-bound-state-in-channel-{channel}"])
        return table, EXIT_NUMERIC
    try:
        numeric = find_resonance_numeric(flux, spec, channel, resonance_bracket(flux, spec, channel))
        status = "ok" if closed else "numeric-only: " + closed.reason
    except ABVortexError as exc:
        numeric, status = nan, f"error: {type(exc).__name__}: {exc}"
    table.append([flux.eta, channel, e_bound, closed.energy if closed else nan, numeric, status])
    return table, EXIT_OK if not status.startswith("error") else EXIT_NUMERIC


def _hall_row(c, alpha, energy):
    flux = decompose_flux(alpha)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegerFluxWarning)
        spec = validate_extension(c.spec, flux)
    kin = c.kinematics(energy)
    dn, dn1 = corrections(flux, energy, spec)
    res = hall_resistivity(c.n_v or 1.0, c.n_e or 1.0, flux, energy, spec, kin,
                           c.hc2_over_e2, c.quadrature_steps)
    sigma = transverse_cross_section(wavenumber(kin), flux, energy, spec, c.quadrature_steps)
    return flux, dn, dn1, sigma, res


def _run_hall(c):
    table = _table(c, ["alpha", "rho_xy", "rho_xy_quadrature", "status"],
                   ["1", "hc^2/e^2", "hc^2/e^2", "-"])
    _, _, _, _, res = _hall_row(c, c.alpha, c.energy)
    table.append([c.alpha, res.rho_xy, res.rho_xy_quadrature, "ok"])
    return table, EXIT_OK


def _grid(single, grid):
    if grid is None:
        return [single]
    return [float(v) for v in np.linspace(grid[0], grid[1], int(grid[2]))]


def _run_sweep(c):
    table = _table(c, ["alpha", "energy", "eta", "correction_n", "correction_n1",
                       "sigma_transverse", "rho_xy", "rho_xy_quadrature", "status"],
                   ["1", "energy", "1", "rad", "rad", "length", "hc^2/e^2", "hc^2/e^2", "-"])
    points = [(a, e) for a in _grid(c.alpha, c.alpha_grid) for e in _grid(c.energy, c.energy_grid)]
    nan = float("nan")

    def one(point):
        alpha, energy = point
        try:
            flux, dn, dn1, sigma, res = _hall_row(c, alpha, energy)
            return [alpha, energy, flux.eta, dn, dn1, sigma, res.rho_xy, res.rho_xy_quadrature, "ok"]
        except ABVortexError as exc:
            return [alpha, energy, nan, nan, nan, nan, nan, nan, f"error: {type(exc).__name__}"]

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        rows = list(pool.map(one, points))
    for row in rows:
        table.append(row)
    failed = any(row[-1] != "ok" for row in rows)
    return table, EXIT_NUMERIC if failed else EXIT_OK


def _run_verify(c):
    table = _table(c, ["check", "value", "threshold", "status"], ["-", "1", "1", "-"])
    checks = run_checks()
    for check in checks:
        table.append([check.name, float(check.value), float(check.threshold),
                      "pass" if check.passed else "fail"])
    return table, EXIT_OK if all(ch.passed for ch in checks) else EXIT_VERIFY


_RUNNERS = {"phase-shift": _run_phase_shift, "cross-section": _run_cross_section,
            "resonance": _run_resonance, "hall": _run_hall, "sweep": _run_sweep,
            "verify": _run_verify}


def run(config: RunConfig) -> tuple[ResultTable, int]:
    return _RUNNERS[config.subcommand](config)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_config(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        table, code = run(config)
    except ABVortexError as exc:
        print(f"abvortex: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = table.dumps(config.output_format)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
