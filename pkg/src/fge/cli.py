"""Command-line front end.

Subcommands: eval (one point), zeta (distance constant), sweep (CSV grid),
figure1 (preset pressure sweep), dwarf (white-dwarf report), avg (mean
entanglement over the entangled window).  JSON goes to stdout, CSV to
--out.  Exit codes: 0 success, 1 domain/numerical/IO error, 2 usage.
"""

import argparse
import json
import os
import sys

import numpy as np

from .constants import constants
from .entanglement import Measure, average_entanglement, eos_evaluate
from .errors import DomainError, QuadratureError, SolverError
from .exchange import solve_zeta
from .fermi import (
    GasRegime,
    MuMode,
    fermi_momentum_from_pressure,
    pressure_from_entanglement_distance,
)
from .whitedwarf import WhiteDwarf, dwarf_report

_CSV_HEADER = "r_m,P_Pa,T_K,x,f,C,EF_bits,entangled,re_m"
_DEFAULT_TOL = 1e-10


class _UsageError(Exception):
    """Flag combinations argparse cannot catch on its own."""


def _add_common(parser, mu_mode=True):
    parser.add_argument("--regime", choices=["nonrel", "rel"], default="nonrel",
                        help="dispersion regime (default nonrel)")
    if mu_mode:
        parser.add_argument("--mu-mode", choices=["fermi", "exact"], default="exact",
                            help="chemical-potential policy at finite temperature")
    parser.add_argument("--tol", type=float, default=None,
                        help="quadrature tolerance (default 1e-10, or FGE_QUAD_TOL)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fge",
        description="Pairwise electron entanglement in a degenerate Fermi gas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="entanglement report at one (r, P, T) point")
    p.add_argument("--r", type=float, required=True, help="pair separation in m")
    p.add_argument("--P", type=float, required=True, help="degeneracy pressure in Pa")
    p.add_argument("--T", type=float, default=0.0, help="temperature in K (default 0)")
    _add_common(p)

    p = sub.add_parser("zeta", help="distance constant zeta(t)")
    p.add_argument("--t", type=float, default=0.0, help="reduced temperature T/T_F")
    _add_common(p)

    p = sub.add_parser("sweep", help="CSV sweep over pressure, distance, or temperature")
    p.add_argument("--var", choices=["pressure", "distance", "temperature"], required=True)
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--spacing", choices=["linear", "log"], default="log")
    p.add_argument("--r", type=float, default=None, help="fixed separation in m")
    p.add_argument("--P", type=float, default=None, help="fixed pressure in Pa")
    p.add_argument("--T", type=float, default=0.0, help="fixed temperature in K")
    p.add_argument("--out", required=True, help="output CSV path")
    _add_common(p)

    p = sub.add_parser("figure1", help="preset zero-temperature pressure sweep CSV")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--count", type=int, default=200)
    _add_common(p, mu_mode=False)

    p = sub.add_parser("dwarf", help="white-dwarf entanglement report")
    mass = p.add_mutually_exclusive_group()
    mass.add_argument("--M", type=float, default=None, help="mass in kg")
    mass.add_argument("--M-solar", type=float, default=None, help="mass in solar masses")
    radius = p.add_mutually_exclusive_group()
    radius.add_argument("--R", type=float, default=None, help="radius in m")
    radius.add_argument("--R-solar", type=float, default=None, help="radius in solar radii")
    p.add_argument("--T", type=float, default=27000.0, help="surface temperature in K")
    p.add_argument("--Z", type=int, default=6, help="protons per nucleus")
    p.add_argument("--A", type=int, default=12, help="nucleons per nucleus")
    p.add_argument("--zeta", type=float, default=None,
                   help="distance constant (default: zero-temperature value)")
    _add_common(p, mu_mode=False)

    p = sub.add_parser("avg", help="mean entanglement over separations in [0, zeta]")
    p.add_argument("--t", type=float, default=0.0, help="reduced temperature T/T_F")
    p.add_argument("--measure", choices=["concurrence", "eof"], default="concurrence")
    _add_common(p)

    return parser


def _resolve_tol(args):
    tol = getattr(args, "tol", None)
    if tol is None:
        raw = os.environ.get("FGE_QUAD_TOL")
        if raw is not None:
            try:
                tol = float(raw)
            except ValueError:
                raise DomainError(
                    f"FGE_QUAD_TOL must parse as a number, got {raw!r}"
                ) from None
    if tol is None:
        return _DEFAULT_TOL
    if not (1e-14 <= tol <= 1e-6):
        raise DomainError(f"quadrature tolerance must lie in [1e-14, 1e-06], got {tol!r}")
    return tol


def _regime(args):
    return GasRegime(args.regime)


def _mu_mode(args):
    return MuMode(args.mu_mode)


def _format_value(value):
    if isinstance(value, (bool, int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(path, rows):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(_CSV_HEADER + "\n")
        for row in rows:
            handle.write(",".join(_format_value(v) for v in row) + "\n")


def _rows_for(points, regime, mu_mode, tol):
    rows = []
    for r, p, temp in points:
        report = eos_evaluate(r, p, temp, regime, mu_mode, tol)
        x = fermi_momentum_from_pressure(p, regime) * r
        rows.append((report.r, report.p, report.t, x, report.f, report.concurrence,
                     report.entropy_of_formation, int(report.entangled), report.r_e))
    return rows


def _grid(lo, hi, count, spacing):
    if count < 2:
        raise _UsageError(f"--count must be at least 2, got {count}")
    if not (lo < hi):
        raise _UsageError(f"--min must be less than --max, got {lo!r} >= {hi!r}")
    if spacing == "log":
        if not (lo > 0):
            raise _UsageError(f"log spacing requires --min > 0, got {lo!r}")
        return [float(v) for v in np.geomspace(lo, hi, count)]
    return [float(v) for v in np.linspace(lo, hi, count)]


def _cmd_eval(args, tol):
    report = eos_evaluate(args.r, args.P, args.T, _regime(args), _mu_mode(args), tol)
    print(json.dumps({
        "f": report.f,
        "entangled": report.entangled,
        "concurrence": report.concurrence,
        "entropy_of_formation": report.entropy_of_formation,
        "r": report.r,
        "p": report.p,
        "t": report.t,
        "regime": report.regime.value,
        "r_e": report.r_e,
    }))
    return 0


def _cmd_zeta(args, tol):
    result = solve_zeta(args.t, _regime(args), _mu_mode(args), tol)
    print(json.dumps({
        "zeta": result.zeta,
        "t": result.t,
        "regime": result.regime.value,
        "residual": result.residual,
    }))
    return 0


def _cmd_sweep(args, tol):
    grid = _grid(args.min, args.max, args.count, args.spacing)
    if args.var == "pressure":
        if args.r is None:
            raise _UsageError("--r is required for a pressure sweep")
        points = [(args.r, v, args.T) for v in grid]
    elif args.var == "distance":
        if args.P is None:
            raise _UsageError("--P is required for a distance sweep")
        points = [(v, args.P, args.T) for v in grid]
    else:
        if args.r is None or args.P is None:
            raise _UsageError("--r and --P are required for a temperature sweep")
        points = [(args.r, args.P, v) for v in grid]
    _write_csv(args.out, _rows_for(points, _regime(args), _mu_mode(args), tol))
    return 0


def _cmd_figure1(args, tol):
    regime = GasRegime.NONRELATIVISTIC
    zeta0 = solve_zeta(0.0, regime, MuMode.EXACT_NORMALIZATION).zeta
    p_lo = pressure_from_entanglement_distance(1e-8, regime, zeta0)
    p_hi = 4.0 * pressure_from_entanglement_distance(1e-10, regime, zeta0)
    grid = _grid(p_lo, p_hi, args.count, "log")
    points = [(1e-10, v, 0.0) for v in grid]
    _write_csv(args.out, _rows_for(points, regime, MuMode.EXACT_NORMALIZATION, tol))
    return 0


def _cmd_dwarf(args, tol):
    c = constants()
    if args.M is not None:
        mass = args.M
    else:
        mass = (args.M_solar if args.M_solar is not None else 1.0) * c.solar_mass
    if args.R is not None:
        radius = args.R
    else:
        radius = (args.R_solar if args.R_solar is not None else 0.008) * c.solar_radius
    dwarf = WhiteDwarf(mass=mass, radius=radius, surface_temperature=args.T,
                       protons=args.Z, nucleons=args.A)
    report = dwarf_report(dwarf, args.zeta, _regime(args))
    print(json.dumps({
        "mass": report.dwarf.mass,
        "radius": report.dwarf.radius,
        "surface_temperature": report.dwarf.surface_temperature,
        "protons": report.dwarf.protons,
        "nucleons": report.dwarf.nucleons,
        "mass_density": report.mass_density,
        "electron_density": report.electron_density,
        "fermi_momentum": report.fermi_momentum,
        "fermi_temperature": report.fermi_temperature,
        "t_over_tf": report.t_over_tf,
        "r_e": report.r_e,
        "zeta": report.zeta,
        "relativity_parameter": report.relativity_parameter,
        "nonrelativistic_ok": report.nonrelativistic_ok,
        "validity": {
            "degenerate": report.validity.degenerate,
            "ideal": report.validity.ideal,
            "t_over_tf": report.validity.t_over_tf,
            "density_ratio": report.validity.density_ratio,
        },
    }))
    return 0


def _cmd_avg(args, tol):
    regime, mu_mode = _regime(args), _mu_mode(args)
    measure = Measure(args.measure)
    value = average_entanglement(args.t, regime, measure, mu_mode)
    result = solve_zeta(args.t, regime, mu_mode)
    print(json.dumps({
        "average": value,
        "measure": measure.value,
        "t": args.t,
        "regime": regime.value,
        "zeta": result.zeta,
    }))
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "zeta": _cmd_zeta,
    "sweep": _cmd_sweep,
    "figure1": _cmd_figure1,
    "dwarf": _cmd_dwarf,
    "avg": _cmd_avg,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        tol = _resolve_tol(args)
        return _DISPATCH[args.command](args, tol)
    except _UsageError as exc:
        print(f"fge: usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, SolverError, QuadratureError, OSError) as exc:
        print(f"fge: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
