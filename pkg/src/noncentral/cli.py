"""``spectra`` command-line front end.

    spectra spectrum|density|polytable|wavefunction|verify --config FILE [--out DIR] [key=value ...]

The config file is INI-style; each command reads the section named after
it (plus ``[DEFAULT]``).  ``key=value`` arguments override file values.
Every data file is CSV with ``#`` header lines; the plotting commands
also write a gnuplot script and a PNG.
"""
import argparse
import configparser
import json
import logging
import math
import os
import sys

import numpy as np

from . import __version__, angular, assembly, orthopoly, radial, recursion, verify
from .angular import AngularPotentialParams
from .chain import RecursionCoeffs
from .errors import NoncentralError, ParameterDomainError
from .output import read_csv, write_csv, write_gnuplot

log = logging.getLogger("spectra")

EXIT_OK, EXIT_VALIDATION, EXIT_VERIFY, EXIT_NUMERIC = 0, 2, 3, 4


class ConfigError(ParameterDomainError):
    pass


class Config:
    """Typed view of one config section; remembers which keys were read."""

    def __init__(self, values, command):
        self.values = dict(values)
        self.command = command
        self.used = {}

    def _raw(self, key, default):
        if key in self.values:
            return self.values[key]
        if default is _REQUIRED:
            raise ConfigError(f"[{self.command}] missing required key '{key}'")
        return default

    def get(self, key, default=None):
        v = self._raw(key, default)
        self.used[key] = v
        return v

    def float(self, key, default=None):
        v = self._raw(key, default)
        try:
            out = None if v is None else float(v)
        except ValueError:
            raise ConfigError(f"[{self.command}] '{key}' must be a number (got {v!r})") from None
        if out is not None and not math.isfinite(out):
            raise ConfigError(f"[{self.command}] '{key}' must be finite")
        self.used[key] = out
        return out

    def int(self, key, default=None):
        v = self._raw(key, default)
        try:
            out = None if v is None else int(v)
        except ValueError:
            raise ConfigError(f"[{self.command}] '{key}' must be an integer (got {v!r})") from None
        self.used[key] = out
        return out

    def floats(self, key, default=None):
        v = self._raw(key, default)
        try:
            out = [float(t) for t in str(v).split(",") if t.strip()] if v is not None else None
        except ValueError:
            raise ConfigError(f"[{self.command}] '{key}' must be a comma-separated list of numbers") from None
        self.used[key] = v
        return out

    def bool(self, key, default=False):
        v = str(self._raw(key, default)).strip().lower()
        if v not in ("1", "0", "true", "false", "yes", "no", "on", "off"):
            raise ConfigError(f"[{self.command}] '{key}' must be a boolean")
        out = v in ("1", "true", "yes", "on")
        self.used[key] = out
        return out

    def choice(self, key, options, default=None):
        v = self.get(key, default)
        if v not in options:
            raise ConfigError(f"[{self.command}] '{key}' must be one of {', '.join(options)} (got {v!r})")
        return v

    def echo(self):
        return [(k, self.values[k]) for k in sorted(self.values)]


_REQUIRED = object()


def load_config(path, command, overrides=()):
    parser = configparser.ConfigParser(interpolation=None)
    if path is not None:
        if not os.path.isfile(path):
            raise ConfigError(f"config file not found: {path}")
        with open(path) as fh:
            parser.read_file(fh)
    values = dict(parser.defaults())
    if parser.has_section(command):
        values.update({k: v for k, v in parser.items(command)})
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override must look like key=value (got {item!r})")
        k, v = item.split("=", 1)
        values[k.strip().lower()] = v.strip()
    return Config(values, command)


def _plot(out, stem, x, series, xlabel, ylabel, title, csv_name, xcol, ycols, markers=False, points=()):
    from . import plotting

    png = os.path.join(out, stem + ".png")
    plotting.line_plot(png, x, series, xlabel, ylabel, title, markers=markers, points=points)
    write_gnuplot(os.path.join(out, stem + ".gp"), csv_name, stem + ".png", xcol, ycols,
                  xlabel, ylabel, title, "points" if markers else "lines")


# --- spectrum -------------------------------------------------------------------

def _potential(cfg):
    return AngularPotentialParams(cfg.float("c_hat", 0.0), cfg.float("c", 0.0), cfg.float("c0", 0.0))


def _radial_potential(cfg):
    kind = cfg.choice("radial", ("coulomb", "oscillator"), "coulomb")
    if kind == "coulomb":
        return radial.RadialPotential.coulomb(cfg.float("z", -1.0))
    return radial.RadialPotential.oscillator(cfg.float("omega", 1.0))


def _descriptor(cfg):
    return assembly.SolutionSpaceDescriptor(
        _potential(cfg), _radial_potential(cfg), gamma=cfg.float("gamma", None),
        branch=cfg.choice("branch", ("plus", "minus"), "plus"), nu_free=cfg.float("nu_free", None),
        allow_special=cfg.bool("allow_special", False))


def cmd_spectrum(cfg, out):
    model = cfg.choice("model", ("regime", "abm"), "regime")
    max_level = cfg.int("max_level", 4)
    if max_level < 1:
        raise ConfigError("max_level must be >= 1")
    warnings = []
    if model == "abm":
        Z = cfg.float("z", -1.0)
        k_max, n_max, m_max = cfg.int("k_max", max_level - 1), cfg.int("n_max", 2), cfg.int("m_max", 2)
        levels, rejected = assembly.abm_levels(Z, cfg.float("zeta", 1.0), cfg.float("a", 0.0),
                                               cfg.float("b", 0.0), k_max, n_max, range(-m_max, m_max + 1))
        rows = [(lv["k"], lv["n"], lv["m"], lv["gamma"], lv["energy"], lv["lambda"]) for lv in levels]
        if rejected:
            warnings.append("below barrier (n,m): " + " ".join(f"({n},{m})" for n, m in sorted(set(rejected))))
        regime = "aharonov-bohm-monopole"
    else:
        desc = _descriptor(cfg)
        regime = desc.regime.value
        if desc.book is not None and desc.book.empty:
            rows = []
            warnings.append(f"empty quantum-number book at gamma={desc.gamma}")
        else:
            rows = assembly.enumerate_bound_spectrum(desc, max_level)
        n_sel, m_sel = cfg.int("n", None), cfg.int("m", None)
        rows = [r for r in rows if (n_sel is None or r[1] == n_sel) and (m_sel is None or r[2] == m_sel)]
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    for w in warnings:
        log.warning(w)
    header = cfg.echo() + [("regime", regime)] + [("warning", w) for w in warnings]
    path = write_csv(os.path.join(out, "spectrum.csv"), ["k", "n", "m", "gamma", "E", "lambda"], rows,
                     header, {"E": "hartree-like, hbar = m = 1", "lambda": "inverse length"})
    if rows:
        idx = np.arange(len(rows))
        _plot(out, "spectrum", idx, {"E": [r[4] for r in rows]}, "row", "E", "bound levels",
              "spectrum.csv", 0, [5], markers=True)
    return path


# --- density --------------------------------------------------------------------

def _chains(cfg):
    """List of (label, chain, params) for the density command."""
    kind = cfg.choice("chain", ("Q", "H", "constant", "custom"), "Q")
    if kind == "Q":
        mu, nu = cfg.float("mu", 1.0), cfg.float("nu", 1.5)
        return [(f"tau={t:g}", angular.q_chain(t * t, mu, nu), {"tau_sq": t * t, "mu": mu, "nu": nu})
                for t in cfg.floats("tau", "0.5,1.0,1.5,2.0")]
    if kind == "H":
        mu, nu = cfg.float("mu", 1.0), cfg.float("nu", 1.5)
        return [(f"sigma={s:g}", angular.h_chain(s, mu, nu), {}) for s in cfg.floats("sigma", "0.1")]
    if kind == "constant":
        a, b = cfg.float("a", 0.0), cfg.float("b", 0.5)
        return [(f"a={a:g} b={b:g}", RecursionCoeffs.constant(a, b), {})]
    path = cfg.get("coefficients", _REQUIRED)
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    return [("custom", RecursionCoeffs.from_arrays(data[:, 0], data[:, 1], name="custom"), {})]


def cmd_density(cfg, out):
    N = cfg.int("levels", 51)
    h = cfg.float("bandwidth", 0.3)
    eps = cfg.float("eps", None)
    tol = cfg.float("agree_tol", 5e-2)
    normalize = cfg.bool("normalize", True)
    traces = _chains(cfg)
    if N < 2:
        raise ConfigError("levels must be >= 2")
    closed = cfg.choice("terminator", ("local", "none"), "local") == "none"
    lo_hi = []
    for _, ch, _ in traces:
        x, _ = orthopoly.quadrature_from_recursion(ch, N)
        lo_hi += [x.min(), x.max()]
    zmin = cfg.float("zmin", min(lo_hi) - 3 * h)
    zmax = cfg.float("zmax", max(lo_hi) + 3 * h)
    grid = np.linspace(zmin, zmax, cfg.int("points", 2001))
    columns, data, header, series, points = ["z"], [grid], [], {}, []
    for label, ch, params in traces:
        t = recursion.local_terminator(ch, N)
        if closed or t.b_inf == 0:
            # plain truncation: the tail is dropped
            t = recursion.TerminatorParams(0.0, 0.0)
        cf = recursion.density_cf(ch, grid, N, t, eps)
        qd = recursion.density_quadrature(ch, N, h, grid)
        rc = cf.normalized() if normalize else cf.rho
        rq = qd.normalized() if normalize else qd.rho
        peak = max(rc.max(), rq.max())
        sup = float(np.abs(rc - rq).max() / peak) if peak > 0 else 0.0
        below = float(np.trapezoid(np.where(grid < 0, rq, 0.0), grid))
        header += [(f"{label} sup_rel_diff", f"{sup:.6g}"), (f"{label} clip_mass", f"{cf.diagnostics['clip_mass']:.6g}"),
                   (f"{label} eps", f"{cf.diagnostics['eps']:.6g}"), (f"{label} mass_below_0", f"{below:.6g}")]
        if sup > tol:
            header.append((f"{label} warning", f"estimators disagree: {sup:.3g} > {tol:g}"))
            log.warning("%s: estimators disagree (%.3g > %g)", label, sup, tol)
        columns += [f"cf[{label}]", f"quad[{label}]"]
        data += [rc, rq]
        series[f"CF {label}"] = rc
        series[f"quadrature {label}"] = rq
        if params:
            rho, masses = angular.q_weight(grid, params["tau_sq"], params["mu"], params["nu"])
            scale = 1.0 if normalize else ch.mass
            columns.append(f"exact[{label}]")
            data.append(rho * scale)
            series[f"closed form {label}"] = rho * scale
            for zk, wk in masses:
                header.append((f"{label} point_mass", f"z={zk:.17g} w={wk * scale:.17g}"))
            if masses:
                points.append((f"point masses {label}", [m[0] for m in masses], [m[1] * scale for m in masses]))
    rows = np.column_stack(data)
    path = write_csv(os.path.join(out, "density.csv"), columns, rows, cfg.echo() + header,
                     {"z": "spectral variable", "rho": "per unit z"})
    _plot(out, "density", grid, series, "z", "rho(z)", "orthogonality density", "density.csv", 1,
          list(range(2, len(columns) + 1)), points=points)
    return path


# --- polytable ------------------------------------------------------------------

def _family(cfg):
    """(table function, recurrence function giving (a, c, d) at n) for one family."""
    fam = cfg.choice("family", ("H", "Q", "jacobi", "laguerre", "mp", "hyperbolic_mp"), "H")
    if fam in ("H", "Q", "jacobi"):
        mu, nu = cfg.float("mu", 1.0), cfg.float("nu", 1.5)
        orthopoly.JacobiParams(mu, nu)
        if fam == "H":
            s = cfg.float("sigma", 0.1)
            return lambda n, z: angular.h_table(n, s, mu, nu, z), lambda n: angular.h_recurrence(n, s, mu, nu)
        if fam == "Q":
            t2 = cfg.float("tau", 1.0) ** 2
            return lambda n, z: angular.q_table(n, t2, mu, nu, z), lambda n: angular.q_recurrence(n, t2, mu, nu)
        p = orthopoly.JacobiParams(mu, nu)
        return lambda n, z: orthopoly.jacobi_table(n, p, z), lambda n: orthopoly.jacobi_recurrence(n, mu, nu)
    if fam == "laguerre":
        p = orthopoly.LaguerreParams(cfg.float("nu", 1.0))
        # z L_n = (2n+nu+1) L_n - (n+nu) L_{n-1} - (n+1) L_{n+1}
        return (lambda n, z: orthopoly.laguerre_table(n, p, z),
                lambda n: (2 * n + p.nu + 1, -(n + p.nu), -(n + 1.0)))
    p = orthopoly.MPParams(cfg.float("mu", 1.0), cfg.float("phi", 1.0), hyperbolic=fam == "hyperbolic_mp")
    cphi = math.cosh(p.phi) if p.hyperbolic else math.cos(p.phi)
    sphi = math.sinh(p.phi) if p.hyperbolic else math.sin(p.phi)
    # 2 z sin(phi) P_k = (k+1) P_{k+1} - 2 (k+mu) cos(phi) P_k + (k+2mu-1) P_{k-1}, rescaled to z P_k
    return (lambda n, z: orthopoly.mp_table(n, p, z),
            lambda n: (-(n + p.mu) * cphi / sphi, (n + 2 * p.mu - 1) / (2 * sphi), (n + 1) / (2 * sphi)))


def cmd_polytable(cfg, out):
    n_max = cfg.int("n_max", 6)
    if n_max < 0:
        raise ConfigError("n_max must be >= 0")
    table, rec = _family(cfg)
    z = np.linspace(cfg.float("zmin", -1.0), cfg.float("zmax", 1.0), cfg.int("points", 41))
    T = table(n_max + 1, z)
    res = np.zeros_like(z)
    for n in range(n_max + 1):
        a, c, d = rec(n)
        prev = T[n - 1] if n else 0.0
        lhs = z * T[n]
        rhs = a * T[n] + c * prev + d * T[n + 1]
        scale = np.maximum(1.0, np.abs(lhs) + np.abs(a * T[n]) + np.abs(c * prev) + np.abs(d * T[n + 1]))
        res = np.maximum(res, np.abs(lhs - rhs) / scale)
    rows = np.column_stack([z] + [T[n] for n in range(n_max + 1)] + [res])
    cols = ["z"] + [f"p{n}" for n in range(n_max + 1)] + ["recurrence_residual"]
    path = write_csv(os.path.join(out, "polytable.csv"), cols, rows, cfg.echo())
    _plot(out, "polytable", z, {f"n={n}": T[n] for n in range(n_max + 1)}, "z", "p_n(z)",
          "polynomial table", "polytable.csv", 1, list(range(2, n_max + 3)))
    return path


# --- wavefunction ----------------------------------------------------------------

def _wave_state(cfg):
    model = cfg.choice("model", ("regime", "special", "abm"), "regime")
    kind = cfg.choice("kind", ("bound", "scattering"), "bound")
    if model == "special":
        j, eta, C0, Z = cfg.int("j", 0), cfg.float("eta", 0.0), cfg.float("c0", 1.0), cfg.float("z", -1.0)
        if kind == "bound":
            return assembly.special_bound_state(cfg.int("k", 0), j, eta, Z, C0)
        E, lam, K = cfg.float("energy", 0.5), cfg.float("lambda", 1.0), cfg.int("K", 100)
        ang = assembly.special_angular(j, eta, C0)
        return assembly.CompleteState(
            {"j": j, "eta": eta}, E,
            lambda r: radial.coulomb_scattering_radial(E, j + eta, "plus", lam, Z, r, K)[0], ang, lam)
    if model == "abm":
        k, n, m = cfg.int("k", 0), cfg.int("n", 0), cfg.int("m", 0)
        zeta, a, b, Z = cfg.float("zeta", 1.0), cfg.float("a", 0.0), cfg.float("b", 0.0), cfg.float("z", -1.0)
        lv = assembly.abm_spectrum(k, n, m, Z, zeta, a, b)
        _, mu, nu = assembly._abm_gamma(n, m, a, b, zeta)
        bp = angular.AngularBasisParams(mu, nu, mu / 2, nu / 2, m, angular.AngularCase.DIAGONAL)

        def ang(theta, phi):
            return angular.chi_eval(n, bp, np.cos(theta)) * angular.phi_component(m, phi)

        return assembly.CompleteState(lv, lv["energy"], lambda r: assembly.abm_radial(lv, r), ang,
                                      lv["lambda"], power=2 * lv["nu"] + 2)
    desc = _descriptor(cfg)
    if kind == "bound":
        return assembly.bound_state(desc, cfg.int("k", 0), cfg.int("n", 0), cfg.int("m", 0))
    return assembly.scattering_state(desc, cfg.float("energy", 0.5), cfg.float("lambda", 1.0),
                                     cfg.int("K", 100), cfg.int("n", 0), cfg.int("m", 0))


def cmd_wavefunction(cfg, out):
    state = _wave_state(cfg)
    r = np.linspace(cfg.float("rmin", 0.05), cfg.float("rmax", 20.0), cfg.int("nr", 200))
    theta = np.linspace(cfg.float("theta_min", 0.0), cfg.float("theta_max", math.pi), cfg.int("ntheta", 61))
    phi0 = cfg.float("phi", 0.0)
    if np.any(r <= 0):
        raise ConfigError("radial grid must be positive")
    R = np.asarray(state.radial_fn(r), dtype=float)
    # phi-integrated |angular|^2 from a periodic trapezoid rule, exact for the finite m content
    phis = 2 * math.pi * np.arange(64) / 64
    TT, PP = np.meshgrid(theta, phis, indexing="ij")
    A = state.angular_fn(TT, PP)
    ang_int = np.sum(np.abs(A) ** 2, axis=1) * (2 * math.pi / 64)
    ang0 = np.abs(state.angular_fn(theta, np.full_like(theta, phi0))) ** 2
    rows = []
    for i, rv in enumerate(r):
        for t, a0, ai in zip(theta, ang0, ang_int):
            rows.append((rv, t, R[i], (R[i] / rv) ** 2 * a0, (R[i] / rv) ** 2 * ai))
    rows = np.array(rows)
    # int |psi|^2 r^2 sin(theta) dr dtheta dphi over the emitted grid
    dens = (R ** 2)[:, None] * ang_int[None, :] * np.sin(theta)[None, :]
    grid_norm = float(np.trapezoid(np.trapezoid(dens, theta, axis=1), r))
    header = cfg.echo() + [("energy", "%.17g" % state.energy if state.energy is not None else "n/a"),
                           ("grid_norm", "%.17g" % grid_norm), ("phi", "%.17g" % phi0)]
    path = write_csv(os.path.join(out, "wavefunction.csv"),
                     ["r", "theta", "R", "psi2", "psi2_phi_integrated"], rows, header,
                     {"r": "length", "theta": "rad"})
    mid = len(theta) // 2
    _plot(out, "wavefunction", r, {"R(r)": R, f"|psi|^2 at theta={theta[mid]:.3g}": (R / r) ** 2 * ang0[mid]},
          "r", "value", "radial component and density", "wavefunction.csv", 1, [3])
    return path


# --- verify -----------------------------------------------------------------------

def cmd_verify(cfg, out):
    suite = cfg.get("suite", "full")
    try:
        report = verify.run(suite, inject=cfg.float("inject", 0.0))
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from None
    path = os.path.join(out, "verify.json")
    with open(path, "w", newline="\n") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    for name in failed:
        log.error("check failed: %s", name)
    return path, not failed


COMMANDS = {
    "spectrum": cmd_spectrum,
    "density": cmd_density,
    "polytable": cmd_polytable,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
}


def build_parser():
    p = argparse.ArgumentParser(prog="spectra", description="Tridiagonal-representation spectra and states.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", help="INI config file; the section named after the command is used")
    p.add_argument("--out", default=".", help="output directory (default: current directory)")
    p.add_argument("--log-level", default="WARNING")
    p.add_argument("--version", action="version", version=f"spectra {__version__}")
    p.add_argument("overrides", nargs="*", metavar="key=value")
    return p


def main(argv=None):
    args = build_parser().parse_intermixed_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s: %(message)s")
    try:
        cfg = load_config(args.config, args.command, args.overrides)
        os.makedirs(args.out, exist_ok=True)
        with np.errstate(over="raise", invalid="ignore", divide="ignore"):
            result = COMMANDS[args.command](cfg, args.out)
    except NoncentralError as exc:
        log.error("%s", exc)
        return exc.exit_code
    except (FloatingPointError, OverflowError) as exc:
        log.error("numeric failure: %s", exc)
        return EXIT_NUMERIC
    except (configparser.Error, OSError) as exc:
        log.error("%s", exc)
        return EXIT_VALIDATION
    if args.command == "verify":
        path, ok = result
        print(path)
        return EXIT_OK if ok else EXIT_VERIFY
    print(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
