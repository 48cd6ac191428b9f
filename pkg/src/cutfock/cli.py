"""Command line interface: every computation, written out as data files.

    cutfock spectrum --preset figure1 --format dat --out fig1.dat
    cutfock count --d 3 --nb 6
    cutfock scaling --preset table2 --format json
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .charcount import GroupSpec, count_table
from .eigensolve import Normalization, eigenvalues_analytic, eigenvalues_sturm, eigenvector_coeffs
from .fockbasis import (
    Sector,
    SectorSpec,
    VectorCutoff,
    hamiltonian_matrix,
    squared_momentum_matrix,
    squared_radius_matrix,
)
from .scaling import (
    DEFAULT_FIT_RANGE,
    FIGURE2_FIT_RANGE,
    figure2_series,
    fit_gamma,
    r_squared_vs_n2,
    scaling_estimate,
)
from .waves import (
    DEFAULT_TERMS,
    Summation,
    bessel_radial_exact,
    compare_to_bessel,
    cutoff_eigenstate_wavefunction,
    plane_wave_reconstruction,
)

FORMATS = ("csv", "json", "dat")


class CliError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    d: int = 3
    sector: Sector = Sector.SINGLET
    nb_range: tuple = (0, 0)
    fmt: str = "csv"
    out: str = "-"
    vector_cutoff: VectorCutoff = VectorCutoff.PAPER
    fit_range: tuple = DEFAULT_FIT_RANGE
    terms: int = DEFAULT_TERMS
    summation: Summation = Summation.CESARO
    normalization: Normalization = Normalization.UNIT_L2
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.d < 1:
            raise CliError("--d must be >= 1")
        lo, hi = self.nb_range
        if lo < 0 or hi < lo:
            raise CliError(f"invalid N_B range {lo}:{hi}")
        if self.fmt not in FORMATS:
            raise CliError(f"unknown format {self.fmt!r}")
        if self.terms < 1:
            raise CliError("--terms must be >= 1")

    def conventions(self):
        return {
            "d": self.d,
            "sector": self.sector.value,
            "vector_cutoff": self.vector_cutoff.value,
            "fit_range": list(self.fit_range),
            "terms": self.terms,
            "summation": self.summation.value,
            "normalization": self.normalization.value,
        }


# ------------------------------------------------------------------ output


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.integer):
        return str(int(v))
    return str(v)


def _json_value(v):
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    return v


def render_table(columns, rows, fmt, meta):
    """CSV with header, gnuplot-style whitespace columns, or JSON with metadata."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_cell(v) for v in row])
        return buf.getvalue()
    if fmt == "dat":
        lines = ["# " + " ".join(columns)]
        for row in rows:
            lines.append(" ".join("NaN" if v is None else _cell(v) for v in row))
        return "\n".join(lines) + "\n"
    doc = {
        "meta": {"version": __version__, **meta},
        "columns": list(columns),
        "rows": [[_json_value(v) for v in row] for row in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def emit(cfg, columns, rows, meta=None):
    text = render_table(columns, rows, cfg.fmt, {**cfg.conventions(), **(meta or {})})
    if cfg.out == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------- commands


def cmd_spectrum(cfg: RunConfig):
    """Rows (N_B, E_1 .. E_k) for every cutoff in the range."""
    k = cfg.extra.get("count", 12)
    method = cfg.extra.get("method", "analytic")
    rows = []
    for nb in range(cfg.nb_range[0], cfg.nb_range[1] + 1):
        spec = SectorSpec(cfg.d, cfg.sector, nb, cfg.vector_cutoff)
        if method == "sturm":
            vals = eigenvalues_sturm(hamiltonian_matrix(spec), spec).values
        else:
            vals = eigenvalues_analytic(spec).values
        vals = [float(v) for v in vals[:k]]
        rows.append([nb] + vals + [None] * (k - len(vals)))
    emit(cfg, ["N_B"] + [f"E{i}" for i in range(1, k + 1)], rows, {"method": method})


def cmd_matrix(cfg: RunConfig):
    spec = SectorSpec(cfg.d, cfg.sector, cfg.nb_range[1], cfg.vector_cutoff)
    op = cfg.extra.get("operator", "h")
    t = {"h": hamiltonian_matrix, "x2": squared_radius_matrix, "p2": squared_momentum_matrix}[op](spec)
    rows = [
        [i, float(t.diag[i]), float(t.offdiag[i]) if i < t.size - 1 else None] for i in range(t.size)
    ]
    emit(cfg, ["index", "diag", "offdiag"], rows, {"operator": op, "cutoff": spec.cutoff})


def cmd_eigenvector(cfg: RunConfig):
    """Closed-form coefficients of the i-th eigenvector on the orthonormal states."""
    spec = SectorSpec(cfg.d, cfg.sector, cfg.nb_range[1], cfg.vector_cutoff)
    vals = eigenvalues_analytic(spec).values
    i = cfg.extra.get("index", 1)
    if not 1 <= i <= vals.size:
        raise CliError(f"--index must lie in [1, {vals.size}]")
    vec = eigenvector_coeffs(spec, float(vals[i - 1]), cfg.normalization)
    rows = [[n, float(c)] for n, c in enumerate(vec.coeffs)]
    emit(cfg, ["n", "coeff"], rows, {"energy": vec.energy, "index": i})


def cmd_count(cfg: RunConfig):
    """Per-N_B multiplicity of the sector's representation, N_B = 0 .. max."""
    if cfg.d < 2:
        raise CliError("character counting needs d >= 2")
    results = count_table(cfg.nb_range[1], GroupSpec(cfg.d), cfg.sector)
    rows = [[nb, r.multiplicity, r.raw, r.residual] for nb, r in enumerate(results)]
    rows = rows[cfg.nb_range[0] :]
    emit(cfg, ["N_B", "multiplicity", "raw", "residual"], rows)


def _grid(cfg, default_min):
    r_min = cfg.extra.get("r_min", default_min)
    r_max = cfg.extra.get("r_max", 2.0)
    points = cfg.extra.get("points", 201)
    if not (0 <= r_min < r_max) or points < 2:
        raise CliError("need 0 <= r-min < r-max and at least 2 points")
    return np.linspace(r_min, r_max, points)


def cmd_wavefunction(cfg: RunConfig):
    """Cut eigenstate wavefunction with the scale-matched Bessel wave beside it."""
    spec = SectorSpec(cfg.d, cfg.sector, cfg.nb_range[1], cfg.vector_cutoff)
    r = _grid(cfg, 0.0)
    wave = cutoff_eigenstate_wavefunction(spec, cfg.extra.get("index", 1), r)
    kappa = math.sqrt(wave.meta["energy"])
    scale, dev, corr = compare_to_bessel(wave, cfg.d, kappa)
    target = scale * bessel_radial_exact(cfg.d, kappa, r)
    rows = [[float(a), float(b), float(c)] for a, b, c in zip(r, wave.values, target)]
    emit(cfg, ["r", "value", "bessel_target"], rows,
         {"energy": wave.meta["energy"], "scale": scale, "deviation": dev, "correlation": corr})


def cmd_reconstruct(cfg: RunConfig):
    """Summed bilinear series next to its limit (1/2) (kappa r)^{1-d/2} J(kappa r)."""
    kappa = cfg.extra.get("kappa", 1.0)
    r = _grid(cfg, 0.5)
    vals = plane_wave_reconstruction(cfg.d, kappa, r, cfg.terms, cfg.summation)
    target = 0.5 * bessel_radial_exact(cfg.d, kappa, r)
    rows = [[float(a), float(b), float(c)] for a, b, c in zip(r, vals, target)]
    emit(cfg, ["r", "value", "bessel_target"], rows, {"kappa": kappa})


def cmd_scaling(cfg: RunConfig):
    preset = cfg.extra.get("preset")
    if preset == "table2":
        rows = []
        for d in (1, 3, 9):
            f = fit_gamma(d, cfg.fit_range)
            rows.append([d, f.gamma1, f.stderr1, f.gamma2, f.stderr2])
        emit(cfg, ["d", "gamma1", "stderr1", "gamma2", "stderr2"], rows)
        return
    if preset == "figure2":
        nb = 200
        rows = []
        meta = {}
        lo, hi = FIGURE2_FIT_RANGE
        for d in (1, 150):
            n, e = figure2_series(d, nb)
            meta[f"r2_d{d}"] = r_squared_vs_n2(n[lo - 1 : hi], e[lo - 1 : hi])
            rows += [[d, int(i), float(i * i / nb**2), float(v)] for i, v in zip(n, e)]
        meta["r2_window"] = list(FIGURE2_FIT_RANGE)
        emit(cfg, ["d", "n", "n2_over_NB2", "E"], rows, meta)
        return
    nb = cfg.nb_range[1]
    spec = SectorSpec(cfg.d, cfg.sector, nb, cfg.vector_cutoff)
    e = eigenvalues_analytic(spec).values
    k = min(cfg.extra.get("count", 12), e.size)
    rows = [
        [i, float(i * i / max(nb, 1) ** 2), float(e[i - 1]),
         scaling_estimate(i, nb, cfg.d, cfg.sector, cfg.vector_cutoff)]
        for i in range(1, k + 1)
    ]
    emit(cfg, ["n", "n2_over_NB2", "E", "bessel_estimate"], rows)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "matrix": cmd_matrix,
    "eigenvector": cmd_eigenvector,
    "count": cmd_count,
    "wavefunction": cmd_wavefunction,
    "reconstruct": cmd_reconstruct,
    "scaling": cmd_scaling,
}


# ----------------------------------------------------------------- parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _nb_range(text):
    if ":" in text:
        a, b = text.split(":", 1)
        return int(a), int(b)
    raise ValueError


def _pair(text):
    a, b = text.split(":", 1)
    return int(a), int(b)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--d", type=int, default=3)
    common.add_argument("--sector", choices=[s.value for s in Sector], default="singlet")
    nb = common.add_mutually_exclusive_group()
    nb.add_argument("--nb", type=int)
    nb.add_argument("--nb-range", type=_nb_range, metavar="LO:HI")
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--out", default="-")
    common.add_argument("--vector-cutoff-convention", choices=[v.value for v in VectorCutoff], default="paper")
    common.add_argument("--fit-range", type=_pair, default=DEFAULT_FIT_RANGE, metavar="LO:HI")
    common.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    common.add_argument("--summation", choices=[s.value for s in Summation], default="cesaro")
    common.add_argument("--normalization", choices=[n.value for n in Normalization], default="l2")

    p = _Parser(prog="cutfock", description="Free particle in a cut Fock basis.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", parents=[common], help="lowest eigenvalues against N_B")
    s.add_argument("--preset", choices=["figure1"])
    s.add_argument("--count", type=int, default=12)
    s.add_argument("--method", choices=["analytic", "sturm"], default="analytic")

    s = sub.add_parser("matrix", parents=[common], help="tridiagonal matrix of H, X^2 or P^2")
    s.add_argument("--operator", choices=["h", "x2", "p2"], default="h")

    s = sub.add_parser("eigenvector", parents=[common], help="closed-form eigenvector coefficients")
    s.add_argument("--index", type=int, default=1)

    sub.add_parser("count", parents=[common], help="character-method multiplicities")

    s = sub.add_parser("wavefunction", parents=[common], help="cut eigenstate in position space")
    s.add_argument("--index", type=int, default=1)
    s.add_argument("--r-min", type=float, default=0.0)
    s.add_argument("--r-max", type=float, default=2.0)
    s.add_argument("--points", type=int, default=201)

    s = sub.add_parser("reconstruct", parents=[common], help="bilinear Laguerre sum for <r|kappa>")
    s.add_argument("--kappa", type=float, default=1.0)
    s.add_argument("--r-min", type=float, default=0.5)
    s.add_argument("--r-max", type=float, default=2.0)
    s.add_argument("--points", type=int, default=31)

    s = sub.add_parser("scaling", parents=[common], help="scaling laws, table2 and figure2 presets")
    s.add_argument("--preset", choices=["figure2", "table2"])
    s.add_argument("--count", type=int, default=12)
    return p


def config_from_args(ns) -> RunConfig:
    if ns.nb_range is not None:
        nb_range = ns.nb_range
    elif ns.nb is not None:
        nb_range = (ns.nb, ns.nb)
    else:
        nb_range = (0, 0)
    extra = {
        key: getattr(ns, key)
        for key in ("count", "method", "operator", "index", "r_min", "r_max", "points", "kappa", "preset")
        if hasattr(ns, key)
    }
    cfg = RunConfig(
        subcommand=ns.subcommand,
        d=ns.d,
        sector=Sector(ns.sector),
        nb_range=nb_range,
        fmt=ns.format,
        out=ns.out,
        vector_cutoff=VectorCutoff(ns.vector_cutoff_convention),
        fit_range=tuple(ns.fit_range),
        terms=ns.terms,
        summation=Summation(ns.summation),
        normalization=Normalization(ns.normalization),
        extra=extra,
    )
    if ns.subcommand == "spectrum" and extra.get("preset") == "figure1":
        cfg.d, cfg.sector, cfg.nb_range = 3, Sector.SINGLET, (0, 60)
        cfg.extra["count"] = 12
    if ns.subcommand == "count" and ns.nb_range is None:
        cfg.nb_range = (0, nb_range[1])
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        cfg = config_from_args(ns)
        COMMANDS[cfg.subcommand](cfg)
    except (CliError, ValueError, IndexError, ArithmeticError, OSError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
