"""Position-space wavefunctions and the continuum (Bessel) limit.

The singlet states |n> are, in position space, zero angular momentum
oscillator states c_n exp(-r^2/2) L_n^{d/2-1}(r^2) (up to the sign (-1)^n).
Summing them against the momentum amplitudes gives the free radial wave
(kappa r)^{1-d/2} J_{d/2-1}(kappa r).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .eigensolve import eigenvalues_analytic, eigenvector_coeffs
from .fockbasis import Sector, SectorSpec, basis_size
from .specfun import bessel_j_scaled, laguerre_eval

__all__ = [
    "Summation",
    "RadialWave",
    "oscillator_norm",
    "oscillator_wavefunction",
    "momentum_overlap",
    "solid_angle",
    "plane_wave_reconstruction",
    "bessel_radial_exact",
    "cutoff_eigenstate_wavefunction",
    "compare_to_bessel",
    "DEFAULT_TERMS",
]

# fixed by scripts/convergence_study.py
DEFAULT_TERMS = 4000


class Summation(str, enum.Enum):
    PARTIAL = "partial"
    CESARO = "cesaro"


@dataclass(frozen=True)
class RadialWave:
    r: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if r.shape != v.shape or r.ndim != 1:
            raise ValueError("r and values must be 1-d arrays of equal length")
        if np.any(r < 0) or np.any(np.diff(r) <= 0):
            raise ValueError("radii must be non-negative and increasing")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "values", v)

    def to_dat(self, path, extra=None):
        """Whitespace columns r, value[, extra...] with a '#' header line."""
        cols = [self.r, self.values]
        names = ["r", "value"]
        for name, col in (extra or {}).items():
            names.append(name)
            cols.append(np.asarray(col, dtype=float))
        lines = ["# " + " ".join(names)]
        lines += [" ".join(f"{c[i]:.17g}" for c in cols) for i in range(self.r.size)]
        Path(path).write_text("\n".join(lines) + "\n")


def solid_angle(d: int) -> float:
    """Area of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2)."""
    return 2.0 * math.pi ** (d / 2) / math.gamma(d / 2)


def oscillator_norm(n: int, d: int) -> float:
    """c_n = sqrt(n! Gamma(d/2) / (pi^{d/2} Gamma(n + d/2)))."""
    return math.exp(
        0.5 * (math.lgamma(n + 1) + math.lgamma(d / 2) - 0.5 * d * math.log(math.pi) - math.lgamma(n + d / 2))
    )


def oscillator_wavefunction(n: int, d: int, r):
    """phi_n(r) = c_n exp(-r^2/2) L_n^{d/2-1}(r^2), unit norm in d^d x."""
    r = np.asarray(r, dtype=float)
    x = r * r
    return oscillator_norm(n, d) * np.exp(-0.5 * x) * laguerre_eval(n, d / 2 - 1, x)


def momentum_overlap(n: int, d: int, kappa):
    """psi_n(kappa); the oscillator is symmetric under x <-> p so this is phi_n."""
    return oscillator_wavefunction(n, d, kappa)


def bessel_radial_exact(d: int, kappa, r):
    """(kappa r)^{1-d/2} J_{d/2-1}(kappa r), the regular s-wave of energy kappa^2."""
    return bessel_j_scaled(d / 2 - 1, np.abs(np.asarray(kappa, dtype=float) * np.asarray(r, dtype=float)))


def plane_wave_reconstruction(d, kappa, r, n_terms=DEFAULT_TERMS, mode=Summation.CESARO):
    """Truncated bilinear sum for <r|kappa>.

    Sum over n < n_terms of (-1)^n n!/Gamma(n+d/2) L_n(r^2) L_n(kappa^2)
    exp(-(kappa^2 + r^2)/2), Laguerre order d/2 - 1. The series only converges
    in the Abel/Cesaro sense; its limit is half of :func:`bessel_radial_exact`.
    CESARO returns the mean of the first n_terms partial sums.
    """
    mode = Summation(mode)
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    r = np.asarray(r, dtype=float)
    alpha = d / 2 - 1
    x = r * r
    y = float(kappa) ** 2
    lx_prev, lx = np.zeros_like(x), np.ones_like(x)
    ly_prev, ly = 0.0, 1.0
    coef = 1.0 / math.gamma(d / 2)
    partial = coef * lx * ly
    running = partial.copy()
    for n in range(1, n_terms):
        lx_prev, lx = lx, ((2 * n - 1 + alpha - x) * lx - (n - 1 + alpha) * lx_prev) / n
        ly_prev, ly = ly, ((2 * n - 1 + alpha - y) * ly - (n - 1 + alpha) * ly_prev) / n
        coef *= -n / (n - 1 + d / 2)
        partial = partial + coef * lx * ly
        running += partial
    total = running / n_terms if mode is Summation.CESARO else partial
    return total * np.exp(-0.5 * (x + y))


def cutoff_eigenstate_wavefunction(spec: SectorSpec, eigen_index: int, r_grid) -> RadialWave:
    """Position-space radial wavefunction of the i-th (1-based) cut eigenstate.

    Sum_n v_n (-1)^n phi_n(r) with v the unit eigenvector on |n>; (-1)^n
    converts phi_n to <r|n> for |n> built from (a^dag a^dag)^n.
    """
    if spec.sector is not Sector.SINGLET:
        raise ValueError("wavefunctions are only implemented for the singlet sector")
    m = basis_size(spec)
    if not 1 <= eigen_index <= m:
        raise IndexError(f"eigen_index must lie in [1, {m}], got {eigen_index}")
    energy = float(eigenvalues_analytic(spec).values[eigen_index - 1])
    v = eigenvector_coeffs(spec, energy).coeffs
    if v[0] < 0:
        v = -v
    r = np.asarray(r_grid, dtype=float)
    psi = np.zeros_like(r)
    for n in range(m):
        psi += (-1) ** n * v[n] * oscillator_wavefunction(n, spec.d, r)
    meta = {"d": spec.d, "cutoff": spec.cutoff, "eigen_index": eigen_index, "energy": energy, "n_terms": m}
    return RadialWave(r, psi, meta)


def compare_to_bessel(wave: RadialWave, d: int, kappa: float, r_max=None):
    """Least-squares scale fit of ``wave`` to the Bessel wave on r <= r_max.

    Returns (scale, relative L2 deviation, correlation), all on the r^{d-1} dr
    weighted grid.
    """
    mask = np.ones_like(wave.r, dtype=bool) if r_max is None else wave.r <= r_max
    r = wave.r[mask]
    f = wave.values[mask]
    g = bessel_radial_exact(d, kappa, r)
    w = r ** (d - 1) if d > 1 else np.ones_like(r)
    scale = float(np.sum(w * f * g) / np.sum(w * g * g))
    dev = float(np.sqrt(np.sum(w * (f - scale * g) ** 2) / np.sum(w * f * f)))
    corr = float(np.sum(w * f * g) / np.sqrt(np.sum(w * f * f) * np.sum(w * g * g)))
    return scale, dev, corr
