"""Cut Fock basis of the free d-dimensional particle.

Singlet states are (a^dag . a^dag)^n |0> and vector states carry one extra
a^dag_i. The Hamiltonian a^dag a + d/2 - (a a + a^dag a^dag)/2 is tridiagonal
in either sector, and so is x^m x^m.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .specfun import log_gamma

__all__ = [
    "Sector",
    "VectorCutoff",
    "SectorSpec",
    "TridiagonalMatrix",
    "basis_size",
    "norm_singlet_sq",
    "norm_vector_sq",
    "log_norm_singlet_sq",
    "log_norm_vector_sq",
    "hamiltonian_matrix",
    "squared_radius_matrix",
    "squared_momentum_matrix",
]


class Sector(str, enum.Enum):
    SINGLET = "singlet"
    VECTOR = "vector"


class VectorCutoff(str, enum.Enum):
    """How N_B limits the vector sector.

    PAPER keeps n <= ceil(N_B/2), which is the range used for the closed-form
    vector spectrum. STRICT keeps only states with 2n + 1 <= N_B quanta, which
    is what the character count sees.
    """

    PAPER = "paper"
    STRICT = "strict"


@dataclass(frozen=True)
class SectorSpec:
    d: int
    sector: Sector = Sector.SINGLET
    cutoff: int = 0
    vector_cutoff: VectorCutoff = VectorCutoff.PAPER

    def __post_init__(self):
        object.__setattr__(self, "sector", Sector(self.sector))
        object.__setattr__(self, "vector_cutoff", VectorCutoff(self.vector_cutoff))
        if int(self.d) != self.d or self.d < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.d}")
        if int(self.cutoff) != self.cutoff or self.cutoff < 0:
            raise ValueError(f"cutoff must be a non-negative integer, got {self.cutoff}")
        if (
            self.sector is Sector.VECTOR
            and self.vector_cutoff is VectorCutoff.STRICT
            and self.cutoff < 1
        ):
            raise ValueError("the strict vector sector is empty below N_B = 1")

    @property
    def alpha(self) -> float:
        """Laguerre order of the sector: d/2 - 1 (singlet) or d/2 (vector)."""
        return self.d / 2 - 1 if self.sector is Sector.SINGLET else self.d / 2

    @property
    def degeneracy(self) -> int:
        return 1 if self.sector is Sector.SINGLET else self.d


@dataclass(frozen=True)
class TridiagonalMatrix:
    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or diag.size < 1:
            raise ValueError("diag must be a non-empty 1-d array")
        if off.shape != (diag.size - 1,):
            raise ValueError(f"offdiag must have length {diag.size - 1}, got {off.shape}")
        diag.setflags(write=False)
        off.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)

    @property
    def size(self) -> int:
        return self.diag.size

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def matvec(self, v):
        v = np.asarray(v, dtype=float)
        out = self.diag * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out

    def norm(self) -> float:
        """Gershgorin bound on the spectral radius."""
        row = np.abs(self.diag).copy()
        row[:-1] += np.abs(self.offdiag)
        row[1:] += np.abs(self.offdiag)
        return float(row.max())

    def scaled(self, factor: float) -> "TridiagonalMatrix":
        return TridiagonalMatrix(self.diag * factor, self.offdiag * factor)

    def to_csv(self, path):
        """Write (index, diag, offdiag) rows; the last offdiag cell is empty."""
        with Path(path).open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["index", "diag", "offdiag"])
            for i, a in enumerate(self.diag):
                b = repr(float(self.offdiag[i])) if i < self.offdiag.size else ""
                w.writerow([i, repr(float(a)), b])


def basis_size(spec: SectorSpec) -> int:
    nb = spec.cutoff
    if spec.sector is Sector.SINGLET:
        return nb // 2 + 1
    if spec.vector_cutoff is VectorCutoff.PAPER:
        return -(-nb // 2) + 1
    return (nb - 1) // 2 + 1


def log_norm_singlet_sq(n: int, d: int) -> float:
    return n * math.log(4.0) + math.lgamma(n + 1) + log_gamma(d / 2 + n) - log_gamma(d / 2)


def log_norm_vector_sq(n: int, d: int) -> float:
    return n * math.log(4.0) + math.lgamma(n + 1) + log_gamma(d / 2 + n + 1) - log_gamma(d / 2 + 1)


def norm_singlet_sq(n: int, d: int) -> float:
    """<0| (a a)^n (a^dag a^dag)^n |0> = 4^n n! Gamma(d/2+n) / Gamma(d/2).

    Raises OverflowError past float range; use :func:`log_norm_singlet_sq`.
    """
    _check_nd(n, d)
    return math.exp(log_norm_singlet_sq(n, d))


def norm_vector_sq(n: int, d: int) -> float:
    """Squared norm of a^dag_i (a^dag a^dag)^n |0>: 4^n n! Gamma(d/2+n+1) / Gamma(d/2+1)."""
    _check_nd(n, d)
    return math.exp(log_norm_vector_sq(n, d))


def _check_nd(n, d):
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n}")
    if int(d) != d or d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")


def _recurrence_entries(spec: SectorSpec):
    m = basis_size(spec)
    n = np.arange(m, dtype=float)
    a = spec.alpha
    return 2 * n + 1 + a, np.sqrt(n[1:] * (n[1:] + a))


def hamiltonian_matrix(spec: SectorSpec) -> TridiagonalMatrix:
    """H in the orthonormal cut basis.

    Singlet: <n|H|n> = 2n + d/2, <n+1|H|n> = -sqrt((n+1)(n+d/2)).
    Vector:  <n|H|n> = 2n + d/2 + 1, <n+1|H|n> = -sqrt((n+1)(n+d/2+1)).
    One block is returned for the vector sector; the d copies are identical.
    """
    diag, off = _recurrence_entries(spec)
    return TridiagonalMatrix(diag, -off)


def squared_radius_matrix(spec: SectorSpec) -> TridiagonalMatrix:
    # x.x differs from H only by the sign of a a + a^dag a^dag
    diag, off = _recurrence_entries(spec)
    return TridiagonalMatrix(diag, off)


def squared_momentum_matrix(spec: SectorSpec) -> TridiagonalMatrix:
    """P^2 = 2 H."""
    return hamiltonian_matrix(spec).scaled(2.0)
