"""Spectra and eigenvectors of the cut Hamiltonian.

Three independent routes to the eigenvalues are provided: Sturm-sequence
bisection on the tridiagonal matrix, zeros of the Laguerre polynomial that is
its characteristic polynomial, and a dense Jacobi-rotation solver used as a
test oracle. Eigenvectors come in closed form from Laguerre values.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.linalg import solve_banded

from .fockbasis import (
    Sector,
    SectorSpec,
    TridiagonalMatrix,
    basis_size,
    hamiltonian_matrix,
    log_norm_singlet_sq,
    log_norm_vector_sq,
)
from .specfun import laguerre_eval, laguerre_residual, laguerre_zeros

__all__ = [
    "Method",
    "Normalization",
    "Spectrum",
    "CoefficientVector",
    "QuantizationError",
    "char_poly_eval",
    "eigenvalues_sturm",
    "eigenvalues_analytic",
    "eigenvector_coeffs",
    "recursion_coeffs",
    "recursion_residual",
    "inverse_iteration",
    "dense_jacobi_eigen",
]


class Method(str, enum.Enum):
    STURM = "sturm-bisection"
    LAGUERRE = "laguerre-zeros"
    DENSE_JACOBI = "dense-jacobi"


class Normalization(str, enum.Enum):
    A0_EQUALS_ONE = "a0"
    UNIT_L2 = "l2"


class QuantizationError(ValueError):
    """Raised when an energy does not satisfy the cut quantization condition."""


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    method: Method
    spec: SectorSpec | None = None

    def __len__(self):
        return len(self.values)

    def to_csv(self, path):
        lines = ["index,eigenvalue"]
        lines += [f"{i + 1},{v!r}" for i, v in enumerate(map(float, self.values))]
        Path(path).write_text("\n".join(lines) + "\n")

    def to_json(self, path=None):
        doc = {"method": self.method.value, "eigenvalues": [float(v) for v in self.values]}
        if self.spec is not None:
            doc["spec"] = {
                "d": self.spec.d,
                "sector": self.spec.sector.value,
                "cutoff": self.spec.cutoff,
                "vector_cutoff": self.spec.vector_cutoff.value,
                "degeneracy": self.spec.degeneracy,
            }
        text = json.dumps(doc, indent=2, sort_keys=True)
        if path is not None:
            Path(path).write_text(text + "\n")
        return text


@dataclass(frozen=True)
class CoefficientVector:
    """Eigenvector components on the orthonormal cut basis |n>."""

    energy: float
    coeffs: np.ndarray
    normalization: Normalization = Normalization.UNIT_L2
    spec: SectorSpec | None = field(default=None, compare=False)


# --------------------------------------------------------------- char poly


def char_poly_eval(spec: SectorSpec, m: int, lam):
    """det(H_m - lam) / m! for the leading m x m block of the cut Hamiltonian.

    The division by k! is applied inside the recursion, which turns it into
    the Laguerre recurrence: the result equals L_m^{d/2-1}(lam) in the singlet
    sector and L_m^{d/2}(lam) in the vector sector.
    """
    size = basis_size(spec)
    if not 1 <= m <= size:
        raise ValueError(f"minor size must lie in [1, {size}], got {m}")
    h = hamiltonian_matrix(spec)
    lam = np.asarray(lam, dtype=float)
    prev = np.ones_like(lam)
    cur = h.diag[0] - lam
    for k in range(2, m + 1):
        e2 = h.offdiag[k - 2] ** 2
        prev, cur = cur, ((h.diag[k - 1] - lam) * cur - e2 * prev / (k - 1)) / k
    return cur[()] if cur.ndim == 0 else cur


def _sturm_count(t: TridiagonalMatrix, lam):
    """Number of eigenvalues strictly below each entry of ``lam``."""
    e2 = t.offdiag**2
    # pivot floor as in LAPACK dstebz, but rounded up: the count is strict
    pivmin = np.finfo(float).tiny * max(1.0, float(e2.max(initial=0.0)))
    q = t.diag[0] - lam
    count = (q < 0).astype(int)
    for i in range(1, t.size):
        q = np.where(np.abs(q) < pivmin, np.where(q < 0, -pivmin, pivmin), q)
        q = t.diag[i] - lam - e2[i - 1] / q
        count += q < 0
    return count


def _char_newton_step(t: TridiagonalMatrix, lam):
    """p(lam) / p'(lam) for the characteristic polynomial, overflow-safe."""
    p_prev = np.ones_like(lam)
    dp_prev = np.zeros_like(lam)
    p = t.diag[0] - lam
    dp = -np.ones_like(lam)
    for i in range(1, t.size):
        e2 = t.offdiag[i - 1] ** 2
        p_new = (t.diag[i] - lam) * p - e2 * p_prev
        dp_new = -p + (t.diag[i] - lam) * dp - e2 * dp_prev
        p_prev, dp_prev, p, dp = p, dp, p_new, dp_new
        s = np.maximum(np.abs(p), np.abs(dp))
        s = np.where(s > 1e100, 1e-100, 1.0)
        p_prev, dp_prev, p, dp = p_prev * s, dp_prev * s, p * s, dp * s
    with np.errstate(divide="ignore", invalid="ignore"):
        step = p / dp
    return np.where(np.isfinite(step), step, 0.0)


def eigenvalues_sturm(t: TridiagonalMatrix, spec: SectorSpec | None = None) -> Spectrum:
    """All eigenvalues by Sturm-sequence bisection.

    Every eigenvalue is bracketed to width 1e-12 * ||T|| (all brackets are
    bisected together), then receives one Newton step on the characteristic
    polynomial if that step stays inside its bracket.
    """
    m = t.size
    if m == 1:
        return Spectrum(np.array([t.diag[0]]), Method.STURM, spec)
    norm = t.norm()
    lo = np.full(m, -norm)
    hi = np.full(m, norm)
    idx = np.arange(m)
    tol = 1e-12 * max(norm, np.finfo(float).tiny)
    while np.any(hi - lo > tol):
        mid = 0.5 * (lo + hi)
        below = _sturm_count(t, mid) > idx
        hi = np.where(below, mid, hi)
        lo = np.where(below, lo, mid)
    lam = 0.5 * (lo + hi)
    polished = lam - _char_newton_step(t, lam)
    inside = (polished >= lo - tol) & (polished <= hi + tol)
    lam = np.where(inside, polished, lam)
    if np.any(np.diff(lam) <= 0):
        raise ArithmeticError("eigenvalues are not simple; clustered spectra are not supported")
    return Spectrum(lam, Method.STURM, spec)


def eigenvalues_analytic(spec: SectorSpec) -> Spectrum:
    """Zeros of L_m^alpha, m = basis size, alpha the sector's Laguerre order."""
    return Spectrum(laguerre_zeros(basis_size(spec), spec.alpha), Method.LAGUERRE, spec)


# ------------------------------------------------------------ eigenvectors


def _log_gamma_ratio(spec, n):
    # ln Gamma(alpha+1) - ln Gamma(n+alpha+1)
    a = spec.alpha
    return math.lgamma(a + 1) - math.lgamma(n + a + 1)


def recursion_coeffs(spec: SectorSpec, energy: float, a0: float = 1.0) -> np.ndarray:
    """a_n(E) = a0 Gamma(alpha+1) L_n^alpha(E) / Gamma(n+alpha+1), n < basis size.

    These are the coefficients on the rescaled monomial states
    2^-n (a^dag a^dag)^n |0> (times a^dag_i in the vector sector), so they obey
    a_{n-1} - (<n|H|n> - E) a_n + (n+1)(n+alpha+1) a_{n+1} = 0.
    """
    m = basis_size(spec)
    out = np.empty(m)
    for n in range(m):
        out[n] = a0 * laguerre_eval(n, spec.alpha, energy) * math.exp(_log_gamma_ratio(spec, n))
    return out


def recursion_residual(spec: SectorSpec, energy: float, a) -> np.ndarray:
    """Per-row residual of the coefficient recursion, relative to the summed term sizes.

    Row n uses a_{n+1} = 0 past the end of the cut basis, so the last row
    measures the quantization condition.
    """
    a = np.asarray(a, dtype=float)
    m = a.size
    h = hamiltonian_matrix(spec)
    alpha = spec.alpha
    res = np.empty(m)
    for n in range(m):
        t0 = a[n - 1] if n > 0 else 0.0
        t1 = -(h.diag[n] - energy) * a[n]
        t2 = (n + 1) * (n + alpha + 1) * a[n + 1] if n + 1 < m else 0.0
        scale = abs(t0) + abs(t1) + abs(t2)
        res[n] = abs(t0 + t1 + t2) / scale if scale > 0 else 0.0
    return res


def eigenvector_coeffs(
    spec: SectorSpec,
    energy: float,
    normalization: Normalization = Normalization.UNIT_L2,
    tol: float = 1e-9,
) -> CoefficientVector:
    """Closed-form eigenvector of the cut Hamiltonian for the eigenvalue ``energy``.

    Components on the orthonormal basis are a_n(E) * N_n / 2^n with a_n from
    :func:`recursion_coeffs` and N_n the basis-state norm; this equals the
    orthonormal Laguerre function sqrt(n! Gamma(alpha+1) / Gamma(n+alpha+1)) L_n^alpha(E).
    """
    m = basis_size(spec)
    normalization = Normalization(normalization)
    if laguerre_residual(m, spec.alpha, energy) > tol:
        raise QuantizationError(
            f"E={energy!r} is not an eigenvalue of the cut matrix (L_{m} != 0)"
        )
    a = recursion_coeffs(spec, energy)
    lognorm = log_norm_singlet_sq if spec.sector is Sector.SINGLET else log_norm_vector_sq
    n = np.arange(m)
    scale = np.exp(np.array([0.5 * lognorm(k, spec.d) for k in n]) - n * math.log(2.0))
    v = a * scale
    if normalization is Normalization.UNIT_L2:
        v = v / np.linalg.norm(v)
    return CoefficientVector(float(energy), v, normalization, spec)


def inverse_iteration(t: TridiagonalMatrix, energy: float, iters: int = 3) -> np.ndarray:
    """Unit eigenvector for an eigenvalue estimate by shifted inverse iteration."""
    m = t.size
    if m == 1:
        return np.ones(1)
    shift = energy + 1e-10 * max(1.0, abs(energy))
    ab = np.zeros((3, m))
    ab[0, 1:] = t.offdiag
    ab[1, :] = t.diag - shift
    ab[2, :-1] = t.offdiag
    v = np.ones(m) / math.sqrt(m)
    for _ in range(iters):
        v = solve_banded((1, 1), ab, v)
        v /= np.linalg.norm(v)
    if v[0] < 0:
        v = -v
    return v


# --------------------------------------------------------------- oracle


def dense_jacobi_eigen(a, tol: float = 1e-12, max_sweeps: int = 60) -> Spectrum:
    """Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps continue until the off-diagonal Frobenius norm falls below
    tol * ||A||_F. Raises ArithmeticError if that takes more than
    ``max_sweeps`` sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("dense_jacobi_eigen needs a square symmetric matrix")
    if n > 2000:
        raise ValueError("matrix too large for the Jacobi oracle")
    total = np.linalg.norm(a)
    target = tol * total

    def off_norm():
        return float(np.linalg.norm(a - np.diag(np.diag(a))))

    for _ in range(max_sweeps):
        if off_norm() <= target:
            return Spectrum(np.sort(np.diag(a)), Method.DENSE_JACOBI)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    if off_norm() <= target:
        return Spectrum(np.sort(np.diag(a)), Method.DENSE_JACOBI)
    raise ArithmeticError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
