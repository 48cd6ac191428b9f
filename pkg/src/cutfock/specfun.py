"""Special functions used throughout the package.

Generalized Laguerre polynomials and their zeros, Bessel functions of the
first kind (order nu >= -1/2) and their zeros, and the smallest Airy zero.
Everything here works in float64.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "LaguerreParams",
    "BesselOrder",
    "log_gamma",
    "laguerre_eval",
    "laguerre_residual",
    "laguerre_zeros",
    "bessel_j",
    "bessel_j_scaled",
    "bessel_zero",
    "bessel_zeros",
    "airy_ai",
    "airy_smallest_zero",
]

# above this degree the Newton polish evaluates L_n in double-double
COMPENSATED_DEGREE = 300
_RESCALE = 1e150


@dataclass(frozen=True)
class LaguerreParams:
    n: int
    alpha: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"Laguerre degree must be a non-negative integer, got {self.n}")
        if not self.alpha > -1:
            raise ValueError(f"Laguerre order must exceed -1, got {self.alpha}")


@dataclass(frozen=True)
class BesselOrder:
    nu: float

    def __post_init__(self):
        if not self.nu >= -0.5:
            raise ValueError(f"Bessel order must be >= -1/2, got {self.nu}")


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


# ---------------------------------------------------------------- Laguerre


def laguerre_eval(n, alpha, x):
    """Evaluate L_n^alpha(x) by the forward three-term recurrence.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    p = LaguerreParams(n, alpha)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if p.n == 0:
        return prev[()] if prev.ndim == 0 else prev
    cur = 1.0 + alpha - x
    for k in range(1, p.n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur[()] if cur.ndim == 0 else cur


def _laguerre_pair_scaled(n, alpha, x):
    """Return (L_n, L_{n-1}) at x up to a common positive factor per point."""
    prev = np.ones_like(x)
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
        big = np.abs(cur) > _RESCALE
        if big.any():
            s = np.where(big, 1.0 / _RESCALE, 1.0)
            prev, cur = prev * s, cur * s
    return cur, prev


# double-double helpers (Dekker / Knuth error-free transforms)
_SPLIT = 134217729.0


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a):
    t = _SPLIT * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e = e + (ah * bl + al * bh)
    return _two_sum(p, e)


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    e = e + al + bl
    return _two_sum(s, e)


def _dd_div_int(ah, al, k):
    q = ah / k
    p, e = _two_prod(q, float(k))
    r = (ah - p - e + al) / k
    return _two_sum(q, r)


def _laguerre_pair_compensated(n, alpha, x):
    """Like :func:`_laguerre_pair_scaled` but carried in double-double."""
    zero = np.zeros_like(x)
    ph, pl = np.ones_like(x), zero.copy()
    ch, cl = _two_sum(np.full_like(x, 1.0 + alpha), -x)
    for k in range(1, n):
        ah, al = _two_sum(2 * k + 1 + alpha, -x)
        t1h, t1l = _dd_mul(ah, al, ch, cl)
        t2h, t2l = _dd_mul(ph, pl, -(k + alpha), 0.0)
        sh, sl = _dd_add(t1h, t1l, t2h, t2l)
        nh, nl = _dd_div_int(sh, sl, k + 1)
        ph, pl, ch, cl = ch, cl, nh, nl
        big = np.abs(ch) > _RESCALE
        if big.any():
            # power of two keeps the rescale exact
            s = np.where(big, 2.0**-500, 1.0)
            ph, pl, ch, cl = ph * s, pl * s, ch * s, cl * s
    return ch + cl, ph + pl


def laguerre_residual(n, alpha, x):
    """Scaled size of L_n^alpha at ``x``.

    Returns |L_n(x)| / (|n L_n(x)| + |(n + alpha) L_{n-1}(x)|). The denominator
    bounds |x L_n'(x)|, so near a simple root this is the relative distance
    to the root; the best float64 root gives about 1e-16.
    """
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.ones_like(x)
    pair = _laguerre_pair_compensated if n > COMPENSATED_DEGREE else _laguerre_pair_scaled
    ln, ln1 = pair(n, alpha, x)
    return np.abs(ln) / (np.abs(n * ln) + np.abs((n + alpha) * ln1))


def laguerre_zeros(n, alpha, polish_steps=3):
    """All n zeros of L_n^alpha, ascending.

    Seeds come from the eigenvalues of the Jacobi matrix of the Laguerre
    recurrence (diag 2k+1+alpha, offdiag sqrt(k(k+alpha))); each seed then
    gets a few safeguarded Newton steps on the recurrence itself.
    """
    p = LaguerreParams(n, alpha)
    if p.n == 0:
        return np.empty(0)
    k = np.arange(p.n, dtype=float)
    diag = 2 * k + 1 + alpha
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    if p.n == 1:
        return np.array([1.0 + alpha])
    z = eigh_tridiagonal(diag, off, eigvals_only=True)
    z.sort()
    gaps = np.diff(z)
    room = 0.25 * np.minimum(np.r_[z[0], gaps], np.r_[gaps, np.inf])
    pair = _laguerre_pair_compensated if p.n > COMPENSATED_DEGREE else _laguerre_pair_scaled
    seed = z.copy()
    for _ in range(polish_steps):
        ln, lnm1 = pair(p.n, alpha, z)
        denom = p.n * ln - (p.n + alpha) * lnm1
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(denom != 0, z * ln / denom, 0.0)
        step = np.where(np.isfinite(step), step, 0.0)
        # never let a step wander towards a neighbouring root
        ok = np.abs(z - step - seed) < room
        z = np.where(ok, z - step, z)
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * np.abs(z)):
            break
    return z


# ------------------------------------------------------------------- Bessel


def _bessel_series(nu, x, scaled=False):
    """Power series; ``scaled`` returns x**-nu * J_nu(x) (regular at 0)."""
    q = -0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, 200):
        term = term * q / (k * (nu + k))
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    pref = math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0))
    if scaled:
        return pref * total
    return pref * total * x**nu


def _bessel_miller(nu, x):
    """(J_nu(x), J_{nu+1}(x)) by Miller's backward recurrence, x > 0 array."""
    base = math.floor(nu)
    mu = nu - base
    top = max(nu, float(np.max(x)))
    kmax = int(top + 30 + 6 * math.sqrt(top))
    kmax += kmax % 2
    # weights of the Neumann normalization sum over orders mu + 2j
    if mu == 0.0:
        w = np.full(kmax // 2 + 1, 2.0)
        w[0] = 1.0
    else:
        j = np.arange(kmax // 2 + 1)
        lg = np.array([math.lgamma(mu + jj) - math.lgamma(jj + 1.0) for jj in j])
        w = (mu + 2 * j) * np.exp(lg)
    f_next = np.zeros_like(x)
    f = np.full_like(x, 1e-30)
    norm = w[kmax // 2] * f
    lower = upper = np.zeros_like(x)
    for k in range(kmax, 0, -1):
        f_prev = 2.0 * (mu + k) / x * f - f_next
        f_next, f = f, f_prev
        if (k - 1) % 2 == 0:
            norm = norm + w[(k - 1) // 2] * f
        if k - 1 == base:
            lower = f
        if k - 1 == base + 1:
            upper = f
        big = np.abs(f) > _RESCALE
        if big.any():
            s = np.where(big, 1.0 / _RESCALE, 1.0)
            f, f_next, norm = f * s, f_next * s, norm * s
            lower, upper = lower * s, upper * s
    if base == -1:
        lower = 2.0 * mu / x * f - f_next
    scale = (0.5 * x) ** mu / norm
    return lower * scale, upper * scale


def _bessel_pair(nu, x):
    """(J_nu(x), J_{nu+1}(x)) for an array of x > 0."""
    lo = np.empty_like(x)
    hi = np.empty_like(x)
    small = x <= 4.0
    if small.any():
        lo[small] = _bessel_series(nu, x[small])
        hi[small] = _bessel_series(nu + 1.0, x[small])
    if (~small).any():
        lo[~small], hi[~small] = _bessel_miller(nu, x[~small])
    return lo, hi


def bessel_j(nu, x):
    """Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0."""
    BesselOrder(nu)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_j requires x >= 0")
    out = np.full_like(x, 1.0 if nu == 0 else (0.0 if nu > 0 else np.inf))
    pos = x > 0
    if pos.any():
        out[pos] = _bessel_pair(nu, x[pos])[0]
    return out[()] if out.ndim == 0 else out


def bessel_j_scaled(nu, x):
    """x**-nu * J_nu(x), finite at x = 0 where it equals 1 / (2**nu Gamma(nu+1))."""
    BesselOrder(nu)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_j_scaled requires x >= 0")
    out = np.empty_like(x)
    small = x <= 4.0
    if small.any():
        out[small] = _bessel_series(nu, x[small], scaled=True)
    if (~small).any():
        xl = x[~small]
        out[~small] = _bessel_miller(nu, xl)[0] * xl**-nu
    return out[()] if out.ndim == 0 else out


def _refine_zeros(nu, a, b):
    """Roots of J_nu in sign-change brackets [a, b] (arrays), Newton with bisection fallback."""
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    fa = _bessel_pair(nu, a)[0]
    x = 0.5 * (a + b)
    for _ in range(100):
        j, j1 = _bessel_pair(nu, x)
        same = np.signbit(j) == np.signbit(fa)
        a = np.where(same, x, a)
        fa = np.where(same, j, fa)
        b = np.where(same, b, x)
        dj = nu / x * j - j1
        with np.errstate(divide="ignore", invalid="ignore"):
            xn = x - j / dj
        inside = (xn > a) & (xn < b) & np.isfinite(xn)
        xn = np.where(j == 0, x, np.where(inside, xn, 0.5 * (a + b)))
        done = np.abs(xn - x) <= 2 * np.finfo(float).eps * np.abs(xn)
        x = xn
        if done.all():
            break
    return x


@functools.lru_cache(maxsize=256)
def _bessel_zeros_cached(nu, count):
    zeros = []
    lo = max(nu, 0.0) + 1e-3
    step = 0.5
    while len(zeros) < count:
        need = count - len(zeros)
        hi = lo + (need + 2) * math.pi + 2.0
        grid = np.arange(lo, hi + step, step)
        vals = bessel_j(nu, grid)
        flips = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
        flips = flips[:need]
        zeros.extend(_refine_zeros(nu, grid[flips], grid[flips + 1]).tolist())
        lo = grid[-1]
    return tuple(zeros)


def bessel_zeros(nu, count):
    """First ``count`` positive zeros of J_nu, found by a sign-change scan.

    Consecutive zeros of J_nu for nu >= -1/2 are more than 2.4 apart, so a
    scan with step 1/2 cannot step over a pair.
    """
    BesselOrder(nu)
    if count < 1:
        return np.empty(0)
    return np.array(_bessel_zeros_cached(float(nu), int(count)))


def _mcmahon(nu, n):
    mu = 4.0 * nu * nu
    b = (n + 0.5 * nu - 0.25) * math.pi
    b8 = 8.0 * b
    return (
        b
        - (mu - 1) / b8
        - 4 * (mu - 1) * (7 * mu - 31) / (3 * b8**3)
        - 32 * (mu - 1) * (83 * mu**2 - 982 * mu + 3779) / (15 * b8**5)
    )


def bessel_zero(nu, n):
    """The n-th positive zero j_{nu,n} of J_nu.

    McMahon's expansion seeds Newton iteration once n is large compared with
    nu**2; otherwise the zero comes from the sequential scan.
    """
    BesselOrder(nu)
    if int(n) != n or n < 1:
        raise ValueError(f"zero index must be a positive integer, got {n}")
    beta = (n + 0.5 * nu - 0.25) * math.pi
    if beta < 2.0 * nu * nu + 10.0:
        return float(bessel_zeros(nu, n)[-1])
    x = _mcmahon(nu, n)
    return float(_refine_zeros(nu, [x - 1.0], [x + 1.0])[0])


# --------------------------------------------------------------------- Airy


def airy_ai(x):
    """Ai(x) and Ai'(x) from the Maclaurin series; meant for |x| <~ 5."""
    c1 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
    c2 = 1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))
    x3 = x**3
    f, g = 1.0, x
    df, dg = 0.0, 1.0
    a, b = 1.0, x
    for k in range(1, 80):
        a *= x3 / ((3 * k - 1) * (3 * k))
        b *= x3 / ((3 * k) * (3 * k + 1))
        f += a
        g += b
        df += 3 * k * a / x if x != 0 else 0.0
        dg += (3 * k + 1) * b / x if x != 0 else 0.0
        if abs(a) + abs(b) < 1e-18:
            break
    return c1 * f - c2 * g, c1 * df - c2 * dg


@functools.lru_cache(maxsize=1)
def airy_smallest_zero():
    """|a_1|, magnitude of the first (least negative) zero of Ai.

    Solved here once: Ai changes sign on [-3, -2] and Newton, safeguarded by
    that bracket, converges to machine precision.
    """
    lo, hi = -3.0, -2.0
    flo = airy_ai(lo)[0]
    x = -2.5
    for _ in range(100):
        f, df = airy_ai(x)
        if (f > 0) == (flo > 0):
            lo, flo = x, f
        else:
            hi = x
        xn = x - f / df
        if not lo < xn < hi:
            xn = 0.5 * (lo + hi)
        if abs(xn - x) < 1e-15:
            x = xn
            break
        x = xn
    return -x
