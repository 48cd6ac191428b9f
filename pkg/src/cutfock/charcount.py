"""State counting by Haar-measure character integrals over SO(d).

The number of times a representation R occurs in the symmetric N-th power of
the defining representation is the average of conj(chi_R) * chi_N over the
group. By the Weyl integration formula that average reduces to an integral
over the M = floor(d/2) torus angles, whose integrand is a trigonometric
polynomial, so a periodic trapezoid rule with enough nodes is exact.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .fockbasis import Sector

__all__ = [
    "Parity",
    "GroupSpec",
    "CountResult",
    "QuadratureError",
    "haar_weight",
    "character_defining",
    "sym_character",
    "sym_character_partitions",
    "count_representation",
    "count_table",
    "cumulative_basis_count",
    "write_count_csv",
]

RESIDUAL_TOL = 1e-6


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


class QuadratureError(ArithmeticError):
    """The character integral did not land on an integer."""


@dataclass(frozen=True)
class GroupSpec:
    d: int

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ValueError(f"SO(d) needs d >= 2, got {self.d}")

    @property
    def M(self) -> int:
        return self.d // 2

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.d % 2 == 0 else Parity.ODD


@dataclass(frozen=True)
class CountResult:
    multiplicity: int
    raw: float
    residual: float


def haar_weight(angles, g: GroupSpec):
    """Unnormalized Weyl density on the maximal torus.

    ``angles`` has shape (..., M). Even d: prod_{j<k} (cos a_k - cos a_j)^2;
    odd d multiplies by prod_m sin^2(a_m / 2).
    """
    angles = np.asarray(angles, dtype=float)
    c = np.cos(angles)
    w = np.ones(angles.shape[:-1])
    for j, k in itertools.combinations(range(g.M), 2):
        w = w * (c[..., k] - c[..., j]) ** 2
    if g.parity is Parity.ODD:
        w = w * np.prod(np.sin(0.5 * angles) ** 2, axis=-1)
    return w


def character_defining(angles, g: GroupSpec):
    """Character of the d-dimensional defining representation."""
    angles = np.asarray(angles, dtype=float)
    chi = 2.0 * np.sum(np.cos(angles), axis=-1)
    return chi + 1.0 if g.parity is Parity.ODD else chi


def _power_sums(nmax, angles, g):
    return [character_defining(k * angles, g) for k in range(1, nmax + 1)]


def _complete_symmetric(nmax, angles, g):
    """[h_0, ..., h_nmax] via Newton's identities h_N = (1/N) sum_k p_k h_{N-k}."""
    p = _power_sums(nmax, angles, g)
    h = [np.ones(np.asarray(angles).shape[:-1])]
    for n in range(1, nmax + 1):
        acc = np.zeros_like(h[0])
        for k in range(1, n + 1):
            acc = acc + p[k - 1] * h[n - k]
        h.append(acc / n)
    return h


def sym_character(n: int, angles, g: GroupSpec):
    """Character of the n-th symmetric power of the defining representation."""
    if n < 0:
        raise ValueError("symmetric power must be non-negative")
    return _complete_symmetric(n, np.asarray(angles, dtype=float), g)[n]


def _partitions(n, largest=None):
    # multiplicity vectors {k: i_k} with sum k i_k = n
    if largest is None:
        largest = n
    if n == 0:
        yield {}
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out = dict(rest)
            out[k] = out.get(k, 0) + 1
            yield out


def sym_character_partitions(n: int, angles, g: GroupSpec):
    """Same as :func:`sym_character` by the explicit cycle-index sum (slow)."""
    angles = np.asarray(angles, dtype=float)
    total = np.zeros(angles.shape[:-1])
    for part in _partitions(n):
        term = np.ones(angles.shape[:-1])
        for k, i in part.items():
            term = term * character_defining(k * angles, g) ** i / (math.factorial(i) * k**i)
        total = total + term
    return total


def _nodes(nmax, g, nodes):
    k_min = nmax + 2 * g.M + 3
    k = k_min if nodes is None else int(nodes)
    if k < k_min:
        raise ValueError(f"need at least {k_min} nodes per angle for exactness, got {k}")
    return 2 * np.pi * np.arange(k) / k


def count_table(nmax: int, g: GroupSpec, target=Sector.SINGLET, nodes=None):
    """CountResult for every N in 0..nmax.

    The tensor trapezoid grid is walked one slice of the first angle at a time
    and partial sums are merged at the end.
    """
    target = Sector(target)
    theta = _nodes(nmax, g, nodes)
    sums = np.zeros(nmax + 1)
    mass = 0.0
    rest = [theta] * (g.M - 1)
    for a0 in theta:
        mesh = np.stack(np.meshgrid(np.array([a0]), *rest, indexing="ij"), axis=-1)
        w = haar_weight(mesh, g)
        if target is Sector.VECTOR:
            w = w * character_defining(mesh, g)
        mass += float(haar_weight(mesh, g).sum())
        h = _complete_symmetric(nmax, mesh, g)
        sums += np.array([float((w * hn).sum()) for hn in h])
    out = []
    for raw in sums / mass:
        mult = int(round(raw))
        res = abs(raw - mult)
        if res >= RESIDUAL_TOL:
            raise QuadratureError(f"character integral {float(raw)!r} is not an integer")
        out.append(CountResult(max(mult, 0), float(raw), float(res)))
    return out


def count_representation(n: int, g: GroupSpec, target=Sector.SINGLET, nodes=None) -> CountResult:
    """Multiplicity of ``target`` in the n-th symmetric power of the defining rep."""
    if n < 0:
        raise ValueError("N_B must be non-negative")
    return count_table(n, g, target, nodes)[n]


def cumulative_basis_count(n: int, g: GroupSpec, sector=Sector.SINGLET, nodes=None) -> int:
    """Number of ``sector`` states with at most n quanta."""
    return sum(r.multiplicity for r in count_table(n, g, sector, nodes))


def write_count_csv(path, results):
    lines = ["N_B,multiplicity"] + [f"{i},{r.multiplicity}" for i, r in enumerate(results)]
    Path(path).write_text("\n".join(lines) + "\n")
