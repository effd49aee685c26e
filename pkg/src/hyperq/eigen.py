"""Cyclic-by-row Jacobi eigensolver and spectral scalar extraction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NonConvergence
from .hypergraph import Hypergraph
from . import matrices

MAX_SWEEPS = 50
DEFAULT_TOL = 1e-12
ROTATION_THRESHOLD = 1e-300
PSD_CLAMP = 1e-9


def _jacobi_kernel(a: np.ndarray, off_target: float, max_sweeps: int) -> int:
    """Run cyclic-by-row Jacobi sweeps in place; return the sweep count or -1
    if the off-diagonal Frobenius norm never fell below off_target."""
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += a[i, j] * a[i, j]
        if math.sqrt(2.0 * off2) <= off_target:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < ROTATION_THRESHOLD:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                for i in range(n):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = c * api - s * aqi
                    a[q, i] = s * api + c * aqi
    return -1


try:  # numba only speeds up the sweep loop; semantics are identical
    import numba

    _jacobi_kernel = numba.njit(cache=True)(_jacobi_kernel)
except ImportError:  # pragma: no cover
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of one matrix, sorted descending."""

    kind: str  # adjacency | laplacian | signlessLaplacian | quotient
    values: tuple[float, ...]
    order: int

    @property
    def max_value(self) -> float:
        return self.values[0]

    @property
    def min_value(self) -> float:
        return self.values[-1]

    @property
    def spread(self) -> float:
        return self.values[0] - self.values[-1]


def jacobi_eigenvalues(mx: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, descending, via cyclic Jacobi.

    Raises NonConvergence after MAX_SWEEPS sweeps."""
    n = mx.shape[0]
    if n == 0:
        return np.zeros(0)
    work = np.array(mx, dtype=float)
    initial_off = math.sqrt(2.0 * float(np.sum(np.triu(work, 1) ** 2)))
    sweeps = _jacobi_kernel(work, tol * (initial_off + 1.0), MAX_SWEEPS)
    if sweeps < 0:
        raise NonConvergence(f"no convergence within {MAX_SWEEPS} sweeps")
    vals = np.sort(np.diagonal(work))[::-1]
    return vals


def eigenvalues(mx: np.ndarray, kind: str, tol: float = DEFAULT_TOL) -> Spectrum:
    vals = jacobi_eigenvalues(mx, tol)
    return Spectrum(kind=kind, values=tuple(float(v) for v in vals), order=mx.shape[0])


def clamped_values(spec: Spectrum) -> tuple[float, ...]:
    """Reporting view for positive semi-definite spectra: tiny negative
    round-off is clamped to zero; raw values stay in the Spectrum."""
    return tuple(0.0 if -PSD_CLAMP <= v < 0.0 else v for v in spec.values)


def group_by_multiplicity(
    values: tuple[float, ...], tol: float = 1e-7
) -> list[tuple[float, int]]:
    """Group a descending value list into (representative, multiplicity) runs."""
    groups: list[tuple[float, int]] = []
    for v in values:
        if groups and abs(groups[-1][0] - v) <= tol:
            rep, cnt = groups[-1]
            groups[-1] = (rep, cnt + 1)
        else:
            groups.append((v, 1))
    return groups


@dataclass(frozen=True)
class SpectralSummary:
    q_max: float
    q_min: float
    mu_max: float
    lambda_max: float
    lambda_min: float
    s_q: float
    s_a: float
    degenerate: bool


def spectral_summary(h: Hypergraph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    """Extreme eigenvalues and spreads of A, L and Q from one solver setting."""
    if h.n == 1 or h.m == 0:
        d = float(h.degrees()[0]) if h.n == 1 else 0.0
        return SpectralSummary(d, d, 0.0, d, d, 0.0, 0.0, degenerate=True)
    a = eigenvalues(matrices.adjacency_matrix(h), "adjacency", tol)
    l = eigenvalues(matrices.laplacian(h), "laplacian", tol)
    q = eigenvalues(matrices.signless_laplacian(h), "signlessLaplacian", tol)
    return SpectralSummary(
        q_max=q.max_value,
        q_min=q.min_value,
        mu_max=l.max_value,
        lambda_max=a.max_value,
        lambda_min=a.min_value,
        s_q=q.spread,
        s_a=a.spread,
        degenerate=False,
    )
