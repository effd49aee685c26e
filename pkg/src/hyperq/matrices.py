"""Dense matrix construction: A, D, L, Q, equitable-partition quotients,
row-sum functionals and the bordered-matrix characteristic polynomial."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import NotEquitable, ValidationError
from .hypergraph import Hypergraph

EQUITABLE_TOL = 1e-10


def adjacency_matrix(h: Hypergraph) -> np.ndarray:
    """Entry (i,j) = sum over shared edges e of 1/(|e|-1); zero diagonal."""
    a = np.zeros((h.n, h.n))
    for e in h.edges:
        w = 1.0 / (len(e) - 1)
        for i, j in itertools.combinations(e, 2):
            a[i - 1, j - 1] += w
            a[j - 1, i - 1] += w
    return a


def degree_matrix(h: Hypergraph) -> np.ndarray:
    return np.diag(np.asarray(h.degrees(), dtype=float))


def laplacian(h: Hypergraph) -> np.ndarray:
    return degree_matrix(h) - adjacency_matrix(h)


def signless_laplacian(h: Hypergraph) -> np.ndarray:
    return degree_matrix(h) + adjacency_matrix(h)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty vertex blocks covering 1..n (1-based ids)."""

    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(blocks: Sequence[Sequence[int]], n: int) -> "Partition":
        canon = tuple(tuple(sorted(b)) for b in blocks)
        flat = [v for b in canon for v in b]
        if sorted(flat) != list(range(1, n + 1)):
            raise ValidationError(f"blocks do not partition 1..{n}")
        if any(not b for b in canon):
            raise ValidationError("empty block")
        return Partition(blocks=canon)


def equitable_constants(
    h: Hypergraph, p: Partition, tol: float = EQUITABLE_TOL
) -> tuple[Optional[np.ndarray], Optional[tuple[int, int]]]:
    """Return (m_pq table, None) when the partition is equitable for A(h),
    otherwise (None, (vertex, block)) for the first violating pair."""
    a = adjacency_matrix(h)
    t = len(p.blocks)
    table = np.zeros((t, t))
    for qi, block_q in enumerate(p.blocks):
        cols = [v - 1 for v in block_q]
        for pi, block_p in enumerate(p.blocks):
            sums = [a[v - 1, cols].sum() for v in block_p]
            if max(sums) - min(sums) > tol:
                bad = block_p[int(np.argmax(np.abs(np.asarray(sums) - sums[0])))]
                return None, (bad, qi + 1)
            table[pi, qi] = sums[0]
    return table, None


def quotient_matrix(h: Hypergraph, p: Partition) -> np.ndarray:
    """Quotient matrix M of an equitable partition: off-diagonal (p,q) is
    -m_pq, diagonal (p,p) is (sum_s m_ps) - m_pp.  spec(M) is contained in
    spec(L(h))."""
    table, violation = equitable_constants(h, p)
    if table is None:
        raise NotEquitable(f"partition not equitable, first violation {violation}")
    t = len(p.blocks)
    m = -table.copy()
    for i in range(t):
        m[i, i] = table[i].sum() - table[i, i]
    return m


def row_sum_bracket(q: np.ndarray, coeffs: Sequence[float]) -> tuple[float, float]:
    """(min, max) row sum of P(Q) for P given by coefficients, constant first.

    Brackets P(q_max) for the signless Laplacian Q."""
    if len(coeffs) == 0:
        raise ValidationError("polynomial must have at least one coefficient")
    n = q.shape[0]
    acc = np.zeros((n, n))
    for c in reversed(coeffs):
        acc = q @ acc + c * np.eye(n)
    sums = acc.sum(axis=1)
    return float(sums.min()), float(sums.max())


def bordered_charpoly(
    lam: float, x: Sequence[float], y: Sequence[float], a: float
) -> list[float]:
    """Characteristic polynomial coefficients (constant first) of the
    (n+1) x (n+1) matrix [[lam*I, x], [y^T, a]] via the closed form
    (t - lam)^(n-1) * (t^2 - (a + lam) t + a*lam - y.x)."""
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    if xv.shape != yv.shape or xv.ndim != 1 or xv.size < 1:
        raise ValidationError("x and y must be equal-length nonempty vectors")
    n = xv.size
    quad = np.array([a * lam - float(yv @ xv), -(a + lam), 1.0])
    poly = quad
    linear = np.array([-lam, 1.0])
    for _ in range(n - 1):
        poly = np.convolve(poly, linear)
    return [float(c) for c in poly]


def matrix_to_json(mx: np.ndarray) -> str:
    """Debug export: order plus row-major entries."""
    return json.dumps(
        {"order": int(mx.shape[0]), "entries": [float(v) for v in mx.ravel()]}
    )
