"""Exact verification oracles: big-integer characteristic polynomials of
scaled matrices and unpruned combinatorial re-implementations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import TooLarge, ValidationError
from .hypergraph import Hypergraph

CHARPOLY_CAP = 16
NAIVE_CAP = 8

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class IntegerPolynomial:
    """Arbitrary-precision integer coefficients, constant term first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def scaled_integer_matrix(h: Hypergraph, kind: str) -> IntMatrix:
    """(k-1) * M with M in {A, L, Q}: integer entries d_ij and (k-1)*d_i."""
    k = h.uniformity
    if k is None:
        raise ValidationError("exact charpoly requires a k-uniform hypergraph")
    c = h.codegrees()
    d = h.degrees()
    scale = k - 1
    if kind == "adjacency":
        return [[c[i][j] if i != j else 0 for j in range(h.n)] for i in range(h.n)]
    if kind == "laplacian":
        return [
            [scale * d[i] if i == j else -c[i][j] for j in range(h.n)]
            for i in range(h.n)
        ]
    if kind == "signlessLaplacian":
        return [
            [scale * d[i] if i == j else c[i][j] for j in range(h.n)]
            for i in range(h.n)
        ]
    raise ValidationError(f"unknown matrix kind {kind!r}")


def _mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for l in range(n):
            x = ai[l]
            if x:
                bl = b[l]
                row = out[i]
                for j in range(n):
                    row[j] += x * bl[j]
    return out


def charpoly_faddeev_leverrier(a: IntMatrix) -> IntegerPolynomial:
    """Monic characteristic polynomial of an integer matrix.

    The step-index division in the trace recurrence is always exact over the
    integers; it is performed with a divisibility check.
    """
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for step in range(1, n + 1):
        am = _mat_mul(a, m)
        tr = sum(am[i][i] for i in range(n))
        if tr % step != 0:
            raise ArithmeticError("non-exact division in the trace recurrence")
        c = -tr // step
        coeffs[n - step] = c
        for i in range(n):
            am[i][i] += c
        m = am
    return IntegerPolynomial(coefficients=tuple(coeffs))


def exact_charpoly(h: Hypergraph, kind: str) -> IntegerPolynomial:
    """Characteristic polynomial of (k-1) * M in exact integer arithmetic."""
    if h.n > CHARPOLY_CAP:
        raise TooLarge(f"exact charpoly refused for n={h.n} > {CHARPOLY_CAP}")
    return charpoly_faddeev_leverrier(scaled_integer_matrix(h, kind))


def residuals(
    p: IntegerPolynomial, values: Sequence[float], scale: float
) -> list[float]:
    """Scale-free residual |p(scale*v)| normalised by a coefficient-magnitude
    bound, for certifying eigensolver output against the exact polynomial."""
    if scale <= 0:
        raise ValidationError("scale must be positive")
    out = []
    for v in values:
        x = scale * v
        bound = sum(
            abs(c) * max(1.0, abs(x)) ** i for i, c in enumerate(p.coefficients)
        )
        out.append(abs(p(x)) / max(1.0, bound))
    return out


# ---------------------------------------------------------------------------
# Unpruned combinatorial searches
# ---------------------------------------------------------------------------

def naive_tau(h: Hypergraph) -> int:
    """Weak independence number by plain enumeration of all 2^n subsets."""
    if h.n > NAIVE_CAP:
        raise TooLarge(f"naive tau refused for n={h.n} > {NAIVE_CAP}")
    masks = h.adjacency_masks()
    full = (1 << h.n) - 1
    best = 0
    for s in range(1, 1 << h.n):
        outside = full & ~s
        ok = True
        for v in range(h.n):
            if s >> v & 1:
                if masks[v] & s or (masks[v] & outside) != outside:
                    ok = False
                    break
        if ok:
            best = max(best, s.bit_count())
    return best


def naive_chi(h: Hypergraph) -> int:
    """Strong chromatic number by trying every color count from 1 upward."""
    if h.n > NAIVE_CAP:
        raise TooLarge(f"naive chi refused for n={h.n} > {NAIVE_CAP}")
    if h.m == 0:
        return 1 if h.n else 0
    masks = h.adjacency_masks()
    for limit in range(1, h.n + 1):
        for assignment in itertools.product(range(limit), repeat=h.n):
            if all(
                not (masks[v] >> u & 1) or assignment[v] != assignment[u]
                for v in range(h.n)
                for u in range(v + 1, h.n)
            ):
                return limit
    return h.n
