"""Catalog of audited eigenvalue-bound statements and their evaluation.

Each entry compares a spectral quantity of a connected k-uniform hypergraph
against a closed-form expression in its combinatorial invariants.  Bounds
whose derivations rest on structural assumptions that can fail in practice
are marked ``audited``: they are evaluated and reported, never hard-asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

import numpy as np

from . import matrices
from .eigen import Spectrum, eigenvalues
from .errors import ContextMismatch, TooLarge
from .hypergraph import Hypergraph, InvariantSet, binomial, complement, invariants, is_connected
from .structure import (
    StructureProfile,
    strong_chromatic_number,
    structure_profile,
    underlying_graph_bipartition,
    weak_independence_number,
)

SLACK_TOL = 1e-9
EQ_TOL = 1e-7
ZERO_TOL = 1e-8
XY_ENUM_CAP = 14


@dataclass(frozen=True)
class BoundSpec:
    id: str
    target: str
    strict: bool
    assurance: str  # asserted | audited
    applicability: str
    statement: str
    equality_id: Optional[str] = None


@dataclass
class BoundEvaluation:
    bound_id: str
    target: str
    assurance: str
    applicable: bool
    reason: str
    lhs: Optional[float]
    rhs: Optional[float]
    slack: Optional[float]
    holds: Optional[bool]
    equality_expected: Optional[bool] = None
    equality_observed: Optional[bool] = None
    consistent: Optional[bool] = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "target": self.target,
            "assurance": self.assurance,
            "applicable": self.applicable,
            "reason": self.reason,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "equality_expected": self.equality_expected,
            "equality_observed": self.equality_observed,
            "consistent": self.consistent,
            "details": self.details,
        }


CSV_COLUMNS = [
    "bound_id",
    "target",
    "assurance",
    "applicable",
    "reason",
    "lhs",
    "rhs",
    "slack",
    "holds",
    "equality_expected",
    "equality_observed",
    "consistent",
]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    text = str(value)
    if any(c in text for c in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


def evaluations_to_csv(evals: list[BoundEvaluation]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for ev in evals:
        row = ev.to_dict()
        lines.append(",".join(_csv_cell(row[c]) for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


class BoundContext:
    """Shared invariants and spectra for one hypergraph; everything lazy."""

    def __init__(self, h: Hypergraph, tol: float = 1e-12):
        self.h = h
        self.tol = tol
        self.inv: InvariantSet = invariants(h)
        self.k: Optional[int] = h.uniformity

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.h)

    @cached_property
    def spectrum_q(self) -> Spectrum:
        return eigenvalues(matrices.signless_laplacian(self.h), "signlessLaplacian", self.tol)

    @cached_property
    def spectrum_l(self) -> Spectrum:
        return eigenvalues(matrices.laplacian(self.h), "laplacian", self.tol)

    @cached_property
    def spectrum_a(self) -> Spectrum:
        return eigenvalues(matrices.adjacency_matrix(self.h), "adjacency", self.tol)

    @cached_property
    def complement_q(self) -> Spectrum:
        return eigenvalues(
            matrices.signless_laplacian(complement(self.h)), "signlessLaplacian", self.tol
        )

    @cached_property
    def tau(self) -> int:
        return weak_independence_number(self.h)

    @cached_property
    def chi(self) -> int:
        return strong_chromatic_number(self.h)

    @cached_property
    def profile(self) -> StructureProfile:
        return structure_profile(self.h)

    @property
    def q_max(self) -> float:
        return self.spectrum_q.max_value

    @property
    def q_min(self) -> float:
        return self.spectrum_q.min_value

    @property
    def s_q(self) -> float:
        return self.spectrum_q.spread

    @property
    def s_a(self) -> float:
        return self.spectrum_a.spread

    @cached_property
    def signless_laplacian(self) -> np.ndarray:
        return matrices.signless_laplacian(self.h)

    @cached_property
    def xy_pairs(self) -> list[tuple[int, int]]:
        """Non-adjacent disjoint (X, Y) vertex-mask pairs, Y maximal for its X.

        Shrinking Y never helps either consumer (the spread quantities are
        monotone in |Y|), so only the maximal Y per X is enumerated.  Beyond
        the size cap only singleton X are tried.
        """
        n = self.h.n
        masks = self.h.adjacency_masks()
        full = (1 << n) - 1
        if n <= XY_ENUM_CAP:
            xs = range(1, 1 << n)
        else:
            xs = (1 << v for v in range(n))
        pairs = []
        for x in xs:
            nbrs = 0
            bits = x
            while bits:
                nbrs |= masks[(bits & -bits).bit_length() - 1]
                bits &= bits - 1
            y = full & ~(x | nbrs)
            if y:
                pairs.append((x, y))
        return pairs


def build_context(h: Hypergraph, tol: float = 1e-12) -> BoundContext:
    return BoundContext(h, tol)


# ---------------------------------------------------------------------------
# Equality-case predicates
# ---------------------------------------------------------------------------

def _expect_regular_linear(ctx: BoundContext) -> bool:
    return ctx.profile.is_regular and ctx.profile.is_linear


def _expect_complete_bipartite_tau(ctx: BoundContext) -> bool:
    sides = ctx.profile.complete_bipartite_sides
    if sides is None:
        return False
    tau = ctx.tau
    return set(sides) == {tau, ctx.h.n - tau} or (
        2 * tau == ctx.h.n and sides == (tau, tau)
    )

def _expect_regular_or_semiregular(ctx: BoundContext) -> bool:
    return ctx.profile.is_regular or ctx.profile.is_bipartite_semiregular_graph


def _expect_regular(ctx: BoundContext) -> bool:
    return ctx.profile.is_regular


def _rank_one_shift_form(ctx: BoundContext, diag_factor: int) -> Optional[float]:
    """Return t if Q = t(diag_factor * I + J) for some t > 0, else None."""
    q = ctx.signless_laplacian
    n = ctx.h.n
    if n < 2:
        return None
    off = q[np.triu_indices(n, 1)]
    t = off[0]
    if t <= 0 or np.max(np.abs(off - t)) > EQ_TOL:
        return None
    expected_diag = t * (diag_factor + 1)
    if np.max(np.abs(np.diagonal(q) - expected_diag)) > EQ_TOL:
        return None
    return float(t)


def _expect_q_shift_form(ctx: BoundContext) -> bool:
    return _rank_one_shift_form(ctx, ctx.h.n - 2) is not None


EQUALITY_PREDICATES: dict[str, Callable[[BoundContext], bool]] = {
    "regular_linear": _expect_regular_linear,
    "complete_bipartite_tau": _expect_complete_bipartite_tau,
    "regular_or_bipartite_semiregular": _expect_regular_or_semiregular,
    "regular": _expect_regular,
    "q_rank_one_shift": _expect_q_shift_form,
}


# ---------------------------------------------------------------------------
# The catalog
# ---------------------------------------------------------------------------

def catalog() -> list[BoundSpec]:
    mk = BoundSpec
    return [
        mk("B01", "qMaxLower", False, "asserted",
           "connected k-uniform",
           "q_max >= (d_min + sqrt(d_min^2 + (8/(k-1)) T_min)) / 2",
           equality_id="regular_linear"),
        mk("B02", "qMaxLower", False, "audited",
           "connected k-uniform, tau >= 1",
           "q_max >= ((n-tau) C(n-tau,k-1) + tau C(n-tau-1,k-2)) / (k-1)",
           equality_id="complete_bipartite_tau"),
        mk("B03", "qMaxLower", False, "asserted",
           "connected k-uniform, chi >= 2",
           "q_max >= (km/n) (1 + 1/(chi-1))"),
        mk("B04", "qMaxUpper", False, "asserted",
           "connected k-uniform",
           "q_max <= max_i (d_i + s_i/(k-1))",
           equality_id="regular_or_bipartite_semiregular"),
        mk("B05", "qMaxSandwich", False, "asserted",
           "connected k-uniform",
           "2 d_min <= q_max <= 2 d_max",
           equality_id="regular"),
        mk("B06", "qMaxSandwich", False, "asserted",
           "connected k-uniform",
           "min_u r(u) <= q_max <= max_u r(u), r(u) = sqrt(2 d_u^2 + (2/(k-1)) sum_{v~u} d_uv d_v)"),
        mk("B07", "qMaxUpper", False, "asserted",
           "connected k-uniform, n >= 2",
           "q_max <= sqrt((k-1)(2 d_max^2 + 2 m d_min^2) + 2m(km - n d_min)) / sqrt(k-1)"),
        mk("B08", "qMaxLower", False, "asserted",
           "connected k-uniform, (n-1) d_max <= km",
           "q_max >= sqrt(2(k-1) d_min^2 + 2km - 2 d_max (n+2-k-d_min)) / sqrt(k-1)"),
        mk("B09", "qMaxLower", False, "audited",
           "connected k-uniform, noncomplete 2-section, some non-adjacent X, Y",
           "q_max >= (b1^2 |X| + b2^2 |Y|) / (k-1) for non-adjacent disjoint X, Y, b1^2 + b2^2 = 1"),
        mk("B10", "complementRelation", False, "asserted",
           "k-uniform, n >= k",
           "q_max(complement) >= (n-2) theta - q_min, theta = C(n-2,k-2)/(k-1)"),
        mk("B11", "qMinPositivity", False, "asserted",
           "connected k-uniform",
           "k >= 3: q_min > 0; k = 2: q_min = 0 iff the graph is bipartite"),
        mk("B12", "qMinUpper", False, "asserted",
           "connected k-uniform, n >= 2",
           "q_min <= (d_u + d_v)/2 at the two smallest degrees"),
        mk("B13", "qMinUpper", False, "audited",
           "connected k-uniform, n >= 2, some non-adjacent X, Y",
           "q_min <= (|X| + |Y|) m / (2(k-1))"),
        mk("B14", "qMinUpper", False, "asserted",
           "connected k-uniform, n >= 2",
           "q_min <= d_max - 1/(k-1)"),
        mk("B15", "qMinUpper", False, "asserted",
           "connected k-uniform, n >= 2",
           "q_min <= sqrt(2 d_max^2 + (2km/(k-1)) (km - (n-1) d_min + ((k-1) d_min - 1) d_max))"),
        mk("B16", "qMinUpper", False, "asserted",
           "connected, n >= 2",
           "q_min <= 2 sqrt(Z1/n)"),
        mk("B17", "spreadLower", True, "asserted",
           "m >= 1",
           "s_Q > 1"),
        mk("B18", "spreadLower", False, "asserted",
           "k-uniform, m >= 1, d_min > d_bar/2",
           "s_Q >= (2 n d_min - km) / (n-1)",
           equality_id="q_rank_one_shift"),
        mk("B19", "spreadLower", False, "asserted",
           "k-uniform, m >= 1, n >= 2",
           "s_Q >= (n (d_max + 1/(k-1)) - km) / (n-1)"),
        mk("B20", "spreadLower", False, "asserted",
           "k-uniform",
           "s_Q >= d_max - d_min + 1/(k-1)"),
        mk("B21", "spreadIdentity", False, "asserted",
           "regular k-uniform",
           "s_A = s_Q"),
        mk("B22", "spreadUpper", True, "asserted",
           "connected k-uniform",
           "s_Q < (1/(2 sqrt(2))) ((4 d_max^2 - 1/4)^2 + 2 (2 d_max + 1/2))"),
        mk("B23", "spreadUpper", True, "audited",
           "tau >= 1, n >= 2",
           "s_Q < 2 tau^2 d_max / (tau^2 - 1/n)"),
        mk("B24", "spreadLower", False, "asserted",
           "k-uniform, m >= 1, n >= 2",
           "s_Q >= 2 d_min - sqrt((Z1 + alpha/(k-1)^2 - (2 d_min)^2) / (n-1))"),
        mk("B25", "spreadSandwich", True, "asserted",
           "connected k-uniform, n >= 2",
           "chi sqrt(n^2-1) / (n (1 + (k-1) d_max)) < s_Q < 4 n chi d_max / (k sqrt(n^2-1))"),
    ]


CATALOG = catalog()
_CATALOG_BY_ID = {s.id: s for s in CATALOG}


# ---------------------------------------------------------------------------
# Per-bound evaluators: return (lhs, rhs, slack, details) or a string reason
# for inapplicability.
# ---------------------------------------------------------------------------

def _eval_b01(ctx: BoundContext):
    inv, k = ctx.inv, ctx.k
    rhs = (inv.d_min + math.sqrt(inv.d_min**2 + (8.0 / (k - 1)) * inv.t_min)) / 2.0
    return ctx.q_max, rhs, ctx.q_max - rhs, {}


def _eval_b02(ctx: BoundContext):
    tau, k, n = ctx.tau, ctx.k, ctx.h.n
    if tau < 1:
        return "no nonempty weak independent set (tau = 0)"
    rhs = ((n - tau) * binomial(n - tau, k - 1) + tau * binomial(n - tau - 1, k - 2)) / (k - 1)
    return ctx.q_max, rhs, ctx.q_max - rhs, {"tau": tau}


def _eval_b03(ctx: BoundContext):
    chi = ctx.chi
    if chi < 2:
        return "chromatic number below 2"
    km = ctx.k * ctx.h.m
    rhs = (km / ctx.h.n) * (1.0 + 1.0 / (chi - 1))
    return ctx.q_max, rhs, ctx.q_max - rhs, {"chi": chi}


def _eval_b04(ctx: BoundContext):
    inv, k = ctx.inv, ctx.k
    rhs = max(d + s / (k - 1) for d, s in zip(inv.degrees, inv.avg_degrees))
    return ctx.q_max, rhs, rhs - ctx.q_max, {}


def _eval_b05(ctx: BoundContext):
    inv = ctx.inv
    lo, hi = 2.0 * inv.d_min, 2.0 * inv.d_max
    q = ctx.q_max
    return lo, hi, min(q - lo, hi - q), {"q_max": q}


def _row_quadratic_values(ctx: BoundContext) -> list[float]:
    inv, k = ctx.inv, ctx.k
    vals = []
    for u in range(ctx.h.n):
        acc = 0.0
        for v in range(ctx.h.n):
            acc += inv.codegrees[u][v] * inv.degrees[v]
        vals.append(math.sqrt(2.0 * inv.degrees[u] ** 2 + (2.0 / (k - 1)) * acc))
    return vals


def _eval_b06(ctx: BoundContext):
    vals = _row_quadratic_values(ctx)
    lo, hi = min(vals), max(vals)
    q = ctx.q_max
    return lo, hi, min(q - lo, hi - q), {"q_max": q}


def _eval_b07(ctx: BoundContext):
    inv, k, n, m = ctx.inv, ctx.k, ctx.h.n, ctx.h.m
    if n < 2:
        return "needs n >= 2"
    km = k * m
    inner = (k - 1) * (2 * inv.d_max**2 + 2 * m * inv.d_min**2) + 2 * m * (km - n * inv.d_min)
    rhs = math.sqrt(inner) / math.sqrt(k - 1)
    return ctx.q_max, rhs, rhs - ctx.q_max, {}


def _b08_inner(ctx: BoundContext) -> float:
    inv, k, n, m = ctx.inv, ctx.k, ctx.h.n, ctx.h.m
    return (
        2 * (k - 1) * inv.d_min**2
        + 2 * k * m
        - 2 * inv.d_max * (n + 2 - k - inv.d_min)
    )


def _eval_b08(ctx: BoundContext):
    inv, k, n, m = ctx.inv, ctx.k, ctx.h.n, ctx.h.m
    inner = _b08_inner(ctx)
    if (n - 1) * inv.d_max > k * m:
        return (
            f"condition (n-1) d_max <= km fails ({(n - 1) * inv.d_max} > {k * m}); "
            f"inner expression = {inner}",
            {"inner": float(inner)},
        )
    rhs = math.sqrt(max(inner, 0)) / math.sqrt(k - 1)
    return ctx.q_max, rhs, ctx.q_max - rhs, {"inner": float(inner)}


def _eval_b09(ctx: BoundContext):
    pairs = ctx.xy_pairs
    if not pairs:
        return "every vertex pair is adjacent (complete 2-section)"
    k = ctx.k
    best_rhs = -math.inf
    best_pair = None
    best_half = -math.inf
    for x, y in pairs:
        xs, ys = x.bit_count(), y.bit_count()
        half = (xs + ys) / (2.0 * (k - 1))
        extreme = max(xs, ys) / (k - 1)
        best_half = max(best_half, half)
        if extreme > best_rhs:
            best_rhs = extreme
            best_pair = (x, y)
    return ctx.q_max, best_rhs, ctx.q_max - best_rhs, {
        "rhs_equal_split": best_half,
        "x_mask": best_pair[0],
        "y_mask": best_pair[1],
    }


def _eval_b10(ctx: BoundContext):
    n, k = ctx.h.n, ctx.k
    theta = binomial(n - 2, k - 2) / (k - 1)
    rhs = (n - 2) * theta - ctx.q_min
    lhs = ctx.complement_q.max_value
    return lhs, rhs, lhs - rhs, {"theta": theta}


def _eval_b11(ctx: BoundContext):
    q_min = ctx.q_min
    if ctx.k >= 3:
        slack = q_min - ZERO_TOL
        return q_min, 0.0, slack, {"mode": "k>=3 positivity"}
    bipartite = underlying_graph_bipartition(ctx.h) is not None
    slack = (ZERO_TOL - q_min) if bipartite else (q_min - ZERO_TOL)
    return q_min, 0.0, slack, {"mode": "k=2 bipartite characterization", "bipartite": bipartite}


def _eval_b12(ctx: BoundContext):
    if ctx.h.n < 2:
        return "needs two distinct vertices"
    d = sorted(ctx.inv.degrees)
    rhs = (d[0] + d[1]) / 2.0
    return ctx.q_min, rhs, rhs - ctx.q_min, {}


def _eval_b13(ctx: BoundContext):
    pairs = ctx.xy_pairs
    if not pairs:
        return "every vertex pair is adjacent (complete 2-section)"
    k, m = ctx.k, ctx.h.m
    # (|X|+|Y|) is minimized by a singleton pair, always available given any pair
    rhs = 2 * m / (2.0 * (k - 1))
    return ctx.q_min, rhs, rhs - ctx.q_min, {"x_size": 1, "y_size": 1}


def _eval_b14(ctx: BoundContext):
    if ctx.h.n < 2:
        return "needs two distinct vertices"
    rhs = ctx.inv.d_max - 1.0 / (ctx.k - 1)
    return ctx.q_min, rhs, rhs - ctx.q_min, {}


def _eval_b15(ctx: BoundContext):
    inv, k, n, m = ctx.inv, ctx.k, ctx.h.n, ctx.h.m
    if n < 2:
        return "needs n >= 2"
    km = k * m
    inner = 2 * inv.d_max**2 + (2.0 * km / (k - 1)) * (
        km - (n - 1) * inv.d_min + ((k - 1) * inv.d_min - 1) * inv.d_max
    )
    if inner < 0:
        return ctx.q_min, 0.0, 0.0 - ctx.q_min, {"inner": inner}
    rhs = math.sqrt(inner)
    return ctx.q_min, rhs, rhs - ctx.q_min, {"inner": inner}


def _eval_b16(ctx: BoundContext):
    rhs = 2.0 * math.sqrt(ctx.inv.z1 / ctx.h.n)
    return ctx.q_min, rhs, rhs - ctx.q_min, {}


def _eval_b17(ctx: BoundContext):
    return ctx.s_q, 1.0, ctx.s_q - 1.0, {}


def _eval_b18(ctx: BoundContext):
    inv, k, n, m = ctx.inv, ctx.k, ctx.h.n, ctx.h.m
    if n < 2:
        return "needs n >= 2"
    if inv.d_min <= inv.d_bar / 2.0:
        return f"condition d_min > d_bar/2 fails ({inv.d_min} <= {inv.d_bar / 2.0})"
    rhs = (2.0 * n * inv.d_min - k * m) / (n - 1)
    details = {}
    for label, factor in (("(n-2)I+J", n - 2), ("(n-1)I+J", n - 1)):
        t = _rank_one_shift_form(ctx, factor)
        if t is not None:
            details["matched_form"] = label
            details["form_scale"] = t
            break
    return ctx.s_q, rhs, ctx.s_q - rhs, details


def _eval_b19(ctx: BoundContext):
    inv, k, n, m = ctx.inv, ctx.k, ctx.h.n, ctx.h.m
    if n < 2:
        return "needs n >= 2"
    rhs = (n * (inv.d_max + 1.0 / (k - 1)) - k * m) / (n - 1)
    return ctx.s_q, rhs, ctx.s_q - rhs, {}


def _eval_b20(ctx: BoundContext):
    inv, k = ctx.inv, ctx.k
    rhs = inv.d_max - inv.d_min + 1.0 / (k - 1)
    return ctx.s_q, rhs, ctx.s_q - rhs, {}


def _eval_b21(ctx: BoundContext):
    if not ctx.profile.is_regular:
        return "hypergraph is not regular"
    return ctx.s_a, ctx.s_q, -abs(ctx.s_a - ctx.s_q), {}


def _eval_b22(ctx: BoundContext):
    dmax = ctx.inv.d_max
    rhs = (1.0 / (2.0 * math.sqrt(2.0))) * (
        (4.0 * dmax**2 - 0.25) ** 2 + 2.0 * (2.0 * dmax + 0.5)
    )
    return ctx.s_q, rhs, rhs - ctx.s_q, {}


def _eval_b23(ctx: BoundContext):
    tau, n = ctx.tau, ctx.h.n
    if tau < 1:
        return "no nonempty weak independent set (tau = 0)"
    if n < 2:
        return "needs n >= 2"
    rhs = 2.0 * tau**2 * ctx.inv.d_max / (tau**2 - 1.0 / n)
    return ctx.s_q, rhs, rhs - ctx.s_q, {"tau": tau}


def _eval_b24(ctx: BoundContext):
    inv, k, n = ctx.inv, ctx.k, ctx.h.n
    if n < 2:
        return "needs n >= 2"
    sum_sq = inv.z1 + inv.alpha / (k - 1) ** 2

    def reading(d: int) -> float:
        return 2.0 * d - math.sqrt(max(sum_sq - (2.0 * d) ** 2, 0.0) / (n - 1))

    rhs = reading(inv.d_min)
    return ctx.s_q, rhs, ctx.s_q - rhs, {"rhs_dmax_reading": reading(inv.d_max)}


def _eval_b25(ctx: BoundContext):
    n, k = ctx.h.n, ctx.k
    if n < 2:
        return "needs n >= 2"
    chi = ctx.chi
    dmax = ctx.inv.d_max
    root = math.sqrt(n * n - 1.0)
    lo = chi * root / (n * (1.0 + (k - 1) * dmax))
    hi = 4.0 * n * chi * dmax / (k * root)
    s = ctx.s_q
    return lo, hi, min(s - lo, hi - s), {"s_q": s, "chi": chi}


_EVALUATORS: dict[str, Callable] = {
    "B01": _eval_b01, "B02": _eval_b02, "B03": _eval_b03, "B04": _eval_b04,
    "B05": _eval_b05, "B06": _eval_b06, "B07": _eval_b07, "B08": _eval_b08,
    "B09": _eval_b09, "B10": _eval_b10, "B11": _eval_b11, "B12": _eval_b12,
    "B13": _eval_b13, "B14": _eval_b14, "B15": _eval_b15, "B16": _eval_b16,
    "B17": _eval_b17, "B18": _eval_b18, "B19": _eval_b19, "B20": _eval_b20,
    "B21": _eval_b21, "B22": _eval_b22, "B23": _eval_b23, "B24": _eval_b24,
    "B25": _eval_b25,
}

# Bounds where the uniform gate allows k = 2 only with special handling
_GLOBAL_CONNECTIVITY_EXEMPT = {"B10"}


def _inapplicable(spec: BoundSpec, reason: str, details: Optional[dict] = None) -> BoundEvaluation:
    return BoundEvaluation(
        bound_id=spec.id,
        target=spec.target,
        assurance=spec.assurance,
        applicable=False,
        reason=reason,
        lhs=None,
        rhs=None,
        slack=None,
        holds=None,
        details=details or {},
    )


def evaluate(
    h: Hypergraph,
    spec: BoundSpec,
    ctx: BoundContext,
    slack_tol: float = SLACK_TOL,
    eq_tol: float = EQ_TOL,
) -> BoundEvaluation:
    if ctx.h != h:
        raise ContextMismatch("context was built from a different hypergraph")
    if ctx.k is None:
        return _inapplicable(spec, "not k-uniform")
    if h.m < 1:
        return _inapplicable(spec, "no hyperedges")
    if spec.id not in _GLOBAL_CONNECTIVITY_EXEMPT and not ctx.connected:
        return _inapplicable(spec, "not connected")
    try:
        result = _EVALUATORS[spec.id](ctx)
    except TooLarge as exc:
        return _inapplicable(spec, f"resource cap: {exc}")
    if isinstance(result, str):
        return _inapplicable(spec, result)
    if isinstance(result, tuple) and len(result) == 2 and isinstance(result[0], str):
        return _inapplicable(spec, result[0], details=result[1])
    lhs, rhs, slack, details = result
    if spec.id == "B11":
        holds = slack >= 0.0
    elif spec.strict:
        holds = slack > slack_tol
    else:
        holds = slack >= -slack_tol
    ev = BoundEvaluation(
        bound_id=spec.id,
        target=spec.target,
        assurance=spec.assurance,
        applicable=True,
        reason="",
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        holds=holds,
        details=details,
    )
    if spec.equality_id is not None:
        try:
            expected = EQUALITY_PREDICATES[spec.equality_id](ctx)
        except TooLarge:
            expected = None
        observed = abs(slack) <= eq_tol
        ev.equality_expected = expected
        ev.equality_observed = observed
        ev.consistent = (expected == observed) if expected is not None else None
    return ev


def evaluate_all(
    h: Hypergraph,
    slack_tol: float = SLACK_TOL,
    eq_tol: float = EQ_TOL,
    tol: float = 1e-12,
) -> list[BoundEvaluation]:
    ctx = build_context(h, tol)
    return [evaluate(h, spec, ctx, slack_tol, eq_tol) for spec in CATALOG]


def equality_consistency_report(evals: list[BoundEvaluation]) -> list[dict]:
    """One row per evaluated spec that carries an equality characterization."""
    report = []
    for ev in evals:
        spec = _CATALOG_BY_ID[ev.bound_id]
        if spec.equality_id is None or not ev.applicable:
            continue
        report.append(
            {
                "bound_id": ev.bound_id,
                "assurance": ev.assurance,
                "equality_expected": ev.equality_expected,
                "equality_observed": ev.equality_observed,
                "consistent": ev.consistent,
            }
        )
    return report
