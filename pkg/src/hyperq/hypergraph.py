"""Hypergraph representation, validation, generators and scalar invariants.

Vertices are 1-based integers.  A hypergraph is simple: edges are pairwise
distinct and no edge is a subset of another.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    DuplicateEdge,
    EdgeTooSmall,
    InfeasibleParameters,
    NotUniform,
    OutOfRangeVertex,
    ParseError,
    SubsetEdge,
    UnknownEdge,
)

Edge = tuple[int, ...]


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 for b < 0 or a < b."""
    if b < 0 or a < b or a < 0:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph on vertices 1..n with canonically sorted edges."""

    n: int
    edges: tuple[Edge, ...]

    def _memo(self, key: str, compute):
        # immutability makes per-object memoization of derived tables safe
        cached = self.__dict__.get(key)
        if cached is None:
            cached = compute()
            object.__setattr__(self, key, cached)
        return cached

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def uniformity(self) -> Optional[int]:
        """Common edge size k, or None if edge sizes differ or m = 0."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def vertex_edges(self) -> list[list[int]]:
        """For each vertex (0-based index), the indices of incident edges."""
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                incident[v - 1].append(idx)
        return incident

    def degrees(self) -> list[int]:
        def compute() -> list[int]:
            d = [0] * self.n
            for e in self.edges:
                for v in e:
                    d[v - 1] += 1
            return d

        return self._memo("_degrees", compute)

    def codegrees(self) -> list[list[int]]:
        """Symmetric n x n table of co-degrees d_ij (diagonal zero)."""

        def compute() -> list[list[int]]:
            c = [[0] * self.n for _ in range(self.n)]
            for e in self.edges:
                for i, j in itertools.combinations(e, 2):
                    c[i - 1][j - 1] += 1
                    c[j - 1][i - 1] += 1
            return c

        return self._memo("_codegrees", compute)

    def adjacency_masks(self) -> list[int]:
        """Bitmask per vertex of its 2-section neighbours (bit v-1 for vertex v)."""

        def compute() -> list[int]:
            masks = [0] * self.n
            for e in self.edges:
                em = 0
                for v in e:
                    em |= 1 << (v - 1)
                for v in e:
                    masks[v - 1] |= em & ~(1 << (v - 1))
            return masks

        return self._memo("_masks", compute)


def validate(n: int, raw_edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Check all structural invariants and return a canonical Hypergraph.

    Edges are sorted internally and the edge list is sorted; duplicates and
    subset relations between edges are rejected.
    """
    if n < 1:
        raise OutOfRangeVertex(f"vertex count must be positive, got {n}")
    edges: list[Edge] = []
    for raw in raw_edges:
        e = tuple(sorted(set(raw)))
        if len(e) < 2:
            raise EdgeTooSmall(f"edge {tuple(raw)} has fewer than 2 distinct vertices")
        if e[0] < 1 or e[-1] > n:
            raise OutOfRangeVertex(f"edge {e} has a vertex outside [1, {n}]")
        edges.append(e)
    edges.sort(key=lambda e: (len(e), e))
    for a, b in itertools.combinations(range(len(edges)), 2):
        ea, eb = set(edges[a]), set(edges[b])
        if ea == eb:
            raise DuplicateEdge(f"edge {edges[a]} appears more than once")
        if ea < eb or eb < ea:
            raise SubsetEdge(f"edge {edges[a]} and {edges[b]} violate simplicity")
    return Hypergraph(n=n, edges=tuple(edges))


@dataclass(frozen=True)
class InvariantSet:
    """Cached scalar combinatorial quantities of one hypergraph."""

    degrees: tuple[int, ...]
    codegrees: tuple[tuple[int, ...], ...]
    two_degrees: tuple[int, ...]
    avg_degrees: tuple[float, ...]
    z1: int
    alpha: int
    d_max: int
    d_min: int
    d_bar: float

    @property
    def t_min(self) -> int:
        return min(self.two_degrees)


def invariants(h: Hypergraph) -> InvariantSet:
    """Degrees, co-degrees, 2-degrees T_i, average degrees s_i, Z1 and alpha."""
    return h._memo("_invariants", lambda: _compute_invariants(h))


def _compute_invariants(h: Hypergraph) -> InvariantSet:
    d = h.degrees()
    c = h.codegrees()
    n = h.n
    two = [0] * n
    avg = [0.0] * n
    alpha = 0
    for i in range(n):
        t = 0
        s_num = 0
        for j in range(n):
            if c[i][j] > 0:
                t += d[j]
                s_num += d[j] * c[i][j]
                alpha += c[i][j] * c[i][j]
        two[i] = t
        avg[i] = s_num / d[i] if d[i] > 0 else 0.0
    return InvariantSet(
        degrees=tuple(d),
        codegrees=tuple(tuple(row) for row in c),
        two_degrees=tuple(two),
        avg_degrees=tuple(avg),
        z1=sum(x * x for x in d),
        alpha=alpha,
        d_max=max(d) if d else 0,
        d_min=min(d) if d else 0,
        d_bar=sum(d) / n if n else 0.0,
    )


def is_connected(h: Hypergraph) -> bool:
    """True iff every vertex pair is joined by a walk (BFS over the 2-section)."""
    if h.n == 1:
        return True
    masks = h.adjacency_masks()
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        nxt = masks[v] & ~seen
        while nxt:
            low = nxt & -nxt
            seen |= low
            frontier.append(low.bit_length() - 1)
            nxt &= nxt - 1
    return seen == (1 << h.n) - 1


def complement(h: Hypergraph) -> Hypergraph:
    """k-uniform complement: all k-subsets of V not present in h."""
    k = h.uniformity
    if k is None and h.m > 0:
        raise NotUniform("complement requires a k-uniform hypergraph")
    if k is None:
        raise NotUniform("complement of an empty hypergraph has no defined k")
    present = set(h.edges)
    edges = [e for e in itertools.combinations(range(1, h.n + 1), k) if e not in present]
    return Hypergraph(n=h.n, edges=tuple(sorted(edges)))


def delete_edges(h: Hypergraph, removed: Iterable[Sequence[int]]) -> Hypergraph:
    """Remove the listed edges; vertex set unchanged."""
    to_remove = {tuple(sorted(set(e))) for e in removed}
    present = set(h.edges)
    unknown = to_remove - present
    if unknown:
        raise UnknownEdge(f"edges not in hypergraph: {sorted(unknown)}")
    kept = tuple(e for e in h.edges if e not in to_remove)
    return Hypergraph(n=h.n, edges=kept)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def complete_uniform(n: int, k: int) -> Hypergraph:
    """K^k_n: all k-subsets of {1..n}."""
    if k < 2 or n < k:
        raise InfeasibleParameters(f"complete uniform needs 2 <= k <= n, got n={n} k={k}")
    edges = tuple(itertools.combinations(range(1, n + 1), k))
    return Hypergraph(n=n, edges=edges)


def single_edge(k: int) -> Hypergraph:
    """One hyperedge {1..k} on exactly k vertices."""
    if k < 2:
        raise InfeasibleParameters(f"edge size must be >= 2, got {k}")
    return Hypergraph(n=k, edges=(tuple(range(1, k + 1)),))


def complete_bipartite_graph(a: int, b: int) -> Hypergraph:
    """2-uniform K_{a,b} with sides {1..a} and {a+1..a+b}."""
    if a < 1 or b < 1:
        raise InfeasibleParameters("both sides must be nonempty")
    edges = tuple(
        (i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)
    )
    return Hypergraph(n=a + b, edges=edges)


def complete_bipartite_uniform(size: int, m1: int, m2: int) -> Hypergraph:
    """C^size_{m1,m2}: every size-subset of V meeting both sides."""
    if size < 2 or m1 < 1 or m2 < 1 or size > m1 + m2:
        raise InfeasibleParameters(
            f"infeasible complete bipartite uniform: size={size} sides={m1},{m2}"
        )
    n = m1 + m2
    side1 = set(range(1, m1 + 1))
    edges = tuple(
        e
        for e in itertools.combinations(range(1, n + 1), size)
        if 0 < len(side1.intersection(e)) < size
    )
    if not edges:
        raise InfeasibleParameters("no edge meets both sides at these parameters")
    return Hypergraph(n=n, edges=edges)


def random_connected_uniform(n: int, k: int, m: int, seed: int) -> Hypergraph:
    """Connected k-uniform hypergraph with exactly m distinct edges.

    Deterministic in the seed.  Grows a connected skeleton edge by edge
    (each new edge overlaps the covered vertex set), then fills to m by
    rejection sampling over unused k-subsets.
    """
    if k < 2 or n < k:
        raise InfeasibleParameters(f"need 2 <= k <= n, got n={n} k={k}")
    lo = max(1, math.ceil((n - 1) / (k - 1)))
    hi = binomial(n, k)
    if not lo <= m <= hi:
        raise InfeasibleParameters(f"m={m} outside feasible range [{lo}, {hi}]")
    rng = random.Random(seed)
    vertices = list(range(1, n + 1))
    first = tuple(sorted(rng.sample(vertices, k)))
    edges = {first}
    covered = set(first)
    while len(covered) < n:
        uncovered = sorted(set(vertices) - covered)
        take_new = min(k - 1, len(uncovered))
        new_part = rng.sample(uncovered, take_new)
        old_part = rng.sample(sorted(covered), k - take_new)
        e = tuple(sorted(new_part + old_part))
        edges.add(e)
        covered.update(e)
    while len(edges) < m:
        e = tuple(sorted(rng.sample(vertices, k)))
        edges.add(e)
    return Hypergraph(n=n, edges=tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# Serialization: text ".hg" and JSON
# ---------------------------------------------------------------------------

def format_hg(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hg(text: str) -> Hypergraph:
    data = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in data if ln and not ln.startswith("#")]
    if not data:
        raise ParseError("no data lines")
    try:
        n, m = (int(x) for x in data[0].split())
    except ValueError as exc:
        raise ParseError(f"bad header line {data[0]!r}") from exc
    if len(data) - 1 != m:
        raise ParseError(f"header declares {m} edges but {len(data) - 1} lines follow")
    try:
        edges = [[int(x) for x in ln.split()] for ln in data[1:]]
    except ValueError as exc:
        raise ParseError("non-integer vertex id") from exc
    return validate(n, edges)


def format_json(h: Hypergraph) -> str:
    return json.dumps({"vertices": h.n, "edges": [list(e) for e in h.edges]})


def parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ParseError('expected object with "vertices" and "edges"')
    return validate(obj["vertices"], obj["edges"])


def parse_auto(text: str) -> Hypergraph:
    """Dispatch on leading character: JSON object or .hg text."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(text)
    return parse_hg(text)
