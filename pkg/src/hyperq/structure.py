"""Combinatorial structure: weak independence number, strong chromatic
number (on the 2-section graph) and the predicates used by equality cases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import TooLarge
from .hypergraph import Hypergraph, invariants

SUBSET_CAP = 24
COLORING_CAP = 16


def weak_independence_number(h: Hypergraph) -> int:
    """Maximum size of an independent set S whose every vertex is adjacent to
    every vertex of V\\S; 0 when no nonempty S qualifies.

    For any qualifying S, each s in S satisfies adj(s) = V\\S exactly, so S is
    forced to be the complement of a common adjacency mask; this prunes the
    2^n subset search down to one candidate per distinct mask.
    """
    if h.n > SUBSET_CAP:
        raise TooLarge(f"weak independence search refused for n={h.n} > {SUBSET_CAP}")
    masks = h.adjacency_masks()
    full = (1 << h.n) - 1
    best = 0
    for adj in set(masks):
        s_mask = full & ~adj
        if s_mask == 0:
            continue
        ok = True
        bits = s_mask
        while bits:
            v = (bits & -bits).bit_length() - 1
            if masks[v] != adj:
                ok = False
                break
            bits &= bits - 1
        if ok:
            best = max(best, s_mask.bit_count())
    return best


def _greedy_coloring(masks: list[int], order: list[int]) -> int:
    colors = [-1] * len(masks)
    used = 0
    for v in order:
        taken = {colors[u] for u in range(len(masks)) if masks[v] >> u & 1 and colors[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used


def _colorable(masks: list[int], order: list[int], limit: int) -> bool:
    """Backtracking test for a proper coloring with at most `limit` colors."""
    n = len(masks)
    colors = [-1] * n

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        forbidden = 0
        for u in range(n):
            if masks[v] >> u & 1 and colors[u] >= 0:
                forbidden |= 1 << colors[u]
        # allowing at most one fresh color kills color-permutation symmetry
        top = min(limit, used + 1)
        for c in range(top):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if place(idx + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return place(0, 0)


def strong_chromatic_number(h: Hypergraph) -> int:
    """Chromatic number of the 2-section graph by branch and bound."""
    if h.n > COLORING_CAP:
        raise TooLarge(f"exact coloring refused for n={h.n} > {COLORING_CAP}")
    if h.m == 0:
        return 1 if h.n else 0
    masks = h.adjacency_masks()
    order = sorted(range(h.n), key=lambda v: -masks[v].bit_count())
    upper = _greedy_coloring(masks, order)
    lower = _clique_lower_bound(masks)
    while lower < upper and _colorable(masks, order, upper - 1):
        upper -= 1
    return upper


def _clique_lower_bound(masks: list[int]) -> int:
    """Greedy clique in the 2-section; a valid chromatic lower bound."""
    best = 0
    n = len(masks)
    for start in range(n):
        clique = 1 << start
        for v in sorted(range(n), key=lambda u: -masks[u].bit_count()):
            if v != start and (clique & ~masks[v]) == 0:
                clique |= 1 << v
        best = max(best, clique.bit_count())
    return best


def underlying_graph_bipartition(h: Hypergraph) -> Optional[tuple[int, int]]:
    """2-coloring of the 2-section: (mask0, mask1) or None if not bipartite."""
    masks = h.adjacency_masks()
    color = [-1] * h.n
    part = [0, 0]
    for root in range(h.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            part[color[v]] |= 1 << v
            nbrs = masks[v]
            while nbrs:
                u = (nbrs & -nbrs).bit_length() - 1
                nbrs &= nbrs - 1
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return part[0], part[1]


def is_bipartite_hypergraph(h: Hypergraph) -> bool:
    """True iff some 2-part vertex split has every edge meeting both parts."""
    if h.n > SUBSET_CAP:
        raise TooLarge(f"bipartition search refused for n={h.n} > {SUBSET_CAP}")
    if h.m == 0:
        return h.n >= 2
    edge_masks = []
    for e in h.edges:
        em = 0
        for v in e:
            em |= 1 << (v - 1)
        edge_masks.append(em)
    full = (1 << h.n) - 1
    for v1 in range(1, 1 << (h.n - 1)):  # fix vertex n in part 2 to halve the search
        if all(em & v1 and em & (full & ~v1) for em in edge_masks):
            return True
    return False


@dataclass(frozen=True)
class StructureProfile:
    tau: int
    chi: int
    is_regular: bool
    is_linear: bool
    is_bipartite_hypergraph: bool
    underlying_graph_bipartite: bool
    complete_bipartite_sides: Optional[tuple[int, int]]
    is_bipartite_semiregular_graph: bool


def structure_profile(h: Hypergraph) -> StructureProfile:
    inv = invariants(h)
    degrees = inv.degrees
    is_regular = len(set(degrees)) <= 1
    is_linear = all(
        c <= 1 for row in inv.codegrees for c in row
    )
    bipartition = underlying_graph_bipartition(h)
    sides: Optional[tuple[int, int]] = None
    semiregular = False
    if h.uniformity == 2 and bipartition is not None and h.m > 0:
        m0, m1 = bipartition
        a, b = m0.bit_count(), m1.bit_count()
        if h.m == a * b and a > 0 and b > 0:
            sides = (min(a, b), max(a, b))
        side0 = {degrees[i] for i in range(h.n) if m0 >> i & 1}
        side1 = {degrees[i] for i in range(h.n) if m1 >> i & 1}
        semiregular = len(side0) <= 1 and len(side1) <= 1
    return StructureProfile(
        tau=weak_independence_number(h),
        chi=strong_chromatic_number(h),
        is_regular=is_regular,
        is_linear=is_linear,
        is_bipartite_hypergraph=is_bipartite_hypergraph(h),
        underlying_graph_bipartite=bipartition is not None,
        complete_bipartite_sides=sides,
        is_bipartite_semiregular_graph=semiregular,
    )
