"""Corpus enumeration helpers used by sweeps and the acceptance suite."""

from __future__ import annotations

import itertools
from typing import Iterator

from .hypergraph import Hypergraph, binomial, is_connected, random_connected_uniform


def exhaustive_connected(n_max: int, ks: tuple[int, ...], m_max: int) -> Iterator[Hypergraph]:
    """All connected k-uniform hypergraphs with n <= n_max, k in ks, m <= m_max.

    Vertices are labeled; no isomorphism reduction.  Connectivity implies
    every vertex is covered, which prunes most candidates cheaply.
    """
    for k in ks:
        for n in range(k, n_max + 1):
            all_edges = list(itertools.combinations(range(1, n + 1), k))
            masks = [sum(1 << (v - 1) for v in e) for e in all_edges]
            full = (1 << n) - 1
            min_m = max(1, -(-(n - 1) // (k - 1)))
            for m in range(min_m, m_max + 1):
                for combo in itertools.combinations(range(len(all_edges)), m):
                    cover = 0
                    for idx in combo:
                        cover |= masks[idx]
                    if cover != full:
                        continue
                    h = Hypergraph(n=n, edges=tuple(all_edges[i] for i in combo))
                    if is_connected(h):
                        yield h


def seeded_random_corpus(
    count: int, n_max: int, ks: tuple[int, ...], seed: int
) -> list[Hypergraph]:
    """Deterministic list of `count` random connected uniform hypergraphs."""
    out: list[Hypergraph] = []
    i = 0
    while len(out) < count:
        k = ks[i % len(ks)]
        n = k + (i // len(ks)) % (n_max - k + 1)
        lo = max(1, -(-(n - 1) // (k - 1)))
        hi = binomial(n, k)
        m = lo + i % (hi - lo + 1)
        out.append(random_connected_uniform(n, k, m, seed + i))
        i += 1
    return out
