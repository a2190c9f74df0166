"""Reproducible random split-graph instances.

The generator is deterministic in its arguments: vertices 0..K-1 form a
complete clique, vertices K..K+M-1 an independent set, and each
clique-to-independent pair is made an edge with the given probability.
Draws come from ``random.Random(seed)`` in row-major order (all
candidates of clique vertex 0 first, then clique vertex 1, and so on),
so a (seed, sizes, probability) tuple always names the same graph.
"""

from __future__ import annotations

import random

from .graph import Graph


def generate_split(clique_size: int, is_size: int, edge_prob: float, seed: int) -> Graph:
    """A random split graph on clique_size + is_size vertices."""
    if clique_size < 0 or is_size < 0:
        raise ValueError("sizes must be nonnegative")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(clique_size) for v in range(u + 1, clique_size)
    ]
    for u in range(clique_size):
        for v in range(clique_size, clique_size + is_size):
            if rng.random() < edge_prob:
                edges.append((u, v))
    return Graph.from_edges(clique_size + is_size, edges)
