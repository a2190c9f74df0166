"""Shared fixture graphs and hypothesis strategies."""

from __future__ import annotations

import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from splitcut import Graph, generate_split

# Oracle-backed properties vary in cost per example; wall-clock deadlines
# only add flakiness there.
settings.register_profile("no-deadline", deadline=None)
settings.load_profile("no-deadline")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)


@pytest.fixture
def pentagon_chord_graph() -> Graph:
    """5-cycle 1-2-3-4-5-1 plus the chord 5-2; maximum cut 5; not split."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1)])


@pytest.fixture
def pentagon_chord_split_image() -> Graph:
    """Hand-built split image of the pentagon-with-chord graph.

    K5 on vertices 0..4 plus one degree-2 vertex per non-edge, here in
    the labeling 5:(0,2), 6:(2,4), 7:(1,3), 8:(0,3). Maximum cut 13.
    """
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(0, 5), (2, 5), (2, 6), (4, 6), (1, 7), (3, 7), (0, 8), (3, 8)]
    return Graph.from_edges(9, edges)


@pytest.fixture
def k5_fan_split_graph() -> Graph:
    """K5 on 0..4 plus independent vertices 5..9 with fixed attachments.

    Degrees into the clique: vertex 5 sees {0}; 6 sees {0,1,2}; 7 sees
    {3,4}; 8 sees {4}; 9 sees {2,4}. Maximum cut 14.
    """
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(0, 5), (0, 6), (1, 6), (2, 6), (3, 7), (4, 7), (4, 8), (2, 9), (4, 9)]
    return Graph.from_edges(10, edges)


def graphs(max_n: int = 8) -> st.SearchStrategy[Graph]:
    """Arbitrary graphs: a vertex count and a subset of the possible edges."""

    def build(n: int, picks: list[bool]) -> Graph:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])

    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.builds(
            build,
            st.just(n),
            st.lists(
                st.booleans(),
                min_size=n * (n - 1) // 2,
                max_size=n * (n - 1) // 2,
            ),
        )
    )


def split_graphs(max_side: int = 6) -> st.SearchStrategy[Graph]:
    """Random split graphs via the seeded generator."""
    return st.builds(
        generate_split,
        st.integers(min_value=0, max_value=max_side),
        st.integers(min_value=0, max_value=max_side),
        st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
        st.integers(min_value=0, max_value=2**32),
    )


def graphs_with_independent_set(max_n: int = 7) -> st.SearchStrategy[tuple[Graph, frozenset[int]]]:
    """(graph, independent set) pairs; the graph need not be split."""

    def build(n: int, picks: list[bool], members: int) -> tuple[Graph, frozenset[int]]:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        ind = frozenset(v for v in range(n) if members >> v & 1)
        edges = [
            p
            for p, keep in zip(pairs, picks)
            if keep and not (p[0] in ind and p[1] in ind)
        ]
        return Graph.from_edges(n, edges), ind

    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.builds(
            build,
            st.just(n),
            st.lists(
                st.booleans(),
                min_size=n * (n - 1) // 2,
                max_size=n * (n - 1) // 2,
            ),
            st.integers(min_value=0, max_value=max(0, 2**n - 1)),
        )
    )
