"""Exact maximum-cut engine for split graphs.

Two complementary enumeration strategies share the work bound. The
clique-side strategy ("alg1") walks every bipartition of C = V \\ I and
places each independent vertex greedily on the side opposite the
majority of its neighbors. The independent-side strategy ("alg2") walks
every bipartition of I = V \\ C, sorts the clique by how much each
vertex prefers side 1, and takes the best prefix. Dispatching on the
smaller side caps the work at 2^(n/2) subsets for any split graph.

Subsets are enumerated as a plain binary counter 0..2^t-1 (lowest
vertex ID of the enumerated side = least-significant bit) and the first
maximum in that order wins. Evaluation is vectorized over fixed-size
chunks of counter values, so memory stays constant in 2^t.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import (
    Cut,
    Graph,
    VertexSet,
    as_vertex_set,
    connected_components,
    induced_subgraph,
    is_clique,
    is_independent_set,
    iter_bits,
    mask_of,
)
from .recognition import NotSplitGraphError, recognize_split

ALG1 = "alg1"
ALG2 = "alg2"
TRIVIAL = "trivial"
COMPONENT_MERGE = "component-merge"

# Chunk of counter values evaluated per numpy pass; keeps peak extra
# memory at a few hundred KB regardless of how many subsets are walked.
_CHUNK = 1 << 14

# Beyond 62 bits the counter would overflow uint64; 2^62 subsets is far
# out of reach anyway.
_MAX_SIDE = 62


@dataclass(frozen=True)
class CutReport:
    """A cut, its size, the strategy that found it, and the work done."""

    cut: Cut
    size: int
    algorithm: str
    subsets_enumerated: int


@dataclass(frozen=True)
class DecisionReport:
    """Outcome of the threshold decision, with the path taken."""

    answer: bool
    early_yes: bool
    clique_size: int
    subsets_enumerated: int


def _require_independent(g: Graph, vertices) -> VertexSet:
    s = as_vertex_set(g, vertices, "independent set")
    if not is_independent_set(g, s):
        raise ValueError("vertices do not form an independent set")
    return s


def _require_clique(g: Graph, vertices) -> VertexSet:
    s = as_vertex_set(g, vertices, "clique")
    if not is_clique(g, s):
        raise ValueError("vertices do not form a clique")
    return s


def _check_enumerable(size: int) -> None:
    if size > _MAX_SIDE:
        raise ValueError(
            f"enumerated side has {size} vertices; walking 2^{size} subsets is not tractable"
        )


def _side_masks(g: Graph, side: list[int], of: list[int]) -> list[int]:
    """For each vertex in ``of``, its neighborhood as a bitmask over ``side``."""
    pos = {v: i for i, v in enumerate(side)}
    return [sum(1 << pos[u] for u in g.adj[v] if u in pos) for v in of]


def greedy_extend_is(g: Graph, independent, c1, c2) -> tuple[VertexSet, VertexSet]:
    """Place each independent vertex against the fixed split (c1, c2).

    A vertex goes to side 1 when it has at least as many neighbors in c2
    as in c1 (ties to side 1), which maximizes the cut over all 2^|I|
    placements for this particular (c1, c2).
    """
    ind = _require_independent(g, independent)
    s1 = as_vertex_set(g, c1, "c1")
    s2 = as_vertex_set(g, c2, "c2")
    m1 = mask_of(s1)
    m2 = mask_of(s2)
    if m1 & m2 or (m1 | m2) != g.full_mask ^ mask_of(ind):
        raise ValueError("(c1, c2) must partition the vertices outside the independent set")
    i1 = frozenset(
        v
        for v in ind
        if (g.adj_mask[v] & m2).bit_count() >= (g.adj_mask[v] & m1).bit_count()
    )
    return i1, ind - i1


def clique_prefix_partition(g: Graph, clique, i1, i2, m: int) -> tuple[VertexSet, VertexSet]:
    """Split the clique into the m vertices that most prefer side 1, and the rest.

    Vertices are ordered by |N(v) & i2| - |N(v) & i1|, non-increasing,
    ties by ascending vertex ID. For the fixed (i1, i2) and fixed m, the
    returned prefix maximizes the cut over all m-subsets of the clique.
    """
    cl = as_vertex_set(g, clique, "clique")
    s1 = as_vertex_set(g, i1, "i1")
    s2 = as_vertex_set(g, i2, "i2")
    m1 = mask_of(s1)
    m2 = mask_of(s2)
    if m1 & m2 or (m1 | m2) != g.full_mask ^ mask_of(cl):
        raise ValueError("(i1, i2) must partition the vertices outside the clique")
    if not 0 <= m <= len(cl):
        raise ValueError(f"m={m} out of range 0..{len(cl)}")
    order = sorted(
        cl,
        key=lambda v: (
            (g.adj_mask[v] & m1).bit_count() - (g.adj_mask[v] & m2).bit_count(),
            v,
        ),
    )
    return frozenset(order[:m]), frozenset(order[m:])


def _best_clique_side_subset(g: Graph, cverts: list[int], iverts: list[int]) -> tuple[int, int]:
    """Scan all subsets of ``cverts`` with greedy placement of ``iverts``.

    Returns (best cut size, counter value of the first subset achieving
    it). Counter bit i selects cverts[i] into side 1.
    """
    t = len(cverts)
    _check_enumerable(t)
    within = np.array(_side_masks(g, cverts, cverts), dtype=np.uint64)
    imasks = np.array(_side_masks(g, cverts, iverts), dtype=np.uint64)
    idegs = np.bitwise_count(imasks).astype(np.int64) if len(iverts) else imasks
    one = np.uint64(1)

    best = -1
    best_subset = 0
    for lo in range(0, 1 << t, _CHUNK):
        hi = min(lo + _CHUNK, 1 << t)
        counters = np.arange(lo, hi, dtype=np.uint64)
        others = ~counters
        total = np.zeros(hi - lo, dtype=np.int64)
        for i in range(t):
            picked = ((counters >> np.uint64(i)) & one).astype(np.int64)
            total += picked * np.bitwise_count(within[i] & others).astype(np.int64)
        for j in range(len(iverts)):
            with_side1 = np.bitwise_count(imasks[j] & counters).astype(np.int64)
            total += np.maximum(with_side1, idegs[j] - with_side1)
        chunk_best = int(total.max())
        if chunk_best > best:
            best = chunk_best
            best_subset = lo + int(total.argmax())
    return best, best_subset


def maxcut_given_is(g: Graph, independent) -> CutReport:
    """Maximum cut of any graph that has ``independent`` as an independent set.

    Enumerates all 2^|V \\ I| splits of the complement side; memory stays
    polynomial in n.
    """
    ind = _require_independent(g, independent)
    cverts = sorted(set(range(g.n)) - ind)
    best, subset = _best_clique_side_subset(g, cverts, sorted(ind))
    c1 = frozenset(cverts[i] for i in iter_bits(subset))
    c2 = frozenset(cverts) - c1
    i1, i2 = greedy_extend_is(g, ind, c1, c2)
    return CutReport(
        cut=Cut(side1=c1 | i1, side2=c2 | i2),
        size=best,
        algorithm=ALG1,
        subsets_enumerated=1 << len(cverts),
    )


def _best_indep_side_subset(
    g: Graph, cverts: list[int], iverts: list[int]
) -> tuple[int, int, int]:
    """Scan all subsets of ``iverts``, each with every prefix length m.

    Returns (best cut size, counter value, m) for the first maximum in
    (counter, m) lexicographic order. Counter bit j selects iverts[j]
    into side 1.
    """
    t = len(iverts)
    _check_enumerable(t)
    csize = len(cverts)
    within = np.array(_side_masks(g, iverts, iverts), dtype=np.uint64)
    cmasks = np.array(_side_masks(g, iverts, cverts), dtype=np.uint64)
    cdegs = np.bitwise_count(cmasks).astype(np.int64) if csize else cmasks
    prefix_pairs = np.array([m * (csize - m) for m in range(csize + 1)], dtype=np.int64)
    one = np.uint64(1)
    # Per-chunk scratch is rows x (csize+1); shrink rows for wide cliques.
    chunk = max(256, min(_CHUNK, (1 << 18) // (csize + 1)))

    best = -1
    best_subset = 0
    best_m = 0
    for lo in range(0, 1 << t, chunk):
        hi = min(lo + chunk, 1 << t)
        counters = np.arange(lo, hi, dtype=np.uint64)
        others = ~counters
        rows = hi - lo
        inner = np.zeros(rows, dtype=np.int64)  # edges inside V \ C crossing the split
        for j in range(t):
            picked = ((counters >> np.uint64(j)) & one).astype(np.int64)
            inner += picked * np.bitwise_count(within[j] & others).astype(np.int64)
        with_side1 = np.empty((rows, csize), dtype=np.int64)
        for i in range(csize):
            with_side1[:, i] = np.bitwise_count(cmasks[i] & counters)
        keys = cdegs[None, :] - 2 * with_side1
        order = np.argsort(-keys, axis=1, kind="stable")
        gains = np.take_along_axis(keys, order, axis=1).cumsum(axis=1)
        base = inner + with_side1.sum(axis=1)
        values = np.empty((rows, csize + 1), dtype=np.int64)
        values[:, 0] = base
        if csize:
            values[:, 1:] = base[:, None] + prefix_pairs[1:] + gains
        row_best = values.max(axis=1)
        chunk_best = int(row_best.max())
        if chunk_best > best:
            row = int(row_best.argmax())
            best = chunk_best
            best_subset = lo + row
            best_m = int(values[row].argmax())
    return best, best_subset, best_m


def maxcut_given_clique(g: Graph, clique) -> CutReport:
    """Maximum cut of any graph that has ``clique`` as a clique.

    Enumerates all 2^|V \\ C| splits of the complement side, trying every
    prefix length of the sorted clique for each.
    """
    cl = _require_clique(g, clique)
    iverts = sorted(set(range(g.n)) - cl)
    best, subset, m = _best_indep_side_subset(g, sorted(cl), iverts)
    i1 = frozenset(iverts[j] for j in iter_bits(subset))
    i2 = frozenset(iverts) - i1
    c1, c2 = clique_prefix_partition(g, cl, i1, i2, m)
    return CutReport(
        cut=Cut(side1=c1 | i1, side2=c2 | i2),
        size=best,
        algorithm=ALG2,
        subsets_enumerated=1 << len(iverts),
    )


def _trivial_report(g: Graph) -> CutReport | None:
    """Edgeless and complete graphs are solved without enumeration."""
    if g.m == 0:
        return CutReport(
            cut=Cut(side1=frozenset(range(g.n)), side2=frozenset()),
            size=0,
            algorithm=TRIVIAL,
            subsets_enumerated=0,
        )
    if g.is_complete():
        half = g.n // 2
        return CutReport(
            cut=Cut(side1=frozenset(range(half)), side2=frozenset(range(half, g.n))),
            size=half * (g.n - half),
            algorithm=TRIVIAL,
            subsets_enumerated=0,
        )
    return None


def _solve_connected(g: Graph, algorithm: str) -> CutReport:
    part = recognize_split(g)
    if part is None:
        raise NotSplitGraphError("a connected component is not a split graph")
    if algorithm == ALG1 or (
        algorithm == "auto" and len(part.clique) <= len(part.independent)
    ):
        return maxcut_given_is(g, part.independent)
    return maxcut_given_clique(g, part.clique)


def maxcut_split(g: Graph, algorithm: str = "auto") -> CutReport:
    """Maximum cut of a graph whose connected components are split graphs.

    Edgeless and complete graphs are answered directly; otherwise each
    component is recognized and solved by whichever strategy enumerates
    its smaller side (at most 2^(n/2) subsets per component), and the
    component cuts are concatenated.

    ``algorithm`` may force "alg1" or "alg2" on every non-trivial
    component; the achieved size must not depend on the choice.

    Raises NotSplitGraphError when some component is not split.
    """
    if algorithm not in ("auto", ALG1, ALG2):
        raise ValueError(f"unknown algorithm {algorithm!r}")
    report = _trivial_report(g)
    if report is not None:
        return report
    comps = connected_components(g)
    if len(comps) == 1:
        return _solve_connected(g, algorithm)
    side1: set[int] = set()
    size = 0
    subsets = 0
    for comp in comps:
        sub, verts = induced_subgraph(g, comp)
        rep = _trivial_report(sub) or _solve_connected(sub, algorithm)
        side1.update(verts[i] for i in rep.cut.side1)
        size += rep.size
        subsets += rep.subsets_enumerated
    return CutReport(
        cut=Cut(side1=frozenset(side1), side2=frozenset(range(g.n)) - side1),
        size=size,
        algorithm=COMPONENT_MERGE,
        subsets_enumerated=subsets,
    )


def decide_maxcut_report(g: Graph, k: int) -> DecisionReport:
    """Decide whether a split graph has a cut of size at least ``k``.

    Splitting the clique into halves already crosses floor(|C|^2/4)
    edges, so 4k <= |C|^2 answers yes with no enumeration at all.
    Otherwise |C| < 2*sqrt(k) and the exact maximum is computed by the
    clique-side scan, keeping the total work under 2^(2*sqrt(k)) subsets.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    part = recognize_split(g)
    if part is None:
        raise NotSplitGraphError("not a split graph")
    c = len(part.clique)
    if 4 * k <= c * c:
        return DecisionReport(answer=True, early_yes=True, clique_size=c, subsets_enumerated=0)
    exact = maxcut_given_is(g, part.independent)
    return DecisionReport(
        answer=exact.size >= k,
        early_yes=False,
        clique_size=c,
        subsets_enumerated=exact.subsets_enumerated,
    )


def decide_maxcut(g: Graph, k: int) -> bool:
    """True iff the split graph ``g`` has a cut of size at least ``k``."""
    return decide_maxcut_report(g, k).answer
