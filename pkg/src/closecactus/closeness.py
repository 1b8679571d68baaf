"""Exact closeness functionals.

The closeness of a vertex u is sum(2**-d(u, v)) over the other vertices;
the closeness of a graph is the sum of that quantity over all vertices,
i.e. an ordered-pair sum. Unreachable pairs contribute zero, which makes
both functionals well defined on disconnected graphs.
"""

from __future__ import annotations

from closecactus import _kernels
from closecactus.dyadic import ZERO, DyadicRational
from closecactus.graph import Graph


def counts_to_closeness(counts) -> DyadicRational:
    """Exact sum of counts[d] * 2**-d over d >= 1."""
    top = 0
    for d in range(len(counts) - 1, 0, -1):
        if counts[d]:
            top = d
            break
    else:
        return ZERO
    num = 0
    for d in range(1, top + 1):
        num += counts[d] << (top - d)
    return DyadicRational(num, top)


def vertex_closeness(g: Graph, u: int) -> DyadicRational:
    g.check_vertex(u)
    offsets, neighbors = g.csr()
    return counts_to_closeness(_kernels.source_distance_counts(g.n, offsets, neighbors, u))


def closeness_profile(g: Graph) -> list[DyadicRational]:
    return [vertex_closeness(g, u) for u in range(g.n)]


def graph_closeness(g: Graph) -> DyadicRational:
    if g.n == 0:
        return ZERO
    offsets, neighbors = g.csr()
    return counts_to_closeness(_kernels.ordered_pair_distance_counts(g.n, offsets, neighbors))
