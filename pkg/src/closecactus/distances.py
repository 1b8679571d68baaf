"""Unweighted shortest-path distances via per-source BFS."""

from __future__ import annotations

from dataclasses import dataclass

from closecactus import _kernels
from closecactus.graph import Graph

UNREACHABLE = -1


@dataclass(frozen=True)
class DistanceRow:
    """BFS distances from one source; -1 marks unreachable vertices."""

    source: int
    dist: tuple[int, ...]


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    g.check_vertex(source)
    offsets, neighbors = g.csr()
    return DistanceRow(source, tuple(_kernels.bfs_row(g.n, offsets, neighbors, source)))


def all_pairs_distances(g: Graph) -> list[DistanceRow]:
    offsets, neighbors = g.csr()
    rows = _kernels.all_pairs_rows(g.n, offsets, neighbors)
    return [DistanceRow(s, tuple(row)) for s, row in enumerate(rows)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    offsets, neighbors = g.csr()
    return UNREACHABLE not in _kernels.bfs_row(g.n, offsets, neighbors, 0)
