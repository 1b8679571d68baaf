"""Immutable simple undirected graphs with dense 0..n-1 vertex indices.

Adjacency lists are kept sorted, so two graphs are equal exactly when
their representations are equal. Instances are immutable after
construction; every operation in the package builds new graphs, which
keeps everything safe to share across worker processes.
"""

from __future__ import annotations

from array import array
from collections.abc import Iterable


class Graph:
    __slots__ = ("n", "adj", "_csr", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            lists[u].append(v)
            lists[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(l)) for l in lists))
        object.__setattr__(self, "_csr", None)
        object.__setattr__(self, "_masks", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries ---------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(l) for l in self.adj) // 2

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- cached kernel inputs --------------------------------------------

    def csr(self):
        """(offsets, neighbors) arrays for the kernel functions."""
        if self._csr is None:
            offsets = array("i", [0] * (self.n + 1))
            flat = array("i")
            for v in range(self.n):
                flat.extend(self.adj[v])
                offsets[v + 1] = len(flat)
            object.__setattr__(self, "_csr", (offsets, flat))
        return self._csr

    def masks(self) -> list[int]:
        """Neighbor bitmask per vertex."""
        if self._masks is None:
            masks = []
            for nbrs in self.adj:
                m = 0
                for w in nbrs:
                    m |= 1 << w
                masks.append(m)
            object.__setattr__(self, "_masks", masks)
        return self._masks

    # -- derived graphs ---------------------------------------------------

    def replace_edges(self, remove=(), add=()) -> "Graph":
        """New graph with ``remove`` edges deleted and ``add`` inserted.

        Raises if a removed edge is absent or an added edge already
        exists, so rewrite bugs surface instead of silently no-opping.
        """
        edge_set = {(u, v) if u < v else (v, u) for u, v in self.edges()}
        for u, v in remove:
            key = (u, v) if u < v else (v, u)
            if key not in edge_set:
                raise ValueError(f"cannot remove absent edge {key}")
            edge_set.discard(key)
        for u, v in add:
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                raise ValueError(f"cannot add existing edge {key}")
            edge_set.add(key)
        return Graph(self.n, edge_set)

    def relabelled(self, perm) -> "Graph":
        """New graph where old vertex v becomes ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``vertices`` with deterministic re-indexing in
    ascending old-index order. Returns the graph and the old->new map."""
    order = sorted(set(vertices))
    to_new = {v: i for i, v in enumerate(order)}
    edges = [
        (to_new[u], to_new[v])
        for u in order
        for v in g.adj[u]
        if u < v and v in to_new
    ]
    return Graph(len(order), edges), to_new
