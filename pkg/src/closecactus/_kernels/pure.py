"""Pure-Python reference kernels.

These are the hot inner loops of the package: breadth-first distance
sweeps, distance-count aggregation, partition refinement for canonical
labelling, and graph6 bit packing. ``closecactus._speedups`` provides a
compiled drop-in replacement with identical signatures and outputs; this
module is the fallback and the behavioural reference.

All kernels take the graph in CSR form: ``offsets`` of length n+1 and a
flat ``neighbors`` array, both indexable sequences of ints.
"""

from __future__ import annotations

from collections import deque

__all__ = [
    "bfs_row",
    "all_pairs_rows",
    "source_distance_counts",
    "ordered_pair_distance_counts",
    "initial_colors",
    "refine_colors",
    "graph6_payload",
]


def bfs_row(n, offsets, neighbors, source):
    """Distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for i in range(offsets[u], offsets[u + 1]):
            v = neighbors[i]
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def all_pairs_rows(n, offsets, neighbors):
    return [bfs_row(n, offsets, neighbors, s) for s in range(n)]


def source_distance_counts(n, offsets, neighbors, source):
    """counts[d] = number of vertices at distance d from source (d >= 1;
    unreachable vertices are not counted). Length n."""
    counts = [0] * n
    for d in bfs_row(n, offsets, neighbors, source):
        if d > 0:
            counts[d] += 1
    return counts


def ordered_pair_distance_counts(n, offsets, neighbors):
    """counts[d] = number of ordered vertex pairs at distance d (d >= 1)."""
    counts = [0] * n
    for s in range(n):
        for d in bfs_row(n, offsets, neighbors, s):
            if d > 0:
                counts[d] += 1
    return counts


def initial_colors(n, offsets, neighbors):
    """Isomorphism-invariant starting colors from per-vertex degree plus
    the sorted multiset of BFS distances (unreachable sorts last)."""
    sigs = []
    for v in range(n):
        row = bfs_row(n, offsets, neighbors, v)
        profile = sorted(n if d < 0 else d for d in row)
        sigs.append((offsets[v + 1] - offsets[v], tuple(profile)))
    ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [ranks[s] for s in sigs]


def refine_colors(n, offsets, neighbors, colors):
    """Equitable refinement of a coloring (iterated neighbor-color
    multiset splitting) with invariant class numbering: the result
    depends only on the colored graph, not on vertex order."""
    colors = list(colors)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[neighbors[i]] for i in range(offsets[v], offsets[v + 1]))
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def graph6_payload(n, masks, lab):
    """graph6 edge-bit payload (each byte offset by 63) of the graph
    relabelled so position i holds original vertex ``lab[i]``.

    ``masks[v]`` is the neighbor bitmask of v. Bits run column-major over
    the upper triangle: pair (i, j) for j = 1..n-1, i = 0..j-1.
    """
    out = bytearray()
    group = 0
    nbits = 0
    for j in range(1, n):
        mj = masks[lab[j]]
        for i in range(j):
            group = (group << 1) | ((mj >> lab[i]) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)
