"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive and self-contained: plain dict/BFS
graph handling, fractions.Fraction arithmetic, and exhaustive searches.
None of it imports the package under test, so these routines stay valid
as cross-checks no matter how the package is implemented.

Graphs are (n, edges) pairs where edges is an iterable of (u, v) with
0 <= u, v < n.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def vertex_closeness(n, edges, u):
    """Sum of 2^-d(u,v) over vertices reachable from u, as a Fraction."""
    adj = adjacency(n, edges)
    dist = bfs(adj, u)
    return sum((Fraction(1, 2 ** d) for v, d in dist.items() if v != u), Fraction(0))


def graph_closeness(n, edges):
    """Ordered-pair closeness: sum over u of vertex_closeness(u)."""
    return sum((vertex_closeness(n, edges, u) for u in range(n)), Fraction(0))


def is_connected(n, edges):
    if n == 0:
        return False
    return len(bfs(adjacency(n, edges), 0)) == n


def all_simple_cycles(n, edges):
    """Every simple cycle as a frozenset of vertices (length >= 3).

    Exponential search; fine for the tiny graphs the tests feed it.
    """
    adj = adjacency(n, edges)
    cycles = set()

    def extend(path, seen):
        head = path[-1]
        for w in adj[head]:
            if w == path[0] and len(path) >= 3:
                cycles.add(frozenset(path))
            elif w not in seen and w > path[0]:
                extend(path + [w], seen | {w})

    for start in range(n):
        extend([start], {start})
    return cycles


def is_cactus(n, edges):
    """Cactus test via exhaustive cycle listing: connected and no two
    simple cycles share more than one vertex."""
    if not is_connected(n, edges):
        return False, None
    cycles = list(all_simple_cycles(n, edges))
    for a, b in combinations(cycles, 2):
        if len(a & b) > 1:
            return False, None
    return True, len(cycles)


# --- deliberately naive constructions (mirrors of the spec'd builders) ---

def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def cycle_edges(n):
    return path_edges(n) + [(n - 1, 0)]


def triangle_path_edges(n, k1, k2):
    """Path on n-k vertices with its first k1 and last k2 edges doubled
    into triangles; apex i sits on path edge i (leading) or on one of the
    last k2 edges (trailing). Vertices 0..n-k-1 are the path, then apexes.
    """
    k = k1 + k2
    base = n - k
    edges = path_edges(base)
    for i in range(1, k + 1):  # 1-based apex index
        apex = base + i - 1
        if i <= k1:
            a, b = i - 1, i
        else:
            a, b = n - 2 * k - 2 + i, n - 2 * k - 1 + i
        edges += [(apex, a), (apex, b)]
    return edges


def relabelled(n, edges, perm):
    return sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges)


def isomorphic(n1, e1, n2, e2):
    """Brute-force isomorphism by trying all vertex bijections."""
    from itertools import permutations

    if n1 != n2 or len(set(map(frozenset, e1))) != len(set(map(frozenset, e2))):
        return False
    target = relabelled(n2, e2, list(range(n2)))
    for perm in permutations(range(n1)):
        if relabelled(n1, e1, perm) == target:
            return True
    return False


def cactus_class_count(n, k):
    """Count isomorphism classes of cacti with n vertices and k cycles by
    filtering every labelled graph with n-1+k edges."""
    m = n - 1 + k
    all_pairs = list(combinations(range(n), 2))
    reps = []
    for subset in combinations(all_pairs, m):
        ok, kk = is_cactus(n, subset)
        if not ok or kk != k:
            continue
        if not any(isomorphic(n, subset, n, rep) for rep in reps):
            reps.append(subset)
    return len(reps)
