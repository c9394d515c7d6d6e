"""Brute-force reference computations, deliberately independent of turanlab's
kernels.  Only itertools/numpy/networkx and plain edge lists are used here."""

import itertools
import math
from collections import Counter

import networkx as nx
import numpy as np


def edge_list(g):
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.rows[u] >> v & 1]


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(edge_list(g))
    return h


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def naive_triangles(n, edges):
    adj = adjacency_sets(n, edges)
    return sum(1 for a, b, c in itertools.combinations(range(n), 3)
               if b in adj[a] and c in adj[a] and c in adj[b])


def naive_cycles(n, edges, m):
    """Distinct C_m subgraphs: injective closed sequences divided by 2m."""
    adj = adjacency_sets(n, edges)
    count = 0
    for seq in itertools.permutations(range(n), m):
        if all(seq[(i + 1) % m] in adj[seq[i]] for i in range(m)):
            count += 1
    return count // (2 * m)


def all_cycles(n, edges, m):
    """Vertex sets (frozensets) of every C_m copy; a set may host several copies."""
    adj = adjacency_sets(n, edges)
    found = set()
    for seq in itertools.permutations(range(n), m):
        if seq[0] != min(seq):
            continue
        if all(seq[(i + 1) % m] in adj[seq[i]] for i in range(m)):
            found.add(frozenset(seq))
    return found


def naive_has_packing(n, edges, copies, m):
    sets = list(all_cycles(n, edges, m))
    for combo in itertools.combinations(sets, copies):
        if len(frozenset().union(*combo)) == copies * m:
            return True
    return False


def naive_has_path(n, edges, k):
    adj = adjacency_sets(n, edges)
    if k == 1:
        return n >= 1
    return any(all(seq[i + 1] in adj[seq[i]] for i in range(k - 1))
               for seq in itertools.permutations(range(n), k))


def naive_max_cut(n, edges):
    best = 0
    for bits in range(1 << n):
        best = max(best, sum(1 for u, v in edges if (bits >> u & 1) != (bits >> v & 1)))
    return best


def burnside_class_count(n):
    """Number of isomorphism classes of graphs on n vertices (Burnside/Pólya)."""
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = set()
        cycles = 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                a, b = perm[q[0]], perm[q[1]]
                q = (a, b) if a < b else (b, a)
        total += 2 ** cycles
    return total // math.factorial(n)


def labeled_partition(n):
    """Minimum bitmask image of every labeled graph over all relabelings (numpy).

    Returns an array ``rep`` with ``rep[mask]`` the least mask isomorphic to
    ``mask``; the number of distinct entries is the class count.
    """
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    best = masks.copy()
    for perm in itertools.permutations(range(n)):
        img = np.zeros_like(masks)
        for i, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            j = index[(x, y) if x < y else (y, x)]
            img |= ((masks >> i) & 1) << j
        np.minimum(best, img, out=best)
    return best, pairs


def atlas(n):
    """All graphs on n <= 7 vertices from the networkx graph atlas."""
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def nx_edges(h):
    return [tuple(sorted(e)) for e in h.edges()]


def degree_histogram(n, edges):
    return Counter(d for _, d in nx.Graph(edges).degree()) if edges else Counter()
