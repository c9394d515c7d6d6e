"""Exact counts of triangles and cycles, and the triangle 3-graph of a graph."""

from dataclasses import dataclass

from ._backend import kernels
from .errors import InvalidEdgeError, InvalidParameterError
from .graph import Graph


def count_triangles(g):
    return kernels.count_triangles(g.n, g.rows)


def count_cycles(g, m):
    """Number of distinct ``C_m`` subgraphs of ``g``."""
    if m < 3:
        raise InvalidParameterError(f"cycle length must be at least 3, got {m}")
    if m > g.n:
        return 0
    return kernels.count_cycles(g.n, g.rows, m)


@dataclass(frozen=True)
class TriangleHypergraphView:
    host: Graph
    triples: tuple

    def __len__(self):
        return len(self.triples)

    def degree(self, v):
        return sum(1 for t in self.triples if v in t)


def triangles(g):
    """All triangles ``(a, b, c)`` with ``a < b < c``, in lexicographic order."""
    rows = g.rows
    out = []
    for a in range(g.n):
        higher = rows[a] >> (a + 1) << (a + 1)
        x = higher
        while x:
            b = (x & -x).bit_length() - 1
            x &= x - 1
            common = rows[b] & higher & ~((1 << (b + 1)) - 1)
            while common:
                c = (common & -common).bit_length() - 1
                common &= common - 1
                out.append((a, b, c))
    return out


def triangle_hypergraph(g):
    return TriangleHypergraphView(g, tuple(triangles(g)))


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise InvalidEdgeError(f"vertex {v} out of range for n={g.n}")


def triangle_link(g, v):
    """Graph on ``V(g)`` whose edges ``ab`` complete ``v`` to a triangle."""
    _check_vertex(g, v)
    nb = g.rows[v]
    rows = [(r & nb) if nb >> u & 1 else 0 for u, r in enumerate(g.rows)]
    return Graph._trusted(g.n, rows)


def triangle_degree(g, v):
    _check_vertex(g, v)
    nb = g.rows[v]
    total = 0
    x = nb
    while x:
        u = (x & -x).bit_length() - 1
        x &= x - 1
        total += (g.rows[u] & nb).bit_count()
    return total // 2


def triangle_degrees(g):
    return [triangle_degree(g, v) for v in range(g.n)]


def heavy_vertices(g, threshold):
    """Vertices lying in at least ``threshold`` triangles."""
    return frozenset(v for v in range(g.n) if triangle_degree(g, v) >= threshold)


def heavy_threshold(n, packing_size):
    """Smallest integer ``d`` with ``d >= n^2 / (8 * packing_size)``."""
    if packing_size < 1:
        raise InvalidParameterError("packing size must be positive")
    return -(-n * n // (8 * packing_size))


def edge_plus_triangle(g):
    return g.edge_count() + count_triangles(g)
