"""Immutable simple graphs on at most 64 vertices, stored as bitset rows."""

from dataclasses import dataclass

from ._backend import kernels
from .errors import CapacityError, InvalidEdgeError

MAX_VERTICES = 64


def _check_capacity(n):
    if n < 0:
        raise CapacityError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceed the capacity of {MAX_VERTICES}")


class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbour bitmask of ``v``.

    Instances are values: every operation returns a new graph.
    """

    __slots__ = ("_n", "_rows", "_edges")

    def __init__(self, n, rows=None):
        _check_capacity(n)
        if rows is None:
            rows = (0,) * n
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise InvalidEdgeError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r < 0 or r & ~full:
                raise InvalidEdgeError(f"row {v} references a vertex >= {n}")
            if r >> v & 1:
                raise InvalidEdgeError(f"self-loop at vertex {v}")
            for u in _bits(r):
                if not rows[u] >> v & 1:
                    raise InvalidEdgeError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._rows = rows
        self._edges = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def _trusted(cls, n, rows):
        g = object.__new__(cls)
        g._n = n
        g._rows = tuple(rows)
        g._edges = sum(r.bit_count() for r in g._rows) // 2
        return g

    @classmethod
    def from_edges(cls, n, edges):
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    def vertex_count(self):
        return self._n

    def edge_count(self):
        return self._edges

    def _vertex(self, v):
        if not 0 <= v < self._n:
            raise InvalidEdgeError(f"vertex {v} out of range for n={self._n}")

    def degree(self, v):
        self._vertex(v)
        return self._rows[v].bit_count()

    def degrees(self):
        return [r.bit_count() for r in self._rows]

    def neighbors(self, v):
        self._vertex(v)
        return frozenset(_bits(self._rows[v]))

    def has_edge(self, u, v):
        self._vertex(u)
        self._vertex(v)
        return bool(self._rows[u] >> v & 1)

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in row-major order."""
        for u, r in enumerate(self._rows):
            for v in _bits(r >> (u + 1)):
                yield u, u + 1 + v

    def add_edge(self, u, v):
        _check_pair(self._n, u, v)
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self._n, rows)

    def remove_edge(self, u, v):
        _check_pair(self._n, u, v)
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, rows)

    def induced_subgraph(self, vertices):
        """Subgraph induced by ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        for v in vs:
            self._vertex(v)
        pos = {v: i for i, v in enumerate(vs)}
        mask = 0
        for v in vs:
            mask |= 1 << v
        rows = []
        for v in vs:
            r = 0
            for u in _bits(self._rows[v] & mask):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(len(vs), rows)

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise InvalidEdgeError("relabelling must be a permutation of the vertices")
        rows = [0] * self._n
        for v, r in enumerate(self._rows):
            nr = 0
            for u in _bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph._trusted(self._n, rows)

    def complement(self):
        full = (1 << self._n) - 1
        return Graph._trusted(self._n, [full & ~r & ~(1 << v) for v, r in enumerate(self._rows)])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={list(self.edges())})"


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check_pair(n, u, v):
    if u == v:
        raise InvalidEdgeError(f"self-loop {u}-{v} is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidEdgeError(f"edge {u}-{v} out of range for n={n}")


def empty(n):
    return Graph(n)


def disjoint_union(g, h):
    n = g.n + h.n
    _check_capacity(n)
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph._trusted(n, rows)


def join(g, h):
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    n = g.n + h.n
    _check_capacity(n)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph._trusted(n, rows)


def induced_subgraph(g, vertices):
    return g.induced_subgraph(vertices)


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalCertificate:
    """Isomorphism-class identifier: ``n`` then the canonical upper triangle.

    Bits are taken row-major over pairs ``i < j`` and packed MSB first.
    """

    data: bytes

    @property
    def n(self):
        return self.data[0]

    def hex(self):
        return self.data.hex()

    def __str__(self):
        return self.data.hex()


def certificate_from_key(n, key):
    bits = 0
    count = 0
    for i in range(n):
        upper = key[i] >> (i + 1)
        width = n - i - 1
        # bit j of upper is pair (i, i+1+j); emit in increasing j
        rev = int(f"{upper:0{width}b}"[::-1], 2) if width else 0
        bits = (bits << width) | rev
        count += width
    pad = (-count) % 8
    bits <<= pad
    nbytes = (count + pad) // 8
    return CanonicalCertificate(bytes([n]) + bits.to_bytes(nbytes, "big"))


def canonical_labeling(g):
    """``(lab, canonical_graph, generators)``; ``lab[p]`` is the vertex at position p."""
    lab, key, gens = kernels.canonical_labeling(g.n, g.rows)
    return list(lab), Graph._trusted(g.n, key), [list(p) for p in gens]


def canonical_graph(g):
    _, key, _ = kernels.canonical_labeling(g.n, g.rows)
    return Graph._trusted(g.n, key)


def canonical_form(g):
    _, key, _ = kernels.canonical_labeling(g.n, g.rows)
    return certificate_from_key(g.n, key)


def automorphism_generators(g):
    return [list(p) for p in kernels.canonical_labeling(g.n, g.rows)[2]]


def is_isomorphic(g, h):
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
