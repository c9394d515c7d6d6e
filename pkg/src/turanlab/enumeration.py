"""All graphs on ``n`` vertices up to isomorphism, by canonical edge augmentation.

Graphs are grown one edge at a time.  A child ``P + e`` is kept only when
``e`` lies in the automorphism orbit of the child's canonical deletion edge,
and only one non-edge per automorphism orbit of ``P`` is tried, so every
isomorphism class appears exactly once.  Forbidden families are closed under
adding edges, so a child containing one is dropped with its whole subtree.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from . import _backend
from .detection import ForbiddenFamily, ForbiddenPath
from .errors import BudgetError
from .graph import Graph, certificate_from_key

MAX_ENUMERATION_VERTICES = 11


@dataclass(frozen=True)
class EnumerationFilter:
    forbidden: Optional[Union[ForbiddenFamily, ForbiddenPath]] = None
    max_edges: Optional[int] = None

    def kernel_args(self):
        f = self.forbidden
        max_edges = -1 if self.max_edges is None else self.max_edges
        if f is None:
            return _backend._pykernels.FILTER_NONE, 0, 0, max_edges
        if isinstance(f, ForbiddenFamily):
            return _backend._pykernels.FILTER_FAMILY, f.copies, f.cycle_len, max_edges
        return _backend._pykernels.FILTER_PATH, f.k, 0, max_edges

    def accepts(self, g):
        if self.max_edges is not None and g.edge_count() > self.max_edges:
            return False
        return self.forbidden is None or self.forbidden.is_free(g)

    @property
    def key(self):
        parts = []
        if self.forbidden is not None:
            parts.append(f"free_{self.forbidden.key}")
        if self.max_edges is not None:
            parts.append(f"maxe_{self.max_edges}")
        return "_".join(parts)


NO_FILTER = EnumerationFilter()


def _expand(job):
    backend, n, parents, args = job
    kern = _backend.get(backend)
    out = []
    for rows in parents:
        out.extend(kern.augment(n, rows, *args))
    return out


def _sorted_level(n, keys):
    tagged = sorted((certificate_from_key(n, k).data, k) for k in keys)
    for a, b in zip(tagged, tagged[1:]):
        if a[0] == b[0]:
            raise AssertionError("canonical augmentation produced a duplicate class")
    return [k for _, k in tagged]


def enumerate_graphs(n, flt=NO_FILTER, workers=1, backend=None):
    """Yield one canonically labelled graph per isomorphism class passing ``flt``.

    Output is ordered by edge count, then by certificate bytes, independent
    of ``workers``.
    """
    if n > MAX_ENUMERATION_VERTICES:
        raise BudgetError(f"enumeration supports n <= {MAX_ENUMERATION_VERTICES}, got {n}")
    if n < 0:
        raise BudgetError(f"vertex count must be non-negative, got {n}")
    flt = flt or NO_FILTER
    root = Graph(n)
    if not flt.accepts(root):
        return
    name = _backend.get(backend).NAME
    args = flt.kernel_args()
    level = [root.rows]
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while level:
            for key in level:
                yield Graph._trusted(n, key)
            if pool is None:
                children = _expand((name, n, level, args))
            else:
                size = max(1, -(-len(level) // (4 * workers)))
                jobs = [(name, n, level[i:i + size], args) for i in range(0, len(level), size)]
                children = [k for part in pool.map(_expand, jobs) for k in part]
            level = _sorted_level(n, children)
    finally:
        if pool is not None:
            pool.shutdown()


def enumerate_count(n, flt=NO_FILTER, workers=1, backend=None):
    return sum(1 for _ in enumerate_graphs(n, flt, workers=workers, backend=backend))
