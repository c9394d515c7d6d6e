"""Named graph families: cliques, paths, cycles, Turán graphs, blow-ups and
the extremal construction ``K_l`` joined with ``T_2(n - l)``."""

from dataclasses import dataclass

from .errors import CapacityError, InvalidParameterError
from .graph import MAX_VERTICES, Graph, empty, join


def complete(n):
    g = empty(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(g.n)])


def path(k):
    """Path on ``k`` vertices (``k - 1`` edges)."""
    if k < 1:
        raise InvalidParameterError(f"path needs at least one vertex, got {k}")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(m):
    if m < 3:
        raise InvalidParameterError(f"cycle length must be at least 3, got {m}")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def turan_part_sizes(r, n):
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def complete_multipartite(sizes):
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceed the capacity of {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph._trusted(n, rows)


def turan(r, n):
    """Balanced complete ``r``-partite graph; larger parts take the low indices."""
    if r < 1:
        raise InvalidParameterError(f"Turán graph needs r >= 1, got {r}")
    if n < 0:
        raise InvalidParameterError(f"vertex count must be non-negative, got {n}")
    return complete_multipartite([s for s in turan_part_sizes(r, n) if s])


def extremal_construction(ell, n):
    """``K_ell`` joined with ``T_2(n - ell)``; the clique sits at ``0..ell-1``."""
    if not 1 <= ell < n:
        raise InvalidParameterError(f"need 1 <= ell < n, got ell={ell}, n={n}")
    return join(complete(ell), turan(2, n - ell))


@dataclass(frozen=True)
class BlowUpSpec:
    base: Graph
    part_sizes: tuple

    def __post_init__(self):
        sizes = tuple(self.part_sizes)
        object.__setattr__(self, "part_sizes", sizes)
        if len(sizes) != self.base.n:
            raise InvalidParameterError("one part size per base vertex is required")
        if any(s < 1 for s in sizes):
            raise InvalidParameterError("part sizes must be positive")
        if sum(sizes) > MAX_VERTICES:
            raise CapacityError(f"blow-up needs {sum(sizes)} vertices, capacity is {MAX_VERTICES}")


def blow_up(spec, part_sizes=None):
    """Replace base vertex ``i`` by an independent set of ``part_sizes[i]`` vertices.

    Accepts a :class:`BlowUpSpec` or ``(base, part_sizes)``.
    """
    if part_sizes is not None:
        spec = BlowUpSpec(spec, tuple(part_sizes))
    base, sizes = spec.base, spec.part_sizes
    starts = []
    acc = 0
    for s in sizes:
        starts.append(acc)
        acc += s
    masks = [((1 << s) - 1) << st for s, st in zip(sizes, starts)]
    rows = []
    for i, s in enumerate(sizes):
        r = 0
        for j in range(base.n):
            if base.rows[i] >> j & 1:
                r |= masks[j]
        rows.extend([r] * s)
    return Graph._trusted(acc, rows)
