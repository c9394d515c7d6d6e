"""Containment tests for cycles, paths and disjoint cycle packings, plus the
exact bipartite edge-deletion distance."""

from dataclasses import dataclass

from ._backend import kernels
from .errors import BudgetError, InvalidParameterError

MAXCUT_MAX_VERTICES = 24


@dataclass(frozen=True)
class ForbiddenFamily:
    """``copies`` vertex-disjoint copies of the cycle ``C_cycle_len``."""

    copies: int
    cycle_len: int

    def __post_init__(self):
        if self.copies < 1:
            raise InvalidParameterError(f"copies must be >= 1, got {self.copies}")
        if self.cycle_len < 3:
            raise InvalidParameterError(f"cycle length must be >= 3, got {self.cycle_len}")

    @property
    def key(self):
        return f"{self.copies}x{self.cycle_len}"

    def is_free(self, g):
        return is_family_free(g, self)

    def __str__(self):
        return f"{self.copies}*C{self.cycle_len}"


@dataclass(frozen=True)
class ForbiddenPath:
    """The path ``P_k`` on ``k`` vertices."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParameterError(f"path needs at least one vertex, got {self.k}")

    @property
    def key(self):
        return f"P{self.k}"

    def is_free(self, g):
        return not contains_path(g, self.k)

    def __str__(self):
        return f"P{self.k}"


def odd_cycle_family(ell, k):
    """The family ``(ell + 1) * C_{2k+1}``."""
    return ForbiddenFamily(ell + 1, 2 * k + 1)


@dataclass(frozen=True)
class PackingWitness:
    cycles: tuple

    @property
    def used(self):
        return frozenset(v for c in self.cycles for v in c)

    def unused(self, g):
        return frozenset(range(g.n)) - self.used

    def validate(self, g, family=None):
        """Re-check disjointness and cyclic adjacency against ``g``."""
        seen = set()
        for c in self.cycles:
            if len(c) < 3 or len(set(c)) != len(c):
                return False
            if family is not None and len(c) != family.cycle_len:
                return False
            if seen & set(c):
                return False
            seen.update(c)
            for i, v in enumerate(c):
                if not g.has_edge(v, c[(i + 1) % len(c)]):
                    return False
        return family is None or len(self.cycles) == family.copies


def contains_cycle(g, m):
    if m < 3:
        raise InvalidParameterError(f"cycle length must be at least 3, got {m}")
    if m > g.n:
        return False
    return kernels.find_packing(g.n, g.rows, 1, m) is not None


def contains_path(g, k):
    if k < 1:
        raise InvalidParameterError(f"path needs at least one vertex, got {k}")
    return kernels.has_path(g.n, g.rows, k)


def find_packing(g, family):
    """First packing in search order, or None if ``g`` is ``family``-free.

    Anchors each cycle at the smallest still-available vertex; a branch that
    leaves the anchor unused keeps the search exhaustive.
    """
    if family.copies * family.cycle_len > g.n:
        return None
    found = kernels.find_packing(g.n, g.rows, family.copies, family.cycle_len)
    if found is None:
        return None
    return PackingWitness(tuple(tuple(c) for c in found))


def is_family_free(g, family):
    return find_packing(g, family) is None


def max_cut(g):
    if g.n > MAXCUT_MAX_VERTICES:
        raise BudgetError(f"exact max-cut supports at most {MAXCUT_MAX_VERTICES} vertices, got {g.n}")
    if kernels.is_bipartite_on(g.rows, (1 << g.n) - 1):
        return g.edge_count()
    return kernels.max_cut(g.n, g.rows)


def bipartite_deletion_distance(g):
    """Fewest edge deletions that leave ``g`` bipartite (``e(g) - maxcut(g)``)."""
    return g.edge_count() - max_cut(g)
