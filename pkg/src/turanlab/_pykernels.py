"""Pure-Python implementations of the hot kernels.

Every function takes the vertex count ``n`` and a sequence of ``n`` adjacency
bitmasks (bit ``j`` of ``rows[i]`` set iff ``ij`` is an edge).  The compiled
module ``_ckernels`` exposes the same functions with identical results; this
module is the fallback when the extension is not built.
"""

from itertools import combinations
from math import comb

NAME = "python"

FILTER_NONE = 0
FILTER_FAMILY = 1
FILTER_PATH = 2

# Skip the odd-cycle-transversal bound when it would test more subsets than this.
OCT_SUBSET_LIMIT = 4096


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

def _refine(rows, cells):
    """Refine an ordered partition until neighbour counts are cell-constant."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            keys = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in c}
            ordered = sorted(c, key=keys.__getitem__)
            group = [ordered[0]]
            for v in ordered[1:]:
                if keys[v] == keys[group[0]]:
                    group.append(v)
                else:
                    out.append(group)
                    group = [v]
            out.append(group)
        if len(out) == len(cells):
            return out
        cells = out


def _relabel_rows(rows, lab):
    pos = [0] * len(lab)
    for p, v in enumerate(lab):
        pos[v] = p
    key = []
    for v in lab:
        r = 0
        for u in _bits(rows[v]):
            r |= 1 << pos[u]
        key.append(r)
    return tuple(key)


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canonical_labeling(n, rows):
    """Return ``(lab, key, gens)`` for the graph.

    ``lab[p]`` is the vertex placed at canonical position ``p``, ``key`` the
    relabelled rows (the lexicographically least over the search tree) and
    ``gens`` a list of permutations generating the automorphism group.
    """
    rows = tuple(rows)
    if n == 0:
        return [], (), []
    st = {"first": None, "best": None}
    gens = []

    def leaf(cells):
        lab = [c[0] for c in cells]
        key = _relabel_rows(rows, lab)
        first = st["first"]
        if first is None:
            st["first"] = st["best"] = (key, lab)
            return
        best = st["best"]
        if key == first[0]:
            gens.append(_aut_between(first[1], lab))
        elif key == best[0]:
            gens.append(_aut_between(best[1], lab))
        elif key < best[0]:
            st["best"] = (key, lab)

    def search(cells, seq):
        cells = _refine(rows, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            leaf(cells)
            return
        target = cells[idx]
        tried = []
        for v in sorted(target):
            if tried and _pruned(n, v, tried, gens, seq):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:], seq + [v])

    search([list(range(n))], [])
    key, lab = st["best"]
    return lab, key, gens


def _aut_between(lab_a, lab_b):
    perm = [0] * len(lab_a)
    for a, b in zip(lab_a, lab_b):
        perm[a] = b
    return perm


def _pruned(n, v, tried, gens, seq):
    parent = list(range(n))
    for g in gens:
        if all(g[s] == s for s in seq):
            for x in range(n):
                a, b = _find(parent, x), _find(parent, g[x])
                if a != b:
                    parent[a] = b
    rv = _find(parent, v)
    return any(_find(parent, t) == rv for t in tried)


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def count_triangles(n, rows):
    total = 0
    for v in range(n):
        higher = rows[v] >> (v + 1) << (v + 1)
        for u in _bits(higher):
            total += (rows[u] & higher).bit_count()
    # triangle v<u<w is counted from (v,u) and from (v,w)
    return total // 2


def count_cycles(n, rows, m):
    total = 0
    full = (1 << n) - 1
    for a in range(n):
        avail = full & ~((1 << (a + 1)) - 1)
        for x in _bits(rows[a] & avail):
            total += _count_from(rows, a, x, avail & ~(1 << x), 2, m, x)
    return total


def _count_from(rows, start, cur, avail, depth, m, second):
    if depth == m:
        return 1 if (rows[cur] >> start & 1 and cur > second) else 0
    total = 0
    for w in _bits(rows[cur] & avail):
        total += _count_from(rows, start, w, avail & ~(1 << w), depth + 1, m, second)
    return total


# ---------------------------------------------------------------------------
# containment and packing
# ---------------------------------------------------------------------------

def is_bipartite_on(rows, mask):
    rem = mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        sides = [1 << v, 0]
        side = 0
        frontier = visited = 1 << v
        while frontier:
            nb = 0
            for u in _bits(frontier):
                nb |= rows[u]
            nb &= mask
            if nb & sides[side]:
                return False
            new = nb & ~visited
            sides[side ^ 1] |= new
            visited |= new
            frontier = new
            side ^= 1
        rem &= ~visited
    return True


def _two_core(rows, mask):
    changed = True
    while changed:
        changed = False
        for v in _bits(mask):
            if (rows[v] & mask).bit_count() < 2:
                mask &= ~(1 << v)
                changed = True
    return mask


def _oct_bound_fails(rows, avail, r):
    """True when removing at most r-1 vertices makes ``avail`` bipartite."""
    verts = list(_bits(avail))
    cost = sum(comb(len(verts), i) for i in range(r))
    if cost > OCT_SUBSET_LIMIT:
        return False
    for size in range(r):
        for xs in combinations(verts, size):
            m = avail
            for x in xs:
                m &= ~(1 << x)
            if is_bipartite_on(rows, m):
                return True
    return False


def _cycles_through(rows, a, avail, m):
    """Yield C_m vertex sequences starting at ``a`` inside ``avail`` (a included)."""
    path = [a]

    def rec(cur, free):
        if len(path) == m:
            if rows[cur] >> a & 1 and path[1] < cur:
                yield list(path)
            return
        for w in _bits(rows[cur] & free):
            path.append(w)
            yield from rec(w, free & ~(1 << w))
            path.pop()

    yield from rec(a, avail & ~(1 << a))


def find_packing(n, rows, copies, m):
    """Return ``copies`` vertex-disjoint C_m vertex sequences, or None."""
    if copies <= 0:
        return []
    full = (1 << n) - 1
    failed = set()
    chosen = []

    def rec(avail, r):
        if r == 0:
            return True
        avail = _two_core(rows, avail)
        if avail.bit_count() < m * r:
            return False
        state = (avail, r)
        if state in failed:
            return False
        if m % 2 == 1 and _oct_bound_fails(rows, avail, r):
            failed.add(state)
            return False
        a = (avail & -avail).bit_length() - 1
        for cyc in _cycles_through(rows, a, avail, m):
            used = 0
            for x in cyc:
                used |= 1 << x
            chosen.append(cyc)
            if rec(avail & ~used, r - 1):
                return True
            chosen.pop()
        if rec(avail & ~(1 << a), r):
            return True
        failed.add(state)
        return False

    if rec(full, copies):
        return [list(c) for c in chosen]
    return None


def has_path(n, rows, k):
    """True iff the graph contains a path on ``k`` vertices."""
    if k <= 0:
        return True
    if k > n:
        return False
    if k == 1:
        return n >= 1

    def rec(cur, free, depth):
        if depth == k:
            return True
        for w in _bits(rows[cur] & free):
            if rec(w, free & ~(1 << w), depth + 1):
                return True
        return False

    full = (1 << n) - 1
    for s in range(n):
        if rec(s, full & ~(1 << s), 1):
            return True
    return False


def max_cut(n, rows):
    """Exact maximum cut by Gray-code sweep over all bipartitions."""
    if n <= 1:
        return 0
    full = (1 << n) - 1
    side = 0  # vertices on side 1; vertex n-1 stays on side 0
    cut = best = 0
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        adj = rows[v]
        if side & bit:
            same = side & ~bit
            other = full & ~side
        else:
            same = full & ~side & ~bit
            other = side
        cut += (adj & same).bit_count() - (adj & other).bit_count()
        side ^= bit
        if cut > best:
            best = cut
    return best


# ---------------------------------------------------------------------------
# canonical augmentation step
# ---------------------------------------------------------------------------

def _is_free(n, rows, fkind, fa, fb):
    if fkind == FILTER_FAMILY:
        return find_packing(n, rows, fa, fb) is None
    if fkind == FILTER_PATH:
        return not has_path(n, rows, fa)
    return True


def _last_edge(key):
    for p in range(len(key) - 1, -1, -1):
        upper = key[p] >> (p + 1)
        if upper:
            return p, upper.bit_length() + p
    return None


def _edge_orbit(m_edge, gens):
    orbit = {m_edge}
    stack = [m_edge]
    while stack:
        i, j = stack.pop()
        for g in gens:
            a, b = g[i], g[j]
            e = (a, b) if a < b else (b, a)
            if e not in orbit:
                orbit.add(e)
                stack.append(e)
    return orbit


def augment(n, rows, fkind, fa, fb, max_edges):
    """Canonical children of ``rows`` obtained by adding one edge.

    Returns the canonical key of every child whose added edge lies in the
    automorphism orbit of its canonical deletion edge.  One representative
    per orbit of non-edges is tried, so each isomorphism class of child is
    produced exactly once over a complete set of parents.
    """
    rows = list(rows)
    edges = sum(r.bit_count() for r in rows) // 2
    if max_edges >= 0 and edges >= max_edges:
        return []
    _, _, gens = canonical_labeling(n, rows)
    index = {}
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if not rows[i] >> j & 1:
                index[(i, j)] = len(pairs)
                pairs.append((i, j))
    parent = list(range(len(pairs)))
    for g in gens:
        for t, (i, j) in enumerate(pairs):
            a, b = g[i], g[j]
            s = index[(a, b) if a < b else (b, a)]
            x, y = _find(parent, t), _find(parent, s)
            if x != y:
                parent[max(x, y)] = min(x, y)
    children = []
    for t, (i, j) in enumerate(pairs):
        if _find(parent, t) != t:
            continue
        crows = list(rows)
        crows[i] |= 1 << j
        crows[j] |= 1 << i
        if fkind and not _is_free(n, crows, fkind, fa, fb):
            continue
        clab, ckey, cgens = canonical_labeling(n, crows)
        p, q = _last_edge(ckey)
        a, b = clab[p], clab[q]
        m_edge = (a, b) if a < b else (b, a)
        if m_edge == (i, j) or (i, j) in _edge_orbit(m_edge, cgens):
            children.append(ckey)
    return children
