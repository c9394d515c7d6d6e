# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in replacement for ``turanlab._pykernels``."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

NAME = "cython"

FILTER_NONE = 0
FILTER_FAMILY = 1
FILTER_PATH = 2

OCT_SUBSET_LIMIT = 4096

ctypedef unsigned long long u64

cdef enum:
    MAXN = 64
    F_FAMILY = 1
    F_PATH = 2
    OCT_LIMIT = 4096


cdef extern from *:
    int popcount "__builtin_popcountll"(u64) nogil
    int ctz "__builtin_ctzll"(u64) nogil
    int clz "__builtin_clzll"(u64) nogil


cdef inline u64 bit(int v) nogil:
    return (<u64>1) << v


cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return bit(n) - 1


cdef int load_rows(object rows, int n, u64 *out) except -1:
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError("vertex count out of range")
    for i in range(n):
        out[i] = <u64>rows[i]
    return 0


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------

cdef struct Canon:
    int n
    u64 rows[MAXN]
    int have_first
    u64 first_key[MAXN]
    int first_lab[MAXN]
    u64 best_key[MAXN]
    int best_lab[MAXN]
    int *gens
    int ngens
    int capgens
    int failed


cdef int key_cmp(const u64 *a, const u64 *b, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef int vec_cmp(const unsigned char *a, const unsigned char *b, int len) nogil:
    cdef int i
    for i in range(len):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef int refine(Canon *st, int *lab, int *cs, int ncells) nogil:
    """Refine the ordered partition (lab, cell starts cs) in place; returns ncells."""
    cdef u64 masks[MAXN]
    cdef unsigned char keys[MAXN][MAXN]
    cdef int newlab[MAXN]
    cdef int newcs[MAXN + 1]
    cdef int n = st.n
    cdef int c, i, j, v, a, b, size, start, nnew, pos
    while True:
        for c in range(ncells):
            masks[c] = 0
            for i in range(cs[c], cs[c + 1]):
                masks[c] |= bit(lab[i])
        nnew = 0
        pos = 0
        for c in range(ncells):
            start = cs[c]
            size = cs[c + 1] - start
            if size == 1:
                newcs[nnew] = pos
                nnew += 1
                newlab[pos] = lab[start]
                pos += 1
                continue
            for i in range(size):
                v = lab[start + i]
                for j in range(ncells):
                    keys[v][j] = <unsigned char>popcount(st.rows[v] & masks[j])
                newlab[pos + i] = v
            # stable insertion sort by key vector
            for i in range(1, size):
                v = newlab[pos + i]
                a = i - 1
                while a >= 0 and vec_cmp(keys[newlab[pos + a]], keys[v], ncells) > 0:
                    newlab[pos + a + 1] = newlab[pos + a]
                    a -= 1
                newlab[pos + a + 1] = v
            newcs[nnew] = pos
            nnew += 1
            for i in range(1, size):
                if vec_cmp(keys[newlab[pos + i - 1]], keys[newlab[pos + i]], ncells) != 0:
                    newcs[nnew] = pos + i
                    nnew += 1
            pos += size
        newcs[nnew] = n
        memcpy(lab, newlab, n * sizeof(int))
        memcpy(cs, newcs, (nnew + 1) * sizeof(int))
        if nnew == ncells:
            return nnew
        ncells = nnew


cdef int add_gen(Canon *st, const int *from_lab, const int *to_lab) nogil:
    cdef int i, n = st.n
    cdef int *g
    if st.ngens == st.capgens:
        st.capgens = st.capgens * 2 if st.capgens else 16
        g = <int *>realloc(st.gens, st.capgens * n * sizeof(int))
        if g == NULL:
            st.failed = 1
            return -1
        st.gens = g
    g = st.gens + st.ngens * n
    for i in range(n):
        g[from_lab[i]] = to_lab[i]
    st.ngens += 1
    return 0


cdef void leaf(Canon *st, const int *lab) nogil:
    cdef int n = st.n
    cdef int pos[MAXN]
    cdef u64 key[MAXN]
    cdef int p, u, cmp
    cdef u64 r, nr
    for p in range(n):
        pos[lab[p]] = p
    for p in range(n):
        r = st.rows[lab[p]]
        nr = 0
        while r:
            u = ctz(r)
            r &= r - 1
            nr |= bit(pos[u])
        key[p] = nr
    if not st.have_first:
        st.have_first = 1
        memcpy(st.first_key, key, n * sizeof(u64))
        memcpy(st.best_key, key, n * sizeof(u64))
        memcpy(st.first_lab, lab, n * sizeof(int))
        memcpy(st.best_lab, lab, n * sizeof(int))
        return
    if key_cmp(key, st.first_key, n) == 0:
        add_gen(st, st.first_lab, lab)
        return
    cmp = key_cmp(key, st.best_key, n)
    if cmp == 0:
        add_gen(st, st.best_lab, lab)
    elif cmp < 0:
        memcpy(st.best_key, key, n * sizeof(u64))
        memcpy(st.best_lab, lab, n * sizeof(int))


cdef inline int uf_find(int *parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int pruned(Canon *st, int v, const int *tried, int ntried, const int *seq, int depth) nogil:
    cdef int parent[MAXN]
    cdef int n = st.n
    cdef int gi, s, x, a, b, ok
    cdef int *g
    for x in range(n):
        parent[x] = x
    for gi in range(st.ngens):
        g = st.gens + gi * n
        ok = 1
        for s in range(depth):
            if g[seq[s]] != seq[s]:
                ok = 0
                break
        if not ok:
            continue
        for x in range(n):
            a = uf_find(parent, x)
            b = uf_find(parent, g[x])
            if a != b:
                parent[a] = b
    a = uf_find(parent, v)
    for s in range(ntried):
        if uf_find(parent, tried[s]) == a:
            return 1
    return 0


cdef void search(Canon *st, const int *lab_in, const int *cs_in, int ncells, int *seq, int depth) nogil:
    cdef int lab[MAXN]
    cdef int cs[MAXN + 1]
    cdef int clab[MAXN]
    cdef int ccs[MAXN + 1]
    cdef int target[MAXN]
    cdef int tried[MAXN]
    cdef int n = st.n
    cdef int idx, i, j, v, size, start, ntried, k
    memcpy(lab, lab_in, n * sizeof(int))
    memcpy(cs, cs_in, (ncells + 1) * sizeof(int))
    ncells = refine(st, lab, cs, ncells)
    idx = -1
    for i in range(ncells):
        if cs[i + 1] - cs[i] > 1:
            idx = i
            break
    if idx < 0:
        leaf(st, lab)
        return
    start = cs[idx]
    size = cs[idx + 1] - start
    for i in range(size):
        target[i] = lab[start + i]
    # children in ascending vertex order
    for i in range(1, size):
        v = target[i]
        j = i - 1
        while j >= 0 and target[j] > v:
            target[j + 1] = target[j]
            j -= 1
        target[j + 1] = v
    ntried = 0
    for i in range(size):
        if st.failed:
            return
        v = target[i]
        if ntried and pruned(st, v, tried, ntried, seq, depth):
            continue
        tried[ntried] = v
        ntried += 1
        # split target cell into [v] + rest (rest keeps its order)
        memcpy(clab, lab, n * sizeof(int))
        clab[start] = v
        k = start + 1
        for j in range(start, start + size):
            if lab[j] != v:
                clab[k] = lab[j]
                k += 1
        for j in range(idx + 1):
            ccs[j] = cs[j]
        ccs[idx + 1] = start + 1
        for j in range(idx + 1, ncells + 1):
            ccs[j + 1] = cs[j]
        seq[depth] = v
        search(st, clab, ccs, ncells + 1, seq, depth + 1)


cdef int run_canon(Canon *st) nogil:
    cdef int lab[MAXN]
    cdef int cs[2]
    cdef int seq[MAXN]
    cdef int i
    st.have_first = 0
    st.ngens = 0
    st.failed = 0
    for i in range(st.n):
        lab[i] = i
    cs[0] = 0
    cs[1] = st.n
    search(st, lab, cs, 1, seq, 0)
    return -1 if st.failed else 0


cdef object canon_result(Canon *st):
    cdef int n = st.n
    cdef int i, gi
    lab = [st.best_lab[i] for i in range(n)]
    key = tuple([st.best_key[i] for i in range(n)])
    gens = []
    for gi in range(st.ngens):
        gens.append([st.gens[gi * n + i] for i in range(n)])
    return lab, key, gens


def canonical_labeling(int n, rows):
    """Return ``(lab, key, gens)``; see ``_pykernels.canonical_labeling``."""
    cdef Canon st
    if n == 0:
        return [], (), []
    st.n = n
    st.gens = NULL
    st.capgens = 0
    load_rows(rows, n, st.rows)
    try:
        with nogil:
            run_canon(&st)
        if st.failed:
            raise MemoryError()
        return canon_result(&st)
    finally:
        free(st.gens)


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def count_triangles(int n, rows):
    cdef u64 r[MAXN]
    cdef u64 higher, x
    cdef long long total = 0
    cdef int v, u
    load_rows(rows, n, r)
    for v in range(n):
        higher = r[v] & ~full_mask(v + 1)
        x = higher
        while x:
            u = ctz(x)
            x &= x - 1
            total += popcount(r[u] & higher)
    return total // 2


cdef long long count_from(const u64 *r, int start, int cur, u64 avail, int depth, int m, int second) nogil:
    cdef long long total = 0
    cdef u64 x
    cdef int w
    if depth == m:
        return 1 if ((r[cur] >> start) & 1) and cur > second else 0
    x = r[cur] & avail
    while x:
        w = ctz(x)
        x &= x - 1
        total += count_from(r, start, w, avail & ~bit(w), depth + 1, m, second)
    return total


def count_cycles(int n, rows, int m):
    cdef u64 r[MAXN]
    cdef long long total = 0
    cdef u64 avail, x
    cdef int a, w
    load_rows(rows, n, r)
    with nogil:
        for a in range(n):
            avail = full_mask(n) & ~full_mask(a + 1)
            x = r[a] & avail
            while x:
                w = ctz(x)
                x &= x - 1
                total += count_from(r, a, w, avail & ~bit(w), 2, m, w)
    return total


# ---------------------------------------------------------------------------
# containment and packing
# ---------------------------------------------------------------------------

cdef int bipartite_on(const u64 *r, u64 mask) nogil:
    cdef u64 rem = mask
    cdef u64 sides[2]
    cdef u64 frontier, visited, nb, new, x
    cdef int side, v
    while rem:
        v = ctz(rem)
        sides[0] = bit(v)
        sides[1] = 0
        side = 0
        frontier = bit(v)
        visited = frontier
        while frontier:
            nb = 0
            x = frontier
            while x:
                nb |= r[ctz(x)]
                x &= x - 1
            nb &= mask
            if nb & sides[side]:
                return 0
            new = nb & ~visited
            sides[side ^ 1] |= new
            visited |= new
            frontier = new
            side ^= 1
        rem &= ~visited
    return 1


def is_bipartite_on(rows, mask):
    cdef u64 r[MAXN]
    n = len(rows)
    load_rows(rows, n, r)
    return bool(bipartite_on(r, <u64>mask))


cdef u64 two_core(const u64 *r, u64 mask) nogil:
    cdef int changed = 1
    cdef u64 x
    cdef int v
    while changed:
        changed = 0
        x = mask
        while x:
            v = ctz(x)
            x &= x - 1
            if popcount(r[v] & mask) < 2:
                mask &= ~bit(v)
                changed = 1
    return mask


cdef long long comb(int a, int b) nogil:
    cdef long long out = 1
    cdef int i
    if b < 0 or b > a:
        return 0
    for i in range(b):
        out = out * (a - i) // (i + 1)
    return out


cdef int oct_subsets(const u64 *r, u64 avail, const int *verts, int nv, int start, int left) nogil:
    """True if deleting at most ``left`` of verts[start:] leaves avail bipartite."""
    cdef int i
    if bipartite_on(r, avail):
        return 1
    if left == 0:
        return 0
    for i in range(start, nv):
        if oct_subsets(r, avail & ~bit(verts[i]), verts, nv, i + 1, left - 1):
            return 1
    return 0


cdef int oct_bound_fails(const u64 *r, u64 avail, int need) nogil:
    cdef int verts[MAXN]
    cdef int nv = 0
    cdef long long cost = 0
    cdef int i
    cdef u64 x = avail
    while x:
        verts[nv] = ctz(x)
        nv += 1
        x &= x - 1
    for i in range(need):
        cost += comb(nv, i)
    if cost > OCT_LIMIT:
        return 0
    return oct_subsets(r, avail, verts, nv, 0, need - 1)


cdef class _Packer:
    cdef u64 r[MAXN]
    cdef int n, m
    cdef int path[MAXN]
    cdef int chosen[MAXN]
    cdef int nchosen
    cdef set failed

    cdef int rec(self, u64 avail, int left) except -1:
        cdef int a
        if left == 0:
            return 1
        avail = two_core(self.r, avail)
        if popcount(avail) < self.m * left:
            return 0
        state = (avail, left)
        if state in self.failed:
            return 0
        if self.m % 2 == 1 and oct_bound_fails(self.r, avail, left):
            self.failed.add(state)
            return 0
        a = ctz(avail)
        self.path[0] = a
        if self.cycles(a, a, avail & ~bit(a), 1, avail, left):
            return 1
        if self.rec(avail & ~bit(a), left):
            return 1
        self.failed.add(state)
        return 0

    cdef int cycles(self, int a, int cur, u64 free, int depth, u64 avail, int left) except -1:
        cdef u64 x, used
        cdef int w, i
        if depth == self.m:
            if (self.r[cur] >> a) & 1 and self.path[1] < cur:
                used = 0
                for i in range(self.m):
                    used |= bit(self.path[i])
                    self.chosen[self.nchosen * self.m + i] = self.path[i]
                self.nchosen += 1
                if self.rec(avail & ~used, left - 1):
                    return 1
                self.nchosen -= 1
                # restore the shared path prefix clobbered by the recursion
                for i in range(self.m):
                    self.path[i] = self.chosen[self.nchosen * self.m + i]
            return 0
        x = self.r[cur] & free
        while x:
            w = ctz(x)
            x &= x - 1
            self.path[depth] = w
            if self.cycles(a, w, free & ~bit(w), depth + 1, avail, left):
                return 1
        return 0


def find_packing(int n, rows, int copies, int m):
    """Return ``copies`` vertex-disjoint C_m vertex sequences, or None."""
    cdef _Packer pk
    if copies <= 0:
        return []
    if copies * m > n:
        return None
    pk = _Packer()
    load_rows(rows, n, pk.r)
    pk.n = n
    pk.m = m
    pk.nchosen = 0
    pk.failed = set()
    if pk.rec(full_mask(n), copies):
        return [[pk.chosen[c * m + i] for i in range(m)] for c in range(copies)]
    return None


cdef int path_rec(const u64 *r, int cur, u64 free, int depth, int k) nogil:
    cdef u64 x
    cdef int w
    if depth == k:
        return 1
    x = r[cur] & free
    while x:
        w = ctz(x)
        x &= x - 1
        if path_rec(r, w, free & ~bit(w), depth + 1, k):
            return 1
    return 0


def has_path(int n, rows, int k):
    cdef u64 r[MAXN]
    cdef int s, found = 0
    if k <= 0:
        return True
    if k > n:
        return False
    load_rows(rows, n, r)
    with nogil:
        for s in range(n):
            if path_rec(r, s, full_mask(n) & ~bit(s), 1, k):
                found = 1
                break
    return bool(found)


def max_cut(int n, rows):
    cdef u64 r[MAXN]
    cdef u64 side = 0, full, b, adj, same, other
    cdef u64 i, limit
    cdef long long cut = 0, best = 0
    cdef int v
    if n <= 1:
        return 0
    load_rows(rows, n, r)
    full = full_mask(n)
    limit = (<u64>1) << (n - 1)
    with nogil:
        i = 1
        while i < limit:
            v = ctz(i)
            b = bit(v)
            adj = r[v]
            if side & b:
                same = side & ~b
                other = full & ~side
            else:
                same = full & ~side & ~b
                other = side
            cut += popcount(adj & same) - popcount(adj & other)
            side ^= b
            if cut > best:
                best = cut
            i += 1
    return best


# ---------------------------------------------------------------------------
# canonical augmentation step
# ---------------------------------------------------------------------------

cdef int is_free(u64 *r, int n, int fkind, int fa, int fb) except -1:
    cdef int s
    if fkind == F_FAMILY:
        return find_packing(n, [r[i] for i in range(n)], fa, fb) is None
    if fkind == F_PATH:
        if fa <= 0:
            return 0
        if fa > n:
            return 1
        for s in range(n):
            if path_rec(r, s, full_mask(n) & ~bit(s), 1, fa):
                return 0
        return 1
    return 1


cdef int edge_in_orbit(Canon *st, int mi, int mj, int ei, int ej):
    """Is edge (ei, ej) in the orbit of (mi, mj) under st's generators?"""
    cdef int n = st.n
    cdef unsigned char seen[MAXN * MAXN]
    cdef int stack[MAXN * MAXN]
    cdef int top = 0
    cdef int gi, i, j, a, b, t
    cdef int *g
    for t in range(n * n):
        seen[t] = 0
    seen[mi * n + mj] = 1
    stack[top] = mi * n + mj
    top += 1
    while top:
        top -= 1
        t = stack[top]
        i = t // n
        j = t % n
        if i == ei and j == ej:
            return 1
        for gi in range(st.ngens):
            g = st.gens + gi * n
            a = g[i]
            b = g[j]
            if a > b:
                a, b = b, a
            if not seen[a * n + b]:
                seen[a * n + b] = 1
                stack[top] = a * n + b
                top += 1
    return 0


def augment(int n, rows, int fkind, int fa, int fb, int max_edges):
    """Canonical children of ``rows``; see ``_pykernels.augment``."""
    cdef Canon st
    cdef Canon cst
    cdef int parent[MAXN * MAXN]
    cdef u64 crows[MAXN]
    cdef int i, j, t, s, a, b, gi, p, q, mi, mj, edges = 0
    cdef int *g
    cdef u64 upper
    st.gens = NULL
    st.capgens = 0
    cst.gens = NULL
    cst.capgens = 0
    st.n = n
    cst.n = n
    load_rows(rows, n, st.rows)
    for i in range(n):
        edges += popcount(st.rows[i])
    edges //= 2
    if max_edges >= 0 and edges >= max_edges:
        return []
    children = []
    try:
        if n > 0:
            with nogil:
                run_canon(&st)
            if st.failed:
                raise MemoryError()
        # orbits of non-edges under Aut(parent); root is the row-major first pair
        for t in range(n * n):
            parent[t] = t
        for gi in range(st.ngens):
            g = st.gens + gi * n
            for i in range(n):
                for j in range(i + 1, n):
                    if (st.rows[i] >> j) & 1:
                        continue
                    a = g[i]
                    b = g[j]
                    if a > b:
                        a, b = b, a
                    s = uf_find(parent, i * n + j)
                    t = uf_find(parent, a * n + b)
                    if s != t:
                        if s < t:
                            parent[t] = s
                        else:
                            parent[s] = t
        for i in range(n):
            for j in range(i + 1, n):
                if (st.rows[i] >> j) & 1:
                    continue
                if uf_find(parent, i * n + j) != i * n + j:
                    continue
                memcpy(crows, st.rows, n * sizeof(u64))
                crows[i] |= bit(j)
                crows[j] |= bit(i)
                if fkind and not is_free(crows, n, fkind, fa, fb):
                    continue
                memcpy(cst.rows, crows, n * sizeof(u64))
                with nogil:
                    run_canon(&cst)
                if cst.failed:
                    raise MemoryError()
                # canonical deletion edge: last edge in row-major order
                p = n - 1
                while p >= 0 and (cst.best_key[p] & ~full_mask(p + 1)) == 0:
                    p -= 1
                upper = cst.best_key[p] & ~full_mask(p + 1)
                q = 63 - clz(upper)
                mi = cst.best_lab[p]
                mj = cst.best_lab[q]
                if mi > mj:
                    mi, mj = mj, mi
                if (mi == i and mj == j) or edge_in_orbit(&cst, mi, mj, i, j):
                    children.append(tuple([cst.best_key[s] for s in range(n)]))
    finally:
        free(st.gens)
        free(cst.gens)
    return children
