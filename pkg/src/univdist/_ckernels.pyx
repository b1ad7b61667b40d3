# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels with the same interface as ``_pykernels``.

Infinity is a large sentinel internally; every addition goes through
``_add`` so it never moves, and it is mapped to ``math.inf`` on the way out.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc

import math

NAME = "cython"

cdef extern from *:
    """
    static inline int ud_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int ud_msb64(unsigned long long x) { return 63 - __builtin_clzll(x); }
    """
    int ud_ctz64(unsigned long long x) nogil
    int ud_msb64(unsigned long long x) nogil

cdef int64_t INF = (<int64_t>1) << 62
cdef uint64_t ONE = 1
cdef uint64_t ALL = ~(<uint64_t>0)


cdef inline int64_t _add(int64_t a, int64_t b) noexcept nogil:
    if a >= INF:
        return INF
    return a + b


cdef inline object _out(int64_t v):
    return math.inf if v >= INF else v


cdef void* _alloc(size_t nbytes) except NULL:
    cdef void* p = malloc(nbytes if nbytes else 1)
    if p == NULL:
        raise MemoryError()
    return p


cdef int* _letters(object w, int sigma, int* n_out) except NULL:
    cdef Py_ssize_t n = len(w)
    cdef int* W = <int*>_alloc((n + 2) * sizeof(int))
    cdef Py_ssize_t i
    cdef long a
    for i in range(n):
        a = w[i]
        if a < 1 or a > sigma:
            free(W)
            raise ValueError(f"letter {a} outside 1..{sigma}")
        W[i + 1] = <int>a
    n_out[0] = <int>n
    return W


# -- scan tables ----------------------------------------------------------------

cdef void _prefix(int* W, int n, int sigma, int* out, char* seen) noexcept nogil:
    cdef int i, c = 0
    for i in range(sigma + 1):
        seen[i] = 0
    for i in range(1, n + 1):
        if not seen[W[i]]:
            seen[W[i]] = 1
            c += 1
        out[i] = c


cdef void _window(int* W, int n, int sigma, int* out, int* cnt) noexcept nogil:
    # out[i] for i in sigma..n
    cdef int i, a, c = 0
    for i in range(sigma + 1):
        cnt[i] = 0
    for i in range(1, n + 1):
        a = W[i]
        if cnt[a] == 0:
            c += 1
        cnt[a] += 1
        if i > sigma:
            a = W[i - sigma]
            cnt[a] -= 1
            if cnt[a] == 0:
                c -= 1
        if i >= sigma:
            out[i] = c


cdef void _sampled(int* W, int n, int sigma, int* lastS, int* dS, int* last, int* nxt, int* prv) noexcept nogil:
    # rows of lastS/dS are indexed (sample, letter-1)
    cdef int p, a, pa, na, r, x, head = 0, row = 0
    cdef int absent = n + 1
    for a in range(sigma + 1):
        last[a] = absent
        nxt[a] = 0
        prv[a] = 0
    for p in range(1, n + 1):
        a = W[p]
        if last[a] != absent:
            if head != a:
                pa = prv[a]
                na = nxt[a]
                nxt[pa] = na
                if na:
                    prv[na] = pa
                nxt[a] = head
                prv[head] = a
                prv[a] = 0
                head = a
        else:
            nxt[a] = head
            if head:
                prv[head] = a
            prv[a] = 0
            head = a
        last[a] = p
        if (p - 1) % sigma == 0:
            for a in range(1, sigma + 1):
                lastS[row + a - 1] = last[a]
                dS[row + a - 1] = 0
            r = 1
            x = head
            while x:
                dS[row + x - 1] = r
                r += 1
                x = nxt[x]
            row += sigma


cdef void _deltables(int* W, int n, int sigma, int* univ, int* freq, int* T, int* laa, int* lp,
                     int* L, int* cnt) noexcept nogil:
    cdef int i, a, c, j, distinct = 0, p = 1
    cdef int absent = n + 1
    for a in range(sigma + 1):
        L[a] = absent
        cnt[a] = 0
    for i in range(1, n + 1):
        a = W[i]
        lp[i] = L[a]
        if L[a] == absent:
            distinct += 1
        L[a] = i
        cnt[a] += 1
        freq[i] = cnt[a]
        univ[i] = 0
        if distinct == sigma:
            while L[W[p]] != p:
                p += 1
            univ[i] = p
    # lastAtArch: advance a last-occurrence table to position univ[i]-1
    for a in range(sigma + 1):
        L[a] = absent
    c = 0
    for i in range(1, n + 1):
        j = univ[i]
        laa[i] = absent
        if j:
            while c < j - 1:
                c += 1
                L[W[c]] = c
            laa[i] = L[W[i]]
    _suffix_min(W, n, sigma, T, cnt)


cdef void _suffix_min(int* W, int n, int sigma, int* T, int* cnt) noexcept nogil:
    # T[i] = min letter count in W[i+1..n]; the minimum only grows, and a
    # letter leaves the minimum bucket at most once per unit of growth
    cdef int i, a, mn = 0, atmin = sigma
    for a in range(sigma + 1):
        cnt[a] = 0
    T[n] = 0
    for i in range(n, 0, -1):
        a = W[i]
        if cnt[a] == mn:
            atmin -= 1
        cnt[a] += 1
        if atmin == 0:
            mn += 1
            atmin = 0
            for a in range(1, sigma + 1):
                if cnt[a] == mn:
                    atmin += 1
        T[i - 1] = mn


def prefix_distinct(w, int sigma):
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    cdef int* out = <int*>_alloc((n + 1) * sizeof(int))
    cdef char* seen = <char*>_alloc(sigma + 1)
    _prefix(W, n, sigma, out, seen)
    res = [out[i] for i in range(1, n + 1)]
    free(W); free(out); free(seen)
    return res


def window_distinct(w, int sigma):
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    cdef int* out = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* cnt = <int*>_alloc((sigma + 1) * sizeof(int))
    _window(W, n, sigma, out, cnt)
    res = [out[i] for i in range(sigma, n + 1)]
    free(W); free(out); free(cnt)
    return res


def sampled_last_d(w, int sigma):
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    cdef int ns = (n - 1) // sigma + 1 if n else 0
    cdef int* lastS = <int*>_alloc(ns * sigma * sizeof(int))
    cdef int* dS = <int*>_alloc(ns * sigma * sizeof(int))
    cdef int* s1 = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int* s2 = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int* s3 = <int*>_alloc((sigma + 1) * sizeof(int))
    _sampled(W, n, sigma, lastS, dS, s1, s2, s3)
    samples = [j * sigma + 1 for j in range(ns)]
    lasts = [[lastS[j * sigma + a] for a in range(sigma)] for j in range(ns)]
    ds = [[dS[j * sigma + a] for a in range(sigma)] for j in range(ns)]
    free(W); free(lastS); free(dS); free(s1); free(s2); free(s3)
    return samples, lasts, ds


def deletion_tables(w, int sigma):
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    cdef int* univ = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* freq = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* T = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* laa = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* lp = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* L = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int* cnt = <int*>_alloc((sigma + 1) * sizeof(int))
    _deltables(W, n, sigma, univ, freq, T, laa, lp, L, cnt)
    u = [univ[i] for i in range(1, n + 1)]
    arches = []
    cdef int i = 0, e, j
    while i < n:
        j = u[i]
        e = i
        while e + 1 < n and u[e + 1] == j:
            e += 1
        if j:
            arches.append((j, i + 1, e + 1))
        i = e + 1
    res = (u, arches, [freq[i] for i in range(1, n + 1)], [T[i] for i in range(n + 1)],
           [laa[i] for i in range(1, n + 1)], [lp[i] for i in range(1, n + 1)])
    free(W); free(univ); free(freq); free(T); free(laa); free(lp); free(L); free(cnt)
    return res


# -- min-suffix list over an interval union-find ------------------------------------

cdef struct Msl:
    int cap
    int nw
    uint64_t* mask
    int* up
    int* start
    int64_t* sat
    int* spos
    int m
    int64_t last
    int64_t fin


cdef int msl_alloc(Msl* s, int cap) except -1:
    s.cap = cap
    s.nw = ((cap + 1) >> 6) + 1
    s.mask = <uint64_t*>_alloc(s.nw * sizeof(uint64_t))
    s.up = <int*>_alloc((s.nw + 1) * sizeof(int))
    s.start = <int*>_alloc((cap + 2) * sizeof(int))
    s.sat = <int64_t*>_alloc((cap + 2) * sizeof(int64_t))
    s.spos = <int*>_alloc((cap + 1) * sizeof(int))
    return 0


cdef void msl_free(Msl* s) noexcept:
    free(s.mask); free(s.up); free(s.start); free(s.sat); free(s.spos)


cdef inline int _next_word(Msl* s, int i) noexcept nogil:
    cdef int* up = s.up
    while up[i] != i:
        up[i] = up[up[i]]
        i = up[i]
    return i


cdef inline int _border_from(Msl* s, int u) noexcept nogil:
    cdef int i = u >> 6
    cdef uint64_t m = s.mask[i] & (ALL << (u & 63))
    if m == 0:
        i = _next_word(s, i + 1)
        m = s.mask[i]
    return (i << 6) + ud_ctz64(m)


cdef inline void _union(Msl* s, int u) noexcept nogil:
    cdef int i = u >> 6
    s.mask[i] &= ~(ONE << (u & 63))
    if s.mask[i] == 0:
        s.up[i] = i + 1
    s.start[_border_from(s, u + 1)] = s.start[u]


cdef inline void _setbit(Msl* s, int b) noexcept nogil:
    s.mask[b >> 6] |= ONE << (b & 63)


cdef void msl_init(Msl* s, int64_t* vals, int* sats, int s0) noexcept nogil:
    # vals[1..s0] and sats[1..s0]; cap must be >= s0
    cdef int i, t, b, st = 1
    cdef int64_t cur, prev = 0
    for i in range(s.nw):
        s.mask[i] = 0
    for i in range(s.nw + 1):
        s.up[i] = i
    _setbit(s, s0)
    cur = vals[s0]
    for t in range(s0 - 1, 0, -1):
        if vals[t] < cur:
            cur = vals[t]
            _setbit(s, t)
    s.fin = 0
    for b in range(1, s0 + 1):
        if (s.mask[b >> 6] >> (b & 63)) & ONE:
            s.start[b] = st
            st = b + 1
            if vals[b] >= INF:
                s.sat[b] = INF
                s.fin = prev
            else:
                s.sat[b] = vals[b] - prev
                prev = vals[b]
        s.spos[b] = sats[b]
    for b in range(s0 + 1, s.cap + 2):
        _setbit(s, b)
        s.start[b] = b
        s.sat[b] = 0
    for i in range(s.nw):
        if s.mask[i] == 0:
            s.up[i] = i + 1
    s.m = s0
    s.last = vals[s0]


cdef inline void msl_decrement(Msl* s, int j) noexcept nogil:
    cdef int b = _border_from(s, j)
    cdef int x = s.start[b]
    cdef int64_t d = s.sat[b]
    if d >= INF:
        return
    if s.last >= INF:
        s.fin -= 1
    else:
        s.last -= 1
    d -= 1
    if x > 1 and d == 0:
        s.sat[b] = s.sat[x - 1]
        _union(s, x - 1)
    else:
        s.sat[b] = d


cdef inline void msl_append(Msl* s, int64_t x, int sat) noexcept nogil:
    cdef int t = s.m, z
    cdef int64_t q = s.last, d
    if x > INF:
        x = INF
    while t >= 1 and q >= x:
        z = s.start[t]
        d = s.sat[t]
        _union(s, t)
        q = s.fin if d >= INF else q - d
        t = z - 1
    if t < 1:
        q = 0
    s.m += 1
    if x >= INF:
        s.sat[s.m] = INF
        s.fin = q
    else:
        s.sat[s.m] = x - q
    s.spos[s.m] = sat
    s.last = x


def _msl_trace(initial, ops):
    """Run a min-suffix-list op sequence; returns the ``min`` results (testing aid)."""
    cdef int s0 = len(initial), i, b
    cdef Msl s
    cdef int64_t* vals = <int64_t*>_alloc((s0 + 1) * sizeof(int64_t))
    cdef int* sats = <int*>_alloc((s0 + 1) * sizeof(int))
    msl_alloc(&s, 2 * s0)
    for i in range(s0):
        v = initial[i]
        vals[i + 1] = INF if v == math.inf else v
        sats[i + 1] = i + 1
    msl_init(&s, vals, sats, s0)
    out = []
    try:
        for op in ops:
            if op[0] == "dec":
                if not 1 <= op[1] <= s.m:
                    raise ValueError("position out of range")
                msl_decrement(&s, op[1])
            elif op[0] == "app":
                if s.m >= s.cap:
                    raise ValueError("capacity exceeded")
                v = op[1]
                msl_append(&s, INF if v == math.inf else v, s.m + 1)
            else:
                b = _border_from(&s, 1)
                out.append((b, _out(s.sat[b])))
    finally:
        msl_free(&s)
        free(vals)
        free(sats)
    return out


# -- range minimum ------------------------------------------------------------------

cdef struct Rmq:
    int n
    int nb
    int levels
    int64_t* a
    uint64_t* mask
    int* table


cdef int rmq_alloc(Rmq* r, int n) except -1:
    r.n = n
    r.nb = (n + 63) >> 6
    r.levels = 1
    while (1 << r.levels) <= r.nb:
        r.levels += 1
    r.mask = <uint64_t*>_alloc(n * sizeof(uint64_t))
    r.table = <int*>_alloc(r.levels * r.nb * sizeof(int))
    return 0


cdef void rmq_free(Rmq* r) noexcept:
    free(r.mask)
    free(r.table)


cdef inline int _inblock(Rmq* r, int lo, int hi) noexcept nogil:
    cdef int bs = lo & ~63
    return lo + ud_ctz64(r.mask[hi] >> (lo - bs))


cdef void rmq_build(Rmq* r, int64_t* a) noexcept nogil:
    # a is 0-based with r.n entries
    cdef int n = r.n, nb = r.nb, bs, i, top, lev, b, span, x, y, hi
    cdef uint64_t cur
    cdef int64_t v
    r.a = a
    bs = 0
    while bs < n:
        cur = 0
        hi = bs + 64 if bs + 64 < n else n
        for i in range(bs, hi):
            v = a[i]
            while cur:
                top = ud_msb64(cur)
                if a[bs + top] > v:
                    cur ^= ONE << top
                else:
                    break
            cur |= ONE << (i - bs)
            r.mask[i] = cur
        r.table[bs >> 6] = _inblock(r, bs, hi - 1)
        bs += 64
    for lev in range(1, r.levels):
        span = 1 << (lev - 1)
        for b in range(nb - (1 << lev) + 1):
            x = r.table[(lev - 1) * nb + b]
            y = r.table[(lev - 1) * nb + b + span]
            r.table[lev * nb + b] = y if a[y] < a[x] else x


cdef inline int rmq_query(Rmq* r, int i, int j) noexcept nogil:
    # 1-based inclusive, leftmost minimum
    cdef int lo = i - 1, hi = j - 1
    cdef int bl = lo >> 6, bh = hi >> 6, best, lev, p, q, mid, rr, x, y, cnt
    cdef int64_t* a = r.a
    if bl == bh:
        return _inblock(r, lo, hi) + 1
    best = _inblock(r, lo, (bl << 6) + 63)
    if bh - bl > 1:
        x = bl + 1
        y = bh - 1
        cnt = y - x + 1
        lev = ud_msb64(<uint64_t>cnt)
        p = r.table[lev * r.nb + x]
        q = r.table[lev * r.nb + y - (1 << lev) + 1]
        mid = q if a[q] < a[p] else p
        if a[mid] < a[best]:
            best = mid
    rr = _inblock(r, bh << 6, hi)
    if a[rr] < a[best]:
        best = rr
    return best + 1


def _rmq_queries(values, queries):
    """Answer (i, j) queries on ``values`` (testing aid)."""
    cdef int n = len(values), i
    cdef Rmq r
    cdef int64_t* a = <int64_t*>_alloc(n * sizeof(int64_t))
    for i in range(n):
        v = values[i]
        a[i] = INF if v == math.inf else v
    rmq_alloc(&r, n)
    rmq_build(&r, a)
    try:
        out = []
        for lo, hi in queries:
            if not 1 <= lo <= hi <= n:
                raise ValueError("bad range")
            out.append(rmq_query(&r, lo, hi))
    finally:
        rmq_free(&r)
        free(a)
    return out


# -- dynamic programs -----------------------------------------------------------------

def insert_dp(w, int sigma, long k, int split=0, bint keep_sol=False, bint check=False):
    if keep_sol:
        raise NotImplementedError("full matrices are kept by the Python kernels only")
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    if n == 0:
        free(W)
        return [t * sigma for t in range(k + 1)], (0 if split else -1), None
    cdef bint track = 1 <= split < k
    cdef int i, a, ell, ph, p, base, slot, da, ns, s
    cdef long t
    cdef int64_t q, alt
    cdef int64_t* prev = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int64_t* cur = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int64_t* tmp
    cdef int* itmp
    cdef int* d1 = <int*>_alloc((n + 1) * sizeof(int))
    cdef char* seen = <char*>_alloc(sigma + 1)
    cdef int* arg = NULL
    cdef int* hprev = NULL
    cdef int* hcur = NULL
    cdef int* lastS = NULL
    cdef int* dS = NULL
    cdef int64_t* init = NULL
    cdef int* sats = NULL
    cdef int* pos = NULL
    cdef int* s1 = NULL
    cdef int* s2 = NULL
    cdef int* s3 = NULL
    cdef Msl msl
    cdef bint have_msl = False
    profile = [0] * (k + 1)
    split_end = -1
    try:
        _prefix(W, n, sigma, d1, seen)
        prev[0] = sigma
        for ell in range(1, n + 1):
            prev[ell] = sigma - d1[ell]
        if k >= 1:
            profile[1] = prev[n]
        if k < 2:
            return profile, -1, None
        if track:
            arg = <int*>_alloc((n + 1) * sizeof(int))
            hprev = <int*>_alloc((n + 1) * sizeof(int))
            hcur = <int*>_alloc((n + 1) * sizeof(int))
            for ell in range(n + 1):
                hprev[ell] = ell
                arg[ell] = 0
        ns = (n - 1) // sigma + 1
        lastS = <int*>_alloc(ns * sigma * sizeof(int))
        dS = <int*>_alloc(ns * sigma * sizeof(int))
        s1 = <int*>_alloc((sigma + 1) * sizeof(int))
        s2 = <int*>_alloc((sigma + 1) * sizeof(int))
        s3 = <int*>_alloc((sigma + 1) * sizeof(int))
        _sampled(W, n, sigma, lastS, dS, s1, s2, s3)
        init = <int64_t*>_alloc((sigma + 1) * sizeof(int64_t))
        sats = <int*>_alloc((sigma + 1) * sizeof(int))
        pos = <int*>_alloc((sigma + 1) * sizeof(int))
        msl_alloc(&msl, 2 * sigma)
        have_msl = True
        for t in range(2, k + 1):
            with nogil:
                cur[0] = t * sigma
                for ph in range(ns):
                    p = ph * sigma + 1
                    base = ph * sigma
                    for i in range(1, sigma + 1):
                        init[i] = INF
                        sats[i] = 0
                        pos[i] = 0
                    for a in range(1, sigma + 1):
                        da = dS[base + a - 1]
                        if da:
                            slot = sigma - da + 1
                            init[slot] = prev[lastS[base + a - 1] - 1] + sigma - da
                            sats[slot] = lastS[base + a - 1]
                            pos[a] = slot
                    msl_init(&msl, init, sats, sigma)
                    for i in range(1, sigma + 1):
                        ell = p + i - 1
                        if ell > n:
                            break
                        s = _border_from(&msl, 1)
                        q = msl.sat[s]
                        alt = prev[ell] + sigma
                        if q <= alt:
                            cur[ell] = q
                            if track:
                                arg[ell] = msl.spos[s] - 1
                        else:
                            cur[ell] = alt
                            if track:
                                arg[ell] = ell
                        if i == sigma or ell == n:
                            break
                        a = W[ell + 1]
                        if pos[a] < msl.m:
                            msl_decrement(&msl, pos[a] + 1)
                        msl_append(&msl, prev[ell] + sigma - 1, ell + 1)
                        pos[a] = msl.m
                if track and t >= split:
                    if t == split:
                        for ell in range(n + 1):
                            hcur[ell] = ell
                    else:
                        for ell in range(n + 1):
                            hcur[ell] = hprev[arg[ell]]
                    itmp = hprev
                    hprev = hcur
                    hcur = itmp
            if check:
                for ell in range(1, n + 1):
                    assert cur[ell] <= cur[ell - 1], "insertion column not monotone"
            profile[t] = cur[n]
            tmp = prev
            prev = cur
            cur = tmp
        if track:
            split_end = hprev[n]
        return profile, split_end, None
    finally:
        if have_msl:
            msl_free(&msl)
        free(W); free(prev); free(cur); free(d1); free(seen)
        free(arg); free(hprev); free(hcur); free(lastS); free(dS)
        free(init); free(sats); free(pos); free(s1); free(s2); free(s3)


def subst_dp(w, int sigma, long k, int split=0, bint keep_sol=False):
    if keep_sol:
        raise NotImplementedError("full matrices are kept by the Python kernels only")
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    cdef bint track = 1 <= split < k
    cdef int i, a, ell, ph, p, base, slot, ns, s, la, b, s0, s_new
    cdef long t
    cdef int64_t q, v
    cdef int64_t* prev = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int64_t* cur = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int64_t* tmp
    cdef int* itmp
    cdef int* d1 = <int*>_alloc((n + 1) * sizeof(int))
    cdef char* seen = <char*>_alloc(sigma + 1)
    cdef int* win = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* lp = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* arg = NULL
    cdef int* hprev = NULL
    cdef int* hcur = NULL
    cdef int* lastS = NULL
    cdef int* dS = NULL
    cdef int64_t* init = NULL
    cdef int* sats = NULL
    cdef int* s1 = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int* s2 = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int* s3 = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef Msl msl
    cdef bint have_msl = False
    profile = [0] * (k + 1)
    split_end = -1
    try:
        _prefix(W, n, sigma, d1, seen)
        for ell in range(n + 1):
            prev[ell] = INF
        for ell in range(sigma, n + 1):
            prev[ell] = sigma - d1[ell]
        if k >= 1:
            profile[1] = _out(prev[n])
        if k < 2:
            return profile, -1, None
        _window(W, n, sigma, win, s1)
        for a in range(sigma + 1):
            s1[a] = n + 1
        for i in range(1, n + 1):
            lp[i] = s1[W[i]]
            s1[W[i]] = i
        if track:
            arg = <int*>_alloc((n + 1) * sizeof(int))
            hprev = <int*>_alloc((n + 1) * sizeof(int))
            hcur = <int*>_alloc((n + 1) * sizeof(int))
            for ell in range(n + 1):
                hprev[ell] = ell
                arg[ell] = 0
        ns = (n - 1) // sigma + 1 if n else 0
        lastS = <int*>_alloc(ns * sigma * sizeof(int))
        dS = <int*>_alloc(ns * sigma * sizeof(int))
        _sampled(W, n, sigma, lastS, dS, s1, s2, s3)
        init = <int64_t*>_alloc((sigma + 1) * sizeof(int64_t))
        sats = <int*>_alloc((sigma + 1) * sizeof(int))
        msl_alloc(&msl, 2 * sigma)
        have_msl = True
        for t in range(2, k + 1):
            with nogil:
                cur[0] = INF
                for ph in range(ns):
                    p = ph * sigma + 1
                    base = ph * sigma
                    for i in range(1, sigma + 1):
                        init[i] = INF
                        sats[i] = 0
                    for a in range(1, sigma + 1):
                        la = lastS[base + a - 1]
                        if la <= p - sigma:
                            slot = sigma - dS[base + a - 1] + 1
                            init[slot] = _add(prev[la - 1], sigma - dS[base + a - 1])
                            sats[slot] = la
                    s0 = p - sigma + 1
                    if s0 >= 1:
                        init[sigma] = _add(prev[s0 - 1], sigma - win[p])
                        sats[sigma] = s0
                    msl_init(&msl, init, sats, sigma)
                    for i in range(1, sigma + 1):
                        ell = p + i - 1
                        if ell > n:
                            break
                        s = _border_from(&msl, 1)
                        q = msl.sat[s]
                        cur[ell] = q
                        if track:
                            arg[ell] = msl.spos[s] - 1 if q < INF else 0
                        if i == sigma or ell == n:
                            break
                        a = W[ell + 1]
                        la = lp[ell + 1]
                        if la == n + 1:
                            b = 0
                        elif la <= p - sigma:
                            b = sigma - dS[base + a - 1] + 1
                        else:
                            b = (la if la < ell - sigma + 1 else ell - sigma + 1) - p + 2 * sigma - 1
                        if b < msl.m:
                            msl_decrement(&msl, b + 1)
                        s_new = ell - sigma + 2
                        if s_new >= 1:
                            v = _add(prev[s_new - 1], sigma - win[ell + 1])
                        else:
                            v = INF
                        msl_append(&msl, v, s_new)
                if track and t >= split:
                    if t == split:
                        for ell in range(n + 1):
                            hcur[ell] = ell
                    else:
                        for ell in range(n + 1):
                            hcur[ell] = hprev[arg[ell]]
                    itmp = hprev
                    hprev = hcur
                    hcur = itmp
            profile[t] = _out(cur[n])
            tmp = prev
            prev = cur
            cur = tmp
        if track:
            split_end = hprev[n]
        return profile, split_end, None
    finally:
        if have_msl:
            msl_free(&msl)
        free(W); free(prev); free(cur); free(d1); free(seen); free(win); free(lp)
        free(arg); free(hprev); free(hcur); free(lastS); free(dS)
        free(init); free(sats); free(s1); free(s2); free(s3)


def delete_dp(w, int sigma, long k, int split=0, bint with_rest=True, bint keep_sol=False):
    if keep_sol:
        raise NotImplementedError("full matrices are kept by the Python kernels only")
    cdef int n
    cdef int* W = _letters(w, sigma, &n)
    cdef bint track = 1 <= split < k
    cdef int i, j, la, r, tt, lo, bi, hh
    cdef long p
    cdef int64_t c, best, v
    cdef int* d1 = <int*>_alloc((n + 1) * sizeof(int))
    cdef char* seen = <char*>_alloc(sigma + 1)
    cdef int* univ = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* freq = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* T = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* laa = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* lp = <int*>_alloc((n + 1) * sizeof(int))
    cdef int* L = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int* cnt = <int*>_alloc((sigma + 1) * sizeof(int))
    cdef int64_t* col = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int64_t* cur = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int64_t* mp = <int64_t*>_alloc((n + 1) * sizeof(int64_t))
    cdef int* hm = NULL
    cdef int* hprev = NULL
    cdef int* hcur = NULL
    cdef int64_t* tmp
    cdef int* itmp
    cdef Rmq R
    cdef bint have_rmq = False
    profile = [math.inf] * (k + 1)
    last_end = 0
    try:
        _prefix(W, n, sigma, d1, seen)
        _deltables(W, n, sigma, univ, freq, T, laa, lp, L, cnt)
        col[0] = INF
        for i in range(1, n + 1):
            col[i] = freq[i] - 1 if d1[i] == sigma else INF
        if track:
            hm = <int*>_alloc((n + 1) * sizeof(int))
            hprev = <int*>_alloc((n + 1) * sizeof(int))
            hcur = <int*>_alloc((n + 1) * sizeof(int))
            for i in range(n + 1):
                hprev[i] = i
                hcur[i] = i
                hm[i] = 0
        if with_rest:
            profile[0] = T[0]
        else:
            profile[0] = 0 if n == 0 else math.inf
        if k >= 1:
            best, bi = _finish(col, T, n, with_rest)
            profile[1] = _out(best)
            last_end = bi
        if k >= 2 and n:
            rmq_alloc(&R, n)
            have_rmq = True
        for p in range(2, k + 1 if n else 2):
            with nogil:
                rmq_build(&R, col + 1)
                lo = (p - 1) * sigma
                if lo < 1:
                    lo = 1
                for i in range(0, n + 1):
                    mp[i] = INF
                for i in range(lo, n + 1):
                    la = lp[i]
                    if la == n + 1:
                        if i > 1:
                            r = rmq_query(&R, 1, i - 1)
                            mp[i] = _add(col[r], 1)
                            if track:
                                hm[i] = hprev[r]
                        continue
                    r = rmq_query(&R, la, i - 1)
                    if mp[la] <= col[r]:
                        mp[i] = _add(mp[la], 1)
                        if track:
                            hm[i] = hm[la]
                    else:
                        mp[i] = _add(col[r], 1)
                        if track:
                            hm[i] = hprev[r]
                for i in range(1, n + 1):
                    cur[i] = INF
                    j = univ[i]
                    if j == 0:
                        continue
                    tt = laa[i]
                    if tt == n + 1:
                        continue
                    r = rmq_query(&R, tt, j - 1)
                    c = freq[i] - freq[tt] - 1
                    if mp[tt] <= col[r]:
                        cur[i] = _add(mp[tt], c)
                        hh = hm[tt] if track else 0
                    else:
                        cur[i] = _add(col[r], c)
                        hh = hprev[r] if track else 0
                    if track and p > split:
                        hcur[i] = hh
                cur[0] = INF
                if track and p >= split:
                    if p == split:
                        for i in range(n + 1):
                            hcur[i] = i
                    itmp = hprev
                    hprev = hcur
                    hcur = itmp
            tmp = col
            col = cur
            cur = tmp
            best, bi = _finish(col, T, n, with_rest)
            profile[p] = _out(best)
            last_end = bi
        if k == 0:
            last_end = 0
        if track:
            split_end = hprev[last_end]
        else:
            split_end = -1
        return profile, split_end, last_end, None
    finally:
        if have_rmq:
            rmq_free(&R)
        free(W); free(d1); free(seen); free(univ); free(freq); free(T); free(laa); free(lp)
        free(L); free(cnt); free(col); free(cur); free(mp); free(hm); free(hprev); free(hcur)


cdef tuple _finish(int64_t* col, int* T, int n, bint with_rest):
    cdef int64_t best = INF, v
    cdef int i, bi = 0
    if not with_rest:
        return (col[n] if n else INF), n
    for i in range(1, n + 1):
        v = _add(col[i], T[i])
        if v < best:
            best = v
            bi = i
    return best, bi
