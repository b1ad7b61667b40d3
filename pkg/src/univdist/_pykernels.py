"""Pure-Python kernels.

Same interface as the compiled ``_ckernels`` module; used when the extension
is not built and as the reference the extension is tested against.

Conventions shared by both backends: ``w`` is a sequence of letters in
``1..sigma`` (not all letters need occur), positions are 1-based, ``n + 1``
means "does not occur" and ``math.inf`` is infinity in returned values.
"""

from __future__ import annotations

from .structures import INF, MinSuffixList, RmqIndex

NAME = "python"


def prefix_distinct(w, sigma):
    seen = bytearray(sigma + 1)
    out = []
    c = 0
    for a in w:
        if not seen[a]:
            seen[a] = 1
            c += 1
        out.append(c)
    return out


def window_distinct(w, sigma):
    """Distinct-letter counts of the windows ``w[i-sigma+1:i]``, i = sigma..n."""
    n = len(w)
    if n < sigma:
        return []
    cnt = [0] * (sigma + 1)
    c = 0
    for i in range(sigma):
        a = w[i]
        if cnt[a] == 0:
            c += 1
        cnt[a] += 1
    out = [c]
    for i in range(sigma, n):
        a = w[i - sigma]
        cnt[a] -= 1
        if cnt[a] == 0:
            c -= 1
        a = w[i]
        if cnt[a] == 0:
            c += 1
        cnt[a] += 1
        out.append(c)
    return out


def sampled_last_d(w, sigma):
    """``last_p`` and ``d_p`` at p = 1, sigma+1, 2sigma+1, ...

    A recency list (most recent first) is rotated as letters are read; at a
    sample point, the rank of a letter in that list is its ``d`` value.
    """
    n = len(w)
    absent = n + 1
    last = [absent] * (sigma + 1)
    # doubly linked recency list over letters, head = most recent
    nxt = [0] * (sigma + 1)
    prv = [0] * (sigma + 1)
    head = 0
    samples, lasts, ds = [], [], []
    for p in range(1, n + 1):
        a = w[p - 1]
        if last[a] != absent:
            if head != a:
                pa, na = prv[a], nxt[a]
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
            d = [0] * sigma
            r, x = 1, head
            while x:
                d[x - 1] = r
                r += 1
                x = nxt[x]
            samples.append(p)
            lasts.append(last[1:])
            ds.append(d)
    return samples, lasts, ds


def deletion_tables(w, sigma):
    """univ, arch intervals, freq, T, lastAtArch and lastPrev.

    Per-position arrays are 1-based positions stored 0-based; T covers
    ``[0:n]``.  Arch intervals are ``(j, start, end)`` triples for j > 0.
    """
    n = len(w)
    absent = n + 1
    L = [absent] * (sigma + 1)
    univ = [0] * n
    last_prev = [absent] * n
    freq = [0] * n
    cnt = [0] * (sigma + 1)
    distinct = 0
    p = 1
    for i in range(n):
        a = w[i]
        last_prev[i] = L[a]
        if L[a] == absent:
            distinct += 1
        L[a] = i + 1
        cnt[a] += 1
        freq[i] = cnt[a]
        if distinct == sigma:
            # univ[i] is the smallest p with last_i[w[p]] == p
            while L[w[p - 1]] != p:
                p += 1
            univ[i] = p
    arch_intervals = []
    i = 0
    while i < n:
        j = univ[i]
        e = i
        while e + 1 < n and univ[e + 1] == j:
            e += 1
        if j:
            arch_intervals.append((j, i + 1, e + 1))
        i = e + 1
    last_at_arch = [absent] * n
    if arch_intervals:
        L = [absent] * (sigma + 1)
        k = 0
        for i in range(n + 1):
            # here L holds last_i
            while k < len(arch_intervals) and arch_intervals[k][0] - 1 == i:
                _, s, e = arch_intervals[k]
                for pos in range(s, e + 1):
                    last_at_arch[pos - 1] = L[w[pos - 1]]
                k += 1
            if i < n:
                L[w[i]] = i + 1
    return univ, arch_intervals, freq, suffix_min_counts(w, sigma), last_at_arch, last_prev


def suffix_min_counts(w, sigma):
    """T[i] = min over letters of the count in ``w[i+1:n]``."""
    n = len(w)
    T = [0] * (n + 1)
    c = [0] * (sigma + 1)
    # counts only grow right-to-left; buckets of letters per count let the
    # minimum move monotonically upward
    at = [0] * (n + 2)
    at[0] = sigma
    mn = 0
    for i in range(n - 1, -1, -1):
        T[i + 1] = mn
        a = w[i]
        at[c[a]] -= 1
        c[a] += 1
        at[c[a]] += 1
        while at[mn] == 0:
            mn += 1
    T[0] = mn
    return T


def _last_prev(w, sigma):
    n = len(w)
    L = [n + 1] * (sigma + 1)
    out = [0] * n
    for i, a in enumerate(w):
        out[i] = L[a]
        L[a] = i + 1
    return out


def insert_dp(w, sigma, k, split=0, keep_sol=False, check=False):
    """Columns ``M[.][t]`` for t = 0..k of the insertion DP.

    Returns ``(profile, split_end, sol)``: ``profile[t] = M[n][t]``;
    ``split_end`` is where the first ``split`` blocks of an optimal
    k-block solution end (-1 when not tracked); ``sol`` is the list of
    argmin columns when ``keep_sol`` is set.
    """
    n = len(w)
    if n == 0:
        return [t * sigma for t in range(k + 1)], (0 if split else -1), None
    track = 1 <= split < k
    prev = [sigma] + [sigma - x for x in prefix_distinct(w, sigma)]
    profile = [0] * (k + 1)
    if k >= 1:
        profile[1] = prev[n]
    sol = [None, [0] * (n + 1)] if keep_sol else None
    h_prev = list(range(n + 1)) if track and split == 1 else None
    if k < 2:
        return profile, -1, sol
    samples, lasts, ds = sampled_last_d(w, sigma)
    for t in range(2, k + 1):
        cur = [0] * (n + 1)
        cur[0] = t * sigma
        arg = [0] * (n + 1)
        for ph, p in enumerate(samples):
            last, d = lasts[ph], ds[ph]
            init = [INF] * sigma
            sats = [None] * sigma
            pos = [0] * (sigma + 1)
            for a in range(1, sigma + 1):
                da = d[a - 1]
                if da:
                    slot = sigma - da + 1
                    init[slot - 1] = prev[last[a - 1] - 1] + sigma - da
                    sats[slot - 1] = last[a - 1]
                    pos[a] = slot
            msl = MinSuffixList(init, sats)
            for i in range(1, sigma + 1):
                ell = p + i - 1
                if ell > n:
                    break
                _, q, s = msl.min()
                alt = prev[ell] + sigma
                if q <= alt:
                    cur[ell] = q
                    arg[ell] = s - 1
                else:
                    cur[ell] = alt
                    arg[ell] = ell
                if i == sigma or ell == n:
                    break
                a = w[ell]
                if pos[a] < msl.m:
                    msl.decrement_suffix(pos[a] + 1)
                msl.append(prev[ell] + sigma - 1, ell + 1)
                pos[a] = msl.m
        if check:
            for ell in range(1, n + 1):
                assert cur[ell] <= cur[ell - 1], "insertion column not monotone"
        profile[t] = cur[n]
        if keep_sol:
            sol.append(arg)
        if track:
            if t == split:
                h_prev = list(range(n + 1))
            elif t > split:
                h_prev = [h_prev[arg[ell]] for ell in range(n + 1)]
        prev = cur
    return profile, (h_prev[n] if track else -1), sol


def subst_dp(w, sigma, k, split=0, keep_sol=False):
    """Substitution DP columns; each block must have length at least sigma.

    Same return convention as :func:`insert_dp`; unreachable states are inf.
    """
    n = len(w)
    track = 1 <= split < k
    d1 = prefix_distinct(w, sigma)
    prev = [INF] * (n + 1)
    for ell in range(sigma, n + 1):
        prev[ell] = sigma - d1[ell - 1]
    profile = [0] * (k + 1)
    if k >= 1:
        profile[1] = prev[n]
    sol = [None, [0] * (n + 1)] if keep_sol else None
    h_prev = list(range(n + 1)) if track and split == 1 else None
    if k < 2:
        return profile, -1, sol
    win = window_distinct(w, sigma)
    lp = _last_prev(w, sigma)
    samples, lasts, ds = sampled_last_d(w, sigma)
    for t in range(2, k + 1):
        cur = [INF] * (n + 1)
        arg = [0] * (n + 1)
        for ph, p in enumerate(samples):
            last, d = lasts[ph], ds[ph]
            init = [INF] * sigma
            sats = [None] * sigma
            for a in range(1, sigma + 1):
                la = last[a - 1]
                if la <= p - sigma:
                    slot = sigma - d[a - 1] + 1
                    init[slot - 1] = prev[la - 1] + sigma - d[a - 1]
                    sats[slot - 1] = la
            s0 = p - sigma + 1
            if s0 >= 1:
                init[sigma - 1] = prev[s0 - 1] + sigma - win[p - sigma]
                sats[sigma - 1] = s0
            msl = MinSuffixList(init, sats)
            for i in range(1, sigma + 1):
                ell = p + i - 1
                if ell > n:
                    break
                _, q, s = msl.min()
                cur[ell] = q
                arg[ell] = s - 1 if q != INF else 0
                if i == sigma or ell == n:
                    break
                a = w[ell]
                la = lp[ell]
                if la == n + 1:
                    b = 0
                elif la <= p - sigma:
                    b = sigma - d[a - 1] + 1
                else:
                    b = min(la, ell - sigma + 1) - p + 2 * sigma - 1
                if b < msl.m:
                    msl.decrement_suffix(b + 1)
                s_new = ell - sigma + 2
                if s_new >= 1:
                    msl.append(prev[s_new - 1] + sigma - win[ell + 1 - sigma], s_new)
                else:
                    msl.append(INF, s_new)
        profile[t] = cur[n]
        if keep_sol:
            sol.append(arg)
        if track:
            if t == split:
                h_prev = list(range(n + 1))
            elif t > split:
                h_prev = [h_prev[arg[ell]] for ell in range(n + 1)]
        prev = cur
    return profile, (h_prev[n] if track else -1), sol


def delete_dp(w, sigma, k, split=0, with_rest=True, keep_sol=False):
    """Deletion DP over weak-p-universal prefixes ending in a kept letter.

    Returns ``(profile, split_end, last_end, sol)``.  With ``with_rest`` the
    profile entry for p is ``min_i N[i][p] + T[i]`` and ``last_end`` is the
    leftmost minimising i; otherwise it is ``N[n][p]`` and ``last_end = n``.
    """
    n = len(w)
    track = 1 <= split < k
    d1 = prefix_distinct(w, sigma)
    univ, _, freq, T, laa, lp = deletion_tables(w, sigma)
    col = [INF] * (n + 1)
    for i in range(1, n + 1):
        if d1[i - 1] == sigma:
            col[i] = freq[i - 1] - 1
    profile = [INF] * (k + 1)

    def finish(c):
        if with_rest:
            best, bi = INF, 0
            for i in range(1, n + 1):
                v = c[i] + T[i]
                if v < best:
                    best, bi = v, i
            return best, bi
        return c[n], n

    profile[0] = T[0] if with_rest else (0 if n == 0 else INF)
    last_end = 0
    if k >= 1:
        profile[1], last_end = finish(col)
    sol = [None, [0] * (n + 1)] if keep_sol else None
    h_prev = list(range(n + 1)) if track and split == 1 else None
    for p in range(2, k + 1):
        rmq = RmqIndex(col[1:]) if n else None
        mp = [INF] * (n + 1)
        mj = [0] * (n + 1)
        lo = max(1, (p - 1) * sigma)
        for i in range(lo, n + 1):
            la = lp[i - 1]
            if la == n + 1:
                # first occurrence of w[i]: every earlier split pays just w[i]
                if i > 1:
                    r = rmq.query(1, i - 1)
                    mp[i] = col[r] + 1
                    mj[i] = r
                continue
            r = rmq.query(la, i - 1)
            if mp[la] <= col[r]:
                mp[i] = mp[la] + 1
                mj[i] = mj[la]
            else:
                mp[i] = col[r] + 1
                mj[i] = r
        cur = [INF] * (n + 1)
        arg = [0] * (n + 1)
        for i in range(1, n + 1):
            j = univ[i - 1]
            if j == 0:
                continue
            t = laa[i - 1]
            if t == n + 1:
                continue
            r = rmq.query(t, j - 1)
            c = freq[i - 1] - freq[t - 1] - 1
            if mp[t] <= col[r]:
                cur[i] = mp[t] + c
                arg[i] = mj[t]
            else:
                cur[i] = col[r] + c
                arg[i] = r
        if keep_sol:
            sol.append(arg)
        if track:
            if p == split:
                h_prev = list(range(n + 1))
            elif p > split:
                h_prev = [h_prev[arg[i]] for i in range(n + 1)]
        col = cur
        profile[p], last_end = finish(col)
    if k == 0:
        last_end = 0
    split_end = h_prev[last_end] if track else -1
    return profile, split_end, last_end, sol
