"""Brute-force references used to check everything else.

Nothing here shares code with the fast path: universality is decided from
the k-spectrum, from explicit block decompositions, or from the length of the
shortest absent subsequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

INF = math.inf

SPECTRUM_LIMIT = 10**6
BFS_MAX_DEPTH = 6
BFS_MAX_N = 10
NAIVE_DP_LIMIT = 10**8

OPS = ("insert", "delete", "subst")


class OracleScaleError(RuntimeError):
    """Raised when an oracle would exceed its hard size guard."""


@dataclass(frozen=True)
class Spectrum:
    k: int
    words: frozenset


def _letters(w) -> tuple[tuple[int, ...], int]:
    letters = tuple(getattr(w, "letters", w))
    sigma = getattr(w, "sigma", None)
    if sigma is None:
        sigma = max(letters) if letters else 0
    return letters, sigma


def spectrum(w, k: int, sigma: int | None = None) -> Spectrum:
    letters, s = _letters(w)
    sigma = sigma or s
    if sigma**k > SPECTRUM_LIMIT:
        raise OracleScaleError("oracle scale")
    # layers[j] = subsequences of length j of the prefix read so far
    layers = [set() for _ in range(k + 1)]
    layers[0].add(())
    for a in letters:
        for j in range(k, 0, -1):
            layers[j] |= {u + (a,) for u in layers[j - 1]}
    return Spectrum(k, frozenset(layers[k]))


def _decomposes(letters: Sequence[int], sigma: int, k: int) -> bool:
    """Try every split into k consecutive blocks each using all letters."""
    n = len(letters)
    full = set(range(1, sigma + 1))
    ends = {0}
    for _ in range(k):
        nxt = set()
        for s in ends:
            for e in range(s + 1, n + 1):
                if set(letters[s:e]) >= full:
                    nxt.add(e)
        if not nxt:
            return False
        ends = nxt
    return True


def oracle_is_k_universal(w, k: int, sigma: int | None = None) -> bool:
    letters, s = _letters(w)
    sigma = sigma or s
    if k == 0:
        return True
    by_spectrum = len(spectrum(letters, k, sigma).words) == sigma**k
    by_blocks = _decomposes(letters, sigma, k)
    assert by_spectrum == by_blocks, "spectrum and decomposition disagree"
    return by_spectrum


def oracle_index(letters: Sequence[int], sigma: int) -> int:
    """Universality index as (shortest absent subsequence length) - 1."""
    # g[a]: shortest absent word of the current suffix that starts with a
    g = [1] * (sigma + 1)
    g[0] = INF
    f = 1
    for i in range(len(letters) - 1, -1, -1):
        g[letters[i]] = 1 + f
        f = min(g)
    return f - 1


def _canon(word: bytes) -> bytes:
    """Rename letters to first-occurrence order (states are kept as bytes)."""
    order = sorted(set(word), key=word.index)
    return word.translate(bytes.maketrans(bytes(order), bytes(range(1, len(order) + 1))))


def _hits(op: str, idx: int, k: int, iota0: int) -> bool:
    if op == "insert":
        return idx >= k
    if op == "delete":
        return idx == k
    return idx == k if k < iota0 else idx >= k


def oracle_distance_profile(w, ks: Iterable[int], op: str, sigma: int | None = None,
                            max_depth: int = BFS_MAX_DEPTH, max_states: int | None = None) -> dict:
    """Breadth-first search over single-operation edits.

    Returns ``{k: distance}`` for every requested k resolved within
    ``max_depth`` levels (or before a level exceeds ``max_states``).  Targets
    that stay unresolved are simply absent from the result.
    """
    letters, s = _letters(w)
    sigma = sigma or s
    if len(letters) > BFS_MAX_N or max_depth > BFS_MAX_DEPTH:
        raise OracleScaleError("oracle scale")
    if op not in OPS:
        raise ValueError(f"unknown op {op!r}")
    iota0 = oracle_index(letters, sigma)
    pending = set(ks)
    found: dict = {}
    start = bytes(letters)
    level = {_canon(start)} if op == "insert" else {start}
    seen = set(level)
    for depth in range(max_depth + 1):
        idxs = {oracle_index(u, sigma) for u in level}
        for k in list(pending):
            if any(_hits(op, i, k, iota0) for i in idxs):
                found[k] = depth
                pending.discard(k)
        if not pending or depth == max_depth:
            break
        nxt = set()
        for u in level:
            if op == "insert":
                for p in range(len(u) + 1):
                    for a in range(1, sigma + 1):
                        nxt.add(u[:p] + bytes((a,)) + u[p:])
            elif op == "delete":
                for p in range(len(u)):
                    nxt.add(u[:p] + u[p + 1:])
            else:
                for p in range(len(u)):
                    for a in range(1, sigma + 1):
                        if a != u[p]:
                            nxt.add(u[:p] + bytes((a,)) + u[p + 1:])
        if op == "insert":
            nxt = {_canon(u) for u in nxt}
        if op == "subst":
            nxt -= seen
            seen |= nxt
        if not nxt:
            break
        if max_states is not None and len(nxt) > max_states:
            break
        level = nxt
    return found


def oracle_distance(w, k: int, op: str, sigma: int | None = None):
    """Exact minimal edit count, or None if the target is unreachable.

    Raises OracleScaleError when the answer lies beyond the search depth.
    """
    letters, s = _letters(w)
    sigma = sigma or s
    res = oracle_distance_profile(letters, [k], op, sigma)
    if k in res:
        return res[k]
    if op == "delete" and k > oracle_index(letters, sigma):
        return None
    if op == "subst" and (k * sigma > len(letters) or (sigma == 1 and k != len(letters))):
        return None
    raise OracleScaleError("oracle scale")


def _distinct(letters: Sequence[int], i: int, j: int) -> int:
    return len(set(letters[i - 1:j]))


def naive_dp_distance(w, k: int, op: str, sigma: int | None = None):
    """The unrestricted recurrences, O(n^2 k).  Returns inf if infeasible."""
    letters, s = _letters(w)
    sigma = sigma or s
    n = len(letters)
    if n * n * max(k, 1) > NAIVE_DP_LIMIT:
        raise OracleScaleError("oracle scale")
    if op == "insert":
        return _naive_insert(letters, sigma, k)
    if op == "delete":
        return _naive_delete(letters, sigma, k)
    if op == "subst":
        iota = oracle_index(letters, sigma)
        if k < iota:
            return _naive_delete(letters, sigma, k)
        return _naive_subst(letters, sigma, k)
    raise ValueError(f"unknown op {op!r}")


def _naive_insert(letters, sigma, k):
    n = len(letters)
    kk = min(k, n)
    D = [[0] * (n + 1) for _ in range(n + 2)]
    for i in range(1, n + 1):
        seen = set()
        for j in range(i, n + 1):
            seen.add(letters[j - 1])
            D[i][j] = len(seen)
    M = [0] * (n + 1)
    for t in range(1, kk + 1):
        cur = [0] * (n + 1)
        for ell in range(n + 1):
            cur[ell] = min(M[lp] + sigma - (D[lp + 1][ell] if lp < ell else 0) for lp in range(ell + 1))
        M = cur
    return M[n] + (k - kk) * sigma


def _naive_subst(letters, sigma, k):
    n = len(letters)
    if k == 0:
        return 0
    M = [0] * (n + 1)
    for t in range(1, k + 1):
        cur = [INF] * (n + 1)
        for ell in range(n + 1):
            best = INF
            for lp in range((t - 1) * sigma, ell - sigma + 1):
                v = M[lp] + sigma - _distinct(letters, lp + 1, ell)
                best = min(best, v)
            cur[ell] = best
        M = cur
    return M[n]


def _naive_delete(letters, sigma, k):
    n = len(letters)
    iota = oracle_index(letters, sigma)
    if k > iota:
        return INF
    counts = [letters.count(a) for a in range(1, sigma + 1)]
    if k == 0:
        return min(counts)
    full = set(range(1, sigma + 1))

    def univ(i):
        best = 0
        for j in range(1, i + 1):
            if set(letters[j - 1:i]) >= full:
                best = j
        return best

    U = [0] + [univ(i) for i in range(1, n + 1)]
    T = [min(letters[i:].count(a) for a in range(1, sigma + 1)) for i in range(n + 1)]
    N = [INF] * (n + 1)
    for i in range(1, n + 1):
        if set(letters[:i]) >= full:
            N[i] = letters[:i - 1].count(letters[i - 1])
    for _ in range(2, k + 1):
        cur = [INF] * (n + 1)
        for i in range(1, n + 1):
            a = letters[i - 1]
            for ip in range(1, U[i]):
                v = N[ip] + letters[ip:i - 1].count(a)
                if v < cur[i]:
                    cur[i] = v
        N = cur
    return min(N[i] + T[i] for i in range(1, n + 1))


def naive_min_suffix_list(initial: Sequence, ops: Iterable[tuple]) -> list[tuple[int, object]]:
    """Replay ``("dec", j)`` / ``("app", x)`` / ``("min",)`` eagerly.

    Returns the (position, value) pair of every ``min`` step, rightmost on ties.
    """
    a = list(initial)
    out = []
    for op in ops:
        if op[0] == "dec":
            for t in range(op[1] - 1, len(a)):
                a[t] = a[t] - 1
        elif op[0] == "app":
            a.append(op[1])
        else:
            best = 0
            for t in range(len(a)):
                if a[t] <= a[best]:
                    best = t
            out.append((best + 1, a[best]))
    return out
