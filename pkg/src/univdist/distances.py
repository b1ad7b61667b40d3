"""Minimal single-operation edit counts to a target universality index.

Target semantics:

* insert: the result is k-universal (index >= k);
* delete: the result has index exactly k;
* subst: exactly k when k < index(w), at least k otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .word import Word, universality_index


class InfeasibleTarget(ValueError):
    """The requested index cannot be reached with the chosen operation."""


OPS = ("insert", "delete", "subst")
_ALIASES = {"insert": "insert", "ins": "insert", "delete": "delete", "del": "delete",
            "subst": "subst", "substitute": "subst", "substitution": "subst"}


def canonical_op(op: str) -> str:
    try:
        return _ALIASES[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; use insert, delete or subst") from None


@dataclass(frozen=True)
class DistanceResult:
    op: str
    k: int
    cost: int


def _check_k(k: int) -> int:
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise ValueError("k must be a non-negative integer")
    return int(k)


def _finite(v) -> int:
    if v == float("inf"):
        raise AssertionError("dynamic program reported an unreachable optimum")
    return int(v)


def insert_profile(w: Word, kmax: int, backend: str | None = None) -> list[int]:
    """``insert_distance(w, k)`` for every k in ``0..kmax``, in one O(n*kmax) pass."""
    kmax = _check_k(kmax)
    n, sigma = w.n, w.sigma
    if sigma == 1:
        return [max(0, k - n) for k in range(kmax + 1)]
    kk = min(kmax, n)
    prof = _backend.load(backend).insert_dp(w.letters, sigma, kk)[0]
    out = [_finite(v) for v in prof]
    out += [out[n] + (k - n) * sigma for k in range(n + 1, kmax + 1)]
    return out


def insert_distance(w: Word, k: int, backend: str | None = None) -> int:
    k = _check_k(k)
    n, sigma = w.n, w.sigma
    if sigma == 1:
        return max(0, k - n)
    if k <= universality_index(w):
        return 0
    kk = min(k, n)
    base = _finite(_backend.load(backend).insert_dp(w.letters, sigma, kk)[0][kk])
    return base + (k - kk) * sigma


def delete_distance(w: Word, k: int, backend: str | None = None) -> int:
    k = _check_k(k)
    iota = universality_index(w)
    if k > iota:
        raise InfeasibleTarget("target index exceeds current index; use insertions")
    if k == iota:
        return 0
    if w.sigma == 1:
        return w.n - k
    if k == 0:
        counts = [0] * (w.sigma + 1)
        for a in w.letters:
            counts[a] += 1
        return min(counts[1:])
    return _finite(_backend.load(backend).delete_dp(w.letters, w.sigma, k)[0][k])


def subst_distance(w: Word, k: int, backend: str | None = None) -> int:
    k = _check_k(k)
    n, sigma = w.n, w.sigma
    if k > n // sigma:
        raise InfeasibleTarget("infeasible: substitutions preserve length")
    if sigma == 1:
        if k != n:
            raise InfeasibleTarget("infeasible: substitutions cannot change a unary word")
        return 0
    iota = universality_index(w)
    if k == iota:
        return 0
    if k < iota:
        return delete_distance(w, k, backend=backend)
    return _finite(_backend.load(backend).subst_dp(w.letters, sigma, k)[0][k])


def binary_insert_distance(w: Word, k: int) -> int:
    """Closed form for two-letter words: ``max(0, k - iota, 2k - n)``.

    The switch from ``k - iota`` to ``2k - n`` happens at ``k = n - iota``,
    where the two branches meet.
    """
    k = _check_k(k)
    if w.sigma != 2:
        raise ValueError("binary_insert_distance needs a word over exactly two letters")
    ell = universality_index(w)
    if k <= ell:
        return 0
    if k <= w.n - ell:
        return k - ell
    return 2 * k - w.n


def distance(w: Word, k: int, op: str, force_generic: bool = False,
             backend: str | None = None) -> DistanceResult:
    op = canonical_op(op)
    k = _check_k(k)
    if op == "insert":
        if w.sigma == 2 and not force_generic:
            cost = binary_insert_distance(w, k)
        else:
            cost = insert_distance(w, k, backend=backend)
    elif op == "delete":
        cost = delete_distance(w, k, backend=backend)
    else:
        cost = subst_distance(w, k, backend=backend)
    return DistanceResult(op, k, cost)
