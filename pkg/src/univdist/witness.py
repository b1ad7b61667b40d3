"""Closest words of a target universality index.

Segment boundaries come from the distance DPs run in linear space with the
Hirschberg split: each DP pass records where the first half of the blocks of
an optimal solution ends, and the two halves are solved recursively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import _backend, _pykernels
from .distances import (InfeasibleTarget, _check_k, canonical_op, delete_distance,
                        insert_distance, subst_distance)
from .word import Word, arch_ends_of, universality_index


@dataclass(frozen=True)
class BoundarySolution:
    """Block ends ``i_1 <= ... <= i_b`` (``i_0 = 0``) of one optimal solution.

    For insertions blocks may be empty and ``extra_blocks`` counts the blocks
    made only of inserted letters (k > n).  For deletions the segment after
    the last end is the rest.
    """

    op: str
    k: int
    ends: tuple[int, ...]
    cost: int
    extra_blocks: int = 0


@dataclass(frozen=True)
class WitnessWord:
    """``head`` followed by ``block`` repeated ``repeats`` times, kept lazy."""

    head: tuple[int, ...]
    block: tuple[int, ...] = ()
    repeats: int = 0

    @property
    def length(self) -> int:
        return len(self.head) + len(self.block) * self.repeats

    def __iter__(self) -> Iterator[int]:
        yield from self.head
        for _ in range(self.repeats):
            yield from self.block

    def chunks(self, size: int = 1 << 16) -> Iterator[tuple[int, ...]]:
        if self.head:
            yield self.head
        if not self.repeats or not self.block:
            return
        per = max(1, size // len(self.block))
        full, left = divmod(self.repeats, per)
        big = self.block * per
        for _ in range(full):
            yield big
        if left:
            yield self.block * left

    def materialize(self, limit: int = 10**8) -> tuple[int, ...]:
        if self.length > limit:
            raise OverflowError("witness too long to materialize")
        return tuple(self)


# -- segment costs, computed directly from the word -------------------------

def _block_cost(seg: Sequence[int], sigma: int) -> int:
    return sigma - len(set(seg))


def _arch_cost(seg: Sequence[int]) -> int:
    return seg[:-1].count(seg[-1])


def _rest_letter(seg: Sequence[int], sigma: int) -> tuple[int, int]:
    counts = [0] * (sigma + 1)
    for a in seg:
        counts[a] += 1
    best = min(range(1, sigma + 1), key=lambda a: counts[a])
    return best, counts[best]


def _segments(ends: Sequence[int]):
    prev = 0
    for e in ends:
        yield prev, e
        prev = e


def solution_cost(letters: Sequence[int], sigma: int, sol: BoundarySolution) -> int:
    """Total edit count implied by the boundaries, recomputed from scratch."""
    if sol.op == "delete":
        total = sum(_arch_cost(letters[a:b]) for a, b in _segments(sol.ends))
        tail = sol.ends[-1] if sol.ends else 0
        return total + _rest_letter(letters[tail:], sigma)[1]
    total = sum(_block_cost(letters[a:b], sigma) for a, b in _segments(sol.ends))
    return total + sigma * sol.extra_blocks


# -- Hirschberg recursion ----------------------------------------------------

def _ins_ends(letters, sigma, k, kern, dp, offset, out):
    n = len(letters)
    if k == 1:
        out.append(offset + n)
        return
    if n == 0:
        out.extend([offset] * k)
        return
    h = k // 2
    mid = dp(kern, letters, sigma, k, h)
    _ins_ends(letters[:mid], sigma, h, kern, dp, offset, out)
    _ins_ends(letters[mid:], sigma, k - h, kern, dp, offset + mid, out)


def _insert_split(kern, letters, sigma, k, h):
    return kern.insert_dp(letters, sigma, k, h)[1]


def _subst_split(kern, letters, sigma, k, h):
    return kern.subst_dp(letters, sigma, k, h)[1]


def _del_ends(letters, sigma, k, kern, offset, out, with_rest):
    n = len(letters)
    if k == 0:
        return
    if k == 1 and not with_rest:
        out.append(offset + n)
        return
    h = k // 2 if k >= 2 else 0
    _, mid, last_end, _ = kern.delete_dp(letters, sigma, k, h, with_rest)
    if k == 1:
        out.append(offset + last_end)
        return
    _del_ends(letters[:mid], sigma, h, kern, offset, out, False)
    _del_ends(letters[mid:last_end], sigma, k - h, kern, offset + mid, out, False)


def hirschberg_boundaries(w: Word, k: int, op: str, backend: str | None = None) -> BoundarySolution:
    """Boundaries of one optimal solution in O(n) working space."""
    op = canonical_op(op)
    k = _check_k(k)
    kern = _backend.load(backend)
    letters, sigma, n = list(w.letters), w.sigma, w.n
    iota = universality_index(w)
    ends: list[int] = []
    extra = 0
    if op == "insert":
        if k <= iota:
            ends = list(arch_ends_of(letters, sigma)[:k])
            if ends:
                ends[-1] = n
        else:
            kk = min(k, n)
            extra = k - kk
            _ins_ends(letters, sigma, kk, kern, _insert_split, 0, ends)
    elif op == "delete" or (op == "subst" and k < iota):
        if k > iota:
            raise InfeasibleTarget("target index exceeds current index; use insertions")
        if op == "subst":
            _subst_precheck(w, k)
        if k == iota:
            ends = list(arch_ends_of(letters, sigma))
        else:
            _del_ends(letters, sigma, k, kern, 0, ends, True)
        ref = BoundarySolution("delete", k, tuple(ends), 0)
        return BoundarySolution(op, k, ref.ends, solution_cost(letters, sigma, ref))
    else:
        _subst_precheck(w, k)
        if k == iota:
            ends = list(arch_ends_of(letters, sigma))
            if ends:
                ends[-1] = n
        else:
            _ins_ends(letters, sigma, k, kern, _subst_split, 0, ends)
    sol = BoundarySolution(op, k, tuple(ends), 0, extra)
    return BoundarySolution(op, k, sol.ends, solution_cost(letters, sigma, sol), extra)


def full_matrix_boundaries(w: Word, k: int, op: str) -> BoundarySolution:
    """Reference traceback through full argmin matrices (pure Python, O(nk) memory)."""
    op = canonical_op(op)
    k = _check_k(k)
    letters, sigma, n = list(w.letters), w.sigma, w.n
    iota = universality_index(w)
    if op == "subst":
        _subst_precheck(w, k)
    if op == "delete" or (op == "subst" and k < iota):
        if k > iota:
            raise InfeasibleTarget("target index exceeds current index; use insertions")
        if k == iota:
            ends = list(arch_ends_of(letters, sigma))
        elif k == 0:
            ends = []
        else:
            _, _, i, sol = _pykernels.delete_dp(letters, sigma, k, keep_sol=True)
            ends = []
            for p in range(k, 0, -1):
                ends.append(i)
                i = sol[p][i]
            ends.reverse()
        ref = BoundarySolution("delete", k, tuple(ends), 0)
        return BoundarySolution(op, k, ref.ends, solution_cost(letters, sigma, ref))
    extra = 0
    if k <= iota:
        ends = list(arch_ends_of(letters, sigma)[:k])
        if ends:
            ends[-1] = n
    else:
        kk = min(k, n) if op == "insert" else k
        extra = k - kk
        dp = _pykernels.insert_dp if op == "insert" else _pykernels.subst_dp
        sol = dp(letters, sigma, kk, keep_sol=True)[2]
        ends, ell = [], n
        for t in range(kk, 0, -1):
            ends.append(ell)
            ell = sol[t][ell]
        ends.reverse()
    ref = BoundarySolution(op, k, tuple(ends), 0, extra)
    return BoundarySolution(op, k, ref.ends, solution_cost(letters, sigma, ref), extra)


def _subst_precheck(w: Word, k: int) -> None:
    if k > w.n // w.sigma:
        raise InfeasibleTarget("infeasible: substitutions preserve length")
    if w.sigma == 1 and k != w.n:
        raise InfeasibleTarget("infeasible: substitutions cannot change a unary word")


# -- witness words -----------------------------------------------------------

def _fill_blocks(letters, sigma, ends) -> list[int]:
    out: list[int] = []
    for a, b in _segments(ends):
        seg = letters[a:b]
        out.extend(seg)
        present = set(seg)
        out.extend(x for x in range(1, sigma + 1) if x not in present)
    return out


def insert_witness(w: Word, k: int, backend: str | None = None) -> tuple[int, WitnessWord]:
    k = _check_k(k)
    letters, sigma, n = list(w.letters), w.sigma, w.n
    if sigma == 1:
        extra = max(0, k - n)
        return extra, WitnessWord(tuple(letters), (1,), extra)
    if k <= universality_index(w):
        return 0, WitnessWord(tuple(letters))
    sol = hirschberg_boundaries(w, k, "insert", backend=backend)
    head = _fill_blocks(letters, sigma, sol.ends)
    return sol.cost, WitnessWord(tuple(head), tuple(range(1, sigma + 1)), sol.extra_blocks)


def _deletion_plan(w: Word, k: int, backend: str | None):
    """Boundaries of an optimal deletion solution plus the rest letter."""
    letters, sigma = list(w.letters), w.sigma
    sol = hirschberg_boundaries(w, k, "delete", backend=backend)
    tail = sol.ends[-1] if sol.ends else 0
    x, _ = _rest_letter(letters[tail:], sigma)
    return sol, tail, x


def delete_witness(w: Word, k: int, backend: str | None = None) -> tuple[int, WitnessWord]:
    k = _check_k(k)
    letters, sigma, n = list(w.letters), w.sigma, w.n
    iota = universality_index(w)
    if k > iota:
        raise InfeasibleTarget("target index exceeds current index; use insertions")
    if k == iota:
        return 0, WitnessWord(tuple(letters))
    if sigma == 1:
        return n - k, WitnessWord(tuple(letters[:k]))
    sol, tail, x = _deletion_plan(w, k, backend)
    out: list[int] = []
    for a, b in _segments(sol.ends):
        last = letters[b - 1]
        out.extend(c for c in letters[a:b - 1] if c != last)
        out.append(last)
    out.extend(c for c in letters[tail:] if c != x)
    return n - len(out), WitnessWord(tuple(out))


def subst_witness(w: Word, k: int, backend: str | None = None) -> tuple[int, WitnessWord]:
    k = _check_k(k)
    _subst_precheck(w, k)
    letters, sigma = list(w.letters), w.sigma
    iota = universality_index(w)
    if k == iota:
        return 0, WitnessWord(tuple(letters))
    out = list(letters)
    if k < iota:
        sol, tail, x = _deletion_plan(w, k, backend)
        for a, b in _segments(sol.ends):
            last = letters[b - 1]
            other = 1 if last != 1 else 2
            for i in range(a, b - 1):
                if letters[i] == last:
                    out[i] = other
        other = 1 if x != 1 else 2
        for i in range(tail, len(letters)):
            if letters[i] == x:
                out[i] = other
    else:
        sol = hirschberg_boundaries(w, k, "subst", backend=backend)
        for a, b in _segments(sol.ends):
            seg = letters[a:b]
            counts = [0] * (sigma + 1)
            for c in seg:
                counts[c] += 1
            missing = [c for c in range(1, sigma + 1) if not counts[c]]
            mi = 0
            for i in range(a, b):
                if mi == len(missing):
                    break
                c = letters[i]
                if counts[c] > 1:
                    counts[c] -= 1
                    out[i] = missing[mi]
                    mi += 1
    cost = sum(1 for p, q in zip(letters, out) if p != q)
    return cost, WitnessWord(tuple(out))


def witness(w: Word, k: int, op: str, backend: str | None = None) -> tuple[int, WitnessWord]:
    op = canonical_op(op)
    if op == "insert":
        return insert_witness(w, k, backend)
    if op == "delete":
        return delete_witness(w, k, backend)
    return subst_witness(w, k, backend)


# -- verification --------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    ok: bool
    cost: int | None
    reason: str = ""


def _is_subsequence(short: Sequence[int], long: Sequence[int]) -> bool:
    it = iter(long)
    return all(any(c == d for d in it) for c in short)


def verify(w: Word, k: int, op: str, candidate: Sequence[int], backend: str | None = None) -> Verdict:
    """Check that ``candidate`` is an optimal single-operation witness."""
    op = canonical_op(op)
    k = _check_k(k)
    cand = list(candidate)
    letters, sigma, n = list(w.letters), w.sigma, w.n
    if any(not 1 <= c <= sigma for c in cand):
        return Verdict(False, None, "witness uses a letter outside the alphabet")
    idx = len(arch_ends_of(cand, sigma))
    iota = universality_index(w)
    if op == "insert":
        if not _is_subsequence(letters, cand):
            return Verdict(False, None, "word is not a subsequence of the witness")
        cost = len(cand) - n
        if idx < k:
            return Verdict(False, cost, f"witness index {idx} < {k}")
        best = insert_distance(w, k, backend=backend)
    elif op == "delete":
        if not _is_subsequence(cand, letters):
            return Verdict(False, None, "witness is not a subsequence of the word")
        cost = n - len(cand)
        if idx != k:
            return Verdict(False, cost, f"witness index {idx} != {k}")
        best = delete_distance(w, k, backend=backend)
    else:
        if len(cand) != n:
            return Verdict(False, None, "substitutions preserve length")
        cost = sum(1 for p, q in zip(letters, cand) if p != q)
        if (k < iota and idx != k) or (k >= iota and idx < k):
            return Verdict(False, cost, f"witness index {idx} misses target {k}")
        best = subst_distance(w, k, backend=backend)
    if cost != best:
        return Verdict(False, cost, f"cost {cost} is not minimal ({best})")
    return Verdict(True, cost)


__all__ = [
    "BoundarySolution", "WitnessWord", "Verdict", "hirschberg_boundaries", "full_matrix_boundaries",
    "insert_witness", "delete_witness", "subst_witness", "witness", "verify", "solution_cost",
]
