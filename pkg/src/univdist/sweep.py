"""Exhaustive fast-versus-oracle comparison over small words."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import oracle
from .distances import InfeasibleTarget, distance
from .word import Word, universality_index

OPS = ("insert", "delete", "subst")


def canonical_words(n: int, sigma: int) -> Iterator[tuple[int, ...]]:
    """Words of length n using all of 1..sigma, letters introduced in order."""

    def rec(prefix, used):
        if len(prefix) == n:
            if used == sigma:
                yield tuple(prefix)
            return
        if sigma - used > n - len(prefix):
            return
        for a in range(1, min(used + 1, sigma) + 1):
            prefix.append(a)
            yield from rec(prefix, max(used, a))
            prefix.pop()

    yield from rec([], 0)


def valid_ks(w: Word, op: str) -> range:
    if op == "insert":
        return range(0, w.n + 3)
    if op == "delete":
        return range(0, universality_index(w) + 1)
    return range(0, w.n // w.sigma + 1)


@dataclass
class SweepReport:
    words: int = 0
    checks: int = 0
    bfs_checks: int = 0
    mismatches: list = field(default_factory=list)

    def merge(self, other: "SweepReport") -> None:
        self.words += other.words
        self.checks += other.checks
        self.bfs_checks += other.bfs_checks
        self.mismatches.extend(other.mismatches)


def check_word(letters: tuple[int, ...], ops=OPS, bfs_depth: int = 4,
               bfs_states: int | None = 200_000, backend: str | None = None) -> SweepReport:
    w = Word.from_letters(letters)
    rep = SweepReport(words=1)
    for op in ops:
        ks = valid_ks(w, op)
        fast = {}
        for k in ks:
            got = distance(w, k, op, force_generic=True, backend=backend).cost
            ref = oracle.naive_dp_distance(letters, k, op, w.sigma)
            fast[k] = got
            rep.checks += 1
            if got != ref:
                rep.mismatches.append((letters, op, k, got, ref, "naive"))
        # one step past the valid range must be rejected
        beyond = ks.stop
        if op != "insert":
            try:
                distance(w, beyond, op, backend=backend)
                rep.mismatches.append((letters, op, beyond, "accepted", None, "infeasible"))
            except InfeasibleTarget:
                pass
        want = [k for k, v in fast.items() if v <= bfs_depth]
        if want and w.n <= oracle.BFS_MAX_N:
            res = oracle.oracle_distance_profile(letters, want, op, w.sigma,
                                                 max_depth=bfs_depth, max_states=bfs_states)
            for k, d in res.items():
                rep.bfs_checks += 1
                if d != fast[k]:
                    rep.mismatches.append((letters, op, k, fast[k], d, "bfs"))
    return rep


def _chunk(args) -> SweepReport:
    words, ops, bfs_depth, bfs_states, backend = args
    rep = SweepReport()
    for letters in words:
        rep.merge(check_word(letters, ops, bfs_depth, bfs_states, backend))
    return rep


def sweep(max_n: int, sigma: int, ops=OPS, bfs_depth: int = 4, bfs_states: int | None = 200_000,
          jobs: int | None = None, backend: str | None = None, min_n: int | None = None) -> SweepReport:
    """Compare every distance with the oracles on all canonical words, n <= max_n."""
    words = [u for n in range(min_n or sigma, max_n + 1) for u in canonical_words(n, sigma)]
    jobs = jobs or os.cpu_count() or 1
    size = max(1, len(words) // (jobs * 8))
    chunks = [(words[i:i + size], tuple(ops), bfs_depth, bfs_states, backend)
              for i in range(0, len(words), size)]
    rep = SweepReport()
    if jobs == 1:
        for c in chunks:
            rep.merge(_chunk(c))
        return rep
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for r in ex.map(_chunk, chunks):
            rep.merge(r)
    return rep
