"""Linear-time scan tables consumed by the dynamic programs.

All position arguments are 1-based; the stored tuples are 0-based copies of
the 1-based arrays (``delta1[0]`` is the value at position 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .word import Word


@dataclass(frozen=True)
class PrefixDistinct:
    delta1: tuple[int, ...]

    def at(self, ell: int) -> int:
        return self.delta1[ell - 1]


@dataclass(frozen=True)
class WindowDistinct:
    """Window counts for ``i = sigma..n``."""

    deltaw: tuple[int, ...]
    sigma: int

    def at(self, i: int) -> int:
        if i < self.sigma:
            raise IndexError(f"window ending at {i} starts before position 1")
        return self.deltaw[i - self.sigma]


@dataclass(frozen=True)
class SampledLastD:
    samples: tuple[int, ...]
    last: tuple[tuple[int, ...], ...]
    d: tuple[tuple[int, ...], ...]

    def at(self, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(last_p, d_p)`` indexed by letter - 1."""
        j, r = divmod(p - 1, len(self.last[0]))
        if r or not 0 <= j < len(self.samples):
            raise KeyError(f"{p} is not a sample point")
        return self.last[j], self.d[j]


@dataclass(frozen=True)
class DeletionTables:
    univ: tuple[int, ...]
    arch_intervals: tuple[tuple[int, int, int], ...]
    freq: tuple[int, ...]
    T: tuple[int, ...]
    last_at_arch: tuple[int, ...]
    last_prev: tuple[int, ...]

    @property
    def V(self) -> frozenset[int]:
        vals = {j for j, _, _ in self.arch_intervals}
        if not self.arch_intervals or self.arch_intervals[0][1] > 1:
            vals.add(0)
        return frozenset(vals)

    @property
    def L(self) -> dict[int, tuple[int, int]]:
        """``L_j`` as an inclusive ``(start, end)`` pair for each j > 0."""
        return {j: (s, e) for j, s, e in self.arch_intervals}

    def arch_table(self, j: int, letters) -> dict[int, int]:
        """``last_{j-1}`` restricted to the letters that end positions of ``L_j``."""
        s, e = self.L[j]
        return {letters[i - 1]: self.last_at_arch[i - 1] for i in range(s, e + 1)}


def prefix_distinct(w: Word, backend: str | None = None) -> PrefixDistinct:
    return PrefixDistinct(tuple(_backend.load(backend).prefix_distinct(w.letters, w.sigma)))


def window_distinct(w: Word, backend: str | None = None) -> WindowDistinct:
    return WindowDistinct(tuple(_backend.load(backend).window_distinct(w.letters, w.sigma)), w.sigma)


def sampled_last_d(w: Word, backend: str | None = None) -> SampledLastD:
    samples, lasts, ds = _backend.load(backend).sampled_last_d(w.letters, w.sigma)
    return SampledLastD(tuple(samples), tuple(map(tuple, lasts)), tuple(map(tuple, ds)))


def deletion_tables(w: Word, backend: str | None = None) -> DeletionTables:
    univ, arches, freq, T, laa, lp = _backend.load(backend).deletion_tables(w.letters, w.sigma)
    return DeletionTables(tuple(univ), tuple(map(tuple, arches)), tuple(freq), tuple(T), tuple(laa), tuple(lp))
