"""Words over an integer alphabet, arch factorization and universality index."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Sequence


class WordError(ValueError):
    """Raised for malformed words or letter sequences."""


@dataclass(frozen=True)
class AlphabetMap:
    """Sorted distinct symbols; symbol ``forward[r]`` is letter ``r + 1``."""

    forward: tuple

    @property
    def size(self) -> int:
        return len(self.forward)

    def letter_of(self, symbol: Hashable) -> int:
        try:
            return self._index()[symbol] + 1
        except KeyError:
            raise WordError(f"symbol {symbol!r} is not in the alphabet") from None

    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {s: r for r, s in enumerate(self.forward)}
            object.__setattr__(self, "_idx", idx)
        return idx


@dataclass(frozen=True)
class Word:
    """A word with alphabet exactly ``{1..sigma}``. Positions are 1-based in all APIs."""

    letters: tuple[int, ...]
    sigma: int

    def __post_init__(self) -> None:
        if not self.letters:
            raise WordError("empty word")
        if self.sigma < 1 or self.sigma > len(self.letters):
            raise WordError("sigma must satisfy 1 <= sigma <= n")
        if set(self.letters) != set(range(1, self.sigma + 1)):
            raise WordError("letters must use every value in 1..sigma and nothing else")

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        """Build a Word from letters already in ``1..sigma`` form."""
        t = tuple(int(x) for x in letters)
        return cls(t, max(t) if t else 0)


@dataclass(frozen=True)
class ArchFactorization:
    arch_ends: tuple[int, ...]
    rest_start: int

    @property
    def iota(self) -> int:
        return len(self.arch_ends)


def normalize(symbols: Sequence[Any]) -> tuple[Word, AlphabetMap]:
    """Map symbols to letters by sorted rank.

    >>> normalize("bacacabac")[0].letters
    (2, 1, 3, 1, 3, 1, 2, 1, 3)
    """
    seq = list(symbols)
    if not seq:
        raise WordError("empty word")
    amap = AlphabetMap(tuple(sorted(set(seq))))
    idx = amap._index()
    letters = tuple(idx[s] + 1 for s in seq)
    return Word(letters, amap.size), amap


def restore(letters: Iterable[int], amap: AlphabetMap) -> list:
    """Inverse of :func:`normalize`, letterwise."""
    out = []
    fwd = amap.forward
    for x in letters:
        if not 1 <= x <= len(fwd):
            raise WordError(f"letter {x} out of range 1..{len(fwd)}")
        out.append(fwd[x - 1])
    return out


def restore_text(letters: Iterable[int], amap: AlphabetMap) -> str:
    return "".join(str(s) for s in restore(letters, amap))


def arch_ends_of(letters: Sequence[int], sigma: int) -> list[int]:
    """Greedy arch ends of a raw letter sequence w.r.t. the alphabet ``1..sigma``.

    Letters need not cover the whole alphabet (subwords, candidate witnesses).
    """
    ends = []
    seen = bytearray(sigma + 1)
    stamp = 1
    count = 0
    # stamp trick avoids clearing `seen` after each arch; wraps at 255
    for pos, a in enumerate(letters, 1):
        if seen[a] != stamp:
            seen[a] = stamp
            count += 1
            if count == sigma:
                ends.append(pos)
                count = 0
                stamp += 1
                if stamp == 256:
                    seen = bytearray(sigma + 1)
                    stamp = 1
    return ends


def arch_factorize(w: Word) -> ArchFactorization:
    ends = arch_ends_of(w.letters, w.sigma)
    return ArchFactorization(tuple(ends), (ends[-1] if ends else 0) + 1)


def universality_index(w: Word) -> int:
    return len(arch_ends_of(w.letters, w.sigma))


def index_of(letters: Sequence[int], sigma: int) -> int:
    return len(arch_ends_of(letters, sigma))


def is_k_universal(w: Word, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    return universality_index(w) >= k
