"""Interval union-find, range-minimum index and the min-suffix list.

Infinity is ``math.inf``: it compares above every int and survives
arithmetic unchanged, which is exactly what the dynamic programs need.
"""

from __future__ import annotations

import math
from typing import Any, Sequence

INF = math.inf

_WORD = 64
_FULL = (1 << _WORD) - 1


class StructureError(ValueError):
    pass


class IntervalUnionFind:
    """Ordered partition of ``[1:N]`` into intervals, merged only by neighbours.

    Borders are kept as bits in 64-position microsets, so ``find`` inside a
    microset is a mask and a lowest-bit lookup.  Empty microsets are skipped
    through a path-halving forest over microset indices.  Position ``N + 1``
    is a permanent implicit border closing the last interval.
    """

    def __init__(self, size: int, borders: Sequence[int] = (), satellites: Sequence[Any] | None = None):
        if size < 1:
            raise StructureError("universe size must be positive")
        prev = 0
        for b in borders:
            if b <= prev:
                raise StructureError("borders must be strictly increasing")
            prev = b
        if prev > size:
            raise StructureError("border outside universe")
        self.size = size
        nw = (size + 1) // _WORD + 1
        self._mask = [0] * nw
        self._up = list(range(nw + 1))
        allb = list(borders)
        if not allb or allb[-1] != size + 1:
            allb.append(size + 1)
        self._start = {}
        self._sat = {}
        if satellites is not None and len(satellites) != len(allb):
            # one payload per interval; the trailing interval may be empty
            if len(satellites) == len(allb) - 1:
                satellites = list(satellites) + [None]
            else:
                raise StructureError("need one satellite per interval")
        s = 1
        for idx, b in enumerate(allb):
            self._mask[b >> 6] |= 1 << (b & 63)
            self._start[b] = s
            self._sat[b] = None if satellites is None else satellites[idx]
            s = b + 1
        for i in range(nw):
            if not self._mask[i]:
                self._up[i] = i + 1
        self.finds = 0
        self.unions = 0

    def _next_word(self, i: int) -> int:
        up = self._up
        while up[i] != i:
            up[i] = up[up[i]]
            i = up[i]
        return i

    def _border_at_or_after(self, u: int) -> int:
        i = u >> 6
        m = self._mask[i] & (_FULL << (u & 63))
        if not m:
            i = self._next_word(i + 1)
            m = self._mask[i]
        return (i << 6) + ((m & -m).bit_length() - 1)

    def find(self, u: int) -> tuple[int, int, Any]:
        """Return ``(start, end, satellite)`` of the interval holding ``u``."""
        if not 1 <= u <= self.size:
            raise StructureError(f"position {u} outside [1:{self.size}]")
        self.finds += 1
        b = self._border_at_or_after(u)
        return self._start[b], min(b, self.size), self._sat[b]

    def is_border(self, u: int) -> bool:
        return 1 <= u <= self.size and bool(self._mask[u >> 6] >> (u & 63) & 1)

    def union(self, u: int, satellite: Any = None) -> None:
        """Merge the interval ending at border ``u`` with its right neighbour."""
        if not self.is_border(u):
            raise StructureError(f"{u} is not a border")
        self.unions += 1
        i = u >> 6
        self._mask[i] &= ~(1 << (u & 63))
        if not self._mask[i]:
            self._up[i] = i + 1
        nxt = self._border_at_or_after(u + 1)
        self._start[nxt] = self._start.pop(u)
        del self._sat[u]
        self._sat[nxt] = satellite

    def set_satellite(self, u: int, satellite: Any) -> None:
        b = self._border_at_or_after(u)
        self._sat[b] = satellite

    def intervals(self) -> list[tuple[int, int]]:
        out = []
        for b in sorted(self._start):
            s = self._start[b]
            if s <= self.size:
                out.append((s, min(b, self.size)))
        return out


class RmqIndex:
    """Leftmost range-minimum positions, 1-based, O(n) build and O(1) query.

    Blocks of 64: in-block answers come from per-position stack bitmasks,
    cross-block answers from a sparse table over block minima.
    """

    def __init__(self, values: Sequence):
        a = list(values)
        if not a:
            raise StructureError("empty array")
        self._a = a
        n = len(a)
        masks = [0] * n
        for bs in range(0, n, _WORD):
            cur = 0
            for i in range(bs, min(bs + _WORD, n)):
                v = a[i]
                while cur:
                    top = cur.bit_length() - 1
                    if a[bs + top] > v:
                        cur ^= 1 << top
                    else:
                        break
                cur |= 1 << (i - bs)
                masks[i] = cur
        self._masks = masks
        nb = (n + _WORD - 1) // _WORD
        level = [self._inblock(b * _WORD, min(n, b * _WORD + _WORD) - 1) for b in range(nb)]
        table = [level]
        span = 1
        while 2 * span <= nb:
            prev = table[-1]
            nxt = []
            for b in range(nb - 2 * span + 1):
                x, y = prev[b], prev[b + span]
                nxt.append(y if a[y] < a[x] else x)
            table.append(nxt)
            span *= 2
        self._table = table

    def __len__(self) -> int:
        return len(self._a)

    def _inblock(self, lo: int, hi: int) -> int:
        bs = lo - lo % _WORD
        m = self._masks[hi] >> (lo - bs)
        return lo + ((m & -m).bit_length() - 1)

    def query(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= len(self._a):
            raise StructureError(f"bad range [{i}:{j}]")
        lo, hi = i - 1, j - 1
        bl, bh = lo // _WORD, hi // _WORD
        if bl == bh:
            return self._inblock(lo, hi) + 1
        a = self._a
        best = self._inblock(lo, bl * _WORD + _WORD - 1)
        if bh - bl > 1:
            x, y = bl + 1, bh - 1
            lev = (y - x + 1).bit_length() - 1
            row = self._table[lev]
            p, q = row[x], row[y - (1 << lev) + 1]
            mid = q if a[q] < a[p] else p
            if a[mid] < a[best]:
                best = mid
        r = self._inblock(bh * _WORD, hi)
        if a[r] < a[best]:
            best = r
        return best + 1

    def value(self, i: int):
        return self._a[i - 1]


class MinSuffixList:
    """List supporting rightmost-min, suffix decrement and append.

    Each interval ``[x:y]`` of the internal union-find stores ``A[y] - A[x-1]``
    (``A[0] = 0``).  An all-infinite tail forms one interval whose stored
    difference is infinite; the finite value just before it is kept in
    ``_fin`` so appends can keep walking left.
    """

    def __init__(self, initial: Sequence, satellites: Sequence | None = None, capacity: int | None = None):
        s0 = len(initial)
        if s0 < 1:
            raise StructureError("need at least one initial value")
        cap = 2 * s0 if capacity is None else capacity
        if cap < s0:
            raise StructureError("capacity below initial size")
        self._cap = cap
        self._appends_left = cap - s0
        self._satpos = [None] * (cap + 1)
        if satellites is not None:
            for i, s in enumerate(satellites, 1):
                self._satpos[i] = s
        vals = list(initial)
        # suffix-minimum chain, rightmost on ties
        borders = []
        cur = vals[-1]
        borders.append(s0)
        for t in range(s0 - 1, 0, -1):
            if vals[t - 1] < cur:
                cur = vals[t - 1]
                borders.append(t)
        borders.reverse()
        diffs = []
        prev = 0
        self._fin = None
        for b in borders:
            v = vals[b - 1]
            if v == INF:
                diffs.append(INF)
                self._fin = prev
            else:
                diffs.append(v - prev)
                prev = v
        all_b = borders + list(range(s0 + 1, cap + 1))
        diffs += [None] * (cap - s0)
        self._uf = IntervalUnionFind(cap, all_b, diffs + [None])
        self.m = s0
        self.last = vals[-1]

    @property
    def ops(self) -> int:
        return self._uf.finds + self._uf.unions

    def min(self) -> tuple[int, Any, Any]:
        """``(position, value, satellite)`` of the rightmost minimum."""
        _, y, d = self._uf.find(1)
        return y, d, self._satpos[y]

    def decrement_suffix(self, j: int) -> None:
        if not 1 <= j <= self.m:
            raise StructureError(f"position {j} outside [1:{self.m}]")
        uf = self._uf
        x, y, d = uf.find(j)
        if d == INF:
            return
        if self.last == INF:
            self._fin -= 1
        else:
            self.last -= 1
        d -= 1
        if x > 1 and d == 0:
            _, _, dprev = uf.find(x - 1)
            uf.union(x - 1, dprev)
        else:
            uf.set_satellite(y, d)

    def append(self, x, satellite: Any = None) -> None:
        if self._appends_left <= 0:
            raise StructureError("capacity exceeded")
        self._appends_left -= 1
        uf = self._uf
        t = self.m
        q = self.last
        while t >= 1 and q >= x:
            z, _, d = uf.find(t)
            uf.union(t)
            q = self._fin if d == INF else q - d
            t = z - 1
        if t < 1:
            q = 0
        if x == INF:
            d = INF
            self._fin = q
        else:
            d = x - q
        self.m += 1
        uf.set_satellite(self.m, d)
        self._satpos[self.m] = satellite
        self.last = x


def naive_rmq(values: Sequence, i: int, j: int) -> int:
    best = i
    for t in range(i, j + 1):
        if values[t - 1] < values[best - 1]:
            best = t
    return best
