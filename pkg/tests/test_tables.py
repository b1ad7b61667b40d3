import itertools
import random

import pytest

from univdist import Word, deletion_tables, normalize, prefix_distinct, sampled_last_d, window_distinct
from univdist import _backend

from conftest import random_word

BACKENDS = _backend.available()


# -- brute-force recomputation ----------------------------------------------------

def bf_last(letters, i, a):
    """last_i[a]: last position <= i holding a, n+1 if none."""
    for p in range(i, 0, -1):
        if letters[p - 1] == a:
            return p
    return len(letters) + 1


def bf_tables(w: Word):
    L, s, n = w.letters, w.sigma, w.n
    full = set(range(1, s + 1))
    delta1 = [len(set(L[:ell])) for ell in range(1, n + 1)]
    deltaw = [len(set(L[i - s:i])) for i in range(s, n + 1)]
    samples = list(range(1, n + 1, s))
    lasts = [[bf_last(L, p, a) for a in range(1, s + 1)] for p in samples]
    ds = [[len(set(L[lp - 1:p])) if lp <= n else 0 for lp in row] for p, row in zip(samples, lasts)]
    univ = [max([j for j in range(1, i + 1) if set(L[j - 1:i]) >= full], default=0) for i in range(1, n + 1)]
    freq = [L[:i].count(L[i - 1]) for i in range(1, n + 1)]
    T = [min(L[i:].count(a) for a in range(1, s + 1)) for i in range(n + 1)]
    lp = [bf_last(L, i - 1, L[i - 1]) for i in range(1, n + 1)]
    laa = [bf_last(L, univ[i - 1] - 1, L[i - 1]) if univ[i - 1] else n + 1 for i in range(1, n + 1)]
    return delta1, deltaw, (samples, lasts, ds), univ, freq, T, lp, laa


def assert_tables(w, backend):
    delta1, deltaw, (samples, lasts, ds), univ, freq, T, lp, laa = bf_tables(w)
    assert list(prefix_distinct(w, backend).delta1) == delta1
    assert list(window_distinct(w, backend).deltaw) == deltaw
    sl = sampled_last_d(w, backend)
    assert list(sl.samples) == samples
    assert [list(x) for x in sl.last] == lasts
    assert [list(x) for x in sl.d] == ds
    dt = deletion_tables(w, backend)
    assert list(dt.univ) == univ
    assert list(dt.freq) == freq
    assert list(dt.T) == T
    assert list(dt.last_prev) == lp
    for i in range(1, w.n + 1):
        if univ[i - 1]:
            assert dt.last_at_arch[i - 1] == laa[i - 1]
    # L_j are exactly the maximal runs of equal nonzero univ values
    runs = {}
    for i, j in enumerate(univ, 1):
        if j:
            s, _ = runs.get(j, (i, i))
            runs[j] = (s, i)
    assert dt.L == runs
    assert dt.V == frozenset(univ)


# -- worked example -------------------------------------------------------------

@pytest.mark.parametrize("backend", BACKENDS)
def test_golden_example(backend):
    w, _ = normalize("bacacabac")
    assert prefix_distinct(w, backend).delta1 == (1, 2, 3, 3, 3, 3, 3, 3, 3)
    wd = window_distinct(w, backend)
    assert [wd.at(i) for i in range(3, 10)] == [3, 2, 2, 2, 3, 2, 3]
    sl = sampled_last_d(w, backend)
    assert sl.samples == (1, 4, 7)
    # letters a=1, b=2, c=3
    assert sl.at(4) == ((4, 1, 3), (1, 3, 2))
    assert sl.at(7) == ((6, 7, 5), (2, 1, 3))
    assert sl.at(1) == ((10, 1, 10), (0, 1, 0))
    dt = deletion_tables(w, backend)
    assert dt.univ == (0, 0, 1, 1, 1, 1, 5, 5, 7)
    assert dt.V == {0, 1, 5, 7}
    assert dt.L == {1: (3, 6), 5: (7, 8), 7: (9, 9)}
    assert dt.freq == (1, 1, 1, 2, 2, 3, 2, 4, 3)
    assert dt.T == (2, 1, 1, 1, 1, 1, 1, 0, 0, 0)
    assert dt.last_prev == (10, 10, 10, 2, 3, 4, 1, 6, 5)
    assert dt.arch_table(5, w.letters) == {2: 1, 1: 4}
    assert dt.arch_table(7, w.letters) == {3: 5}
    assert set(dt.arch_table(1, w.letters).values()) == {10}


@pytest.mark.parametrize("backend", BACKENDS)
def test_small_cases(backend):
    w = normalize("aa")[0]
    assert prefix_distinct(w, backend).delta1 == (1, 1)
    assert window_distinct(w, backend).deltaw == (1, 1)
    assert prefix_distinct(normalize("abc")[0], backend).delta1 == (1, 2, 3)
    assert window_distinct(normalize("abab")[0], backend).deltaw == (2, 2, 2)


@pytest.mark.parametrize("backend", BACKENDS)
def test_exhaustive_small_words(backend):
    for n in range(1, 10):
        for sigma in (1, 2, 3):
            if sigma > n:
                continue
            for letters in itertools.product(range(1, sigma + 1), repeat=n):
                if len(set(letters)) == sigma and (sigma < 3 or n <= 7):
                    assert_tables(Word.from_letters(letters), backend)


@pytest.mark.parametrize("backend", BACKENDS)
def test_random_words(backend):
    rng = random.Random(11)
    for _ in range(1000):
        sigma = rng.randint(1, 10)
        w = random_word(rng, rng.randint(sigma, 200), sigma)
        assert_tables(w, backend)


@pytest.mark.parametrize("backend", BACKENDS)
def test_structural_properties(backend):
    rng = random.Random(5)
    for _ in range(300):
        sigma = rng.randint(1, 6)
        w = random_word(rng, rng.randint(sigma, 80), sigma)
        dt = deletion_tables(w, backend)
        for j, (s, e) in dt.L.items():
            for i in range(s, e + 1):
                assert w.letters[i - 1] != w.letters[j - 1] or sigma == 1 and i == j
            if e < w.n and sigma > 1:
                assert w.letters[e] == w.letters[j - 1]
        assert all(a >= b for a, b in zip(dt.T, dt.T[1:])) and dt.T[-1] == 0
        sl = sampled_last_d(w, backend)
        pd = prefix_distinct(w, backend)
        for p, d in zip(sl.samples, sl.d):
            g = pd.at(p)
            assert sorted(x for x in d if x) == list(range(1, g + 1))
