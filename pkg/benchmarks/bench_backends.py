"""Compiled kernels vs the pure-Python fallback on the three distance DPs.

    python benchmarks/bench_backends.py --n 2000 20000 --k 20 --sigma 26

Each cell is the best of ``--repeat`` runs.  Words are drawn so that the
universality index stays below k (a skewed letter distribution), which is the
regime where the insertion and substitution DPs actually run.
"""

import argparse
import random
import time

from univdist import Word, universality_index
from univdist import _backend
from univdist.distances import delete_distance, insert_distance, subst_distance


def low_index_word(n, sigma, seed):
    rng = random.Random(seed)
    # letter sigma is rare, so arches are long
    letters = list(range(1, sigma + 1))
    letters += [rng.randint(1, sigma - 1) if sigma > 1 and rng.random() > 2 / n else sigma
                for _ in range(n - sigma)]
    rng.shuffle(letters)
    return Word.from_letters(letters)


def uniform_word(n, sigma, seed):
    rng = random.Random(seed)
    letters = list(range(1, sigma + 1)) + [rng.randint(1, sigma) for _ in range(n - sigma)]
    rng.shuffle(letters)
    return Word.from_letters(letters)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[2000, 10000])
    ap.add_argument("--k", type=int, default=20)
    ap.add_argument("--sigma", type=int, default=26)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = _backend.available()
    print(f"k={args.k} sigma={args.sigma} backends={','.join(backends)}")
    header = f"{'n':>8} {'op':7} {'iota':>5} " + " ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for n in args.n:
        low = low_index_word(n, args.sigma, args.seed)
        uni = uniform_word(n, args.sigma, args.seed)
        cases = [("insert", low, insert_distance), ("subst", low, subst_distance)]
        k_del = min(args.k, universality_index(uni))
        cases.append(("delete", uni, delete_distance))
        for op, w, fn in cases:
            k = k_del if op == "delete" else args.k
            times = [best_of(lambda: fn(w, k, backend=b), args.repeat) for b in backends]
            row = f"{n:>8} {op:7} {universality_index(w):>5} " + " ".join(f"{t:10.4f}" for t in times)
            if len(times) == 2:
                py, c = times[backends.index("python")], times[backends.index("cython")]
                row += f" {py / c:8.1f}x"
            print(row)


if __name__ == "__main__":
    main()
