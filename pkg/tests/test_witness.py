import random

import pytest
from hypothesis import given, strategies as st

from univdist import (InfeasibleTarget, Word, delete_witness, distance, full_matrix_boundaries,
                      hirschberg_boundaries, insert_witness, normalize, subst_witness, universality_index,
                      verify, witness)
from univdist import _backend
from univdist.oracle import oracle_is_k_universal
from univdist.witness import WitnessWord, solution_cost

from conftest import random_word

BACKENDS = _backend.available()
W = normalize("bacacabac")[0]



def check(w, k, op, backend=None):
    cost, wit = witness(w, k, op, backend)
    cand = wit.materialize()
    v = verify(w, k, op, cand, backend)
    assert v.ok, v.reason
    assert cost == v.cost == distance(w, k, op, force_generic=True, backend=backend).cost
    return cost, cand


@pytest.mark.parametrize("backend", BACKENDS)
def test_examples(backend):
    assert check(normalize("aabb")[0], 2, "insert", backend)[0] == 1
    assert check(W, 2, "insert", backend) == (0, W.letters)
    cost, cand = check(normalize("ab")[0], 3, "insert", backend)
    assert cost == 4 and len(cand) == 6
    assert check(W, 1, "delete", backend)[0] == 1
    assert check(W, 2, "delete", backend) == (0, W.letters)
    cost, cand = check(W, 0, "delete", backend)
    assert cost == 2 and 2 not in cand
    assert check(normalize("aabb")[0], 2, "subst", backend)[0] == 2
    assert check(W, 3, "subst", backend)[0] == 1
    abc = normalize("abcabc")[0]
    assert check(abc, 2, "subst", backend) == (0, abc.letters)


def test_errors():
    with pytest.raises(InfeasibleTarget):
        delete_witness(W, 3)
    with pytest.raises(InfeasibleTarget):
        subst_witness(W, 4)
    with pytest.raises(InfeasibleTarget):
        subst_witness(normalize("aaa")[0], 1)


def test_verify_rejections():
    ab = normalize("ab")[0]
    assert not verify(ab, 3, "insert", [1, 2, 1, 2]).ok
    assert not verify(ab, 3, "insert", [1, 2, 1, 2, 1, 2, 1, 2]).ok
    assert not verify(ab, 3, "insert", [2, 2, 1, 1, 2, 1]).ok
    assert not verify(W, 1, "delete", list(W.letters)).ok
    assert not verify(W, 3, "subst", [1] * 9).ok
    assert not verify(W, 3, "subst", [1, 2, 3]).ok
    assert not verify(ab, 1, "insert", [1, 2, 7]).ok


def test_boundary_examples():
    sol = hirschberg_boundaries(W, 2, "insert")
    assert sol.cost == 0 and sol.ends[-1] == W.n
    assert solution_cost(W.letters, 3, sol) == 0
    assert hirschberg_boundaries(normalize("aabb")[0], 2, "insert").cost == 1


def test_huge_k_is_lazy():
    cost, wit = insert_witness(normalize("ab")[0], 10**18)
    assert cost == 2 * 10**18 - 2
    assert wit.length == 2 * 10**18
    head = next(iter(wit.chunks(64)))
    assert len(head) <= 64
    with pytest.raises(OverflowError):
        wit.materialize()


def test_witness_word_chunks():
    ww = WitnessWord((1, 2), (1, 2, 3), 5)
    assert sum(ww.chunks(4), ()) == tuple(ww) == (1, 2) + (1, 2, 3) * 5
    assert ww.length == 17


@pytest.mark.parametrize("backend", BACKENDS)
def test_random_instances(backend):
    rng = random.Random(31)
    for _ in range(300):
        s = rng.randint(1, 8)
        w = random_word(rng, rng.randint(s, 300 if backend == "cython" else 80), s)
        for op in ("insert", "delete", "subst"):
            k = rng.randint(0, w.n // s + 2)
            try:
                check(w, k, op, backend)
            except InfeasibleTarget:
                pass


def test_hirschberg_equals_full_matrix():
    rng = random.Random(41)
    done = 0
    while done < 200:
        s = rng.randint(2, 6)
        w = random_word(rng, rng.randint(s, 60), s)
        op = rng.choice(["insert", "delete", "subst"])
        k = rng.randint(0, min(w.n, w.n // s + 2))
        try:
            a = hirschberg_boundaries(w, k, op)
        except InfeasibleTarget:
            continue
        b = full_matrix_boundaries(w, k, op)
        assert a.cost == b.cost
        done += 1


@given(st.lists(st.integers(1, 3), min_size=1, max_size=9), st.integers(0, 4),
       st.sampled_from(["insert", "delete", "subst"]))
def test_small_witnesses_pass_spectrum_oracle(xs, k, op):
    w = normalize(xs)[0]
    try:
        cost, wit = witness(w, k, op)
    except InfeasibleTarget:
        return
    cand = wit.materialize()
    if len(cand) <= 10 and k <= 3:
        assert oracle_is_k_universal(cand, k, w.sigma)
