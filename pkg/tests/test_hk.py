from __future__ import annotations

import random

import pytest

from wedcs import hk
from wedcs.hk import (
    BipartiteView,
    NotBipartiteError,
    hk_exact,
    hk_phases,
    hopcroft_karp_py,
    max_matching_size,
    phases_for,
)
from wedcs.lowerbound import build_instance
from wedcs.oracles import brute_force_matchings


def test_k22_one_phase():
    view = BipartiteView.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)], 2)
    assert hk_phases(view, 1).size == 2


def test_path_two_phases():
    view = BipartiteView.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert hk_phases(view, 2).size == 2


def test_empty_graph():
    assert hk_exact(BipartiteView.from_edges(0, [])).size == 0
    assert hk_exact(BipartiteView.from_edges(5, [], 2)).size == 0


def test_k33_minus_perfect_matching():
    edges = [(i, 3 + j) for i in range(3) for j in range(3) if i != j]
    assert hk_exact(BipartiteView.from_edges(6, edges, 3)).size == 3
    assert brute_force_matchings(6, edges) == 3


def test_lowerbound_gamma2_g():
    inst = build_instance(2)
    assert max_matching_size(inst.n, inst.edges, inst.n_left) >= 22


def test_odd_cycle_rejected():
    with pytest.raises(NotBipartiteError):
        BipartiteView.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NotBipartiteError):
        BipartiteView.from_edges(4, [(0, 1)], 2)


def test_phase_budget_validation():
    view = BipartiteView.from_edges(2, [(0, 1)], 1)
    with pytest.raises(ValueError):
        hk_phases(view, 0)
    assert phases_for("0.3") == 4
    assert phases_for("0.5") == 2


def _random_view(rng: random.Random, max_n=12):
    nl = rng.randint(0, max_n // 2)
    nr = rng.randint(0, max_n - nl)
    p = rng.random()
    edges = [(a, nl + b) for a in range(nl) for b in range(nr) if rng.random() < p]
    return nl + nr, nl, edges


def test_exact_against_brute_force():
    rng = random.Random(5)
    for _ in range(150):
        n, nl, edges = _random_view(rng, 10)
        if len(edges) > 18:
            edges = rng.sample(edges, 18)
        m = hk_exact(BipartiteView.from_edges(n, edges, nl))
        m.check(edges)
        assert m.size == brute_force_matchings(n, edges)


def test_phases_monotone_and_approximate():
    rng = random.Random(9)
    for _ in range(200):
        n, nl, edges = _random_view(rng, 16)
        view = BipartiteView.from_edges(n, edges, nl)
        mu = hk_exact(view).size
        sizes = [hk_phases(view, k).size for k in range(1, 6)]
        assert sizes == sorted(sizes)
        for k, s in enumerate(sizes, 1):
            # k phases leave no augmenting path shorter than 2k+1
            assert s >= k / (k + 1) * mu
        assert hk_phases(view, n + 1).size == mu


def test_python_reference_matches_core():
    if hk.core is None:
        pytest.skip("compiled core not built")
    rng = random.Random(2)
    for _ in range(200):
        n, nl, edges = _random_view(rng, 30)
        view = BipartiteView.from_edges(n, edges, nl)
        for phases in (1, 2, 3, None):
            ref = hopcroft_karp_py(view.adj, len(view.right), phases)
            got = hk.core.hopcroft_karp(view.adj, len(view.right), -1 if phases is None else phases)
            assert list(got) == ref


def test_matching_remove_vertex():
    m = hk_exact(BipartiteView.from_edges(4, [(0, 2), (1, 3)], 2))
    assert m.remove_vertex(2)
    assert m.size == 1
    assert not m.remove_vertex(2)
    assert m.pairs() == [(1, 3)]
