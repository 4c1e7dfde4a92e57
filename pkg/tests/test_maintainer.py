from __future__ import annotations

import random
from fractions import Fraction

import pytest

from wedcs.fractional import fractional_size
from wedcs.maintainer import WedcsParams
from wedcs.oracles import validate_edcs
from wedcs.pipeline import make_maintainer


def params(beta: int, eps="0.5", cap=None) -> WedcsParams:
    return WedcsParams.from_epsilon(eps, beta=beta, visit_cap=cap)


def test_params_from_epsilon():
    p = WedcsParams.from_epsilon(0.3)
    assert p.epsilon == Fraction(3, 10)
    assert p.beta == 400  # 36 / 0.09 exactly
    assert p.visit_cap == 2 * 400**2 * 10 // 3 + 1
    assert WedcsParams.from_epsilon("0.5").beta == 144
    assert p.meets_approximation_bound
    with pytest.raises(ValueError):
        WedcsParams.from_epsilon(0)
    with pytest.raises(ValueError):
        WedcsParams.from_epsilon(1.5)


def test_single_edge_beta5(backend):
    w = make_maintainer(2, params(5), 1, backend=backend)
    w.insert_edge(0, 1)
    assert w.multiplicity(0, 1) == 2
    assert (w.deg_h(0), w.deg_h(1)) == (2, 2)
    assert w.h_insertions + w.h_deletions == 2
    assert w.potential() == 10
    assert w.mu_tilde() == 1


def test_single_edge_beta4(backend):
    w = make_maintainer(2, params(4), 1, backend=backend)
    w.insert_edge(0, 1)
    assert w.h_edges() == [(0, 1, 2)]


def test_rebalance_beta4(backend):
    u, v1, v2 = 0, 1, 2
    w = make_maintainer(3, params(4), 1, backend=backend)
    w.insert_edge(u, v1)
    assert w.multiplicity(u, v1) == 2
    w.insert_edge(u, v2)
    assert w.h_edges() == [(u, v1, 1), (u, v2, 1)]
    assert w.deg_h(u) + w.deg_h(v1) == 3
    assert w.deg_h(u) + w.deg_h(v2) == 3


def test_saturated_insertion_is_noop(backend):
    w = make_maintainer(4, params(4), 2, backend=backend)
    w.insert_edge(0, 2)
    w.insert_edge(1, 3)
    before = w.counters()
    w.insert_edge(0, 3)  # sum 2 + 2 >= beta - 1
    after = w.counters()
    assert after.h_updates == before.h_updates
    assert after.fix_vertex_calls == before.fix_vertex_calls


def test_star_center_degree(backend):
    k = 12
    w = make_maintainer(k + 1, params(4), 1, backend=backend)
    for j in range(1, k + 1):
        w.insert_edge(0, j)
        assert w.deg_h(0) <= 4
        assert len(w.h_neighbors(0)) <= 4
    assert w.deg_h(0) in (3, 4)


def test_dirty_branch_at_threshold(backend):
    # visit cap 1: the first activation already takes the H-only branch
    w = make_maintainer(3, params(4, cap=1), 1, backend=backend)
    w.insert_edge(0, 1)
    assert w.is_dirty(0) and w.is_dirty(1)
    assert w.counters().per_edge_scans == 0
    w.insert_edge(0, 2)
    assert w.max_edge_scans() == 0


def test_clean_vertex_scans_all_edges(backend):
    w = make_maintainer(4, params(6), 1, backend=backend)
    for j in (1, 2, 3):
        w.insert_edge(0, j)
    scans_before = w.counters().per_edge_scans
    calls_before = w.counters().fix_vertex_calls
    w.delete_vertex(1)
    c = w.counters()
    # vertex 0 is re-activated and scans its two live edges at least once
    assert c.fix_vertex_calls > calls_before
    assert c.per_edge_scans - scans_before >= 2


def test_delete_vertex_returns_h_neighbours(backend):
    w = make_maintainer(3, params(4), 1, backend=backend)
    w.insert_edge(0, 1)
    w.insert_edge(0, 2)
    h_before = w.size_h
    removed = dict(w.delete_vertex(0))
    assert sum(removed.values()) == h_before
    assert w.size_h == 0
    assert w.live_edges() == []
    assert not w.is_alive(0)
    assert w.mu_tilde() == 0


def test_delete_triangle_free_demo(backend):
    v, a, b, c = 0, 1, 2, 3
    w = make_maintainer(4, params(4), None, backend=backend)
    w.insert_edge(v, a)
    w.insert_edge(v, b)
    w.insert_edge(a, c)
    w.delete_vertex(v)
    rep = validate_edcs(w.snapshot(), "clean")
    assert rep.passed
    assert w.multiplicity(a, c) == 2


def test_delete_dead_vertex_rejected(backend):
    w = make_maintainer(2, params(4), 1, backend=backend)
    w.delete_vertex(0)
    with pytest.raises(ValueError):
        w.delete_vertex(0)


def test_potential_empty(backend):
    assert make_maintainer(3, params(4), None, backend=backend).potential() == 0


def _random_run(backend, seed, beta, n_left=8, n_right=8, m=40, deletions=0):
    rng = random.Random(seed)
    pairs = [(a, n_left + b) for a in range(n_left) for b in range(n_right)]
    rng.shuffle(pairs)
    w = make_maintainer(n_left + n_right, params(beta), n_left, backend=backend)
    dead: set[int] = set()
    for u, v in pairs[:m]:
        if u in dead or v in dead:
            continue
        w.insert_edge(u, v)
        yield w
        if deletions and rng.random() < deletions:
            x = rng.choice([x for x in range(w.n) if x not in dead])
            dead.add(x)
            w.delete_vertex(x)
            yield w


@pytest.mark.parametrize("seed", range(6))
def test_quiescent_invariants(backend, seed):
    beta = (4, 5, 8)[seed % 3]
    for w in _random_run(backend, seed, beta, deletions=0.1 if seed % 2 else 0):
        snap = w.snapshot()
        assert validate_edcs(snap, "clean").passed
        for u, v, _ in w.h_edges():
            assert beta - 1 <= w.deg_h(u) + w.deg_h(v) <= beta
        assert max(w.deg_h(x) for x in range(w.n)) <= beta - 1
        assert w.mu_tilde() == fractional_size(snap)
        assert abs(w.mu_tilde_float() - float(w.mu_tilde())) < 1e-9
        assert w.potential() <= beta * w.size_h


def test_h_support_adjacency(backend):
    w = make_maintainer(6, params(4), 3, backend=backend)
    for u, v in [(0, 3), (0, 4), (1, 4), (2, 5)]:
        w.insert_edge(u, v)
    adj = w.h_support_adjacency()
    expect = [[] for _ in range(3)]
    for u, v, _ in w.h_edges():
        expect[u].append(v - 3)
    assert adj == [sorted(x) for x in expect]
