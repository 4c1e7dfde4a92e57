from __future__ import annotations

from fractions import Fraction

from wedcs.fractional import (
    CoverValue,
    DenominatorTally,
    edge_weight,
    fractional_size,
    scaled_cover,
    vertex_cover_value,
    vertex_loads,
    verify_feasibility_and_slackness,
)
from wedcs.lowerbound import build_instance
from wedcs.oracles import validate_edcs
from wedcs.maintainer import WedcsParams
from wedcs.pipeline import make_maintainer
from wedcs.snapshot import Snapshot
from wedcs.streams import random_bipartite


def test_edge_weights():
    assert 2 * edge_weight(2, 2) == 1
    assert edge_weight(3, 5) == Fraction(1, 5)


def test_cover_values():
    assert vertex_cover_value(0, 36) == CoverValue(Fraction(-35, 2), Fraction(0))
    assert vertex_cover_value(18, 36).x == Fraction(73, 144)
    assert vertex_cover_value(36, 36).x == 1
    for beta in (4, 5, 36, 144):
        for d in range(beta + 1):
            assert scaled_cover(d, beta) == 4 * beta * vertex_cover_value(d, beta).x


def test_tally_matches_fractions():
    t = DenominatorTally(10)
    t.shift(0, 4, 3)
    t.shift(0, 6, 2)
    t.shift(4, 5, 1)
    assert t.value() == Fraction(2, 4) + Fraction(1, 5) + Fraction(2, 6)
    assert abs(t.approx() - float(t.value())) < 1e-12
    t.shift(5, 0, 1)
    assert t.value() == Fraction(1, 2) + Fraction(1, 3)


def test_two_copy_edge_size_one():
    snap = Snapshot.build(2, 5, [(0, 1)], {(0, 1): 2})
    assert fractional_size(snap) == 1
    assert vertex_loads(snap) == [1, 1]


def test_regular_h_size():
    # 3-regular bipartite H on 2k = 8 vertices: every vertex saturated
    k, beta = 4, 6
    h = {(i, k + (i + j) % k): 1 for i in range(k) for j in range(3)}
    snap = Snapshot.build(2 * k, beta, list(h), h)
    assert fractional_size(snap) == k


def test_removing_last_copy(backend):
    p = WedcsParams.from_epsilon("0.5", beta=4)
    w = make_maintainer(3, p, 1, backend=backend)
    w.insert_edge(0, 1)
    w.insert_edge(0, 2)
    before = w.mu_tilde()
    w.delete_vertex(2)
    assert w.multiplicity(0, 2) == 0
    assert w.mu_tilde() == fractional_size(w.snapshot())
    assert w.mu_tilde() <= before


def test_empty_passes():
    rep = verify_feasibility_and_slackness(Snapshot.build(0, 4, [], {}))
    assert rep.passed and rep.f_size == 0


def test_lowerbound_gamma2_passes():
    rep = verify_feasibility_and_slackness(build_instance(2).snapshot(), "all")
    assert rep.passed, rep.failures()


def test_maintainer_state_passes(backend):
    p = WedcsParams.from_epsilon("0.3")
    header, events = random_bipartite(15, 15, 90, seed=11)
    w = make_maintainer(header.n, p, header.n_left, backend=backend)
    for ev in events:
        w.insert_edge(ev.u, ev.v)
    rep = verify_feasibility_and_slackness(w.snapshot(), "clean")
    assert rep.passed, rep.failures()


def test_violations_are_reported():
    # a lone copy leaves both endpoints far below beta: cover misses the edge
    snap = Snapshot.build(2, 16, [(0, 1)], {(0, 1): 1})
    rep = verify_feasibility_and_slackness(snap)
    assert rep.uncovered == [(0, 1)]
    assert not rep.passed and rep.failures()
    # support outside G is inconsistent rather than silently accepted
    snap = Snapshot.build(3, 4, [(0, 1)], {(0, 1): 2, (0, 2): 1})
    assert validate_edcs(snap).inconsistent
