from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from wedcs.fractional import fractional_size, verify_feasibility_and_slackness
from wedcs.hk import BipartiteView, hk_exact
from wedcs.maintainer import WedcsParams
from wedcs.oracles import exhaustive_mu, validate_edcs
from wedcs.pipeline import make_maintainer

from conftest import BACKENDS as AVAILABLE


@st.composite
def streams(draw, max_side=6, allow_deletions=True):
    nl = draw(st.integers(1, max_side))
    nr = draw(st.integers(1, max_side))
    pairs = draw(st.permutations([(a, nl + b) for a in range(nl) for b in range(nr)]))
    pairs = pairs[: draw(st.integers(0, len(pairs)))]
    ops: list[tuple] = [("ie", u, v) for u, v in pairs]
    if allow_deletions:
        for v in draw(st.lists(st.integers(0, nl + nr - 1), max_size=3, unique=True)):
            ops.insert(draw(st.integers(0, len(ops))), ("dv", v))
    beta = draw(st.sampled_from([3, 4, 5, 8, 12]))
    cap = draw(st.sampled_from([None, 1, 2, 5]))
    return nl, nr, ops, beta, cap


def replay(ops, w):
    dead: set[int] = set()
    for op in ops:
        if op[0] == "dv":
            if op[1] in dead:
                continue
            dead.add(op[1])
            w.delete_vertex(op[1])
        else:
            if op[1] in dead or op[2] in dead:
                continue
            w.insert_edge(op[1], op[2])
        yield w


@settings(max_examples=120, deadline=None)
@given(streams())
def test_every_quiescent_state_certifies(case):
    nl, nr, ops, beta, cap = case
    p = WedcsParams.from_epsilon("0.5", beta=beta, visit_cap=cap)
    w = make_maintainer(nl + nr, p, nl, backend=AVAILABLE[-1])
    for w in replay(ops, w):
        snap = w.snapshot()
        assert validate_edcs(snap, "clean").passed
        assert w.mu_tilde() == fractional_size(snap)
        assert all(w.deg_h(v) <= beta - 1 for v in range(w.n))
        assert verify_feasibility_and_slackness(snap, "clean").passed
        assert w.counters().fix_vertex_calls <= 2 * w.counters().h_updates
        assert w.max_edge_scans() <= 2 * p.visit_cap


@settings(max_examples=60, deadline=None)
@given(streams(max_side=5))
def test_backends_agree(case):
    if len(AVAILABLE) < 2:
        return
    nl, nr, ops, beta, cap = case
    p = WedcsParams.from_epsilon("0.5", beta=beta, visit_cap=cap)
    runs = [list(_trace(ops, make_maintainer(nl + nr, p, nl, backend=b))) for b in AVAILABLE]
    assert runs[0] == runs[1]


def _trace(ops, w):
    for w in replay(ops, w):
        yield (w.h_edges(), w.visit_counts(), w.counters(), w.mu_tilde(), w.potential())


@settings(max_examples=80, deadline=None)
@given(streams(allow_deletions=False))
def test_potential_strictly_increases(case):
    nl, nr, ops, beta, cap = case
    p = WedcsParams.from_epsilon("0.5", beta=beta, visit_cap=cap)
    seen: list[int] = []
    box: list = []
    w = make_maintainer(nl + nr, p, nl, on_change=lambda u, v, d: seen.append(box[0].potential()), backend=AVAILABLE[-1])
    box.append(w)
    last = 0
    for w in replay(ops, w):
        for phi in seen:
            assert phi >= last + 1
            last = phi
        seen.clear()
        assert w.potential() <= beta * w.size_h


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 20).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=40))
))
def test_exhaustive_upper_bounds_any_matching(case):
    n, raw = case
    edges = sorted({(min(u, v), max(u, v)) for u, v in raw if u != v})
    mu = exhaustive_mu(n, edges)
    used: set[int] = set()
    greedy = 0
    for u, v in edges:
        if u not in used and v not in used:
            used |= {u, v}
            greedy += 1
    assert greedy <= mu <= 2 * greedy
    try:
        view = BipartiteView.from_edges(n, edges)
    except ValueError:
        return
    assert hk_exact(view).size == mu
