from __future__ import annotations

import pytest

from wedcs.graph import DynamicGraph, GraphError, WedcsMultiset


def test_first_insertion():
    g = DynamicGraph(2, 1)
    e = g.add_edge(0, 1)
    assert g.m == 1
    assert list(g.live_incident(0)) == [e]


def test_duplicate_rejected():
    g = DynamicGraph(2, 1)
    g.add_edge(0, 1)
    with pytest.raises(GraphError, match="duplicate"):
        g.add_edge(1, 0)


def test_same_side_rejected():
    g = DynamicGraph(4, 2)
    with pytest.raises(GraphError, match="same side"):
        g.add_edge(0, 1)


def test_self_loop_and_range():
    g = DynamicGraph(3)
    with pytest.raises(GraphError):
        g.add_edge(1, 1)
    with pytest.raises(GraphError):
        g.add_edge(0, 3)


def test_delete_isolated_vertex():
    g = DynamicGraph(3)
    assert g.delete_vertex(2) == []
    with pytest.raises(GraphError, match="deleted"):
        g.delete_vertex(2)
    with pytest.raises(GraphError):
        g.add_edge(0, 2)


def test_delete_path_middle():
    g = DynamicGraph(3)
    a, v, b = 0, 1, 2
    e1, e2 = g.add_edge(a, v), g.add_edge(v, b)
    assert sorted(g.delete_vertex(v)) == [e1, e2]
    assert g.live_edges() == []
    assert list(g.live_incident(a)) == []
    assert g.degree(b) == 0


def test_lazy_dead_entries_skipped():
    g = DynamicGraph(5)
    v, b, c, d, x = range(5)
    g.add_edge(v, b)
    keep = g.add_edge(v, c)
    g.add_edge(v, d)
    g.add_edge(b, x)
    g.delete_vertex(b)
    # one dead entry out of three: not compacted yet
    assert len(g.adj[v]) == 3
    assert list(g.live_incident(v)) == [keep, keep + 1]
    g.delete_vertex(d)
    assert g.adj[v] == [keep]


def test_multiset_bookkeeping():
    h = WedcsMultiset(3)
    v, a, b = 0, 1, 2
    h.change(0, v, a, 2)
    h.change(1, v, b, 1)
    assert (h.deg[v], h.deg[a], h.deg[b], h.size) == (3, 2, 1, 3)
    assert sorted(h.adj[v]) == [0, 1]
    h.change(0, v, a, -2)
    assert (h.deg[v], h.deg[a], h.size) == (1, 0, 1)
    assert h.adj[v] == [1] and h.adj[a] == []
    assert h.multiplicity(0) == 0
