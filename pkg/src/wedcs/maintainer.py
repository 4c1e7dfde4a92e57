"""Pure-Python weighted-EDCS maintainer.

The compiled backend in ``wedcs._core`` implements the same class with the
same public surface and the same update order, so both backends produce
identical states for identical inputs.

Repairs run from an explicit LIFO agenda of pending vertex activations
instead of recursion: when an edge repair changes ``H``, activations for
``v`` and then ``u`` are pushed, so ``u`` is processed first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .fractional import DenominatorTally
from .graph import DynamicGraph, GraphError, WedcsMultiset
from .snapshot import Snapshot

ChangeHook = Callable[[int, int, int], None]


def exact(x) -> Fraction:
    """Decimal-faithful rational for a user-supplied epsilon (``0.3`` is 3/10)."""
    if isinstance(x, Fraction):
        return x
    return Fraction(str(x))


@dataclass(frozen=True)
class WedcsParams:
    epsilon: Fraction
    beta: int
    visit_cap: int

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.beta < 1:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.visit_cap < 1:
            raise ValueError(f"visit cap must be positive, got {self.visit_cap}")

    @classmethod
    def from_epsilon(cls, epsilon, beta: int | None = None, visit_cap: int | None = None):
        """Defaults: ``beta = ceil(36/eps^2)`` and ``visit_cap = ceil(2 beta^2 / eps)``."""
        eps = exact(epsilon)
        if not 0 < eps < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
        if beta is None:
            beta = math.ceil(36 / eps**2)
        if visit_cap is None:
            visit_cap = math.ceil(2 * beta * beta / eps)
        return cls(eps, beta, visit_cap)

    @property
    def meets_approximation_bound(self) -> bool:
        return self.beta * self.epsilon**2 >= 36


@dataclass(frozen=True)
class MaintainerCounters:
    h_insertions: int
    h_deletions: int
    fix_vertex_calls: int
    per_edge_scans: int

    @property
    def h_updates(self) -> int:
        return self.h_insertions + self.h_deletions


class WedcsMaintainer:
    """Maintains ``H`` under edge insertions and vertex deletions.

    Args:
        n: number of vertices (fixed up front).
        params: degree bound, epsilon and visit cap.
        n_left: left side size for bipartite inputs; ``None`` for general graphs.
        on_change: called as ``on_change(u, v, delta)`` after every change of
            an H multiplicity (``delta`` is +1/-1 for repairs and ``-phi``
            when a vertex deletion drops an edge).
    """

    backend = "python"

    def __init__(
        self,
        n: int,
        params: WedcsParams,
        n_left: int | None = None,
        on_change: ChangeHook | None = None,
    ):
        self.params = params
        self.beta = params.beta
        self.visit_cap = params.visit_cap
        self.graph = DynamicGraph(n, n_left)
        self.h = WedcsMultiset(n)
        self.tally = DenominatorTally(max(self.beta, 1))
        self.visits = [0] * n
        self.edge_scans: list[int] = []
        self.h_insertions = 0
        self.h_deletions = 0
        self.fix_vertex_calls = 0
        self.per_edge_scans = 0
        self.vertex_deletions = 0
        self._sumsq = 0
        self._agenda: list[int] = []
        self.on_change = on_change

    # -- queries ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def n_left(self) -> int | None:
        return self.graph.n_left

    @property
    def num_edges(self) -> int:
        return self.graph.m

    @property
    def size_h(self) -> int:
        return self.h.size

    def deg_h(self, v: int) -> int:
        return self.h.deg[v]

    def is_alive(self, v: int) -> bool:
        return self.graph.alive[v]

    def is_dirty(self, v: int) -> bool:
        return self.visits[v] >= self.visit_cap

    def visit_counts(self) -> list[int]:
        return list(self.visits)

    def dirty_count(self) -> int:
        cap = self.visit_cap
        return sum(1 for x in self.visits if x >= cap)

    def multiplicity(self, u: int, v: int) -> int:
        e = self.graph.find_edge(u, v)
        return 0 if e is None else self.h.multiplicity(e)

    def h_neighbors(self, v: int) -> list[int]:
        g = self.graph
        return [g.other(e, v) for e in self.h.adj[v]]

    def live_neighbors(self, v: int) -> list[int]:
        g = self.graph
        return [g.other(e, v) for e in g.live_incident(v)]

    def h_edges(self) -> list[tuple[int, int, int]]:
        g = self.graph
        return sorted(
            (min(g.eu[e], g.ev[e]), max(g.eu[e], g.ev[e]), k) for e, k in self.h.mult.items()
        )

    def live_edges(self) -> list[tuple[int, int]]:
        return self.graph.live_edges()

    def counters(self) -> MaintainerCounters:
        return MaintainerCounters(
            self.h_insertions, self.h_deletions, self.fix_vertex_calls, self.per_edge_scans
        )

    def max_edge_scans(self) -> int:
        return max(self.edge_scans, default=0)

    def potential(self) -> int:
        """``|H| (2 beta - 1) - sum over H-copies of the endpoint degree sum``."""
        # The copy sum equals the sum of squared H-degrees.
        return self.h.size * (2 * self.beta - 1) - self._sumsq

    def mu_tilde(self) -> Fraction:
        return self.tally.value()

    def mu_tilde_float(self) -> float:
        return self.tally.approx()

    def h_support_adjacency(self) -> list[list[int]]:
        """Sorted H-neighbours (right-side offsets) of every left vertex."""
        nl = self.graph.n_left
        if nl is None:
            raise GraphError("H support adjacency needs a bipartite graph")
        out = []
        for v in range(nl):
            out.append(sorted(w - nl for w in self.h_neighbors(v)))
        return out

    def snapshot(self) -> Snapshot:
        g = self.graph
        cap = self.visit_cap
        return Snapshot.build(
            g.n,
            self.beta,
            g.live_edges(),
            {(u, v): k for u, v, k in self.h_edges()},
            n_left=g.n_left,
            alive=g.alive,
            deg_h=self.h.deg,
            dirty=[v for v, x in enumerate(self.visits) if x >= cap],
        )

    # -- updates ---------------------------------------------------------

    def insert_edge(self, u: int, v: int) -> int:
        """Add ``(u, v)`` to the graph and repair ``H`` until quiescent."""
        e = self.graph.add_edge(u, v)
        self.edge_scans.append(0)
        self._fix_edge(e)
        self._drain()
        return e

    def delete_vertex(self, v: int) -> list[tuple[int, int]]:
        """Delete ``v``; return ``(former H-neighbour, multiplicity)`` pairs."""
        g, h = self.graph, self.h
        g.delete_vertex(v)
        self.vertex_deletions += 1
        removed = []
        for e in list(h.adj[v]):
            k = h.mult[e]
            removed.append((g.other(e, v), k))
            self._change(e, -k)
            self.h_deletions += k
        for w, _ in reversed(removed):
            self._agenda.append(w)
        self._drain()
        return removed

    # -- repair steps ----------------------------------------------------

    def _change(self, e: int, delta: int) -> None:
        g, h, tally = self.graph, self.h, self.tally
        u, v = g.eu[e], g.ev[e]
        deg = h.deg
        du, dv = deg[u], deg[v]
        nu, nv = du + delta, dv + delta
        for x, dx, nx in ((u, du, nu), (v, dv, nv)):
            for f in h.adj[x]:
                if f == e:
                    continue
                dw = deg[g.other(f, x)]
                tally.shift(max(dx, dw), max(nx, dw), h.mult[f])
        old = h.mult.get(e, 0)
        if old:
            tally.shift(max(du, dv), 0, old)
        if old + delta:
            tally.shift(0, max(nu, nv), old + delta)
        h.change(e, u, v, delta)
        self._sumsq += nu * nu - du * du + nv * nv - dv * dv
        if self.on_change is not None:
            self.on_change(u, v, delta)

    def _fix_edge(self, e: int) -> bool:
        g, h = self.graph, self.h
        u, v = g.eu[e], g.ev[e]
        s = h.deg[u] + h.deg[v]
        if s > self.beta and e in h.mult:
            self._change(e, -1)
            self.h_deletions += 1
        elif s < self.beta - 1:
            self._change(e, 1)
            self.h_insertions += 1
        else:
            return False
        self._agenda.append(v)
        self._agenda.append(u)
        return True

    def _fix_vertex(self, v: int) -> None:
        g = self.graph
        if not g.alive[v]:
            return
        self.visits[v] += 1
        self.fix_vertex_calls += 1
        if self.visits[v] < self.visit_cap:
            scans = self.edge_scans
            alive = g.edge_alive
            for e in g.adj[v]:
                if alive[e]:
                    scans[e] += 1
                    self.per_edge_scans += 1
                    self._fix_edge(e)
        else:
            for e in list(self.h.adj[v]):
                self._fix_edge(e)

    def _drain(self) -> None:
        agenda = self._agenda
        while agenda:
            self._fix_vertex(agenda.pop())
