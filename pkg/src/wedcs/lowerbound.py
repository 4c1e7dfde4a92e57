"""Tightness instance: a weighted EDCS that loses about ``1/(4 gamma)`` of the matching.

With ``beta = 2 gamma^2`` the instance is built from complete bipartite
gadgets ``G_i`` with a small-degree side ``S_i`` of ``gamma^2 + i`` vertices
and a large-degree side ``L_i`` of ``gamma^2 - i`` vertices.  ``H`` holds
one ``G_0``, two copies of each of ``G_1 .. G_{gamma-1}`` and ``2 gamma``
copies of ``G_gamma``.  The full graph adds chains ``L_i -> S_{i+1}`` inside
each of the two copy families, fans the last chain link out to every
``G_gamma`` copy of its family, and ties both families to ``G_0``.

Every H-edge ends up with degree sum exactly ``beta`` and every other edge
with exactly ``beta - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import DynamicGraph, WedcsMultiset
from .snapshot import Snapshot


@dataclass
class Gadget:
    tag: str
    level: int
    family: int  # 0 for G_0, else 1 or 2
    small: list[int] = field(default_factory=list)
    large: list[int] = field(default_factory=list)


@dataclass
class LowerBoundInstance:
    gamma: int
    beta: int
    n_left: int
    n_right: int
    labels: list[str]
    roster: list[Gadget]
    h_edges: list[tuple[int, int]]
    extra_edges: list[tuple[int, int]]

    @property
    def n(self) -> int:
        return self.n_left + self.n_right

    @property
    def edges(self) -> list[tuple[int, int]]:
        return self.h_edges + self.extra_edges

    def graph(self) -> DynamicGraph:
        g = DynamicGraph(self.n, self.n_left)
        for u, v in self.edges:
            g.add_edge(u, v)
        return g

    def multiset(self, graph: DynamicGraph | None = None) -> WedcsMultiset:
        graph = graph or self.graph()
        h = WedcsMultiset(self.n)
        for u, v in self.h_edges:
            h.change(graph.find_edge(u, v), *_ordered(graph, u, v), 1)
        return h

    def snapshot(self) -> Snapshot:
        return Snapshot.build(
            self.n, self.beta, self.edges, self.h_edges, n_left=self.n_left
        )


def _ordered(graph: DynamicGraph, u: int, v: int) -> tuple[int, int]:
    e = graph.find_edge(u, v)
    return graph.eu[e], graph.ev[e]


def expected_sizes(gamma: int) -> tuple[int, int]:
    """Matching number of ``H`` and the lower bound on that of the full graph."""
    g = gamma
    return 4 * g**3 - 4 * g**2 + g, 4 * g**3 - 3 * g**2 + g


def build_instance(gamma: int) -> LowerBoundInstance:
    if gamma < 1:
        raise ValueError(f"gamma must be at least 1, got {gamma}")
    g2 = gamma * gamma
    roster = [Gadget("G0", 0, 0)]
    for i in range(1, gamma):
        for k in (1, 2):
            roster.append(Gadget(f"G{i}^({k})", i, k))
    for k in (1, 2):
        for j in range(1, gamma + 1):
            roster.append(Gadget(f"G{gamma}^({k},{j})", gamma, k))

    # Family 2 is coloured the other way round so that S_0 -> S_1^(2) crosses sides.
    left_names: list[str] = []
    right_names: list[str] = []

    def side_of(gadget: Gadget, small: bool) -> list[str]:
        flip = gadget.family == 2
        return right_names if small != flip else left_names

    slots: list[tuple[Gadget, bool, int, list[str]]] = []
    for gd in roster:
        for small, count in ((True, g2 + gd.level), (False, g2 - gd.level)):
            names = side_of(gd, small)
            for idx in range(count):
                slots.append((gd, small, len(names), names))
                names.append(f"{gd.tag}.{'S' if small else 'L'}{idx}")
    n_left = len(left_names)
    for gd, small, pos, names in slots:
        vid = pos if names is left_names else n_left + pos
        (gd.small if small else gd.large).append(vid)
    labels = left_names + right_names

    h_edges = [(s, l) for gd in roster for s in gd.small for l in gd.large]

    extra: list[tuple[int, int]] = []

    def join(a: list[int], b: list[int]) -> None:
        extra.extend((x, y) for x in a for y in b)

    g0 = roster[0]
    family = {
        k: {gd.level: gd for gd in roster if gd.family == k and gd.level < gamma} for k in (1, 2)
    }
    tops = {k: [gd for gd in roster if gd.family == k and gd.level == gamma] for k in (1, 2)}
    for k in (1, 2):
        chain = family[k]
        for i in range(1, gamma - 1):
            join(chain[i].large, chain[i + 1].small)
        # The link feeding the G_gamma copies; for gamma = 1 that is G_0 itself.
        first = [chain[1]] if gamma > 1 else tops[k]
        head = g0.large if k == 1 else g0.small
        for gd in first:
            join(head, gd.small)
        if gamma > 1:
            for gd in tops[k]:
                join(chain[gamma - 1].large, gd.small)

    return LowerBoundInstance(
        gamma=gamma,
        beta=2 * g2,
        n_left=n_left,
        n_right=len(right_names),
        labels=labels,
        roster=roster,
        h_edges=h_edges,
        extra_edges=extra,
    )
