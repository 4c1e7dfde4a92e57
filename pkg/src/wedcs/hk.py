"""Hopcroft-Karp with a phase budget.

``k`` phases leave no augmenting path shorter than ``2k + 1`` edges, hence
the result has size at least ``k / (k + 1)`` of the maximum.  With
``phases=None`` the search runs to exhaustion and the result is maximum.

Left vertices are scanned in ascending order and adjacency lists are
sorted, so results are reproducible and identical across backends.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import core

INF = 1 << 60


class NotBipartiteError(ValueError):
    pass


@dataclass
class Matching:
    """Symmetric partner table over vertex ids; ``-1`` marks unmatched."""

    mate: list[int]

    @property
    def size(self) -> int:
        return sum(1 for v, w in enumerate(self.mate) if w > v)

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.mate) if w > v]

    @classmethod
    def empty(cls, n: int) -> "Matching":
        return cls([-1] * n)

    def remove_vertex(self, v: int) -> bool:
        w = self.mate[v]
        if w < 0:
            return False
        self.mate[v] = self.mate[w] = -1
        return True

    def check(self, edges: Iterable[tuple[int, int]]) -> None:
        """Raise ``AssertionError`` unless this is a matching of ``edges``."""
        present = {(min(u, v), max(u, v)) for u, v in edges}
        for v, w in enumerate(self.mate):
            if w < 0:
                continue
            assert self.mate[w] == v, f"mate table not symmetric at {v}"
            assert w != v, f"vertex {v} matched to itself"
            assert (min(v, w), max(v, w)) in present, f"({v}, {w}) is not an edge"


@dataclass
class BipartiteView:
    """Left/right adjacency over local indices plus the maps back to vertex ids."""

    left: list[int]
    right: list[int]
    adj: list[list[int]]
    n: int

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], n_left: int | None = None
    ) -> "BipartiteView":
        edges = list(edges)
        if n_left is not None:
            color = [0 if v < n_left else 1 for v in range(n)]
            for u, v in edges:
                if color[u] == color[v]:
                    raise NotBipartiteError(f"edge ({u}, {v}) lies within one side")
        else:
            color = _two_color(n, edges)
        left = [v for v in range(n) if color[v] == 0]
        right = [v for v in range(n) if color[v] == 1]
        lpos = {v: i for i, v in enumerate(left)}
        rpos = {v: i for i, v in enumerate(right)}
        adj: list[list[int]] = [[] for _ in left]
        for u, v in edges:
            if color[u] == 1:
                u, v = v, u
            adj[lpos[u]].append(rpos[v])
        for a in adj:
            a.sort()
        return cls(left, right, adj, n)

    @property
    def num_edges(self) -> int:
        return sum(map(len, self.adj))


def _two_color(n: int, edges: list[tuple[int, int]]) -> list[int]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartiteError(f"odd cycle through edge ({u}, {w})")
    return color


def hopcroft_karp_py(
    adj: Sequence[Sequence[int]], n_right: int, phases: int | None = None
) -> list[int]:
    """Reference implementation; returns the right partner of every left vertex."""
    n_left = len(adj)
    mate_l = [-1] * n_left
    mate_r = [-1] * n_right
    done = 0
    while phases is None or done < phases:
        dist = [INF] * n_left
        queue = deque()
        for u in range(n_left):
            if mate_l[u] < 0:
                dist[u] = 0
                queue.append(u)
        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in adj[u]:
                x = mate_r[w]
                if x < 0:
                    if found == INF:
                        found = dist[u]
                elif dist[x] == INF:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if found == INF:
            break
        it = [0] * n_left
        for root in range(n_left):
            if mate_l[root] >= 0 or dist[root] != 0:
                continue
            stack = [root]
            picks: list[int] = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                du = dist[u]
                step = -1
                while it[u] < len(nbrs):
                    w = nbrs[it[u]]
                    it[u] += 1
                    x = mate_r[w]
                    if x < 0:
                        if du == found:
                            picks.append(w)
                            for a, b in zip(stack, picks):
                                mate_l[a] = b
                                mate_r[b] = a
                                dist[a] = INF
                            stack = []
                            break
                    elif du < found and dist[x] == du + 1:
                        step = w
                        break
                if not stack:
                    break
                if step >= 0:
                    picks.append(step)
                    stack.append(mate_r[step])
                else:
                    dist[u] = INF
                    stack.pop()
                    if picks:
                        picks.pop()
        done += 1
    return mate_l


def _run(view: BipartiteView, phases: int | None) -> Matching:
    if phases is not None and phases < 1:
        raise ValueError(f"phase budget must be positive, got {phases}")
    if core is not None:
        mate_l = core.hopcroft_karp(view.adj, len(view.right), -1 if phases is None else phases)
    else:
        mate_l = hopcroft_karp_py(view.adj, len(view.right), phases)
    mate = [-1] * view.n
    for i, j in enumerate(mate_l):
        if j >= 0:
            u, w = view.left[i], view.right[j]
            mate[u] = w
            mate[w] = u
    return Matching(mate)


def hk_phases(view: BipartiteView, phases: int) -> Matching:
    """Run at most ``phases`` Hopcroft-Karp phases from the empty matching."""
    return _run(view, phases)


def hk_exact(view: BipartiteView) -> Matching:
    """Maximum matching of ``view``."""
    return _run(view, None)


def phases_for(epsilon) -> int:
    """Phase budget that guarantees a ``(1 - epsilon)`` fraction of the maximum."""
    from .maintainer import exact

    return math.ceil(1 / exact(epsilon))


def max_matching_size(n: int, edges, n_left: int | None = None) -> int:
    return hk_exact(BipartiteView.from_edges(n, edges, n_left)).size
