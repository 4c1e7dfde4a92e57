"""Graph and multiset storage for the pure-Python backend.

Vertices are dense integers ``0..n-1``.  In bipartite mode the first
``n_left`` ids are the left side and the rest the right side, so left vertex
``i`` is ``i`` and right vertex ``j`` is ``n_left + j``.

Edges get a stable integer id on insertion.  Adjacency lists are append-only
and carry edge ids; a dead edge stays in a list until more than half of the
list is dead, at which point the list is compacted.
"""

from __future__ import annotations

from typing import Iterator


class GraphError(ValueError):
    """Raised for updates that would break simplicity, bipartiteness or liveness."""


class DynamicGraph:
    """Simple graph over a fixed vertex set with vertex deletions.

    Args:
        n: number of vertices.
        n_left: size of the left side; ``None`` selects general mode.
    """

    def __init__(self, n: int, n_left: int | None = None):
        if n < 0 or (n_left is not None and not 0 <= n_left <= n):
            raise GraphError(f"bad vertex counts n={n} n_left={n_left}")
        self.n = n
        self.n_left = n_left
        self.alive = [True] * n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.dead_in_adj = [0] * n
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.edge_alive: list[bool] = []
        self.m = 0
        self._pairs: dict[tuple[int, int], int] = {}

    @property
    def bipartite(self) -> bool:
        return self.n_left is not None

    def side(self, v: int) -> str | None:
        if self.n_left is None:
            return None
        return "L" if v < self.n_left else "R"

    def label(self, v: int) -> str:
        if self.n_left is None:
            return str(v)
        if v < self.n_left:
            return f"L{v}"
        return f"R{v - self.n_left}"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")
        if not self.alive[v]:
            raise GraphError(f"vertex {self.label(v)} is deleted")

    def find_edge(self, u: int, v: int) -> int | None:
        """Id of the live edge ``{u, v}``, or ``None``."""
        return self._pairs.get((u, v) if u < v else (v, u))

    def add_edge(self, u: int, v: int) -> int:
        """Insert the edge ``{u, v}`` and return its id."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at {self.label(u)}")
        if self.n_left is not None and (u < self.n_left) == (v < self.n_left):
            raise GraphError(
                f"edge ({self.label(u)}, {self.label(v)}) joins two vertices on the same side"
            )
        key = (u, v) if u < v else (v, u)
        if key in self._pairs:
            raise GraphError(f"duplicate edge ({self.label(u)}, {self.label(v)})")
        e = len(self.eu)
        self._pairs[key] = e
        self.eu.append(u)
        self.ev.append(v)
        self.edge_alive.append(True)
        self.adj[u].append(e)
        self.adj[v].append(e)
        self.m += 1
        return e

    def other(self, e: int, v: int) -> int:
        u = self.eu[e]
        return self.ev[e] if u == v else u

    def live_incident(self, v: int) -> Iterator[int]:
        """Ids of live edges at ``v``, skipping dead entries."""
        alive = self.edge_alive
        for e in self.adj[v]:
            if alive[e]:
                yield e

    def degree(self, v: int) -> int:
        return len(self.adj[v]) - self.dead_in_adj[v]

    def delete_vertex(self, v: int) -> list[int]:
        """Mark ``v`` and its live edges dead; return the killed edge ids."""
        self._check_vertex(v)
        killed = []
        for e in self.adj[v]:
            if not self.edge_alive[e]:
                continue
            self.edge_alive[e] = False
            killed.append(e)
            u, w = self.eu[e], self.ev[e]
            del self._pairs[(u, w) if u < w else (w, u)]
            x = w if u == v else u
            self.dead_in_adj[x] += 1
            if 2 * self.dead_in_adj[x] > len(self.adj[x]):
                self._compact(x)
        self.m -= len(killed)
        self.alive[v] = False
        self.adj[v] = []
        self.dead_in_adj[v] = 0
        return killed

    def _compact(self, v: int) -> None:
        alive = self.edge_alive
        self.adj[v] = [e for e in self.adj[v] if alive[e]]
        self.dead_in_adj[v] = 0

    def live_edges(self) -> list[tuple[int, int]]:
        return [
            (self.eu[e], self.ev[e]) for e in range(len(self.eu)) if self.edge_alive[e]
        ]


class WedcsMultiset:
    """Edge multiset ``H`` keyed by graph edge id.

    ``adj[v]`` holds the distinct H-edges at ``v``.  Removal swaps the last
    entry into the freed slot; ``slot[e]`` remembers where ``e`` sits in the
    lists of its two endpoints ``ends[e]``.
    """

    def __init__(self, n: int):
        self.mult: dict[int, int] = {}
        self.deg = [0] * n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.ends: dict[int, tuple[int, int]] = {}
        self.slot: dict[int, list[int]] = {}
        self.size = 0

    def multiplicity(self, e: int) -> int:
        return self.mult.get(e, 0)

    def change(self, e: int, u: int, v: int, delta: int) -> int:
        """Add ``delta`` copies (negative to remove) of edge ``e = (u, v)``.

        Returns the new multiplicity.
        """
        old = self.mult.get(e, 0)
        new = old + delta
        if new < 0:
            raise ValueError(f"multiplicity of edge {e} would become {new}")
        if old == 0 and new > 0:
            self.ends[e] = (u, v)
            self.slot[e] = [len(self.adj[u]), len(self.adj[v])]
            self.adj[u].append(e)
            self.adj[v].append(e)
        elif old > 0 and new == 0:
            su, sv = self.slot.pop(e)
            self._unlink(u, su)
            self._unlink(v, sv)
            del self.ends[e]
        if new:
            self.mult[e] = new
        else:
            self.mult.pop(e, None)
        self.deg[u] += delta
        self.deg[v] += delta
        self.size += delta
        return new

    def _unlink(self, x: int, p: int) -> None:
        lst = self.adj[x]
        last = lst.pop()
        if p < len(lst):
            lst[p] = last
            self.slot[last][0 if self.ends[last][0] == x else 1] = p

    def items(self) -> list[tuple[int, int]]:
        return list(self.mult.items())
