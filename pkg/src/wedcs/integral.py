"""Integral matching kept on top of ``H`` with lazy rebuilds.

Insertion-only runs rebuild when ``|M| < (1 - eps)^2 * mu_tilde``; since the
graph only grows, the old matching stays valid in between.  With vertex
deletions the trigger is a count of H-updates since the last rebuild.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .hk import BipartiteView, Matching, hk_phases, phases_for
from .maintainer import exact

Mode = Literal["incremental", "with-deletions"]
UpdateKind = Literal["copy-added", "copy-removed", "vertex-deleted"]

# Float comparisons farther than this from the threshold are trusted as is.
_FLOAT_MARGIN = 1e-6


@dataclass
class RebuildPolicy:
    mode: Mode
    epsilon: Fraction
    last_rebuild_size: int = 0
    h_updates_since_rebuild: int = 0

    def threshold(self) -> int:
        return max(1, math.ceil(self.epsilon * self.last_rebuild_size))

    def fires(self, matching_size: int, mu_tilde_approx: float, mu_tilde_exact) -> bool:
        """Whether to rebuild now; ``mu_tilde_exact`` is a thunk used near ties."""
        if self.mode == "with-deletions":
            return self.h_updates_since_rebuild >= self.threshold()
        scale = (1 - self.epsilon) ** 2
        margin = float(scale) * mu_tilde_approx - matching_size
        if abs(margin) > _FLOAT_MARGIN * max(1.0, mu_tilde_approx):
            return margin > 0
        return matching_size < scale * mu_tilde_exact()


@dataclass
class MatchingLifetimeStats:
    rebuilds: int = 0
    sum_rebuild_sizes: int = 0
    sizes: list[int] = field(default_factory=list)

    def record(self, size: int) -> None:
        self.rebuilds += 1
        self.sum_rebuild_sizes += size
        self.sizes.append(size)


class IntegralMaintainer:
    """Keeps a matching ``M`` of the graph, recomputed on ``support(H)``.

    ``wedcs`` is a bipartite maintainer from either backend.
    """

    def __init__(self, wedcs, epsilon, mode: Mode = "incremental"):
        if wedcs.n_left is None:
            raise ValueError("integral matching needs a bipartite graph")
        self.wedcs = wedcs
        self.epsilon = exact(epsilon)
        self.phases = phases_for(self.epsilon)
        self.policy = RebuildPolicy(mode, self.epsilon)
        self.stats = MatchingLifetimeStats()
        self.matching = Matching.empty(wedcs.n)
        self._size = 0

    @property
    def mode(self) -> Mode:
        return self.policy.mode

    @property
    def size(self) -> int:
        return self._size

    def on_h_update(self, kind: UpdateKind, count: int = 1, vertex: int | None = None) -> None:
        self.policy.h_updates_since_rebuild += count
        if kind == "vertex-deleted" and vertex is not None and self.mode == "with-deletions":
            if self.matching.remove_vertex(vertex):
                self._size -= 1

    def maybe_rebuild(self) -> bool:
        w = self.wedcs
        if not self.policy.fires(self._size, w.mu_tilde_float(), w.mu_tilde):
            return False
        self.rebuild()
        return True

    def rebuild(self) -> Matching:
        w = self.wedcs
        nl = w.n_left
        view = BipartiteView(
            left=list(range(nl)),
            right=list(range(nl, w.n)),
            adj=w.h_support_adjacency(),
            n=w.n,
        )
        self.matching = hk_phases(view, self.phases)
        self._size = self.matching.size
        self.policy.last_rebuild_size = self._size
        self.policy.h_updates_since_rebuild = 0
        self.stats.record(self._size)
        return self.matching

    def current_matching(self) -> Matching:
        return self.matching
