"""Wire the maintainer, the fractional tally and the integral matching together."""

from __future__ import annotations

from typing import Literal

from ._backend import core
from .integral import IntegralMaintainer
from .maintainer import ChangeHook, WedcsMaintainer, WedcsParams

Backend = Literal["auto", "python", "cython"]


def make_maintainer(
    n: int,
    params: WedcsParams,
    n_left: int | None = None,
    on_change: ChangeHook | None = None,
    backend: Backend = "auto",
):
    """Construct a maintainer on the requested backend."""
    if backend == "python" or (backend == "auto" and core is None):
        return WedcsMaintainer(n, params, n_left, on_change)
    if core is None:
        raise RuntimeError("compiled core is not available; rebuild the extension")
    return core.WedcsMaintainer(n, params, n_left, on_change)


class DynamicMatcher:
    """Processes update events and keeps every derived structure in step.

    Args:
        n: number of vertices.
        params: maintainer parameters.
        n_left: left side size, or ``None`` for a general graph.
        integral: also maintain an integral matching (bipartite only).
        deletions: allow vertex deletions; switches the rebuild rule.
    """

    def __init__(
        self,
        n: int,
        params: WedcsParams,
        n_left: int | None = None,
        *,
        integral: bool = True,
        deletions: bool = False,
        backend: Backend = "auto",
        on_change: ChangeHook | None = None,
    ):
        if integral and n_left is None:
            raise ValueError("integral mode needs a bipartite graph")
        self.params = params
        self.deletions = deletions
        self.wedcs = make_maintainer(n, params, n_left, on_change, backend)
        self.integral = (
            IntegralMaintainer(
                self.wedcs, params.epsilon, "with-deletions" if deletions else "incremental"
            )
            if integral
            else None
        )
        self.events = 0

    def _updates(self) -> int:
        w = self.wedcs
        return w.h_insertions + w.h_deletions

    def insert_edge(self, u: int, v: int) -> None:
        before = self._updates()
        self.wedcs.insert_edge(u, v)
        self.events += 1
        if self.integral is not None:
            changed = self._updates() - before
            if changed:
                self.integral.on_h_update("copy-added", changed)
            self.integral.maybe_rebuild()

    def delete_vertex(self, v: int) -> None:
        if not self.deletions:
            raise ValueError("vertex deletions are disabled for this run")
        before = self._updates()
        self.wedcs.delete_vertex(v)
        self.events += 1
        if self.integral is not None:
            changed = self._updates() - before
            self.integral.on_h_update("vertex-deleted", changed + 1, vertex=v)
            self.integral.maybe_rebuild()

    @property
    def matching_size(self) -> int:
        return 0 if self.integral is None else self.integral.size
