"""Dynamic approximate maximum matching via a weighted edge-degree constrained subgraph."""

from __future__ import annotations

from ._backend import BACKEND
from .fractional import SlacknessReport, fractional_size, verify_feasibility_and_slackness
from .graph import DynamicGraph, GraphError, WedcsMultiset
from .hk import BipartiteView, Matching, NotBipartiteError, hk_exact, hk_phases
from .integral import IntegralMaintainer, RebuildPolicy
from .lowerbound import build_instance, expected_sizes
from .maintainer import WedcsMaintainer, WedcsParams
from .oracles import audit_budgets, exhaustive_mu, validate_edcs
from .pipeline import DynamicMatcher, make_maintainer
from .snapshot import Snapshot

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BipartiteView",
    "DynamicGraph",
    "DynamicMatcher",
    "GraphError",
    "IntegralMaintainer",
    "Matching",
    "NotBipartiteError",
    "RebuildPolicy",
    "SlacknessReport",
    "Snapshot",
    "WedcsMaintainer",
    "WedcsMultiset",
    "WedcsParams",
    "audit_budgets",
    "build_instance",
    "exhaustive_mu",
    "expected_sizes",
    "fractional_size",
    "hk_exact",
    "hk_phases",
    "make_maintainer",
    "validate_edcs",
    "verify_feasibility_and_slackness",
]
