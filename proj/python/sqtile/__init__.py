"""Tilings of the torus by grid squares: difference sets, cocycles, components, bounded search."""

from ._core import (
    Error,
    TileConfig,
    audit,
    axes_subset,
    check_discretization,
    components,
    difference_set,
    edge_labels,
    geometric_difference_set,
    integer_gap,
    lattice_span,
    reduce_to_transversal,
    render_config,
    search,
)

__all__ = [
    "Error",
    "TileConfig",
    "audit",
    "axes_subset",
    "check_discretization",
    "components",
    "difference_set",
    "edge_labels",
    "geometric_difference_set",
    "integer_gap",
    "lattice_span",
    "reduce_to_transversal",
    "render_config",
    "search",
]
