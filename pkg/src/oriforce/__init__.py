"""Oriented k-forcing: simulation, exact solvers, bounds, and verification."""

from .errors import (
    InapplicableError,
    LimitError,
    OriforceError,
    ParameterError,
    PreconditionError,
)
from .families import FamilySpec, generate
from .forcing import (
    ChainForest,
    ForcingTrace,
    closure,
    closure_set,
    forcing_chains,
    is_forcing_set,
    step,
)
from .graphs import Graph, OrientedGraph, induced_subgraph, orient, reversal
from .invariants import (
    InvariantValue,
    clique_number,
    independence_number,
    induced_kary_cover_number,
    induced_matching_number,
    matching_number,
    path_cover_number,
    tree_cover_number,
)
from .solve import (
    SolveResult,
    max_orientation_forcing,
    min_forcing_number,
    min_orientation_forcing,
    orientation_extremes,
)

__version__ = "0.1.0"

__all__ = [
    "ChainForest",
    "FamilySpec",
    "ForcingTrace",
    "Graph",
    "InapplicableError",
    "InvariantValue",
    "LimitError",
    "OriforceError",
    "OrientedGraph",
    "ParameterError",
    "PreconditionError",
    "SolveResult",
    "clique_number",
    "closure",
    "closure_set",
    "forcing_chains",
    "generate",
    "independence_number",
    "induced_kary_cover_number",
    "induced_matching_number",
    "induced_subgraph",
    "is_forcing_set",
    "matching_number",
    "max_orientation_forcing",
    "min_forcing_number",
    "min_orientation_forcing",
    "orient",
    "orientation_extremes",
    "path_cover_number",
    "reversal",
    "step",
    "tree_cover_number",
]
