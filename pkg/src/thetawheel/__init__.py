"""Structure detectors, generators, decompositions and exact solvers for
(theta, wheel)-free graphs.

The package is organized around one graph type (`thetawheel.graphs.Graph`,
immutable, string vertex ids, exact rational weights) and a family of
algorithms that decompose along clique cutsets and 2-joins down to basic
graphs (line graphs of triangle-free chordless graphs, and P-graphs), where
maximum weight clique, maximum weight stable set, vertex coloring and
3-clique-coloring are solved exactly.  Brute-force oracles double-check
everything at desk scale.
"""

from .errors import (
    ThetaWheelError,
    InputError,
    ClassViolationError,
    GenerationError,
    InternalError,
)
from .graphs import Graph, parse_graph, format_graph
from .stable import (
    StableSetCertificate,
    GemExtension,
    GemWeights,
    max_weight_matching,
    root_graph,
    gem_weights,
    build_gem_block,
    mwss_basic_ext,
    mwss_D,
    mwss,
)

__all__ = [
    "ThetaWheelError",
    "InputError",
    "ClassViolationError",
    "GenerationError",
    "InternalError",
    "Graph",
    "parse_graph",
    "format_graph",
    "StableSetCertificate",
    "GemExtension",
    "GemWeights",
    "max_weight_matching",
    "root_graph",
    "gem_weights",
    "build_gem_block",
    "mwss_basic_ext",
    "mwss_D",
    "mwss",
]

__version__ = "0.1.0"
