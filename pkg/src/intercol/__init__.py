"""Interval edge-colorings of graphs and their Cartesian products.

Construction, verification, closed-form bounds, and an exhaustive
small-instance oracle for interval t-colorings: proper edge colorings with
colors 1..t, all colors used, and consecutive color blocks at every vertex.
"""

from .coloring import (
    ColoringCertificate,
    EdgeColoring,
    SplitSpectrum,
    VertexSpectrum,
    edge_span,
    edge_span_at_distance,
    is_separable,
    normalized,
    split_spectrum,
    verify_interval,
    verify_interval_local,
)
from .constructions import (
    SeparableColoring,
    caterpillar_separable,
    complete_bipartite_separable,
    cycle_separable,
    fibonacci_min_coloring,
    fibonacci_plus_coloring,
    hypercube_max_separable,
    product_max_coloring,
    separable_product_coloring,
)
from .errors import (
    ConnectivityError,
    ConstructionError,
    ContractError,
    IntercolError,
    NotColorable,
    ParameterError,
    Undecided,
    UnknownVertexError,
)
from .graphs import (
    Graph,
    LevelDecomposition,
    all_pairs_distances,
    butterfly,
    cartesian_product,
    caterpillar,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    distance,
    eccentricity,
    edge_diameter,
    edge_distance,
    fibonacci_cube,
    hamming,
    hypercube,
    level_decomposition,
    path,
    petersen,
    product_all,
    structure_predicates,
    torus,
    vertex_interval,
)

__version__ = "0.1.0"
