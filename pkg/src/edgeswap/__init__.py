"""Degree-preserving edge swaps across the six loop/multiedge graph spaces.

Enumeration, canonical labeling, graph-of-graphs connectivity and a
Metropolis-Hastings double edge-swap sampler with a uniform target.
"""

from .canonical import IsoClasses, automorphism_count, canonical_form, isomorphism_classes, relabel
from .connectivity import (
    ConnectivityStatus,
    ConnectivityVerdict,
    eliminate_last_loop,
    frozen_multiloop_graph,
    multiloop_criterion,
    reduce_loops_loopy_multigraph,
    saturate_loops_multiloop,
    space_connectivity,
)
from .enumeration import EnumFilter, census, count_graphs, enumerate_graphs, triangle_histogram
from .errors import (
    BadArity,
    CensusTooLarge,
    ClassMismatch,
    CriterionUnsatisfied,
    EdgeSwapError,
    FilterInapplicable,
    IndexOutOfRange,
    InvalidDegreeSequence,
    InvalidGraph,
    InvalidInput,
    InvalidTriangleSequence,
    NoDisjointEdge,
    NonSimpleGraph,
    SampleOutsideCensus,
)
from .gog import GogReport, GogSpec, build_gog, components_intersect_classes, iter_gog_edges
from .graph import (
    ALL_SPACES,
    LOOPY_GRAPH,
    LOOPY_MULTIGRAPH,
    MULTIGRAPH,
    MULTILOOP_GRAPH,
    PSEUDOGRAPH,
    SIMPLE,
    Graph,
    GraphSpace,
    LoopPolicy,
    MultiedgePolicy,
    degree_sequence,
    edge_distance,
    format_graph,
    is_valid_in_space,
    parse_graph,
    triangle_count,
    triangle_sequence,
)
from .mcmc import (
    ChainConfig,
    ChainState,
    UniformityReport,
    iter_samples,
    proposal_degeneracy,
    sample,
    step,
    transition_probabilities,
    uniformity_report,
)
from .swaps import (
    Direction,
    KSwapMove,
    Pairing,
    SwapMove,
    apply_double_swap,
    apply_k_swap,
    double_swap_neighbors,
    find_k_swap,
    inverse_double_swap,
    inverse_k_swap,
    k_swap_neighbors,
)

__version__ = "0.1.0"
