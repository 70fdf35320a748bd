"""Fractional Steiner triple systems in 3-uniform hypergraphs.

Exact gadget-based pair weightings, rational LP feasibility with
verifiable certificates, extremal constructions, and the optimization
chain that pins the codegree-density threshold constant.
"""

__version__ = "0.1.0"

from .hypergraph import (
    Hypergraph,
    build_hypergraph,
    cliques,
    cn_density,
    codegree_stats,
    common_coneighborhood,
    is_clique,
    ordered_clique,
    ordered_cliques,
    shadow,
)
from .weighting import (
    NonnegativityReport,
    PairDegreeReport,
    Weighting,
    clique_weight,
    edge_gadget,
    gadget_degree,
    nonnegativity_check,
    ordered_weight,
    ordered_weight_expanded,
    scaled_clique_weight,
    verify_fractional_sts,
    w1,
    w1_expansion,
    w1_scaled,
    weighting_w_H,
)
from .lp import (
    Certificate,
    LpOutcome,
    LpProblem,
    SpaceBarrierBound,
    build_fsts_lp,
    solve_feasibility,
    space_barrier_bound,
    verify_certificate,
)
from .optimizer import (
    ChainReport,
    OptimizeResult,
    ProgramPoint,
    ThresholdReport,
    eta,
    maximize_p3,
    maximize_p4,
    maximize_p5,
    optimal_point_p3,
    poly_p,
    root_xstar,
    verify_chain,
    w3_eval,
    w4_eval,
    w5_at_one,
    w5_eval,
)
from .constructions import (
    ParityCertificate,
    PartitionedHypergraph,
    complete_hypergraph,
    parity_blocker,
    parity_certificate,
    random_min_codegree,
    space_barrier_tripartite,
)
from .serialize import dumps_hg, load_hg, loads_hg, save_hg
