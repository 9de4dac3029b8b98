from .ratmath import rat_new, solve_exact, rank_exact
from .lattice import (
    primitive,
    hnf,
    subspace,
    SubspaceBasis,
    LatticeBasis,
    projected_lattice_basis,
    lattice_coords,
)
from .poly import (
    Halfspace,
    HPoly,
    VPoly,
    is_feasible,
    remove_redundant,
    h_to_v_2d,
    v_to_h_2d,
    lineality_space,
    project_onto,
    lift_by_orthogonal_complement,
    intersect,
    same_set,
    is_subset,
)
from .hull2d import (
    Cone2,
    integer_hull_halfspace,
    integer_hull_strip,
    integer_hull_pointed_2d,
    integer_hull_2d,
    integer_feasible_2d,
)
from .closures import (
    SplitDisjunction,
    SplitFamily,
    two_halfspace_hull,
    facet_pair_closure,
    disjunctive_hull,
    split_closure_family,
    box_split_family,
    cg_cut_from_direction,
    cg_round,
    lift_cut,
    rank_ih_splits,
    verify_rank_ih,
    split_projection_check,
    closure_rank,
    sandwich_report,
)
from .latfree import (
    LatFreeClass,
    classify_max_latfree_2d,
    push_out,
    helly_certificate,
    verify_2dih,
)
from .oracle import Box, enum_integer_points, naive_hull_2d, naive_integer_hull
from .errors import (
    ClosureError,
    DimensionError,
    HypothesisError,
    InfeasibleError,
    InputError,
    LatticeSubspaceError,
    ZeroDenominatorError,
    ZeroVectorError,
)
from .config import load_config
from . import corpus

__version__ = "0.1.0"

__all__ = list(key for key in locals().keys() if not key.startswith("_"))
