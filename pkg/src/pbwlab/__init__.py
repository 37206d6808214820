"""Combinatorics of PBW degenerate flag varieties in type A."""

from .errors import (
    IncompatibleRankError,
    InvalidDimensionError,
    InvalidEntryError,
    InvalidFieldError,
    InvalidRankError,
    NotRealizableError,
    PBWLabError,
    ResourceLimitError,
)
from .genocchi import (
    DellacConfig,
    FlagCollection,
    admissible_flag_collections,
    dellac_configs,
    dellac_length,
    genocchi_closed,
    genocchi_poly_dellac,
    genocchi_poly_fermionic,
)
from .lie_core import DominantWeight, PositiveRoot, YoungShape, positive_roots, shape_of, weyl_dim
from .polytopes import (
    DyckPath,
    MultiExponent,
    dyck_paths,
    fflv_lattice_points,
    gt_pattern_count,
    minkowski_sum,
    pbw_weight,
)
from .qpoly import QPolynomial, q_binomial
from .quiver import (
    QuiverRep,
    RankTuple,
    count_subreps_Fq,
    degenerates_to,
    euler_form,
    module_from_rank_tuple,
    rank_tuple,
    special_module,
)
from .tableaux import PBWTableau, enumerate_pbw_tableaux, is_pbw_semistandard

__version__ = "0.1.0"
