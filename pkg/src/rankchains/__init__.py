"""Rank chains of the Boolean lattice and the inclusion matrices built on them."""

from .chains import Chain, Decomposition, chain_census, chain_of, complement_decompose, decompose
from .kernels import BACKEND
from .matrices import (
    ExactMatrix,
    build_D_bar,
    build_D_under,
    build_Q,
    build_R,
    build_W,
    build_W_bar,
    build_W_mixed,
    build_W_under,
    h_vector,
    matrix_from_decomposition,
    select_A,
)
from .snf import (
    SnfDecomposition,
    determinant,
    invariant_factors_minors,
    is_unimodular,
    p_rank,
    rational_rank,
    smith_normal_form,
    wilson_diagonal,
)
from .solver import (
    SolveReport,
    divisibility_check,
    reduce_rhs,
    signed_design,
    solve_integral,
    verify_solution,
)
from .subsets import (
    J,
    Tableau,
    chain_max,
    chain_min,
    delete_rightmost_j,
    jump,
    predecessor,
    rank,
    rank_via_walk,
    successor,
    tableau,
    underline_map,
)

__version__ = "0.1.0"
