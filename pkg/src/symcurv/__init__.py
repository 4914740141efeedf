"""Exact-arithmetic toolkit for symmetric-group algebra and the
symmetry classes of curvature-type tensors.

Everything is computed over the rationals with no floating point:
permutations, the group ring Q[S_r], Young tableaux and symmetrizers,
the discrete Fourier transform by Young's natural representation,
Littlewood-Richardson products, and dense tensors acted on by
group-ring symmetry operators.
"""

from .dft import (
    BlockMatrixImage,
    character,
    fourier_eta,
    fourier_transform,
    fourier_xi,
    inverse_fourier,
    natural_rep_matrix,
    x_matrix,
    y_matrix,
)
from .group_ring import GroupRingElement, stabilizer_symmetrizer
from .littlewood_richardson import (
    LRDecomposition,
    admissible_pairs,
    induced_ideal_multiplicities,
    lr_coefficient,
    lr_product,
)
from .permutation import Permutation, perm_rank, symmetric_group
from .rationals import Rational, as_rational, format_rational, parse_rational
from .tableaux import (
    Partition,
    YoungTableau,
    curvature_tableau,
    format_partition,
    hook_dimension,
    hook_lengths,
    partitions_of,
    standard_tableaux,
    weyl_dimension,
    young_symmetrizer,
)
from .tensor import (
    DenseTensor,
    alpha,
    alternating_basis,
    apply_operator,
    coordinate_basis,
    gamma,
    gamma_hat,
    generator_span_rank,
    is_acdc,
    is_algebraic_curvature,
    projector_rank,
    symmetric_basis,
    symmetric_order3_basis,
    t_b,
    tensor_product,
)
from .verify import CheckReport, run_all

__all__ = [
    "BlockMatrixImage",
    "CheckReport",
    "DenseTensor",
    "GroupRingElement",
    "LRDecomposition",
    "Partition",
    "Permutation",
    "Rational",
    "YoungTableau",
    "admissible_pairs",
    "alpha",
    "alternating_basis",
    "apply_operator",
    "as_rational",
    "character",
    "coordinate_basis",
    "curvature_tableau",
    "format_partition",
    "format_rational",
    "fourier_eta",
    "fourier_transform",
    "fourier_xi",
    "gamma",
    "gamma_hat",
    "generator_span_rank",
    "hook_dimension",
    "hook_lengths",
    "induced_ideal_multiplicities",
    "inverse_fourier",
    "is_acdc",
    "is_algebraic_curvature",
    "lr_coefficient",
    "lr_product",
    "natural_rep_matrix",
    "parse_rational",
    "partitions_of",
    "perm_rank",
    "projector_rank",
    "run_all",
    "stabilizer_symmetrizer",
    "standard_tableaux",
    "symmetric_basis",
    "symmetric_group",
    "symmetric_order3_basis",
    "t_b",
    "tensor_product",
    "weyl_dimension",
    "x_matrix",
    "y_matrix",
    "young_symmetrizer",
]
