"""Linear sections cutting the Lagrangian-Grassmannian L(n, 2n) out of G(n, 2n).

Builds the kernel-condition matrix B of the contraction map in Plücker
coordinates and checks its splitting into recursive blocks L_k, with ranks
in every characteristic.
"""

from .blocks import a, a0, join_bottom, l_equals_m, l_matrix, m_matrix, phi, triangles, with_identity
from .contraction import (
    PlaneForm,
    PluckerVector,
    build_B,
    kernel_membership,
    plane_census,
    plane_form,
    sample_lagrangian,
)
from .decompose import (
    ZERO_COLUMN,
    DecompositionReport,
    classify_columns,
    corollary_counts,
    proposition_rank_check,
    verify_block,
    verify_theorem,
)
from .indexing import (
    RowClass,
    SymplecticLabels,
    admissible_tuples,
    decompose_row_class,
    enumerate_indices,
    q_count,
)
from .linalg import BinaryMatrix, FieldSpec, Permutation, block_diagonal, permutation_equivalent, rank

__version__ = "0.1.0"
