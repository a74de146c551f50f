from .equivalence import Equivalence, permutation_equivalent
from .fields import DEFAULT_PRIME_SEED, FieldSpec, random_primes
from .matrix import BinaryMatrix, Permutation, block_diagonal, iter_bits
from .rank import (
    BAREISS_MAX_COLS,
    RankCertificate,
    bareiss_rank,
    gf2_rank,
    rank,
    rank_certificate,
    sparse_rank_mod_p,
)

__all__ = [
    "BAREISS_MAX_COLS",
    "BinaryMatrix",
    "DEFAULT_PRIME_SEED",
    "Equivalence",
    "FieldSpec",
    "Permutation",
    "RankCertificate",
    "bareiss_rank",
    "block_diagonal",
    "gf2_rank",
    "iter_bits",
    "permutation_equivalent",
    "random_primes",
    "rank",
    "rank_certificate",
    "sparse_rank_mod_p",
]
