"""Exact computations on strata of real symmetric matrices with prescribed
eigenvalue multiplicities: sampling, equation discovery by interpolation,
Hilbert-function measurements of the diagonal restriction, distance
optimization, and invariant-dimension checks.

Everything algebraic runs over arbitrary-precision rationals; floating point
appears only in the eigenvalue solver behind `nearest_symmetric`.
"""

__version__ = "0.1.0"

from .arrangement import (BlockAssignment, HilbertPolynomial, arrangement_degree,
                          derksen_hilbert, enumerate_subspaces,
                          hilbert_comparison, hilbert_function_oracle,
                          paper_hilbert)
from .distance import (CriticalPoint, FloatSymmetric, critical_points,
                       edd_report, jacobi_eigh, nearest_symmetric, project)
from .golden import GOLDEN_CASES, golden_case, load_golden
from .interpolation import (InterpolationReport, jacobian_codim,
                            parametrization_rank, span_equals, vanishing_forms)
from .invariants import (GradedDimensionTable, chevalley_check,
                         sn_invariant_dim, son_invariant_dim)
from .matrices import ExactMatrix
from .modular import FIXED_PRIMES, ModularMatrix, rank_modular, rational_reconstruct
from .partitions import (Partition, codimension, count_distinct_subspaces,
                         dimension, is_coarsening, multinomial, partitions_of)
from .polynomials import Polynomial, VariableIndexing, monomials_of_degree
from .sampling import (SamplePoint, SkewParams, SpectrumSpec, cayley,
                       membership_exact, multiplicity_signature,
                       orthogonal_det_minus_one, random_samples, sample)
from .scalars import JetScalar, format_scalar, parse_scalar
from .suite import run_suite
from .unipoly import (UniPolynomial, char_poly, discriminant,
                      matrix_discriminant_symbolic, multiplicity_partition,
                      subdiscriminants, symmetric_char_poly)

__all__ = [name for name in dir() if not name.startswith("_")]
