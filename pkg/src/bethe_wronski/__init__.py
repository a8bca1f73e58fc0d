"""Bethe operators on Specht modules and the inverse Wronski problem.

The package builds the operators β^λ(t) on S^ν exactly, verifies their
algebraic identities, and recovers every space of polynomials with a
prescribed Wronskian from their joint eigenvalues.
"""

import os as _os

# BW_THREADS caps BLAS threading; it must be applied before numpy loads.
_threads = _os.environ.get("BW_THREADS")
if _threads and _threads.isdigit() and int(_threads) > 0:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _threads)

from .bethe import (BetheOperator, IdentityReport, ZParams, beta_family, beta_operator,  # noqa: E402
                    epsilon_matrix, eval_beta, inversion_report, plucker_sweep, random_z,
                    star_duality_report, trial_points, verify_identities)
from .combinatorics import (Partition, Permutation, character, conjugate,  # noqa: E402
                            count_z_factorizations, num_syt, partitions_of)
from .grassmann import (PluckerRelation, PluckerVector, PolyVector, echelon_basis,  # noqa: E402
                        eval_relations, h_basis, plucker_relations, pluckers_from_basis,
                        positivity_check, wronskian_from_pluckers, wronskian_of_polys)
from .solver import (Solution, SolveConfig, SolverError, count_solutions_repeated,  # noqa: E402
                     schubert_projection, solve_inverse_wronski, verify_solution)
from .specht import RepForm, SpechtRep, build_rep, rep_matrix, sign_twist  # noqa: E402
from .symfunc import SymFunc, bethe_dimension, convert_basis, exp_specialization  # noqa: E402

__version__ = "0.1.0"

__all__ = [
    "BetheOperator", "IdentityReport", "ZParams", "beta_family", "beta_operator", "epsilon_matrix",
    "eval_beta", "inversion_report", "plucker_sweep", "random_z", "star_duality_report",
    "trial_points", "verify_identities",
    "Partition", "Permutation", "character", "conjugate", "count_z_factorizations", "num_syt",
    "partitions_of",
    "PluckerRelation", "PluckerVector", "PolyVector", "echelon_basis", "eval_relations", "h_basis",
    "plucker_relations", "pluckers_from_basis", "positivity_check", "wronskian_from_pluckers",
    "wronskian_of_polys",
    "Solution", "SolveConfig", "SolverError", "count_solutions_repeated", "schubert_projection",
    "solve_inverse_wronski", "verify_solution",
    "RepForm", "SpechtRep", "build_rep", "rep_matrix", "sign_twist",
    "SymFunc", "bethe_dimension", "convert_basis", "exp_specialization",
]
