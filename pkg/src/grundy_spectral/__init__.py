"""Spectral upper bounds for the Grundy number: exact engines, atoms,
matching/characteristic polynomials, bound evaluators, and experiment
sweeps, exposed as a library, an HTTP service, and a CLI."""

from .atoms import Atom, binomial_tree, enumerate_atoms, min_quotient_sum
from .bounds import (
    BoundReport,
    bound_bollobas,
    bound_degeneracy_log,
    bound_edges,
    bound_maxdeg,
    bound_report,
    bound_size_corollary,
    bound_spectral_recurrence,
    bound_spectral_remark,
    bound_wilf,
)
from .coloring import (
    Coloring,
    GrundyResult,
    chromatic_number,
    first_fit,
    grundy_bruteforce,
    grundy_exact,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    GraphFormatError,
    GrundySpectralError,
)
from .experiments import Family, SweepConfig, emit_csv, run_sweep
from .graphs import Graph, erdos_renyi, parse_edge_list, to_edge_list
from .matching import (
    char_polynomial,
    matching_polynomial,
    mu_max_root,
    path_tree,
    verify_pathtree_identity,
)
from .spectral import (
    SpectralSummary,
    atom_lambda_lower,
    lambda_max,
    quotient_matrix,
    quotient_sum,
    tk_lambda,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "BoundReport",
    "BudgetExceededError",
    "CapExceededError",
    "Coloring",
    "Family",
    "Graph",
    "GraphFormatError",
    "GrundyResult",
    "GrundySpectralError",
    "SpectralSummary",
    "SweepConfig",
    "atom_lambda_lower",
    "binomial_tree",
    "bound_bollobas",
    "bound_degeneracy_log",
    "bound_edges",
    "bound_maxdeg",
    "bound_report",
    "bound_size_corollary",
    "bound_spectral_recurrence",
    "bound_spectral_remark",
    "bound_wilf",
    "char_polynomial",
    "chromatic_number",
    "emit_csv",
    "enumerate_atoms",
    "erdos_renyi",
    "first_fit",
    "grundy_bruteforce",
    "grundy_exact",
    "lambda_max",
    "matching_polynomial",
    "min_quotient_sum",
    "mu_max_root",
    "parse_edge_list",
    "path_tree",
    "quotient_matrix",
    "quotient_sum",
    "run_sweep",
    "tk_lambda",
    "to_edge_list",
    "verify_pathtree_identity",
]
