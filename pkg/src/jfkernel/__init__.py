"""Exact theta-decomposition machinery for Jacobi forms.

Sparse truncated q-expansions over Q(zeta_24), the index-m theta functions
and their multiplier matrices, the restriction and heat operators, and the
kernel isomorphisms between two-variable series killed by restriction,
vector-valued pairs, and weight-raised scalar forms.
"""

from .cyclotomic import CYC24, CycNumber, cyclotomic_field, from_rational, root_of_unity
from .series import (
    ExactDivisionError,
    FormMeta,
    PuiseuxSeries,
    dilate,
    div_exact,
    eta,
    eta_power,
    euler_d,
)
from .jacobi import (
    DecompositionInconsistent,
    JacobiSeries,
    d2_hat,
    heat_check,
    recompose,
    restrict_z0,
    symmetry_check,
    theta_component,
    theta_decompose,
    theta_j,
)
from .sl2 import GroupWord, SL2Mat, gamma_dilate, sl2_word
from .weil import (
    NotInX,
    SnapFailed,
    UMatrix,
    cusp_entry_values,
    in_X,
    omega_m,
    r_char,
    resolve,
    resolve_scalar,
    rho2,
    u_gen,
    u_gen_general,
    word_product,
)
from .construct import (
    CompatibilityFailed,
    ConstraintFailed,
    InconsistentPair,
    NonSquarefreeIndex,
    VVPair,
    lambda2_fwd,
    lambda2_inv,
    lambda_star_fwd,
    lambda_star_inv,
    psi_0m,
    psi_form,
    remark_maps,
    xi_hat,
    xi_m_star_hat,
    xi_pair_hat,
)
from .numeric import TailTooLarge, eval_series
from .verify import CheckReport, run_identity, suite_all

__version__ = "0.1.0"

__all__ = [
    "CYC24",
    "CheckReport",
    "CompatibilityFailed",
    "ConstraintFailed",
    "CycNumber",
    "DecompositionInconsistent",
    "ExactDivisionError",
    "FormMeta",
    "GroupWord",
    "InconsistentPair",
    "JacobiSeries",
    "NonSquarefreeIndex",
    "NotInX",
    "PuiseuxSeries",
    "SL2Mat",
    "SnapFailed",
    "TailTooLarge",
    "UMatrix",
    "VVPair",
    "cusp_entry_values",
    "cyclotomic_field",
    "d2_hat",
    "dilate",
    "div_exact",
    "eta",
    "eta_power",
    "euler_d",
    "eval_series",
    "from_rational",
    "gamma_dilate",
    "heat_check",
    "in_X",
    "lambda2_fwd",
    "lambda2_inv",
    "lambda_star_fwd",
    "lambda_star_inv",
    "omega_m",
    "psi_0m",
    "psi_form",
    "r_char",
    "recompose",
    "remark_maps",
    "resolve",
    "resolve_scalar",
    "restrict_z0",
    "rho2",
    "root_of_unity",
    "run_identity",
    "sl2_word",
    "suite_all",
    "symmetry_check",
    "theta_component",
    "theta_decompose",
    "theta_j",
    "u_gen",
    "u_gen_general",
    "word_product",
    "xi_hat",
    "xi_m_star_hat",
    "xi_pair_hat",
]
