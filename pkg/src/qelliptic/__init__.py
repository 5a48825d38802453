"""Arbitrary-precision elliptic integrals, theta functions, q-series,
Ramanujan-style continued fractions, and algebraic-number recognition,
with a self-verifying identity suite and a command-line front end."""

from .numerics import (
    PrecisionSpec,
    NumericsError,
    NonConvergence,
    DomainError,
    ZeroFactor,
    VerificationError,
    InsufficientPrecision,
    CrossCheckFailure,
    UnknownSelector,
    agm,
    cv,
    gamma,
)
from .elliptic import (
    Nome,
    Modulus,
    nome_from_r,
    K_of_k,
    modulus_from_nome,
    singular_modulus,
    landen_descend,
    landen_chain,
)
from .qfunctions import (
    INF,
    AgileParams,
    qpow,
    pochhammer,
    euler_f,
    weber_phi,
    theta2,
    theta3,
    theta4,
    theta4_product,
    theta_sum_S,
    agile,
    psi_star,
    hyperbolic_log_sum,
)
from .cfrac import (
    ContinuedFraction,
    eval_cf,
    rr_cf,
    r1_cf,
    r2_cf,
    r3_cf,
    h_cf,
    m_series,
    m_cf,
    p_cf,
)
from .rquantity import (
    RQParams,
    rq,
    rq_star,
    rq_theta,
    rq_charprod,
    tau0,
    tau_star,
    drq_dq,
    drq_normalized,
)
from .hyperq import (
    Phi21Params,
    phi21,
    psi_small,
    psi_small_product,
    gauss_product,
    thm6_check_i,
    thm6_check_ii,
)
from .algrec import (
    MinPolyResult,
    NOT_FOUND,
    find_minpoly,
    verify_root,
)
from .verify import (
    IdentityCheck,
    CheckOutcome,
    Report,
    register_builtin_checks,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "PrecisionSpec",
    "NumericsError",
    "NonConvergence",
    "DomainError",
    "ZeroFactor",
    "VerificationError",
    "InsufficientPrecision",
    "CrossCheckFailure",
    "UnknownSelector",
    "agm",
    "cv",
    "gamma",
    "Nome",
    "Modulus",
    "nome_from_r",
    "K_of_k",
    "modulus_from_nome",
    "singular_modulus",
    "landen_descend",
    "landen_chain",
    "INF",
    "AgileParams",
    "qpow",
    "pochhammer",
    "euler_f",
    "weber_phi",
    "theta2",
    "theta3",
    "theta4",
    "theta4_product",
    "theta_sum_S",
    "agile",
    "psi_star",
    "hyperbolic_log_sum",
    "ContinuedFraction",
    "eval_cf",
    "rr_cf",
    "r1_cf",
    "r2_cf",
    "r3_cf",
    "h_cf",
    "m_series",
    "m_cf",
    "p_cf",
    "RQParams",
    "rq",
    "rq_star",
    "rq_theta",
    "rq_charprod",
    "tau0",
    "tau_star",
    "drq_dq",
    "drq_normalized",
    "Phi21Params",
    "phi21",
    "psi_small",
    "psi_small_product",
    "gauss_product",
    "thm6_check_i",
    "thm6_check_ii",
    "MinPolyResult",
    "NOT_FOUND",
    "find_minpoly",
    "verify_root",
    "IdentityCheck",
    "CheckOutcome",
    "Report",
    "register_builtin_checks",
    "run_suite",
    "__version__",
]
