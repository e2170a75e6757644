"""altzeta: cross-verified evaluation of the alternating Hurwitz zeta function
zeta_E(z, q) = sum_n (-1)^n (n+q)^(-z) and its companions — the Dirichlet eta
function, the modified Stieltjes constants gamma~_ell(q), the modified digamma
function psi~ (Nielsen's beta, negated) and the modified gamma function
Gamma~ — together with an executable registry that verifies the identities
relating them against an extended-precision oracle.
"""

from .errors import (
    AltZetaError,
    DomainError,
    InvalidConfig,
    InvalidInterval,
    NonConvergence,
    RegionError,
)
from .ddreal import ExtReal, ext_arith
from .result import AccelConfig, EvalResult
from .series import alt_series_sum
from .quadrature import integrate_adaptive, integrate_oscillatory_tail
from .kernel import BACKEND as KERNEL_BACKEND
from .zeta import (
    eta,
    wilton_shift,
    zeta_e,
    zeta_e_asymptotic,
    zeta_e_boole,
    zeta_e_direct,
    zeta_e_dz,
    zeta_e_dz0,
    zeta_e_fourier,
    zeta_e_lemma1,
    zeta_e_mellin_quad,
)
from .stieltjes import (
    gamma_tilde,
    gamma_tilde_asymptotic,
    gamma_tilde_boole,
    gamma_tilde_integer,
    gamma_tilde_oracle,
    gamma_tilde_oracle_table,
    gamma_tilde_qderiv,
    gamma_tilde_recurrence,
    gamma_tilde_shift,
    stieltjes_table,
)
from .special import (
    GammaModValue,
    PsiTildeValue,
    classical_digamma,
    classical_log_gamma,
    gamma_mod_product_dd,
    log_gamma_mod,
    psi_tilde,
    psi_tilde_integer,
    psi_tilde_n,
)
from .hyper import HyperParams, beta_fn, hyp_2f1, hyp_pfq
from .identities import IdentityReport, run_all, run_identity

__version__ = "0.1.0"

__all__ = [
    "AccelConfig",
    "AltZetaError",
    "DomainError",
    "EvalResult",
    "ExtReal",
    "GammaModValue",
    "HyperParams",
    "IdentityReport",
    "InvalidConfig",
    "InvalidInterval",
    "KERNEL_BACKEND",
    "NonConvergence",
    "PsiTildeValue",
    "RegionError",
    "alt_series_sum",
    "beta_fn",
    "classical_digamma",
    "classical_log_gamma",
    "eta",
    "ext_arith",
    "gamma_mod_product_dd",
    "gamma_tilde",
    "gamma_tilde_asymptotic",
    "gamma_tilde_boole",
    "gamma_tilde_integer",
    "gamma_tilde_oracle",
    "gamma_tilde_oracle_table",
    "gamma_tilde_qderiv",
    "gamma_tilde_recurrence",
    "gamma_tilde_shift",
    "hyp_2f1",
    "hyp_pfq",
    "integrate_adaptive",
    "integrate_oscillatory_tail",
    "log_gamma_mod",
    "psi_tilde",
    "psi_tilde_integer",
    "psi_tilde_n",
    "run_all",
    "run_identity",
    "stieltjes_table",
    "wilton_shift",
    "zeta_e",
    "zeta_e_asymptotic",
    "zeta_e_boole",
    "zeta_e_direct",
    "zeta_e_dz",
    "zeta_e_dz0",
    "zeta_e_fourier",
    "zeta_e_lemma1",
    "zeta_e_mellin_quad",
]
