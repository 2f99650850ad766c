"""Generalized gamma functions over real sequences and arithmetic progressions.

Two independent evaluation paths are provided: truncated infinite products
with rigorous error bounds (:mod:`gengamma.seqgamma`) and closed forms built
on classical special functions (:mod:`gengamma.argamma`). The identity
registry and grid runner live in :mod:`gengamma.identities` and
:mod:`gengamma.verify`.
"""
from .argamma import (
    ArithParams,
    alpha_const,
    beta_ratio,
    gamma_ar,
    gamma_ar_at_r,
    gamma_ar_constant,
    gamma_ar_product,
    ln_gamma_ar,
    mu_ar,
    multiplication_constant,
    psi_ar,
    shift_constants,
    sin_ar,
    zeta_functional_residual,
)
from .errors import DomainError, EmptyGrid, GenGammaError, PoleProximity, TruncatedAtCap, UnknownIdentity
from .identities import REGISTRY, identity_residual
from .seqgamma import (
    EvalResult,
    SequenceSpec,
    Status,
    TruncationPolicy,
    euler_constant_seq,
    gamma_seq,
    mu_seq,
    psi_seq,
    weierstrass_product,
)
from .verify import GridSpec, IdentityReport, SuiteConfig, build_grid, run_all, run_identity

__version__ = "0.1.0"
