"""Fractional semigroup growth bounds.

Special functions (Mittag-Leffler, Wright), semi-inner products and
logarithmic norms, two evaluators for E_{alpha,beta}(t^alpha A) x, the
growth-bound check, the fractional heat demo and the verification sweep.
Norms are selected by strings: "1", "2", "inf" or any p >= 1.
"""

from ._core import (
    ConvergenceError,
    DomainError,
    Error,
    NotDiagonalizableError,
    OverflowError,
    ParseError,
    PoleError,
    UnsupportedNormError,
    __version__,
    bound_check,
    contraction_demo,
    expm,
    expm_action,
    frac_action,
    gamma,
    laplace_identity_residual,
    laplacian_1d,
    log_norm,
    log_norm_limit,
    ml_deriv,
    ml_eval,
    norm,
    operator_norm,
    rgamma,
    run_sweep,
    semi_inner,
    semi_inner_limit,
    solve_volterra,
    wright_eval,
    wright_moment,
    wright_z_cut,
)

__all__ = [name for name in dir() if not name.startswith("_")]
