"""Exact and numerical checks of prime zeta function identities."""

from ._core import (
    DirichletSeries,
    EvalResult,
    RadicalTrace,
    RadicandError,
    TailMode,
    __version__,
    bernoulli,
    claim4_check,
    claim_lhs,
    claim_rhs,
    convergence_report,
    convolve,
    cyclotomic,
    cyclotomic_height,
    dilate,
    eval_nested,
    euler_even_zeta,
    factorize,
    first_mismatch,
    invert,
    mobius,
    prime_zeta,
    prime_zeta_claim_series,
    prime_zeta_direct,
    prime_zeta_series,
    primes_up_to,
    run_check,
    singularity_probe,
    tail_fixed_point,
    zeta_real,
    zeta_series,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
