"""Numerical laboratory for truncated Euler products inside the critical
strip: Dirichlet characters and L-functions, Cesaro-averaged products,
the prime cosine walk and its CLT ensembles, and zero counting/solving
through the phase of zeta near the critical line.
"""
from .characters import (
    CharacterZeroError,
    DirichletCharacter,
    UnsupportedModulusError,
    character,
    phase_theta,
    phases_on_primes,
)
from .config import DEFAULT_CONFIG, Config, load_config
from .euler import (
    DivergentProductError,
    EulerProductTrace,
    SingularityError,
    abel_bound,
    cesaro_average,
    cutoff,
    log_series,
    partial_product,
    prime_zeta_continuation,
)
from .lfunc import (
    ArgAmbiguityError,
    EvalResult,
    OutOfRegionError,
    PoleError,
    arg_continuous,
    hurwitz_zeta,
    l_function,
    zeta,
)
from .primes import (
    MAX_PRIME_COUNT,
    PrimeBudgetError,
    PrimeTable,
    generate_primes,
    mobius,
    mobius_sieve,
)
from .rwp import (
    EnsembleStats,
    RwpTrace,
    prime_ensemble,
    rwp_series,
    smooth_estimate,
    uniform_walk,
)
from .specfun import lambert_w, log_gamma, riemann_siegel_theta
from .zeros import (
    BracketingError,
    CountingPoint,
    ZeroResult,
    counting_function,
    lambert_approx,
    s_delta,
    solve_zero,
)

__version__ = "0.1.0"

__all__ = [
    "ArgAmbiguityError",
    "BracketingError",
    "CharacterZeroError",
    "Config",
    "DEFAULT_CONFIG",
    "CountingPoint",
    "DirichletCharacter",
    "DivergentProductError",
    "EnsembleStats",
    "EulerProductTrace",
    "EvalResult",
    "MAX_PRIME_COUNT",
    "OutOfRegionError",
    "PoleError",
    "PrimeBudgetError",
    "PrimeTable",
    "RwpTrace",
    "SingularityError",
    "UnsupportedModulusError",
    "ZeroResult",
    "abel_bound",
    "arg_continuous",
    "cesaro_average",
    "character",
    "counting_function",
    "cutoff",
    "generate_primes",
    "hurwitz_zeta",
    "l_function",
    "lambert_approx",
    "lambert_w",
    "load_config",
    "log_gamma",
    "log_series",
    "mobius",
    "mobius_sieve",
    "partial_product",
    "phase_theta",
    "phases_on_primes",
    "prime_ensemble",
    "prime_zeta_continuation",
    "riemann_siegel_theta",
    "rwp_series",
    "s_delta",
    "smooth_estimate",
    "solve_zero",
    "uniform_walk",
    "zeta",
]
