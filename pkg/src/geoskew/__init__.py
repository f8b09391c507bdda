"""Alpha-geodesical skew divergences and the f_alpha power-mean family."""
from .divergences import (
    alpha_divergence,
    divergence_lower_bound,
    divergence_upper_bound,
    geodesical_skew,
    geodesical_skew_continuous,
    jeffreys,
    js,
    kl,
    skew,
    symmetrized_geodesical_skew,
)
from .errors import ConvergenceError, DomainError, UnsupportedAlphaError
from .measures import (
    DensityFn,
    NonnegVec,
    PositiveMeasureVec,
    ProbVec,
    binomial_pmf,
    gaussian_density,
    normalize,
    shannon_entropy,
    tv_distance,
)
from .quadrature import QuadratureConfig
from .scalar import f_alpha, f_alpha_inv, f_interpolate

__version__ = "0.1.0"
