"""
Asymptotic predictions for random functional graphs, random permutations
and random binary functional graphs of size n.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Dict, Optional

import numpy as np
from scipy import integrate, special

# Configure logger for this module
logger = logging.getLogger(__name__)

EULER_GAMMA = 0.5772156649015329

MODELS = ("random", "permutation", "binary")

# Largest n summed term by term in harmonic_number
HARMONIC_EXACT_LIMIT = 10**6

# Default absolute tolerance for the integral constant
DEFAULT_TOLERANCE = 1e-9

PREDICTION_FIELDS = (
    "components",
    "cyclic_nodes",
    "tail_nodes",
    "terminal_nodes",
    "image_nodes",
    "avg_cycle",
    "avg_tail",
    "max_cycle",
    "max_tail",
)


class ConvergenceError(RuntimeError):
    """Raised when a quadrature cannot reach the requested tolerance."""


@dataclass(frozen=True)
class Prediction:
    """Expected per-graph statistics under one random model."""

    model: str
    n: int
    components: Optional[float] = None
    cyclic_nodes: Optional[float] = None
    tail_nodes: Optional[float] = None
    terminal_nodes: Optional[float] = None
    image_nodes: Optional[float] = None
    avg_cycle: Optional[float] = None
    avg_tail: Optional[float] = None
    max_cycle: Optional[float] = None
    max_tail: Optional[float] = None

    def as_dict(self) -> Dict[str, Optional[float]]:
        return asdict(self)

    def get(self, name: str) -> Optional[float]:
        return getattr(self, name)


def _dickman_integrand(v: float) -> float:
    # 1 - exp(-E1(v)); E1 diverges at 0 so the integrand tends to 1
    if v == 0.0:
        return 1.0
    return -math.expm1(-special.exp1(v))


_constant_cache: Dict[float, float] = {}


def golomb_dickman(tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Evaluate the integral of 1 - exp(-E1(v)) over [0, inf).

    E1 comes from ``scipy.special.exp1`` (power series near zero, continued
    fraction further out). The range is split at v = 1 so the logarithmic
    behaviour near the origin and the exponential tail are integrated
    separately.

    Args:
        tolerance: Absolute error bound, at least 1e-10

    Returns:
        float: The constant, about 0.62432965

    Raises:
        ValueError: If tolerance is below 1e-10
        ConvergenceError: If the quadrature error estimate exceeds tolerance
    """
    if not tolerance >= 1e-10:
        raise ValueError(f"tolerance must be >= 1e-10, got {tolerance}")
    if tolerance in _constant_cache:
        return _constant_cache[tolerance]

    head, head_err = integrate.quad(
        _dickman_integrand, 0.0, 1.0, epsabs=tolerance / 4, epsrel=0.0, limit=200
    )
    tail, tail_err = integrate.quad(
        _dickman_integrand, 1.0, np.inf, epsabs=tolerance / 4, epsrel=0.0, limit=200
    )
    error = head_err + tail_err
    if not error <= tolerance:
        raise ConvergenceError(
            f"quadrature error estimate {error:.3g} exceeds tolerance {tolerance:.3g}"
        )
    value = head + tail
    logger.debug(f"golomb_dickman(tol={tolerance}) = {value!r} (est. error {error:.3g})")
    _constant_cache[tolerance] = value
    return value


def max_cycle_coefficient(tolerance: float = DEFAULT_TOLERANCE) -> float:
    """sqrt(pi/2) times the Golomb-Dickman constant, about 0.78248."""
    return math.sqrt(math.pi / 2) * golomb_dickman(tolerance)


MAX_TAIL_COEFFICIENT = math.sqrt(2 * math.pi) * math.log(2)
BINARY_MAX_TAIL_OFFSET = -3 + 2 * math.log(2)


def harmonic_number(n: int) -> float:
    """H_n = 1 + 1/2 + ... + 1/n.

    Summed directly up to 10**6, Euler-Maclaurin beyond.
    """
    if n < 1:
        raise ValueError(f"harmonic number needs n >= 1, got {n}")
    if n <= HARMONIC_EXACT_LIMIT:
        return math.fsum(1.0 / np.arange(n, 0, -1, dtype=np.float64))
    return math.log(n) + EULER_GAMMA + 1 / (2 * n) - 1 / (12 * n * n) + 1 / (120 * n**4)


def _components_mapping(n: int) -> float:
    return (math.log(2 * n) + EULER_GAMMA) / 2


def predict_random(n: int) -> Prediction:
    """Random functional graph of size n."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    cyclic = math.sqrt(math.pi * n / 2) - 1 / 3
    terminal = n / math.e
    avg = math.sqrt(math.pi * n / 8)
    return Prediction(
        model="random",
        n=n,
        components=_components_mapping(n),
        cyclic_nodes=cyclic,
        tail_nodes=n - cyclic,
        terminal_nodes=terminal,
        image_nodes=n - terminal,
        avg_cycle=avg,
        avg_tail=avg,
        max_cycle=max_cycle_coefficient() * math.sqrt(n),
        max_tail=MAX_TAIL_COEFFICIENT * math.sqrt(n),
    )


def predict_permutation(n: int) -> Prediction:
    """Random permutation of size n. Every node is cyclic."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    return Prediction(
        model="permutation",
        n=n,
        components=harmonic_number(n),
        cyclic_nodes=float(n),
        tail_nodes=0.0,
        terminal_nodes=0.0,
        image_nodes=float(n),
        avg_cycle=(n + 1) / 2,
        avg_tail=0.0,
        max_cycle=golomb_dickman() * n,
        max_tail=0.0,
    )


def predict_binary(n: int) -> Prediction:
    """Random binary functional graph of (even) size n."""
    if n < 2 or n % 2:
        raise ValueError(f"binary functional graphs need an even size >= 2, got {n}")
    cyclic = math.sqrt(math.pi * n / 2) - 1
    avg = math.sqrt(math.pi * n / 8)
    return Prediction(
        model="binary",
        n=n,
        components=_components_mapping(n),
        cyclic_nodes=cyclic,
        tail_nodes=n - cyclic,
        terminal_nodes=n / 2,
        image_nodes=n / 2,
        avg_cycle=avg,
        avg_tail=avg,
        max_cycle=max_cycle_coefficient() * math.sqrt(n),
        max_tail=MAX_TAIL_COEFFICIENT * math.sqrt(n) + BINARY_MAX_TAIL_OFFSET,
    )


_PREDICTORS = {
    "random": predict_random,
    "permutation": predict_permutation,
    "binary": predict_binary,
}


def predict(model: str, n: int) -> Prediction:
    """Dispatch to the predictor for ``model``."""
    try:
        predictor = _PREDICTORS[model]
    except KeyError:
        raise ValueError(f"unknown model '{model}', expected one of {', '.join(MODELS)}") from None
    return predictor(n)


def binary_graph_count_asymptotic(n: int, refined: bool = False) -> float:
    """Leading-order estimate of the number of binary graphs divided by n!.

    ``refined`` adds the next term, 2^(n/2) (4n - 1) / (4n sqrt(pi n / 2)).
    Used for convergence diagnostics against the exact coefficients.
    """
    if n < 2 or n % 2:
        raise ValueError(f"binary functional graphs need an even size >= 2, got {n}")
    base = 2 ** (n / 2) / math.sqrt(math.pi * n / 2)
    if refined:
        return base * (4 * n - 1) / (4 * n)
    return base
