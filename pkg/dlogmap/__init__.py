"""
dlogmap - structure of discrete logarithm functional graphs

Builds the graph of x -> g^x mod p for every base g of a prime p, measures
its cycles and tails, and compares the per-class means with the statistics
of random mappings, random permutations and random binary functional graphs.
"""

from ._version import __version__, __version_tuple__

from .numtheory import (
    PrimeContext,
    TransitionMap,
    build_map,
    class_census,
    classify_m,
    count_m_ary,
    euler_phi,
    factorize,
    is_prime,
    is_safe_prime,
    mod_pow,
    multiplicative_order,
    prime_context,
)
from .graph_engine import GraphStats, GraphWorkspace, analyze, naive_analyze
from .asymptotics import (
    ConvergenceError,
    Prediction,
    golomb_dickman,
    harmonic_number,
    predict,
    predict_binary,
    predict_permutation,
    predict_random,
)

__all__ = [
    # Version
    "__version__",
    "__version_tuple__",
    # Number theory
    "PrimeContext",
    "TransitionMap",
    "build_map",
    "class_census",
    "classify_m",
    "count_m_ary",
    "euler_phi",
    "factorize",
    "is_prime",
    "is_safe_prime",
    "mod_pow",
    "multiplicative_order",
    "prime_context",
    # Graph engine
    "GraphStats",
    "GraphWorkspace",
    "analyze",
    "naive_analyze",
    # Asymptotics
    "ConvergenceError",
    "Prediction",
    "golomb_dickman",
    "harmonic_number",
    "predict",
    "predict_binary",
    "predict_permutation",
    "predict_random",
]
