"""
Number theory helpers for maps of the form x -> g^x mod p.

Covers modular exponentiation, factorization of p-1, multiplicative orders,
the m-ary classification of a base g and construction of the transition
table on S = {1, ..., p-1}.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np
import sympy

# Configure logger for this module
logger = logging.getLogger(__name__)

# Largest supported modulus; keeps every product below 2**62
MAX_PRIME = 2**31 - 1

_TRIAL_LIMIT = 1 << 16


def mod_pow(base: int, exponent: int, p: int) -> int:
    """Compute base**exponent mod p by square-and-multiply.

    Args:
        base: Residue in 0..p-1
        exponent: Nonnegative exponent
        p: Modulus, at least 2

    Returns:
        int: base**exponent mod p
    """
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if exponent < 0:
        raise ValueError(f"exponent must be nonnegative, got {exponent}")
    if not 0 <= base < p:
        raise ValueError(f"base {base} is not a residue modulo {p}")
    result = 1 % p
    square = base
    while exponent:
        if exponent & 1:
            result = (result * square) % p
        square = (square * square) % p
        exponent >>= 1
    return result


def is_prime(n: int) -> bool:
    """Primality test; deterministic for 64-bit inputs."""
    return n >= 2 and bool(sympy.isprime(n))


def factorize(n: int) -> List[Tuple[int, int]]:
    """Factor n into ascending (prime, exponent) pairs.

    Trial division handles every factor below 2**16; whatever remains is
    handed to sympy.factorint, which is exact for 64-bit n.

    Args:
        n: Positive integer

    Returns:
        List of (prime, exponent) pairs; empty for n == 1
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n and d < _TRIAL_LIMIT:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        for q, e in sympy.factorint(n).items():
            factors[int(q)] = factors.get(int(q), 0) + e
    return sorted(factors.items())


def euler_phi(n: int) -> int:
    """Euler's totient of n, from its factorization."""
    result = n
    for q, _ in factorize(n):
        result = result // q * (q - 1)
    return result


def _divisors_from(factors: Iterable[Tuple[int, int]]) -> List[int]:
    divisors = [1]
    for q, e in factors:
        divisors = [d * q**k for d in divisors for k in range(e + 1)]
    return sorted(divisors)


def is_safe_prime(p: int) -> bool:
    """True when p = 2q + 1 with q prime."""
    return p > 4 and is_prime(p) and is_prime((p - 1) // 2)


@dataclass(frozen=True)
class PrimeContext:
    """A prime modulus with the divisor lattice of p-1.

    Use :meth:`create` rather than the constructor; it validates p and
    derives the remaining fields.
    """

    p: int
    factors: Tuple[Tuple[int, int], ...]
    divisors: Tuple[int, ...]
    class_counts: Dict[int, int] = field(hash=False, compare=False)

    @classmethod
    def create(cls, p: int) -> "PrimeContext":
        if not 3 <= p <= MAX_PRIME:
            raise ValueError(f"prime must lie in 3..{MAX_PRIME}, got {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        factors = tuple(factorize(p - 1))
        divisors = tuple(_divisors_from(factors))
        counts = {m: euler_phi((p - 1) // m) for m in divisors}
        logger.debug(f"PrimeContext p={p}: factors={factors}, {len(divisors)} divisors")
        return cls(p=p, factors=factors, divisors=divisors, class_counts=counts)

    @property
    def n(self) -> int:
        """Number of nodes in every graph, p - 1."""
        return self.p - 1

    @property
    def is_safe(self) -> bool:
        return is_safe_prime(self.p)


def prime_context(p: int) -> PrimeContext:
    """Shorthand for :meth:`PrimeContext.create`."""
    return PrimeContext.create(p)


def _check_residue(g: int, ctx: PrimeContext) -> None:
    if not 1 <= g <= ctx.p - 1:
        if g % ctx.p == 0:
            raise ValueError(f"g={g} is divisible by p={ctx.p}")
        raise ValueError(f"g={g} outside the range 1..{ctx.p - 1}")


def multiplicative_order(g: int, ctx: PrimeContext) -> int:
    """Least k >= 1 with g**k = 1 mod p.

    Starts from p-1 and strips each prime factor while the power stays 1.
    """
    _check_residue(g, ctx)
    order = ctx.p - 1
    for q, e in ctx.factors:
        for _ in range(e):
            if mod_pow(g, order // q, ctx.p) != 1:
                break
            order //= q
    return order


def classify_m(g: int, ctx: PrimeContext) -> int:
    """Return m such that the graph of x -> g^x mod p is m-ary.

    m = (p-1) / ord(g), which equals gcd(a, p-1) for g = r^a without
    solving a discrete logarithm.
    """
    return (ctx.p - 1) // multiplicative_order(g, ctx)


def count_m_ary(ctx: PrimeContext, m: int) -> int:
    """Number of bases g in 1..p-1 whose graph is m-ary: phi((p-1)/m)."""
    if m < 1 or (ctx.p - 1) % m:
        raise ValueError(f"m={m} does not divide p-1={ctx.p - 1}")
    return ctx.class_counts[m]


def class_census(ctx: PrimeContext, g_values: Iterable[int] = None) -> Dict[int, int]:
    """Count bases per m-class by computing each order.

    Args:
        ctx: Prime context
        g_values: Bases to classify (default: all of 1..p-1)

    Returns:
        Dict mapping every divisor m to the number of bases classified as m
    """
    if g_values is None:
        g_values = range(1, ctx.p)
    census = {m: 0 for m in ctx.divisors}
    for g in g_values:
        census[classify_m(g, ctx)] += 1
    return census


@dataclass(frozen=True)
class TransitionMap:
    """The table x -> g^x mod p on S = {1, ..., p-1}.

    ``next`` has length p with a zero sentinel at index 0, so ``next[x]``
    is f(x) for x in S.
    """

    p: int
    g: int
    next: np.ndarray = field(repr=False, hash=False, compare=False)

    @property
    def n(self) -> int:
        return self.p - 1

    @property
    def table(self) -> np.ndarray:
        """Zero-offset view: ``table[i]`` is f(i + 1)."""
        return self.next[1:]

    def __call__(self, x: int) -> int:
        return int(self.next[x])


def build_map(g: int, ctx: PrimeContext) -> TransitionMap:
    """Tabulate x -> g^x mod p for x in 1..p-1.

    Powers are tiled as g^(qB + r) = g^(qB) * g^r with B about sqrt(p), so
    the table costs one outer product of two short power runs. Products
    stay below 2**62 because p < 2**31.
    """
    _check_residue(g, ctx)
    p = ctx.p
    block = max(1, math.isqrt(p))
    rows = -(-p // block)

    baby = np.empty(block, dtype=np.int64)
    acc = 1
    for r in range(block):
        baby[r] = acc
        acc = (acc * g) % p
    stride = acc  # g**block mod p
    giant = np.empty(rows, dtype=np.int64)
    acc = 1
    for q in range(rows):
        giant[q] = acc
        acc = (acc * stride) % p

    powers = (giant[:, None] * baby[None, :]) % p
    nxt = powers.reshape(-1)[:p].copy()
    nxt[0] = 0
    nxt.setflags(write=False)
    return TransitionMap(p=p, g=g, next=nxt)
