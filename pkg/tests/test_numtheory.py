"""
Tests for the number theory layer: primes, orders, m-classes, transition tables.
"""

import numpy as np
import pytest

from dlogmap.numtheory import (
    MAX_PRIME,
    PrimeContext,
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


def test_mod_pow():
    assert mod_pow(3, 4, 7) == 4
    assert mod_pow(5, 0, 7) == 1
    assert mod_pow(0, 3, 11) == 0
    assert mod_pow(2, 10**6, 100043) == pow(2, 10**6, 100043)
    assert mod_pow(5, 100042, 100043) == 1
    assert mod_pow(2, 0, 11) == 1


@pytest.mark.parametrize("args", [(2, 3, 1), (2, -1, 7), (7, 2, 7), (-1, 2, 7)])
def test_mod_pow_rejects_bad_input(args):
    with pytest.raises(ValueError):
        mod_pow(*args)


def test_is_prime():
    primes = [2, 3, 5, 7, 211, 2027, 100043, 100057, 106261, MAX_PRIME]
    primes += [2**61 - 1, 4_294_967_291]
    # 3215031751 is a strong pseudoprime to bases 2, 3, 5 and 7
    composites = [0, 1, 4, 9, 561, 2025, 100041, 1_000_000_007 * 3, 3_215_031_751]
    for n in primes:
        assert is_prime(n), f"{n} should be prime"
    for n in composites:
        assert not is_prime(n), f"{n} should be composite"


def test_factorize():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(100042) == [(2, 1), (50021, 1)]
    assert factorize(2**4 * 3**3 * 65537 * 1_000_003) == [(2, 4), (3, 3), (65537, 1), (1_000_003, 1)]
    assert factorize(MAX_PRIME * 4_294_967_291) == [(MAX_PRIME, 1), (4_294_967_291, 1)]
    assert factorize((2**61 - 1) * 6) == [(2, 1), (3, 1), (2**61 - 1, 1)]
    with pytest.raises(ValueError):
        factorize(0)


def test_euler_phi_class_sizes():
    # permutations (m = 1) and binary graphs (m = 2) per prime
    assert euler_phi(100042) == 50020 and euler_phi(50021) == 50020
    assert euler_phi(100056) == 30240 and euler_phi(50028) == 15120
    assert euler_phi(106260) == 21120 and euler_phi(53130) == 10560


def test_count_m_ary_known_primes():
    expected = {
        100043: (50020, 50020),
        100057: (30240, 15120),
        106261: (21120, 10560),
    }
    for p, (permutations, binary) in expected.items():
        ctx = prime_context(p)
        assert count_m_ary(ctx, 1) == permutations, f"p={p}"
        assert count_m_ary(ctx, 2) == binary, f"p={p}"
        assert sum(count_m_ary(ctx, m) for m in ctx.divisors) == p - 1


def test_count_m_ary_rejects_non_divisor():
    ctx = prime_context(7)
    with pytest.raises(ValueError):
        count_m_ary(ctx, 4)


def test_safe_primes():
    assert is_safe_prime(2027)
    assert is_safe_prime(100043)
    assert not is_safe_prime(100057)
    assert not is_safe_prime(2026)
    ctx = prime_context(2027)
    assert ctx.is_safe
    assert ctx.divisors == (1, 2, 1013, 2026)


def test_prime_context_validation():
    with pytest.raises(ValueError):
        PrimeContext.create(9)
    with pytest.raises(ValueError):
        PrimeContext.create(2)
    with pytest.raises(ValueError):
        PrimeContext.create(2**31 + 11)


def test_classify_p7():
    ctx = prime_context(7)
    assert ctx.divisors == (1, 2, 3, 6)
    assert ctx.class_counts == {1: 2, 2: 2, 3: 1, 6: 1}
    assert [classify_m(g, ctx) for g in range(1, 7)] == [6, 2, 1, 2, 1, 3]
    assert multiplicative_order(3, ctx) == 6
    assert multiplicative_order(6, ctx) == 2


def test_classify_rejects_bad_residue():
    ctx = prime_context(7)
    for g in (0, 7, 14, -1):
        with pytest.raises(ValueError):
            classify_m(g, ctx)


def test_census_matches_totient():
    for p in (7, 211, 2027):
        ctx = prime_context(p)
        census = class_census(ctx)
        assert census == ctx.class_counts, f"p={p}: {census}"
    ctx = prime_context(2027)
    assert class_census(ctx) == {1: 1012, 2: 1012, 1013: 1, 2026: 1}


def test_census_of_subset():
    ctx = prime_context(7)
    assert class_census(ctx, [1, 2, 3]) == {1: 1, 2: 1, 3: 0, 6: 1}


def test_build_map_p7():
    ctx = prime_context(7)
    tmap = build_map(3, ctx)
    assert tmap.next[0] == 0
    assert list(tmap.table) == [3, 2, 6, 4, 5, 1]
    assert tmap(2) == 2
    assert tmap.n == 6


def test_build_map_recurrence():
    ctx = prime_context(211)
    for g in range(1, 211):
        nxt = build_map(g, ctx).next.astype(np.int64)
        assert nxt[1] == g
        assert np.all(nxt[2:] == (nxt[1:-1] * g) % 211), f"g={g}"
        assert nxt[1:].min() >= 1 and nxt[1:].max() <= 210


def test_build_map_matches_pow():
    ctx = prime_context(100043)
    tmap = build_map(89339, ctx)
    for x in (1, 2, 317, 50021, 100041, 100042):
        assert tmap(x) == pow(89339, x, 100043), f"x={x}"


def test_build_map_is_read_only():
    tmap = build_map(3, prime_context(7))
    with pytest.raises(ValueError):
        tmap.next[1] = 5


@pytest.mark.parametrize("p", [7, 211])
def test_mod_pow_is_one_exactly_at_multiples_of_the_order(p):
    ctx = prime_context(p)
    for g in range(1, p):
        order = multiplicative_order(g, ctx)
        for k in range(0, 2 * (p - 1) + 1):
            assert (mod_pow(g, k, p) == 1) == (k % order == 0), f"p={p}, g={g}, k={k}"


def test_multiplicative_order_is_minimal():
    ctx = prime_context(211)
    for g in range(1, 211):
        order = multiplicative_order(g, ctx)
        assert (210 % order) == 0
        assert all(mod_pow(g, k, 211) != 1 for k in range(1, order)), f"g={g}"


@pytest.mark.parametrize("p", [211, 997])
def test_every_in_degree_is_zero_or_m(p):
    ctx = prime_context(p)
    for g in range(1, p):
        m = classify_m(g, ctx)
        indeg = np.bincount(build_map(g, ctx).table, minlength=p)[1:]
        assert set(np.unique(indeg).tolist()) <= {0, m}, f"p={p}, g={g}, m={m}"
        assert np.count_nonzero(indeg) * m == p - 1
