from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conormal.groups import AbelianGroup, direct_sum, invariant_factors


def elementary_divisors(orders):
    """Prime-power decomposition by trial division."""
    out = Counter()
    for n in orders:
        p = 2
        while n > 1:
            if p * p > n:
                out[n] += 1
                break
            e = 1
            while n % p == 0:
                n //= p
                e *= p
            if e > 1:
                out[e] += 1
            p += 1
    return out


@given(st.lists(st.integers(1, 200), max_size=8))
def test_invariant_factors_preserve_group(orders):
    factors = invariant_factors(orders)
    assert all(f > 1 for f in factors)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    assert elementary_divisors(factors) == elementary_divisors(orders)


def test_string_forms():
    assert str(AbelianGroup()) == "0"
    assert str(AbelianGroup(1)) == "Z"
    assert str(AbelianGroup(3)) == "Z^3"
    assert str(AbelianGroup(0, (4, 2))) == "Z/2 + Z/4"
    assert str(AbelianGroup(2, (2, 3))) == "Z^2 + Z/6"


def test_normal_form_equality():
    assert AbelianGroup(1, (2, 3, 1)) == AbelianGroup(1, (6,))
    assert AbelianGroup(0, (4, 6)) == AbelianGroup(0, (2, 12))
    assert direct_sum([AbelianGroup(1), AbelianGroup(0, (2,)), AbelianGroup(2, (4,))]) == AbelianGroup(3, (2, 4))


def test_rejects_bad_values():
    with pytest.raises(ValueError):
        AbelianGroup(-1)
    with pytest.raises(ValueError):
        AbelianGroup(0, (0,))
