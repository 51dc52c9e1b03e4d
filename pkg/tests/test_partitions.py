"""Partition combinatorics: enumeration, hooks, centralizer orders."""

import itertools
from fractions import Fraction
from math import factorial

import pytest

from heckemarkov.partitions import (
    conjugate,
    coxeter_length,
    enumerate_partitions,
    format_partition,
    hook,
    hook_product,
    num_standard_tableaux,
    parse_partition,
    z_mu,
)

PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22}


def brute_force_syt(lam):
    """Count standard Young tableaux by filling cells in all orders."""
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    count = 0
    for perm in itertools.permutations(range(1, len(cells) + 1)):
        filling = dict(zip(cells, perm))
        ok = all(
            filling[(i, j)] < filling.get((i, j + 1), 10**9)
            and filling[(i, j)] < filling.get((i + 1, j), 10**9)
            for (i, j) in cells
        )
        count += ok
    return count


def test_parse_and_format():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("5") == (5,)
    assert format_partition((3, 1)) == "3,1"
    with pytest.raises(ValueError):
        parse_partition("1,3")
    with pytest.raises(ValueError):
        parse_partition("2,0")
    assert parse_partition("") == ()


def test_enumeration_counts_and_order():
    for n, count in PARTITION_COUNTS.items():
        parts = enumerate_partitions(n)
        assert len(parts) == count
        assert parts[0] == (n,)
        assert parts[-1] == (1,) * n
        assert list(parts) == sorted(parts, reverse=True)
        assert all(sum(p) == n for p in parts)


def test_conjugate_involution():
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            assert conjugate(conjugate(p)) == p
    assert conjugate((3, 1)) == (2, 1, 1)


def test_centralizer_orders_sum_to_group_order():
    for n in range(1, 11):
        total = sum(
            Fraction(factorial(n), z_mu(mu)) for mu in enumerate_partitions(n)
        )
        assert total == factorial(n)


def test_coxeter_length():
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            assert coxeter_length(p) + len(p) == n
    assert coxeter_length((3, 1)) == 2


def test_hooks():
    # Hooks of (3, 1): 4, 2, 1 / 1.
    assert [hook((3, 1), i, j) for i, j in [(1, 1), (1, 2), (1, 3), (2, 1)]] == [
        4,
        2,
        1,
        1,
    ]
    assert hook_product((3, 1)) == 8


def test_hook_length_formula_vs_brute_force():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            assert num_standard_tableaux(lam) == brute_force_syt(lam)


def test_dimension_formula_consistency():
    # Sum of squares of dimensions is n!.
    for n in range(1, 9):
        assert (
            sum(num_standard_tableaux(p) ** 2 for p in enumerate_partitions(n))
            == factorial(n)
        )
