"""Graded tensor-multiplication (Molien) matrices and the coinvariant
algebra checks."""

from math import factorial

import pytest

from heckemarkov.graded import (
    coinvariant_character,
    coinvariant_matrix,
    cycle_weight,
    graded_matrix,
    invariant_degrees,
    invariant_hilbert_series,
    poincare_row,
)
from heckemarkov.partitions import enumerate_partitions
from heckemarkov.ratfun import ONE, Q, R
from heckemarkov.symfun import schur_spec_product


def test_n2_matrices_by_hand():
    # n = 2, classes (2), (1,1); chi triv = (1,1), chi sign = (-1,1).
    sym = graded_matrix(2, "sym")
    d = (1 - Q) * (1 - Q**2)
    assert sym.value((2,), (2,)) == 1 / d
    assert sym.value((2,), (1, 1)) == Q / d
    assert sym.value((1, 1), (1, 1)) == 1 / d
    ext = graded_matrix(2, "ext")
    assert ext.value((2,), (2,)) == 1 + R
    assert ext.value((2,), (1, 1)) == R + R**2
    assert ext.value((1, 1), (1, 1)) == 1 + R


def test_symext_matrix_is_product_of_sym_and_ext():
    for n in range(1, 6):
        sym = graded_matrix(n, "sym")
        ext = graded_matrix(n, "ext")
        se = graded_matrix(n, "sym-ext")
        assert sym.matmul(ext).equals(se)
        assert ext.matmul(sym).equals(se)


def test_commuting_family_n6():
    sym = graded_matrix(6, "sym")
    ext = graded_matrix(6, "ext")
    se = graded_matrix(6, "sym-ext")
    assert sym.matmul(ext).equals(se)
    assert ext.matmul(sym).equals(se)


def test_symext_specializes_to_identity():
    # At r = -q the sym and ext weights cancel: the matrix is the identity.
    for n in range(1, 6):
        se = graded_matrix(n, "sym-ext")
        order = se.order
        for lam in order:
            for nu in order:
                entry = se.value(lam, nu).subs(Q, -Q)
                assert entry == (ONE if lam == nu else 0 * ONE)


def test_poincare_row_is_schur_specialization():
    for n in range(1, 7):
        order = enumerate_partitions(n)
        row = poincare_row(n)
        for gamma, entry in zip(order, row):
            assert entry == schur_spec_product(gamma)


def test_invariant_hilbert_series():
    # Molien series of S_n invariants: prod 1/(1-q^d), d = 1..n.
    for n in range(1, 7):
        expected = ONE
        for d in range(1, n + 1):
            expected = expected / (1 - Q**d)
        assert invariant_hilbert_series(n) == expected
        assert invariant_degrees(n) == list(range(1, n + 1))


def test_coinvariant_identity_class():
    # Graded dimension: (1+q)(1+q+q^2)...; sum n!, top degree n(n-1)/2.
    for n in range(1, 6):
        row = coinvariant_character(n)
        value = row.value((1,) * n).as_poly()
        coeffs = value.terms
        assert sum(coeffs.values()) == factorial(n)
        assert value.deg_q() == n * (n - 1) // 2
        assert value.deg_r() == 0


def test_coinvariant_values_can_be_negative():
    # Away from the identity the graded class values need not be
    # nonnegative; n = 2 transposition value is 1 - q.
    row = coinvariant_character(2)
    assert row.value((2,)) == 1 - Q


def test_coinvariant_matrix_nonnegative_and_proportional():
    for n in range(1, 6):
        cm = coinvariant_matrix(n)  # raises if any entry is not nonneg int
        sym = graded_matrix(n, "sym")
        hilbert = invariant_hilbert_series(n)
        scaled = cm.map_entries(lambda e: e * hilbert)
        assert scaled.equals(sym)


def test_coinvariant_matrix_identity_column_sums():
    # Multiplicities against dimensions reproduce graded dimension n! at q=1.
    from heckemarkov.partitions import num_standard_tableaux

    for n in range(1, 6):
        cm = coinvariant_matrix(n)
        total = sum(
            cm.value((n,), nu).eval(1, 0) * num_standard_tableaux(nu)
            for nu in cm.order
        )
        assert total == factorial(n)


def test_cycle_weight_unknown_kind():
    with pytest.raises(ValueError):
        cycle_weight(2, "bogus")
    with pytest.raises(ValueError):
        graded_matrix(2, "bogus")
