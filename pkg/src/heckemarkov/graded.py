"""Graded tensor-multiplication (Molien) matrices for the n-dimensional
permutation representation of S_n.

A cycle of length m acts on the symmetric algebra with graded trace
1/(1 - q^m) and on the exterior algebra with graded trace 1 - (-r)^m;
the exterior sign convention is pinned by the specialization
p_k -> (1 - (-r)^k)/(1 - q^k).  Entry (i, j) of each matrix is the
multiplicity series of chi^j in (graded algebra) tensor chi^i.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .characters import sn_character
from .partitions import enumerate_partitions, z_mu
from dataclasses import dataclass

from .ratfun import Q, R, RatFun
from .tables import PartitionTable

KINDS = ("sym", "ext", "sym-ext")


@dataclass
class GradedRow:
    """A graded class function: one RatFun value per conjugacy class."""

    n: int
    kind: str
    order: tuple
    values: list

    def value(self, mu) -> RatFun:
        return self.values[self.order.index(mu)]

    def to_json(self):
        from .partitions import format_partition
        from .serialize import ratfun_to_json

        return {
            "n": self.n,
            "kind": self.kind,
            "order": [format_partition(p) for p in self.order],
            "values": [ratfun_to_json(v) for v in self.values],
        }


def cycle_weight(m: int, kind: str) -> RatFun:
    if kind == "sym":
        return 1 / (1 - Q**m)
    if kind == "ext":
        return 1 - (-R) ** m
    if kind == "sym-ext":
        return (1 - (-R) ** m) / (1 - Q**m)
    raise ValueError(f"unknown kind {kind!r}")


@cache
def graded_matrix(n: int, kind: str) -> PartitionTable:
    """Entry (i, j) = sum_mu z_mu^{-1} chi^i(mu) chi^j(mu) prod_k w(mu_k)."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    order = enumerate_partitions(n)
    class_weight = {}
    for mu in order:
        w = RatFun.const(Fraction(1, z_mu(mu)))
        for part in mu:
            w = w * cycle_weight(part, kind)
        class_weight[mu] = w
    rows = []
    for lam in order:
        row = []
        for nu in order:
            acc = RatFun.const(0)
            for mu in order:
                c = sn_character(lam, mu) * sn_character(nu, mu)
                if c:
                    acc = acc + class_weight[mu] * c
            row.append(acc)
        rows.append(row)
    return PartitionTable(n, kind, rows, order)


def poincare_row(n: int) -> list:
    """Trivial-character row of the sym-ext matrix (twisted Poincare series)."""
    return graded_matrix(n, "sym-ext").row((n,))


@cache
def invariant_hilbert_series(n: int) -> RatFun:
    """Molien series of the invariants: the (trivial, trivial) sym entry."""
    return graded_matrix(n, "sym").value((n,), (n,))


@cache
def coinvariant_character(n: int) -> GradedRow:
    """Graded character of the coinvariant algebra: class-function values.

    Each value is (invariant Hilbert series)^{-1} times the graded trace of
    the class on the symmetric algebra.  Values are polynomials in q with
    integer coefficients; they may be negative away from the identity class
    (already at n=2 the transposition value is 1-q).  Nonnegativity holds
    for the multiplicity matrix instead, see coinvariant_matrix.
    """
    order = enumerate_partitions(n)
    hilbert = invariant_hilbert_series(n)
    values = []
    for mu in order:
        trace = RatFun.const(1)
        for part in mu:
            trace = trace / (1 - Q**part)
        value = trace / hilbert
        if not value.is_polynomial():
            raise ArithmeticError(
                f"coinvariant value at class {mu} is not polynomial: {value}"
            )
        for (dq, dr), c in value.as_poly().terms.items():
            if dr != 0 or c.denominator != 1:
                raise ArithmeticError(
                    f"coinvariant value at class {mu} has bad term {c} q^{dq} r^{dr}"
                )
        values.append(value)
    return GradedRow(n, "coinvariant", order, values)


@cache
def coinvariant_matrix(n: int) -> PartitionTable:
    """M[zeta_C(q)]: graded multiplicities of chi^j in coinvariants x chi^i.

    These are graded fake-degree multiplicities, so every entry must be a
    polynomial in q with nonnegative integer coefficients.
    """
    order = enumerate_partitions(n)
    row_values = coinvariant_character(n).values
    rows = []
    for lam in order:
        row = []
        for nu in order:
            acc = RatFun.const(0)
            for k, mu in enumerate(order):
                c = sn_character(lam, mu) * sn_character(nu, mu)
                if c:
                    acc = acc + row_values[k] * Fraction(c, z_mu(mu))
            for (dq, dr), coef in acc.as_poly().terms.items():
                if dr != 0 or coef.denominator != 1 or coef < 0:
                    raise ArithmeticError(
                        f"coinvariant matrix entry ({lam},{nu}) has bad term "
                        f"{coef} q^{dq} r^{dr}"
                    )
            row.append(acc)
        rows.append(row)
    return PartitionTable(n, "coinvariant", rows, order)


def invariant_degrees(n: int) -> list:
    """Degree sequence read off the invariant Hilbert series by peeling
    1/(1-q^d) factors (reported, not asserted against any convention)."""
    series = invariant_hilbert_series(n)
    num, den = series.num, series.den
    degrees = []
    from .ratfun import BivarPoly

    changed = True
    while changed and not den.is_constant():
        changed = False
        # Largest degree first: (1-q) divides every 1-q^k, so smallest-first
        # greedy peeling would misreport the sequence.
        for d in range(n, 0, -1):
            atom = BivarPoly({(0, 0): 1, (d, 0): -1})
            quot = den.divexact(atom)
            if quot is not None:
                den = quot
                degrees.append(d)
                changed = True
                break
    degrees.sort()
    return degrees
