"""Character tables of S_n and of its Hecke algebra, and Kronecker data.

S_n characters come from the Murnaghan-Nakayama border-strip recursion
(via beta-numbers).  The Hecke table is defined by the quantum Frobenius
expansion: column mu is the Schur expansion of
q^n (q-1)^{-l(mu)} q_mu(x; 1/q), and every entry must come out a
polynomial in q; the one-dimensional rows q^{l(w)} and (-1)^{l(w)}
witness the convention.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import cache

from .partitions import (
    conjugate,
    coxeter_length,
    enumerate_partitions,
    z_mu,
)
from .ratfun import Q, R, RatFun
from .tables import PartitionTable, Report

TABLE_VERSION = "0.1.0"


@cache
def sn_character(lam: tuple, mu: tuple) -> int:
    """chi^lam(mu) by removing border strips of length mu[0]."""
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    m = len(lam)
    betas = [lam[i] + m - 1 - i for i in range(m)]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(
            x - (len(new) - 1 - i) for i, x in enumerate(new) if x - (len(new) - 1 - i) > 0
        )
        total += (-1) ** height * sn_character(newlam, rest)
    return total


@cache
def sn_char_table(n: int) -> PartitionTable:
    """Integer character table of S_n; rows lambda, columns class mu."""
    order = enumerate_partitions(n)
    rows = [
        [RatFun.const(sn_character(lam, mu)) for mu in order] for lam in order
    ]
    return PartitionTable(n, "sn", rows, order)


@cache
def kronecker(lam: tuple, mu: tuple, nu: tuple) -> int:
    """Tensor product multiplicity g(lam, mu, nu), symmetric in all three."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("kronecker needs three partitions of equal weight")
    total = Fraction(0)
    for rho in enumerate_partitions(n):
        total += (
            Fraction(sn_character(lam, rho) * sn_character(mu, rho) * sn_character(nu, rho), z_mu(rho))
        )
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"kronecker({lam},{mu},{nu}) = {total} is not a nonneg int")
    return int(total)


@cache
def tensor_matrix(gamma: tuple) -> PartitionTable:
    """M[chi^gamma]: entry (lam, nu) = g(gamma, lam, nu)."""
    n = sum(gamma)
    order = enumerate_partitions(n)
    rows = [
        [RatFun.const(kronecker(gamma, lam, nu)) for nu in order] for lam in order
    ]
    return PartitionTable(n, "tensor", rows, order)


def _cache_path(name: str, n: int):
    root = os.environ.get("HECKEMARKOV_CACHE")
    if not root:
        return None
    return os.path.join(root, f"{name}_v{TABLE_VERSION}_n{n}.json")


@cache
def hecke_char_table(n: int) -> PartitionTable:
    """Hecke character table: entry (lam, mu) = chi_q^lam(T_{w_mu})."""
    from . import symfun
    from .serialize import ratfun_from_json, ratfun_to_json

    path = _cache_path("hecke_chars", n)
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        order = enumerate_partitions(n)
        rows = [[ratfun_from_json(e) for e in row] for row in data["entries"]]
        return PartitionTable(n, "chi", rows, order)

    order = enumerate_partitions(n)
    t_inv = 1 / Q
    columns = {}
    for mu in order:
        f = symfun.hl_q(mu, t_inv)
        scalar = Q**n / (Q - 1) ** len(mu)
        f = symfun.sf_scale(f, scalar)
        col = symfun.expand_in_schur(f)
        for lam in order:
            entry = col.get(lam, RatFun.const(0))
            if not entry.is_polynomial():
                # The clearing by q-powers must be exact; anything else is
                # a convention bug, not a user error.
                raise ArithmeticError(
                    f"non-polynomial Hecke entry at lam={lam}, mu={mu}: {entry}"
                )
            columns[(lam, mu)] = entry
    rows = [[columns[(lam, mu)] for mu in order] for lam in order]
    table = PartitionTable(n, "chi", rows, order)

    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            json.dump(
                {"entries": [[ratfun_to_json(e) for e in row] for row in table.entries]},
                fh,
            )
    return table


def example_checks(n: int) -> Report:
    """Closed-form checks: one-dimensional rows, conjugate twist, and the
    basic-transposition column."""
    table = hecke_char_table(n)
    order = enumerate_partitions(n)
    report = Report("examples123", n)

    for beta in order:
        l = coxeter_length(beta)
        lhs = table.value((n,), beta)
        if lhs != Q**l:
            report.add_failure((n,), beta, lhs, Q**l)
        lhs = table.value((1,) * n, beta)
        rhs = RatFun.const((-1) ** l)
        if lhs != rhs:
            report.add_failure((1,) * n, beta, lhs, rhs)

    # chi_q^{lam'}(T_w) = (-q)^{l(w)} chi_q^lam(T_w)|_{q -> 1/q}
    for lam in order:
        lamc = conjugate(lam)
        for beta in order:
            l = coxeter_length(beta)
            lhs = table.value(lamc, beta)
            rhs = (-Q) ** l * table.value(lam, beta).subs(1 / Q, R)
            if lhs != rhs:
                report.add_failure(lamc, beta, lhs, rhs)

    # Column of the basic transposition via the S_n character values.
    if n >= 2:
        beta = (2,) + (1,) * (n - 2)
        for lam in order:
            dim = sn_character(lam, (1,) * n)
            chi_s = sn_character(lam, beta)
            rhs = (Q / 2) * (dim + chi_s) - Fraction(1, 2) * (dim - chi_s)
            lhs = table.value(lam, beta)
            if lhs != rhs:
                report.add_failure(lam, beta, lhs, rhs)
    return report
