"""Symmetric functions over the rational-function field, power-sum basis.

A SymFun is a dict mapping partitions mu to RatFun coefficients of p_mu;
all keys share one weight and zero coefficients are dropped.  Schur and
Hall-Littlewood functions are constructed into this basis; the internal
product, the principal super specialization and the alphabet scalings are
monomial in p, which is why p is the single internal basis.

Two-alphabet (super) symmetric functions use keys (mu, nu) standing for
p_mu(x) * p_nu(y).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .partitions import (
    cells,
    conjugate,
    enumerate_partitions,
    hook,
    z_mu,
)
from .ratfun import Q, R, RatFun

# ---------------------------------------------------------------------
# p-basis arithmetic


def sf_zero() -> dict:
    return {}


def _clean(f: dict) -> dict:
    return {k: v for k, v in f.items() if not v.is_zero()}


def sf_add(f: dict, g: dict) -> dict:
    out = dict(f)
    for k, v in g.items():
        out[k] = out[k] + v if k in out else v
    return _clean(out)


def sf_sub(f: dict, g: dict) -> dict:
    return sf_add(f, {k: -v for k, v in g.items()})


def sf_scale(f: dict, c) -> dict:
    c = RatFun._as_ratfun(c)
    if c.is_zero():
        return {}
    return {k: v * c for k, v in f.items()}


def sf_mul(f: dict, g: dict) -> dict:
    """Product in the ring of symmetric functions: p_mu * p_nu = p_{mu u nu}."""
    out = {}
    for mu, a in f.items():
        for nu, b in g.items():
            key = tuple(sorted(mu + nu, reverse=True))
            c = a * b
            out[key] = out[key] + c if key in out else c
    return _clean(out)


def sf_eq(f: dict, g: dict) -> bool:
    keys = set(f) | set(g)
    zero = RatFun.const(0)
    return all(f.get(k, zero) == g.get(k, zero) for k in keys)


def sf_degree(f: dict) -> int:
    weights = {sum(k) for k in f}
    if len(weights) > 1:
        raise ValueError(f"inhomogeneous symmetric function: weights {weights}")
    return weights.pop() if weights else 0


# ---------------------------------------------------------------------
# Basis constructors


@cache
def _h_in_p(m: int) -> tuple:
    """Complete homogeneous h_m in the p-basis (Newton recurrence)."""
    if m == 0:
        return (((), Fraction(1)),)
    acc = {}
    for k in range(1, m + 1):
        for mu, c in _h_in_p(m - k):
            key = tuple(sorted(mu + (k,), reverse=True))
            acc[key] = acc.get(key, Fraction(0)) + c
    return tuple(sorted((mu, c / m) for mu, c in acc.items()))


@cache
def _e_in_p(m: int) -> tuple:
    """Elementary e_m in the p-basis (Newton recurrence)."""
    if m == 0:
        return (((), Fraction(1)),)
    acc = {}
    for k in range(1, m + 1):
        for mu, c in _e_in_p(m - k):
            key = tuple(sorted(mu + (k,), reverse=True))
            acc[key] = acc.get(key, Fraction(0)) + (-1) ** (k - 1) * c
    return tuple(sorted((mu, c / m) for mu, c in acc.items()))


def h_sym(m: int) -> dict:
    return {mu: RatFun.const(c) for mu, c in _h_in_p(m)}


def e_sym(m: int) -> dict:
    return {mu: RatFun.const(c) for mu, c in _e_in_p(m)}


def p_sym(mu: tuple) -> dict:
    return {tuple(sorted(mu, reverse=True)): RatFun.const(1)}


@cache
def schur(lam: tuple) -> dict:
    """s_lam = sum_mu z_mu^{-1} chi^lam(mu) p_mu."""
    from .characters import sn_character

    n = sum(lam)
    out = {}
    for mu in enumerate_partitions(n):
        c = Fraction(sn_character(lam, mu), z_mu(mu))
        if c:
            out[mu] = RatFun.const(c)
    return out


def hl_one(m: int, t) -> dict:
    """One-part Hall-Littlewood q_m(x; t) = sum_{a+b=m} (-t)^b h_a e_b."""
    t = RatFun._as_ratfun(t)
    out = sf_zero()
    for b in range(m + 1):
        term = sf_mul(h_sym(m - b), e_sym(b))
        out = sf_add(out, sf_scale(term, (-t) ** b))
    return out


def hl_q(mu: tuple, t) -> dict:
    """q_mu(x; t) = prod_i q_{mu_i}(x; t)."""
    out = p_sym(())
    for part in mu:
        out = sf_mul(out, hl_one(part, t))
    return out


# ---------------------------------------------------------------------
# Products and expansions


def internal_product(f: dict, g: dict) -> dict:
    """Bilinear extension of p_mu * p_nu = delta z_mu p_mu."""
    if f and g and sf_degree(f) != sf_degree(g):
        raise ValueError("internal product needs equal degrees")
    out = {}
    for mu, a in f.items():
        if mu in g:
            out[mu] = a * g[mu] * z_mu(mu)
    return _clean(out)


def expand_in_schur(f: dict) -> dict:
    """Coefficients c_lam = <f, s_lam> under <p_mu, p_nu> = z_mu delta."""
    from .characters import sn_character

    if not f:
        return {}
    n = sf_degree(f)
    out = {}
    for lam in enumerate_partitions(n):
        c = RatFun.const(0)
        for mu, v in f.items():
            chi = sn_character(lam, mu)
            if chi:
                c = c + v * chi
        if not c.is_zero():
            out[lam] = c
    return out


# ---------------------------------------------------------------------
# Specializations


def principal_super_spec(f: dict) -> RatFun:
    """p_k -> (1 - (-r)^k) / (1 - q^k), extended linearly."""
    total = RatFun.const(0)
    for mu, c in f.items():
        term = c
        for part in mu:
            term = term * (1 - (-R) ** part) / (1 - Q**part)
        total = total + term
    return total


def schur_spec_product(gamma: tuple) -> RatFun:
    """Hook-content product for s_gamma at the (1+r)/(1-q) alphabet.

    Cell (i, j) contributes (q^{i-1} + r q^{j-1}) / (1 - q^{hook}); the
    content exponents are zero-based (the one-cell case must give
    (1+r)/(1-q)).
    """
    out = RatFun.const(1)
    for i, j in cells(gamma):
        out = out * (Q ** (i - 1) + R * Q ** (j - 1)) / (1 - Q ** hook(gamma, i, j))
    return out


def scale_alphabet(f: dict, N: int) -> dict:
    """p_k -> N p_k, i.e. each variable repeated N times."""
    return {mu: c * N ** len(mu) for mu, c in f.items()}


def hook_content_value(nu: tuple, N: int) -> Fraction:
    """s_nu(1^N) = prod over cells of (N + j - i) / hook."""
    out = Fraction(1)
    for i, j in cells(nu):
        out *= Fraction(N + j - i, hook(nu, i, j))
    return out


def n_schur(lam: tuple, N: int) -> dict:
    """s_lam(x^(N)) expanded through tensor multiplicities and hook contents."""
    from .characters import kronecker

    n = sum(lam)
    out = sf_zero()
    for gamma in enumerate_partitions(n):
        coeff = Fraction(0)
        for nu in enumerate_partitions(n):
            g = kronecker(gamma, lam, nu)
            if g:
                coeff += g * hook_content_value(nu, N)
        if coeff:
            out = sf_add(out, sf_scale(schur(gamma), coeff))
    return out


# ---------------------------------------------------------------------
# Monomial basis (used by the duality transform)


@cache
def _p_to_m_matrix(n: int) -> dict:
    """R[mu][lam]: coefficient of m_lam in p_mu, by brute-force expansion."""
    order = enumerate_partitions(n)
    out = {}
    for mu in order:
        # Expand prod_k (x_1^{mu_k} + ... + x_n^{mu_k}) over n variables.
        expansion = {(0,) * n: 1}
        for part in mu:
            nxt = {}
            for expo, c in expansion.items():
                for i in range(n):
                    e = list(expo)
                    e[i] += part
                    e = tuple(e)
                    nxt[e] = nxt.get(e, 0) + c
            expansion = nxt
        row = {}
        for lam in order:
            target = tuple(lam) + (0,) * (n - len(lam))
            row[lam] = Fraction(expansion.get(target, 0))
        out[mu] = row
    return out


@cache
def _m_to_p_matrix(n: int) -> dict:
    """Inverse transition: m_lam as a p-combination (Fraction matrix inverse)."""
    order = enumerate_partitions(n)
    size = len(order)
    R_ = _p_to_m_matrix(n)
    # Gauss-Jordan over Fractions on [R | I].
    aug = [
        [R_[order[i]][order[j]] for j in range(size)]
        + [Fraction(1 if k == i else 0) for k in range(size)]
        for i in range(size)
    ]
    for col in range(size):
        piv = next(i for i in range(col, size) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(size):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    # aug rows now hold R^{-1}; m_lam = sum_mu (R^{-1})[lam][mu]... transpose care:
    # R maps p to m coefficients row-wise (p_mu = sum_lam R[mu][lam] m_lam), so
    # m_lam = sum_mu Rinv[lam][mu] p_mu with Rinv the matrix inverse of R.
    out = {}
    for i, lam in enumerate(order):
        out[lam] = {
            order[j]: aug[i][size + j] for j in range(size) if aug[i][size + j]
        }
    return out


def m_to_p(lam: tuple) -> dict:
    """Monomial symmetric function m_lam in the p-basis."""
    n = sum(lam)
    return {mu: RatFun.const(c) for mu, c in _m_to_p_matrix(n)[lam].items()}


def sf_to_m(f: dict) -> dict:
    """Coefficients of f in the monomial basis."""
    if not f:
        return {}
    n = sf_degree(f)
    R_ = _p_to_m_matrix(n)
    out = {}
    for lam in enumerate_partitions(n):
        c = RatFun.const(0)
        for mu, v in f.items():
            coeff = R_[mu][lam]
            if coeff:
                c = c + v * coeff
        if not c.is_zero():
            out[lam] = c
    return out


# ---------------------------------------------------------------------
# Two-alphabet (super) extension


def sf2_zero() -> dict:
    return {}


def sf2_add(f: dict, g: dict) -> dict:
    out = dict(f)
    for k, v in g.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def sf2_scale(f: dict, c) -> dict:
    c = RatFun._as_ratfun(c)
    if c.is_zero():
        return {}
    return {k: v * c for k, v in f.items()}


def sf2_mul(f: dict, g: dict) -> dict:
    out = {}
    for (m1, n1), a in f.items():
        for (m2, n2), b in g.items():
            key = (
                tuple(sorted(m1 + m2, reverse=True)),
                tuple(sorted(n1 + n2, reverse=True)),
            )
            c = a * b
            out[key] = out[key] + c if key in out else c
    return {k: v for k, v in out.items() if not v.is_zero()}


def sf2_eq(f: dict, g: dict) -> bool:
    keys = set(f) | set(g)
    zero = RatFun.const(0)
    return all(f.get(k, zero) == g.get(k, zero) for k in keys)


def sf2_tensor(fx: dict, gy: dict) -> dict:
    """f(x) * g(y) for single-alphabet inputs."""
    out = {}
    for mu, a in fx.items():
        for nu, b in gy.items():
            out[(mu, nu)] = a * b
    return {k: v for k, v in out.items() if not v.is_zero()}


def super_image(f: dict) -> dict:
    """Image under p_k -> p_k(x) + (-1)^{k-1} p_k(y)."""
    out = sf2_zero()
    for mu, c in f.items():
        expansion = {((), ()): c}
        for part in mu:
            nxt = {}
            for (xs, ys), v in expansion.items():
                kx = (tuple(sorted(xs + (part,), reverse=True)), ys)
                nxt[kx] = nxt.get(kx, RatFun.const(0)) + v
                ky = (xs, tuple(sorted(ys + (part,), reverse=True)))
                nxt[ky] = nxt.get(ky, RatFun.const(0)) + v * (-1) ** (part - 1)
            expansion = nxt
        out = sf2_add(out, expansion)
    return out


def omega_y(f: dict) -> dict:
    """Involution on the y-alphabet: p_k(y) -> (-1)^{k-1} p_k(y)."""
    out = {}
    for (mu, nu), c in f.items():
        sign = (-1) ** (sum(nu) - len(nu))
        out[(mu, nu)] = c * sign
    return out


def drop_y(f: dict) -> dict:
    """Set the y-alphabet to empty: keep only keys with nu = ()."""
    return {mu: c for (mu, nu), c in f.items() if not nu}


def super_schur(lam: tuple) -> dict:
    return super_image(schur(lam))


def super_hl(mu: tuple, t) -> dict:
    return super_image(hl_q(mu, t))


def super_hl_one_he(m: int, t) -> dict:
    """q_m(x/y; t) by expanding the generating-function product directly:
    sum over a+b+c+d=m of (-t)^{b+d} h_a(x) e_b(x) e_c(y) h_d(y)."""
    t = RatFun._as_ratfun(t)
    out = sf2_zero()
    for a in range(m + 1):
        for b in range(m + 1 - a):
            for c in range(m + 1 - a - b):
                d = m - a - b - c
                x_part = sf_mul(h_sym(a), e_sym(b))
                y_part = sf_mul(e_sym(c), h_sym(d))
                term = sf2_scale(sf2_tensor(x_part, y_part), (-t) ** (b + d))
                out = sf2_add(out, term)
    return out


def sf2_principal_spec(f: dict) -> RatFun:
    """Evaluate at x = (1, q, q^2, ...) and y = (r, rq, rq^2, ...):
    p_k(x) -> 1/(1-q^k), p_k(y) -> r^k/(1-q^k)."""
    total = RatFun.const(0)
    for (mu, nu), c in f.items():
        term = c
        for part in mu:
            term = term / (1 - Q**part)
        for part in nu:
            term = term * R**part / (1 - Q**part)
        total = total + term
    return total


def two_alphabet_product_check(gamma: tuple) -> bool:
    """s_gamma(xy) = sum_lam (s_gamma * s_lam)(x) s_lam(y), both sides in
    the p_mu(x) p_nu(y) basis via p_mu(xy) = p_mu(x) p_mu(y)."""
    from .characters import sn_character

    n = sum(gamma)
    lhs = {
        (mu, mu): RatFun.const(Fraction(sn_character(gamma, mu), z_mu(mu)))
        for mu in enumerate_partitions(n)
        if sn_character(gamma, mu)
    }
    rhs = sf2_zero()
    for lam in enumerate_partitions(n):
        rhs = sf2_add(
            rhs, sf2_tensor(internal_product(schur(gamma), schur(lam)), schur(lam))
        )
    return sf2_eq(lhs, rhs)
