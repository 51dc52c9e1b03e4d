"""Plain-text rendering of polynomials and rational functions.

Terms are printed in graded-lex order with explicit `*` and `^`, rational
coefficients as a/b.  Rational functions are printed with catalog atoms
factored out, e.g. (1+r)(1+q*r)/((1-q)(1-q^2)), which keeps golden files
readable and diffable.
"""

from __future__ import annotations

from fractions import Fraction


def _monomial_str(dq: int, dr: int) -> str:
    parts = []
    if dq == 1:
        parts.append("q")
    elif dq > 1:
        parts.append(f"q^{dq}")
    if dr == 1:
        parts.append("r")
    elif dr > 1:
        parts.append(f"r^{dr}")
    return "*".join(parts)


def poly_str(p) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for (dq, dr), c in p.sorted_terms():
        mono = _monomial_str(dq, dr)
        if not mono:
            body = str(c)
        elif abs(c) == 1:
            body = mono if c > 0 else mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign}{body}")
    return "".join(pieces)


def _factor_atoms(p):
    """Split p into (constant, [atom polynomials], leftover polynomial)."""
    from .ratfun import _ATOMS, BivarPoly

    factors = []
    rest = p
    # Largest atoms first, so (1-q)(1-q^2) is not shredded into 1+q pieces.
    for atom in reversed(_ATOMS):
        while True:
            q = rest.divexact(atom)
            if q is None or q.is_zero():
                break
            factors.append(atom)
            rest = q
            if rest.is_constant():
                break
        if rest.is_constant():
            break
    const = Fraction(1)
    if rest.is_constant():
        const = rest.constant_value()
        rest = None
    factors.sort(key=lambda a: (a.deg_q() + a.deg_r(), a.deg_r()))
    return const, factors, rest


def _product_str(p) -> str:
    # Factored form: every atom is parenthesised, so juxtaposition is
    # unambiguous and no '*' is needed between factors.
    from .ratfun import BivarPoly

    const, factors, rest = _factor_atoms(p)
    pieces = [f"({poly_str(a)})" for a in factors]
    if rest is not None:
        if len(rest.terms) == 1 and next(iter(rest.terms.values())) < 0:
            # Hoist the sign of a lone negative monomial into the constant
            # so "(1-q)-r" style ambiguity cannot arise.
            rest = rest * BivarPoly({(0, 0): -1})
            const = -const
        rs = poly_str(rest)
        if pieces and (len(rest.terms) > 1 or rs.startswith("-")):
            rs = f"({rs})"
        pieces.append(rs)
    if const == -1 and pieces:
        pieces.insert(0, "-")
    elif const != 1 or not pieces:
        pieces.insert(0, str(const))
    return "".join(pieces)


def ratfun_str(f) -> str:
    if f.num.is_zero():
        return "0"
    num_s = _product_str(f.num)
    if f.den.is_constant():
        c = f.den.constant_value()
        if c == 1:
            return num_s
        return f"({num_s})/{c}"
    den_const, den_factors, den_rest = _factor_atoms(f.den)
    den_pieces = [f"({poly_str(a)})" for a in den_factors]
    if den_rest is not None:
        den_pieces.insert(0, f"({poly_str(den_rest)})")
    if den_const != 1:
        den_pieces.insert(0, str(den_const))
    den_s = "".join(den_pieces)
    if len(den_pieces) > 1:
        den_s = f"({den_s})"
    if _has_toplevel_sum(num_s):
        num_s = f"({num_s})"
    return f"{num_s}/{den_s}"


def _has_toplevel_sum(s: str) -> bool:
    """True when s contains + or - outside parentheses (ignoring a leading
    sign), so that s/d would parse wrongly without wrapping s."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False
