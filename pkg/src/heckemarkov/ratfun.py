"""Exact sparse bivariate polynomials and rational functions in q, r.

A BivarPoly maps exponent pairs (q-degree, r-degree) to Fraction
coefficients; zero coefficients are never stored.  A RatFun is a quotient
of two BivarPoly values.  Every table entry in this package is a RatFun.

Equality of rational functions is decided by cross-multiplication, which
needs no gcd machinery.  Reduction is best-effort: common monomial
content, rational content and atoms from a fixed catalog
{1 - q^k, 1 - (-r)^k} are cancelled by exact trial division.  All
denominators produced by the tables in this package are products of such
atoms, so reduced forms stay small in practice.
"""

from __future__ import annotations

from fractions import Fraction

# Largest k for which 1 - q^k / 1 - (-r)^k is tried during reduction.
ATOM_MAX = 12


class PoleError(ArithmeticError):
    """Raised when a q -> 1 limit does not exist."""


def _coeff(x):
    """Coerce to int when exact, Fraction otherwise (ints are much faster)."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, float):
        raise TypeError("float coefficients are not allowed; use Fraction")
    return _coeff(Fraction(x))


class BivarPoly:
    """Sparse polynomial in q and r over the rationals.

    terms: dict mapping (dq, dr) to a nonzero Fraction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (dq, dr), c in terms.items():
                c = _coeff(c)
                if c != 0:
                    clean[(int(dq), int(dr))] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "BivarPoly":
        return cls({(0, 0): _coeff(c)})

    @classmethod
    def monomial(cls, c, dq: int, dr: int) -> "BivarPoly":
        return cls({(dq, dr): _coeff(c)})

    @classmethod
    def var_q(cls) -> "BivarPoly":
        return cls.monomial(1, 1, 0)

    @classmethod
    def var_r(cls) -> "BivarPoly":
        return cls.monomial(1, 0, 1)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0, 0), Fraction(0))

    def deg_q(self) -> int:
        return max((e[0] for e in self.terms), default=0)

    def deg_r(self) -> int:
        return max((e[1] for e in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------

    def _as_poly(other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = BivarPoly._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = BivarPoly.__new__(BivarPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = BivarPoly.__new__(BivarPoly)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = BivarPoly._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return BivarPoly._as_poly(other) - self

    def __mul__(self, other):
        other = BivarPoly._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return BivarPoly.zero()
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        p = BivarPoly.__new__(BivarPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BivarPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = BivarPoly._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure ----------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lex order on (q-degree, r-degree)."""
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0]))

    def eval(self, qv, rv) -> Fraction:
        qv, rv = _coeff(qv), _coeff(rv)
        total = 0
        for (a, b), c in self.terms.items():
            total += c * qv**a * rv**b
        return Fraction(total)

    def divexact(self, d: "BivarPoly"):
        """Exact quotient self / d, or None when d does not divide self."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return BivarPoly.zero()
        rem = dict(self.terms)
        quot = {}
        dlead = max(d.terms)  # lex leading monomial, q-major
        dc = d.terms[dlead]
        while rem:
            lead = max(rem)
            eq, er = lead[0] - dlead[0], lead[1] - dlead[1]
            if eq < 0 or er < 0:
                return None
            if dc == 1:
                c = rem[lead]
            elif dc == -1:
                c = -rem[lead]
            else:
                c = _coeff(Fraction(rem[lead]) / dc)
            quot[(eq, er)] = c
            for (a, b), dv in d.terms.items():
                e = (a + eq, b + er)
                v = rem.get(e, 0) - c * dv
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        p = BivarPoly.__new__(BivarPoly)
        p.terms = quot
        return p

    def subs(self, q_val: "RatFun", r_val: "RatFun") -> "RatFun":
        """Image under the substitution q -> q_val, r -> r_val."""
        q_val, r_val = RatFun._as_ratfun(q_val), RatFun._as_ratfun(r_val)
        qpow = {0: RatFun.const(1)}
        rpow = {0: RatFun.const(1)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        total = RatFun.const(0)
        for (a, b), c in self.terms.items():
            term = power(qpow, q_val, a) * power(rpow, r_val, b)
            total = total + term * RatFun.const(c)
        return total

    def __str__(self):
        from .render import poly_str

        return poly_str(self)

    __repr__ = __str__


def _atoms():
    """Reduction catalog: 1 -/+ q^k and 1 -/+ (-r)^k for k <= ATOM_MAX.

    The 1+q^k / 1+(-r)^k cofactors arise whenever a 1-q^{2k} atom is
    partially cancelled; including them keeps the catalog closed under the
    duality swap q <-> -r.
    """
    out = []
    for k in range(1, ATOM_MAX + 1):
        out.append(BivarPoly({(0, 0): 1, (k, 0): -1}))
        out.append(BivarPoly({(0, 0): 1, (0, k): -((-1) ** k)}))
        out.append(BivarPoly({(0, 0): 1, (k, 0): 1}))
        out.append(BivarPoly({(0, 0): 1, (0, k): (-1) ** k}))
    return out


_ATOMS = _atoms()
# Largest first: factoring prefers 1-q^{2k} over its (1-q^k)(1+q^k) split.
_ATOMS_DESC = sorted(
    range(len(_ATOMS)),
    key=lambda i: -(_ATOMS[i].deg_q() + _ATOMS[i].deg_r()),
)
_SMALL_ATOMS = [
    BivarPoly({(0, 0): 1, (1, 0): -1}),  # 1 - q
    BivarPoly({(0, 0): 1, (1, 0): 1}),  # 1 + q
    BivarPoly({(0, 0): 1, (0, 1): 1}),  # 1 + r
    BivarPoly({(0, 0): 1, (0, 1): -1}),  # 1 - r
]

_ONE_POLY = BivarPoly.const(1)

# Factorization cache: polynomial key -> (Counter of atom indices, leftover).
_FACT_CACHE = {}


def _poly_key(p: BivarPoly):
    return frozenset(p.terms.items())


def factor_poly(p: BivarPoly):
    """Split p into catalog atoms times a leftover, with caching.

    Returns (Counter mapping atom index to multiplicity, leftover poly).
    Every denominator produced by the tables is a product of catalog atoms
    and a monomial, so the leftover is almost always constant or a
    monomial.
    """
    from collections import Counter

    key = _poly_key(p)
    hit = _FACT_CACHE.get(key)
    if hit is not None:
        return hit
    factors = Counter()
    rest = p
    for idx in _ATOMS_DESC:
        atom = _ATOMS[idx]
        while not rest.is_constant():
            q = rest.divexact(atom)
            if q is None:
                break
            factors[idx] += 1
            rest = q
        if rest.is_constant():
            break
    result = (factors, rest)
    _FACT_CACHE[key] = result
    return result


def _atom_product(factors) -> BivarPoly:
    out = _ONE_POLY
    for idx, mult in factors.items():
        if mult:
            out = out * _ATOMS[idx] ** mult
    return out


class RatFun:
    """Quotient of two BivarPoly values; the entry type of every table."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        num = BivarPoly._as_poly(num)
        den = _ONE_POLY if den is None else BivarPoly._as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        if reduce:
            self._reduce()

    @staticmethod
    def _as_ratfun(x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Fraction, BivarPoly)):
            return RatFun(x)
        raise TypeError(f"cannot coerce {x!r} to RatFun")

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls(BivarPoly.const(c), reduce=False)

    @classmethod
    def var_q(cls) -> "RatFun":
        return cls(BivarPoly.var_q(), reduce=False)

    @classmethod
    def var_r(cls) -> "RatFun":
        return cls(BivarPoly.var_r(), reduce=False)

    # -- reduction ----------------------------------------------------

    def _reduce(self):
        num, den = self.num, self.den
        if num.is_zero():
            self.num, self.den = BivarPoly.zero(), _ONE_POLY
            return
        # Common monomial content.
        mq = min(min(e[0] for e in num.terms), min(e[0] for e in den.terms))
        mr = min(min(e[1] for e in num.terms), min(e[1] for e in den.terms))
        if mq or mr:
            num = BivarPoly({(a - mq, b - mr): c for (a, b), c in num.terms.items()})
            den = BivarPoly({(a - mq, b - mr): c for (a, b), c in den.terms.items()})
        # Catalog atoms dividing both sides: factor the denominator once
        # (cached) and only try the atoms actually present in it.
        if not den.is_constant():
            factors, leftover = factor_poly(den)
            if factors:
                remaining = {}
                for idx, mult in factors.items():
                    atom = _ATOMS[idx]
                    while mult:
                        qn = num.divexact(atom)
                        if qn is None:
                            break
                        num = qn
                        mult -= 1
                    if mult:
                        remaining[idx] = mult
                den = leftover * _atom_product(remaining)
            # Residual partial cancellation, e.g. a bare 1-q in the
            # numerator against a 1-q^2 factor of the denominator.
            if not den.is_constant():
                for atom in _SMALL_ATOMS:
                    while True:
                        qn = num.divexact(atom)
                        if qn is None:
                            break
                        qd = den.divexact(atom)
                        if qd is None:
                            break
                        num, den = qn, qd
                        if den.is_constant():
                            break
                    if den.is_constant():
                        break
        # Denominator dividing the numerator outright.
        if not den.is_constant():
            qn = num.divexact(den)
            if qn is not None:
                num, den = qn, _ONE_POLY
        # Clear rational content: integer coefficients on both sides with
        # coprime contents and a positive lex-least denominator coefficient.
        # Integer coefficients keep the polynomial kernel on fast int paths.
        from math import gcd, lcm

        scale = 1
        for c in num.terms.values():
            if isinstance(c, Fraction):
                scale = lcm(scale, c.denominator)
        for c in den.terms.values():
            if isinstance(c, Fraction):
                scale = lcm(scale, c.denominator)
        if scale > 1:
            num = BivarPoly({e: v * scale for e, v in num.terms.items()})
            den = BivarPoly({e: v * scale for e, v in den.terms.items()})
        content = 0
        for c in num.terms.values():
            content = gcd(content, int(c))
        for c in den.terms.values():
            content = gcd(content, int(c))
        if content > 1:
            num = BivarPoly({e: v // content for e, v in num.terms.items()})
            den = BivarPoly({e: v // content for e, v in den.terms.items()})
        if den.terms[min(den.terms)] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> BivarPoly:
        """The underlying polynomial; raises if the denominator is nontrivial."""
        if self.den.is_constant():
            c = self.den.constant_value()
            if c == 1:
                return self.num
            return BivarPoly(
                {e: Fraction(v) / c for e, v in self.num.terms.items()}
            )
        q = self.num.divexact(self.den)
        if q is None:
            raise ValueError(f"not a polynomial: {self}")
        return q

    def as_fraction(self) -> Fraction:
        p = self.as_poly()
        return p.constant_value()

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        try:
            other = RatFun._as_ratfun(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        # When both denominators factor over the catalog, add over the lcm
        # of the factorizations instead of the raw product.
        fa, la = factor_poly(self.den)
        fb, lb = factor_poly(other.den)
        if la.is_constant() and lb.is_constant():
            shared = fa & fb
            num = (
                self.num * lb.constant_value() * _atom_product(fb - shared)
                + other.num * la.constant_value() * _atom_product(fa - shared)
            )
            den = (la * lb) * _atom_product(fa | fb)
            return RatFun(num, den)
        return RatFun(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        out = RatFun.__new__(RatFun)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        try:
            other = RatFun._as_ratfun(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFun._as_ratfun(other) - self

    def __mul__(self, other):
        try:
            other = RatFun._as_ratfun(other)
        except TypeError:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun._as_ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun._as_ratfun(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (RatFun.const(1) / self) ** (-n)
        out = RatFun.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        """Cross-multiplication equality: a/b = c/d iff a*d = c*b."""
        try:
            other = RatFun._as_ratfun(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # Reduced forms are canonical enough for the caches in this package.
        return hash((self.num, self.den))

    # -- substitutions ------------------------------------------------

    def subs(self, q_val, r_val) -> "RatFun":
        """q -> q_val, r -> r_val with RatFun (or scalar) values."""
        n = self.num.subs(q_val, r_val)
        d = self.den.subs(q_val, r_val)
        if d.is_zero():
            raise ZeroDivisionError("substitution hits a pole")
        return n / d

    def substitute_r_pow(self, N: int) -> "RatFun":
        """Replace r^k by (-q^N)^k; result is univariate in q."""
        if N < 1:
            raise ValueError("N must be positive")

        def sub_poly(p: BivarPoly) -> BivarPoly:
            out = BivarPoly.zero()
            for (a, b), c in p.terms.items():
                out = out + BivarPoly.monomial(c * (-1) ** b, a + N * b, 0)
            return out

        den = sub_poly(self.den)
        if den.is_zero():
            raise ZeroDivisionError("substitution r = -q^N hits a pole")
        return RatFun(sub_poly(self.num), den)

    def limit_q1(self) -> Fraction:
        """lim_{q -> 1} of a rational function univariate in q."""
        num, den = self.num, self.den
        if num.deg_r() or den.deg_r():
            raise ValueError("limit_q1 requires a function of q alone")
        one_minus_q = BivarPoly({(0, 0): 1, (1, 0): -1})
        while not num.is_zero() and num.eval(1, 0) == 0 and den.eval(1, 0) == 0:
            num = num.divexact(one_minus_q)
            den = den.divexact(one_minus_q)
        dv = den.eval(1, 0)
        if dv == 0:
            if num.is_zero():
                return Fraction(0)
            raise PoleError(f"pole at q=1 in {self}")
        return num.eval(1, 0) / dv

    def eval(self, qv, rv) -> Fraction:
        dv = self.den.eval(qv, rv)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at ({qv}, {rv})")
        return self.num.eval(qv, rv) / dv

    # -- serialization ------------------------------------------------

    def to_json(self):
        from .serialize import ratfun_to_json

        return ratfun_to_json(self)

    def __str__(self):
        from .render import ratfun_str

        return ratfun_str(self)

    __repr__ = __str__


def normalize(a: RatFun) -> RatFun:
    """Return the reduced form of a (idempotent; value unchanged)."""
    return RatFun(a.num, a.den)


def ratfun_eq(a, b) -> bool:
    return RatFun._as_ratfun(a) == RatFun._as_ratfun(b)


# Shared generators, convenient in call sites and tests.
Q = RatFun.var_q()
R = RatFun.var_r()
ONE = RatFun.const(1)
ZERO = RatFun.const(0)
