"""Exact arithmetic in Z[q,q^-1] and its field of fractions.

A Laurent polynomial is stored as a dict mapping integer exponents to
nonzero integer coefficients (arbitrary precision).  The zero polynomial
is the empty dict.  A rational function is a reduced fraction of two
Laurent polynomials; after normalization the denominator is an honest
polynomial in q with positive leading coefficient, all negative powers
of q having been pushed into the numerator, and the gcd (including the
shared integer content) has been cancelled.  Structural equality of the
normalized pair therefore coincides with mathematical equality.

>>> str(quantum_int(3))
'q^-2 + 1 + q^2'
>>> str(quantum_binom(2, 1))
'q^-1 + q'
>>> one_over = RationalFunction(LaurentPoly.one(), quantum_int0(2))
>>> str(one_over.bar())
'(q^2)/(1 + q^2)'
"""

from __future__ import annotations

from math import gcd as _int_gcd

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "bar",
    "quantum_int",
    "quantum_factorial",
    "quantum_binom",
    "quantum_multinom",
    "quantum_int0",
    "quantum_factorial0",
    "quantum_binom0",
    "quantum_multinom0",
]


class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q(exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q^exp."""
        return LaurentPoly({exp: coeff})

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    # -- predicates and views ----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = _int_gcd(g, abs(c))
        return g

    def leading_coeff(self) -> int:
        return self.terms[self.max_exp()]

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) + (-self)

    def __mul__(self, other):
        other = _as_laurent(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1:
                ((e, c),) = self.terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c**(-n) if c == -1 else 1})
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- q-specific operations ---------------------------------------

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def at_one(self) -> int:
        """Evaluate at q = 1."""
        return sum(self.terms.values())

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises if the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.min_exp() - other.min_exp()
        num = dict(self.shift(-self.min_exp()).terms)
        den = other.shift(-other.min_exp()).terms
        dmax = max(den)
        dlead = den[dmax]
        out: dict[int, int] = {}
        while num:
            nmax = max(num)
            if nmax < dmax:
                raise ValueError("inexact Laurent division")
            c, r = divmod(num[nmax], dlead)
            if r:
                raise ValueError("inexact Laurent division")
            e = nmax - dmax
            out[e] = c
            for de, dc in den.items():
                k = de + e
                v = num.get(k, 0) - dc * c
                if v:
                    num[k] = v
                elif k in num:
                    del num[k]
        return LaurentPoly(out).shift(shift)

    # -- rendering ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                power = "q" if e == 1 else f"q^{e}"
                body = head + power
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(data: dict) -> "LaurentPoly":
        return LaurentPoly({int(e): int(c) for e, c in data.items()})


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


# -- polynomial gcd over Z[q] (inputs with valuation 0) ----------------


def _primitive(p: LaurentPoly) -> LaurentPoly:
    c = p.content()
    if c in (0, 1):
        return p
    return LaurentPoly({e: v // c for e, v in p.terms.items()})


def _pseudo_rem(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Pseudo-remainder of a by b, both ordinary polynomials."""
    da, db = a.max_exp(), b.max_exp()
    lead_b = b.leading_coeff()
    r = a
    while not r.is_zero() and r.max_exp() >= db:
        k = r.max_exp() - db
        r = r * lead_b - b * LaurentPoly.q(k, r.leading_coeff())
    return r


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd in Z[q] of two nonzero polynomials with valuation 0."""
    ca, cb = a.content(), b.content()
    g = _int_gcd(ca, cb)
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero():
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a.leading_coeff() < 0:
        a = -a
    return a * g


class RationalFunction:
    """Reduced fraction of integer Laurent polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _normalized=False):
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        vn, vd = num.min_exp(), den.min_exp()
        p = num.shift(-vn)
        d = den.shift(-vd)
        if not d.is_one():
            g = _poly_gcd(p, d)
            if not g.is_one():
                p = p.divexact(g)
                d = d.divexact(g)
        if d.leading_coeff() < 0:
            p, d = -p, -d
        self.num = p.shift(vn - vd)
        self.den = d

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_laurent(p: LaurentPoly) -> "RationalFunction":
        return RationalFunction(p, LaurentPoly.one(), _normalized=True)

    @staticmethod
    def from_int(c: int) -> "RationalFunction":
        return RationalFunction.from_laurent(LaurentPoly.const(c))

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction.from_int(0)

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction.from_int(1)

    @staticmethod
    def q_power(k: int) -> "RationalFunction":
        return RationalFunction.from_laurent(LaurentPoly.q(k))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        other = _as_rational(other)
        if self.den.is_one() and other.den.is_one():
            return RationalFunction.from_laurent(self.num + other.num)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-_as_rational(other))

    def __rsub__(self, other):
        return _as_rational(other) + (-self)

    def __mul__(self, other):
        other = _as_rational(other)
        if self.den.is_one() and other.den.is_one():
            return RationalFunction.from_laurent(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = _as_rational(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rational(other).__truediv__(self)

    def inverse(self) -> "RationalFunction":
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _as_rational(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- q-specific operations ------------------------------------------

    def bar(self) -> "RationalFunction":
        """Substitute q -> q^-1 in numerator and denominator."""
        return RationalFunction(self.num.bar(), self.den.bar())

    def at_one(self):
        """Exact evaluation at q = 1 as a Fraction."""
        from fractions import Fraction

        d = self.den.at_one()
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at q = 1")
        return Fraction(self.num.at_one(), d)

    # -- rendering -------------------------------------------------------

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data: dict) -> "RationalFunction":
        return RationalFunction(
            LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"])
        )


def _as_rational(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction.from_laurent(x)
    if isinstance(x, int):
        return RationalFunction.from_int(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")


def bar(x: RationalFunction) -> RationalFunction:
    """The involution q -> q^-1."""
    return x.bar()


# -- quantum integers, factorials, binomials ---------------------------


def quantum_int(k: int) -> LaurentPoly:
    """[k] = (q^k - q^-k)/(q - q^-1) = q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    if k < 0:
        raise ValueError(f"quantum integer needs k >= 0, got {k}")
    return LaurentPoly({k - 1 - 2 * i: 1 for i in range(k)})


def quantum_factorial(k: int) -> LaurentPoly:
    """[k]! = [k][k-1]...[1]."""
    if k < 0:
        raise ValueError(f"quantum factorial needs k >= 0, got {k}")
    out = LaurentPoly.one()
    for i in range(2, k + 1):
        out = out * quantum_int(i)
    return out


def quantum_binom(n: int, k: int) -> LaurentPoly:
    """[n]!/([k]![n-k]!); symmetric in k <-> n-k."""
    if k < 0 or k > n:
        raise ValueError(f"quantum binomial needs 0 <= k <= n, got n={n}, k={k}")
    return quantum_factorial(n).divexact(quantum_factorial(k) * quantum_factorial(n - k))


def quantum_multinom(parts) -> LaurentPoly:
    """[k1+...+kl]! / ([k1]! ... [kl]!)."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"quantum multinomial needs nonnegative parts, got {parts}")
    den = LaurentPoly.one()
    for p in parts:
        den = den * quantum_factorial(p)
    return quantum_factorial(sum(parts)).divexact(den)


# Rescaled variants: polynomials in q with constant term 1 when nonzero.
# The pairwise-product exponent runs over unordered pairs {i,j}.


def quantum_int0(k: int) -> LaurentPoly:
    """[k]_0 = q^(k-1) [k]."""
    return quantum_int(k).shift(k - 1)


def quantum_factorial0(k: int) -> LaurentPoly:
    """[k]_0! = q^(k(k-1)/2) [k]!."""
    return quantum_factorial(k).shift(k * (k - 1) // 2)


def quantum_binom0(a: int, b: int) -> LaurentPoly:
    """qbin(a+b, a)_0 = q^(ab) qbin(a+b, a), indexed by the two parts."""
    return quantum_binom(a + b, a).shift(a * b)


def quantum_multinom0(parts) -> LaurentPoly:
    """Rescaled multinomial q^(sum_{i<j} k_i k_j) * multinom(parts)."""
    parts = list(parts)
    exp = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            exp += parts[i] * parts[j]
    return quantum_multinom(parts).shift(exp)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
