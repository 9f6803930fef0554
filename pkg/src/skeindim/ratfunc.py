"""Exact Laurent polynomials and rational functions in a single variable t.

``RatFuncT`` keeps a canonical form so that equality is plain coefficient
equality: numerator an integer Laurent polynomial, denominator an integer
polynomial with nonzero constant term and positive leading coefficient,
numerator and denominator coprime over Q[t], and the integer content of the
pair equal to 1.  t is never evaluated during arithmetic, which models a
generic parameter.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InputError


class LaurentPoly:
    """Integer Laurent polynomial, stored as ``{exponent: nonzero coefficient}``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {0: terms}
        self.terms = {int(e): int(c) for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp: coef})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        return min(self.terms)

    @property
    def high(self) -> int:
        return max(self.terms)

    def content(self) -> int:
        return math.gcd(*self.terms.values()) if self.terms else 0

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise InputError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise InputError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> "LaurentPoly":
        return LaurentPoly._raw({e + d: c for e, c in self.terms.items()})

    def scale(self, s: int) -> "LaurentPoly":
        return LaurentPoly({e: c * s for e, c in self.terms.items()})

    def exact_div_int(self, s: int) -> "LaurentPoly":
        return LaurentPoly._raw({e: c // s for e, c in self.terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """p(t) -> p(t^k)."""
        return LaurentPoly._raw({e * k: c for e, c in self.terms.items()})

    def evaluate(self, value) -> Fraction:
        value = Fraction(value)
        return sum((Fraction(c) * value**e for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.terms.items()))})"

    def __str__(self):
        return _format_terms(self.terms)


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _format_terms(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if mono and abs(c) == 1:
            s = mono
        else:
            s = f"{abs(c)}{'*' if mono else ''}{mono}"
        parts.append(("-" if c < 0 else "+") + s)
    out = " ".join(parts)
    return out[1:] if out.startswith("+") else out


# Dense polynomial helpers over Q: lists of Fractions, index = exponent.

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_q(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        d = len(a) - len(b)
        q[d] = f
        for i, c in enumerate(b):
            a[d + i] -= f * c
        _trim(a)
    return _trim(q), a


def _gcd_q(a: list, b: list) -> list:
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        _, r = _divmod_q(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [x / lead for x in a]


def _to_dense(p: LaurentPoly, low: int) -> list:
    out = [0] * (p.high - low + 1) if p.terms else []
    for e, c in p.terms.items():
        out[e - low] = c
    return out


class RatFuncT:
    """Canonical quotient num/den of integer (Laurent) polynomials in t."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num, den = _as_laurent(num), _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFuncT with zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFuncT":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def t(cls, power: int = 1) -> "RatFuncT":
        return cls._raw(LaurentPoly({power: 1}), _ONE_POLY)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFuncT":
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.terms == {0: 1}

    def __add__(self, other):
        other = _as_ratfunc(other)
        if self.den == other.den:
            return RatFuncT(self.num + other.num, self.den)
        return RatFuncT(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncT._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFuncT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncT":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFuncT(self.den, self.num)

    def __truediv__(self, other):
        return self * _as_ratfunc(other).inverse()

    def __rtruediv__(self, other):
        return _as_ratfunc(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFuncT(self.num**k, self.den**k)

    def substitute_power(self, k: int) -> "RatFuncT":
        """f(t) -> f(t^k) for nonzero integer k."""
        if k == 0:
            raise InputError("substitute_power needs k != 0")
        return RatFuncT(self.num.substitute_power(k), self.den.substitute_power(k))

    def evaluate(self, value) -> Fraction:
        d = self.den.evaluate(value)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t = {value}")
        return self.num.evaluate(value) / d

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFuncT(other)
        if not isinstance(other, RatFuncT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        if self.is_laurent():
            return f"RatFuncT({self.num})"
        return f"RatFuncT(({self.num}) / ({self.den}))"

    __str__ = __repr__


def _as_ratfunc(x) -> RatFuncT:
    if isinstance(x, RatFuncT):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return RatFuncT(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational function")


_ONE_POLY = LaurentPoly({0: 1})


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return LaurentPoly(), _ONE_POLY
    # move powers of t out of the denominator
    shift = den.low
    den = den.shift(-shift)
    num = num.shift(-shift)
    if den.high > 0:
        nlow = num.low
        g = _gcd_q(_to_dense(num, nlow), _to_dense(den, 0))
        if len(g) > 1:
            nq, nr = _divmod_q([Fraction(x) for x in _to_dense(num, nlow)], g)
            dq, dr = _divmod_q([Fraction(x) for x in _to_dense(den, 0)], g)
            if nr or dr:
                raise ArithmeticError("polynomial gcd does not divide")
            scale = math.lcm(*(x.denominator for x in nq + dq))
            num = LaurentPoly({i + nlow: int(x * scale) for i, x in enumerate(nq)})
            den = LaurentPoly({i: int(x * scale) for i, x in enumerate(dq)})
            low = den.low
            den, num = den.shift(-low), num.shift(-low)
    if den.terms[den.high] < 0:
        num, den = -num, -den
    c = math.gcd(num.content(), den.content())
    if c > 1:
        num, den = num.exact_div_int(c), den.exact_div_int(c)
    return num, den


ZERO = RatFuncT(0)
ONE = RatFuncT(1)
