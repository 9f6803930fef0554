"""The finite Hecke algebra H_n(t) in the T_w basis, with exact coefficients.

Relations: (T_i - t)(T_i + t^-1) = 0 and the braid relations.  Right
multiplication by a generator is

    T_w T_i = T_{w s_i}                          if ℓ(w s_i) > ℓ(w)
    T_w T_i = (t - t^-1) T_w + T_{w s_i}         otherwise.

``multiply`` brings both factors to a common denominator, hands the integer
Laurent numerators to ``kernels.hecke_product`` and divides back.  A second,
independent route (``multiply_left``) multiplies generator by generator from
the left and is used to test reduced-word independence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .errors import InputError, VerificationError
from .perm import Permutation, perm_table
from .ratfunc import ONE, ZERO, LaurentPoly, RatFuncT

Composition = tuple[int, ...]

# strand count above which identity checks refuse (|S_6| = 720 basis elements)
DEFAULT_STRAND_BOUND = 6

T = RatFuncT.t()
T_INV = RatFuncT.t(-1)
_T_MINUS_TINV = LaurentPoly({1: 1, -1: -1})


class HeckeElement:
    """Finite sum of c_w T_w with RatFuncT coefficients; zero terms are never stored."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        if n < 0:
            raise InputError("strand count must be nonnegative")
        self.n = n
        clean = {}
        for w, c in (coeffs or {}).items():
            if not isinstance(w, Permutation):
                w = Permutation(tuple(w))
            if w.degree != n:
                raise InputError(f"permutation {w} does not have degree {n}")
            if not isinstance(c, RatFuncT):
                c = RatFuncT(c)
            if not c.is_zero():
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, w: Permutation) -> "HeckeElement":
        return cls(w.degree, {w: ONE})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {Permutation.identity(n): ONE})

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        return cls(n, {Permutation.simple_reflection(n, i): ONE})

    @classmethod
    def scalar(cls, n: int, c) -> "HeckeElement":
        return cls(n, {Permutation.identity(n): c})

    def coefficient(self, w: Permutation) -> RatFuncT:
        return self.coeffs.get(w, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "HeckeElement") -> None:
        if not isinstance(other, HeckeElement):
            raise TypeError(f"expected HeckeElement, got {type(other).__name__}")
        if other.n != self.n:
            raise InputError(f"strand mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.n, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = c if isinstance(c, RatFuncT) else RatFuncT(c)
        return HeckeElement(self.n, {w: v * c for w, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def specialize_at_one(self) -> dict[Permutation, Fraction]:
        """Coefficients evaluated at t = 1, i.e. the image in the group algebra Q[S_n]."""
        out = {}
        for w, c in self.coeffs.items():
            v = c.evaluate(1)
            if v:
                out[w] = v
        return out

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"HeckeElement({self.n}, 0)"
        terms = [f"({c}) T{w.images}" for w, c in sorted(self.coeffs.items())]
        return f"HeckeElement({self.n}, " + " + ".join(terms) + ")"


def _common_denominator(elem: HeckeElement, table) -> tuple[dict, LaurentPoly]:
    """Integer Laurent numerators over one shared denominator (product of the distinct ones)."""
    dens = list(dict.fromkeys(c.den for c in elem.coeffs.values()))
    total = LaurentPoly({0: 1})
    for d in dens:
        total = total * d
    cofactor = {}
    for i, d in enumerate(dens):
        rest = LaurentPoly({0: 1})
        for j, e in enumerate(dens):
            if j != i:
                rest = rest * e
        cofactor[d] = rest
    out = {}
    for w, c in elem.coeffs.items():
        num = c.num * cofactor[c.den]
        out[table.index[w]] = dict(num.terms)
    return out, total


def multiply(x: HeckeElement, y: HeckeElement, backend: str | None = None) -> HeckeElement:
    """x·y, built as the sum over v of y_v (x T_v) with T_v expanded along reduced words."""
    if not isinstance(x, HeckeElement) or not isinstance(y, HeckeElement):
        raise InputError("multiply needs two HeckeElements")
    if x.n != y.n:
        raise InputError(f"strand mismatch: {x.n} vs {y.n}")
    if x.is_zero() or y.is_zero():
        return HeckeElement(x.n)
    table = perm_table(x.n)
    xa, dx = _common_denominator(x, table)
    ya, dy = _common_denominator(y, table)
    raw = kernels.hecke_product(table, xa, ya, backend=backend)
    den = dx * dy
    cache: dict = {}
    out = {}
    for w, poly in raw.items():
        key = frozenset(poly.items())
        c = cache.get(key)
        if c is None:
            c = cache[key] = RatFuncT(LaurentPoly(poly), den)
        out[table.perms[w]] = c
    return HeckeElement(x.n, out)


def left_multiply_generator(i: int, elem: HeckeElement) -> HeckeElement:
    """T_i · elem, using T_i T_v = T_{s_i v} or (t - t^-1) T_v + T_{s_i v}."""
    n = elem.n
    out: dict = {}
    for v, c in elem.coeffs.items():
        imgs = list(v.images)
        a, b = imgs.index(i), imgs.index(i + 1)
        imgs[a], imgs[b] = i + 1, i
        sv = Permutation(tuple(imgs))
        out[sv] = out.get(sv, ZERO) + c
        if a > b:  # ℓ(s_i v) < ℓ(v)
            out[v] = out.get(v, ZERO) + c * RatFuncT(_T_MINUS_TINV)
    return HeckeElement(n, out)


def multiply_left(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """x·y as the sum over w of x_w (T_w y), T_w applied letter by letter from the left."""
    if x.n != y.n:
        raise InputError(f"strand mismatch: {x.n} vs {y.n}")
    total = HeckeElement(x.n)
    for w, c in x.coeffs.items():
        cur = y
        for i in reversed(w.reduced_word()):
            cur = left_multiply_generator(i, cur)
        total = total + cur.scale(c)
    return total


def quantum_integer(m: int, r: RatFuncT) -> RatFuncT:
    """[m]_r = 1 + r + ... + r^(m-1)."""
    if m < 0:
        raise InputError("quantum integers need m >= 0")
    total, power = ZERO, ONE
    for _ in range(m):
        total = total + power
        power = power * r
    return total


def quantum_factorial(m: int, r: RatFuncT) -> RatFuncT:
    if m < 0:
        raise InputError("quantum factorials need m >= 0")
    out = ONE
    for i in range(1, m + 1):
        out = out * quantum_integer(i, r)
    return out


def _normalize_composition(alpha) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise InputError(f"composition parts must be nonnegative: {alpha}")
    return tuple(a for a in alpha if a)


def padded_composition(alpha, n: int) -> Composition:
    """(α, 1^{n-|α|})."""
    alpha = _normalize_composition(alpha)
    if sum(alpha) > n:
        raise InputError(f"|α| = {sum(alpha)} exceeds the strand count {n}")
    return alpha + (1,) * (n - sum(alpha))


def young_subgroup(alpha, n: int) -> list[Permutation]:
    """Elements of S_α ⊂ S_n, blocks of consecutive points."""
    blocks, start = [], 1
    for a in padded_composition(alpha, n):
        blocks.append(list(range(start, start + a)))
        start += a
    out = []
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        out.append(Permutation(tuple(x for p in perms for x in p)))
    return out


def sign_idempotent(alpha, n: int) -> HeckeElement:
    """e⁻_α = (1/∏[α_i]_{t^-2}!) Σ_{w ∈ S_α} (-t^-1)^ℓ(w) T_w, α padded by 1s to n."""
    return _sign_idempotent(padded_composition(alpha, n), n)


@lru_cache(maxsize=None)
def _sign_idempotent(alpha: Composition, n: int) -> HeckeElement:
    r = RatFuncT.t(-2)
    norm = ONE
    for a in alpha:
        norm = norm * quantum_factorial(a, r)
    inv = norm.inverse()
    coeffs = {}
    for w in young_subgroup(alpha, n):
        ell = w.length()
        coeffs[w] = RatFuncT(LaurentPoly({-ell: (-1) ** ell})) * inv
    return HeckeElement(n, coeffs)


@lru_cache(maxsize=None)
def trivial_idempotent(n: int) -> HeckeElement:
    """e⁺_n = (1/[n]_{t^2}!) Σ_w t^ℓ(w) T_w."""
    inv = quantum_factorial(n, RatFuncT.t(2)).inverse()
    coeffs = {w: RatFuncT.t(w.length()) * inv for w in perm_table(n).perms}
    return HeckeElement(n, coeffs)


def rectangular_sign_idempotent(m: int, j: int, n: int) -> HeckeElement:
    """e⁻_{m^j} = e⁻ of (m, ..., m, 1, ..., 1) with j parts equal to m."""
    if m < 1 or j < 0:
        raise InputError("need m >= 1 and j >= 0")
    return sign_idempotent((m,) * j, n)


def composition_to_subset(alpha) -> frozenset[int]:
    """J(α) = {1, ..., n-1} minus the partial sums of α."""
    alpha = _normalize_composition(alpha)
    n = sum(alpha)
    partial = set(itertools.accumulate(alpha))
    return frozenset(i for i in range(1, n) if i not in partial)


def subset_to_composition(subset, n: int) -> Composition:
    subset = set(subset)
    if n < 0 or any(not 1 <= j < n for j in subset):
        raise InputError(f"subset {sorted(subset)} is not inside {{1, ..., {n - 1}}}")
    cuts = [i for i in range(1, n) if i not in subset] + [n]
    out, prev = [], 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    return tuple(out) if n else ()


@dataclass
class IdentityReport:
    alpha: Composition
    n: int
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def _expect_zero(report: IdentityReport, name: str, value: HeckeElement, strict: bool) -> None:
    ok = value.is_zero()
    report.checks.append((name, ok))
    if not ok and strict:
        w, c = next(iter(sorted(value.coeffs.items())))
        raise VerificationError(f"{name} fails: coefficient of T{w.images} is {c}", term=(w, c))


def verify_idempotent_identities(alpha, n: int, strict: bool = True,
                                 bound: int = DEFAULT_STRAND_BOUND) -> IdentityReport:
    """Check the defining identities of e⁻_α and e⁺_n exactly.

    e⁻² = e⁻, (T_j + t^-1) e⁻_α = 0 for j in J(α), e⁺² = e⁺, (T_i - t) e⁺ = 0,
    and e⁺_n e⁻_n = 0 for n >= 2.
    """
    if n > bound:
        raise InputError(f"n = {n} is above the strand bound {bound}")
    full = padded_composition(alpha, n)
    report = IdentityReport(_normalize_composition(alpha), n)
    em = sign_idempotent(full, n)
    _expect_zero(report, f"e-{full}^2 = e-{full}", multiply(em, em) - em, strict)
    for j in sorted(composition_to_subset(full)):
        lhs = multiply(HeckeElement.generator(n, j) + HeckeElement.scalar(n, T_INV), em)
        _expect_zero(report, f"(T_{j} + t^-1) e-{full} = 0", lhs, strict)
    ep = trivial_idempotent(n)
    _expect_zero(report, f"e+{n}^2 = e+{n}", multiply(ep, ep) - ep, strict)
    for i in range(1, n):
        lhs = multiply(HeckeElement.generator(n, i) - HeckeElement.scalar(n, T), ep)
        _expect_zero(report, f"(T_{i} - t) e+{n} = 0", lhs, strict)
    if n >= 2:
        _expect_zero(report, f"e+{n} e-{n} = 0", multiply(ep, sign_idempotent((n,), n)), strict)
    return report


def ideal_membership_witness(m: int, j: int, j_small: int, n: int) -> tuple[HeckeElement, HeckeElement]:
    """x, y with x · e⁻_{m^j_small} · y = e⁻_{m^j}, for j_small <= j.

    S_{m^j_small} sits inside S_{m^j}, so e⁻_{m^j} absorbs e⁻_{m^j_small}
    and x = e⁻_{m^j}, y = 1 works.  The product is recomputed before returning.
    """
    if not 0 <= j_small <= j or m * j > n:
        raise InputError("need 0 <= j_small <= j and m*j <= n")
    big = rectangular_sign_idempotent(m, j, n)
    small = rectangular_sign_idempotent(m, j_small, n)
    x, y = big, HeckeElement.one(n)
    if multiply(multiply(x, small), y) != big:
        raise VerificationError(f"e-_{{{m}^{j}}} is not x e-_{{{m}^{j_small}}} y for the absorbing witness")
    return x, y
