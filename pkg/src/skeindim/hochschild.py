"""HH_0 of the quantum torus smash product with S_N, by coset counting.

HH_0 splits over conjugacy classes of S_N.  The summand for σ has a basis
indexed by (U_σ^⊥ ⊕ U_σ^⊥) / Im(1-σ), so its dimension is the square of the
torsion order from ``lattice.coset_structure``: 1 for GL and gcd(cycle type)²
for SL.  Homological degree k replaces the square by the k-th power, giving
the three-torus count.

The renormalised basis elements themselves are not built; only the rational
exponent ω((1-σ)^-1 a, a) that would enter them is exposed, for audit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, InputError
from .lattice import LatticeSpec, coset_structure, fixed_and_perp, one_minus_sigma
from .numtheory import PARTITION_ENUM_CAP, divisors, partition_count, partitions, skein_dim
from .perm import Permutation, random_permutation

# largest number of entries graded_table will materialise
TABLE_CAP = 10**6


def _solve_rational(cols: list, target) -> list[Fraction] | None:
    """Exact solution c of Σ c_i cols[i] = target, or None when inconsistent."""
    n = len(target)
    r = len(cols)
    a = [[Fraction(cols[j][i]) for j in range(r)] + [Fraction(target[i])] for i in range(n)]
    pivots, row = [], 0
    for col in range(r):
        piv = next((i for i in range(row, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for i in range(n):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    if any(a[i][r] != 0 for i in range(row, n)):
        return None
    sol = [Fraction(0)] * r
    for i, col in enumerate(pivots):
        sol[col] = a[i][r]
    return sol


@dataclass(frozen=True)
class HochschildContext:
    """A weight lattice with the symplectic pairing ω(u⊕v, x⊕y) = (u,y) - (x,v)."""

    spec: LatticeSpec

    @classmethod
    def of(cls, group: str, N: int) -> "HochschildContext":
        return cls(LatticeSpec(group, N))

    def omega(self, a, b) -> Fraction:
        (u, v), (x, y) = a, b
        return self.spec.cartan(u, y) - self.spec.cartan(x, v)

    def _inverse_one_minus_sigma(self, sigma: Permutation, u) -> tuple[Fraction, ...]:
        # x in the Q-span of U_σ^⊥ with (1-σ)x = u (modulo Z(1,...,1) for SL)
        _, perp = fixed_and_perp(self.spec, sigma)
        m = one_minus_sigma(self.spec, sigma)
        cols = [m.apply(p) for p in perp]
        n = self.spec.N
        if self.spec.group == "SL":
            cols.append((1,) * n)
        sol = _solve_rational(cols, tuple(u))
        if sol is None:
            raise InputError(f"{tuple(u)} is not in the rational image of 1 - σ")
        return tuple(sum((c * p[i] for c, p in zip(sol, perp)), Fraction(0)) for i in range(n))

    def renormalization_exponent(self, sigma: Permutation, a) -> Fraction:
        """ω((1-σ)^-1 a, a) for a in the rational span of Im(1-σ) ⊕ Im(1-σ)."""
        u, v = a
        pre = (self._inverse_one_minus_sigma(sigma, u), self._inverse_one_minus_sigma(sigma, v))
        return self.omega(pre, a)


@lru_cache(maxsize=None)
def _torsion_order(group: str, cycle_type: tuple[int, ...]) -> int:
    sigma = Permutation.from_cycle_type(cycle_type)
    return coset_structure(LatticeSpec(group, sigma.degree), sigma).torsion_order


def twisted_hh0_dim(ctx: HochschildContext, sigma: Permutation, k: int = 2) -> int:
    """|(U_σ^⊥ ⊕ U_σ^⊥) / Im(1-σ)|, or its degree-k analogue."""
    if sigma.degree != ctx.spec.N:
        raise InputError(f"permutation of degree {sigma.degree} on a rank-{ctx.spec.N} lattice")
    if k < 1:
        raise InputError("k must be >= 1")
    return _torsion_order(ctx.spec.group, sigma.cycle_type()) ** k


def check_conjugation_invariance(ctx: HochschildContext, sigma: Permutation,
                                 rng: random.Random, count: int = 3) -> bool:
    """Per-class dimension is the same on ``count`` random conjugates of σ.

    The conjugates are pushed through the full SNF computation, not the cache.
    """
    base = coset_structure(ctx.spec, sigma).torsion_order
    for _ in range(count):
        tau = random_permutation(ctx.spec.N, rng)
        conj = tau * sigma * tau.inverse()
        if coset_structure(ctx.spec, conj).torsion_order != base:
            return False
    return True


def hh0_smash_dim(group: str, N: int, k: int = 2) -> int:
    """Sum of per-class dimensions over one σ per cycle type; k = 3 gives the T³ count."""
    spec = LatticeSpec(group, N)
    ctx = HochschildContext(spec)
    total = sum(twisted_hh0_dim(ctx, Permutation.from_cycle_type(lam), k) for lam in partitions(N))
    if k in (2, 3):
        expected = skein_dim(spec.group, f"T{k}", N)
        if total != expected:
            raise ConsistencyError(f"class sum {total} differs from formula value {expected} for {spec.group}, N={N}")
    return total


@dataclass(frozen=True)
class SurjectivityResult:
    """Either a witness b with ω(a, b) ≠ 0, or coordinates of a in a basis of U_σ^⊥ ⊕ U_σ^⊥."""

    kind: str  # "witness" or "membership"
    b: tuple | None = None
    omega: Fraction | None = None
    coordinates: tuple | None = None
    basis: tuple | None = None


def surjectivity_witness(ctx: HochschildContext, sigma: Permutation, a) -> SurjectivityResult:
    spec = ctx.spec
    if sigma.degree != spec.N:
        raise InputError(f"permutation of degree {sigma.degree} on a rank-{spec.N} lattice")
    u, v = tuple(a[0]), tuple(a[1])
    if len(u) != spec.N or len(v) != spec.N:
        raise InputError("both components of a must have length N")
    fixed, perp = fixed_and_perp(spec, sigma)
    zero = (0,) * spec.N
    for f in fixed:
        if spec.cartan(u, f) != 0:
            b = (zero, f)
            return SurjectivityResult("witness", b=b, omega=ctx.omega((u, v), b))
        if spec.cartan(f, v) != 0:
            b = (f, zero)
            return SurjectivityResult("witness", b=b, omega=ctx.omega((u, v), b))
    coords = []
    for part in (u, v):
        part = spec.normalize(part)
        sol = _solve_rational(perp, part) if perp else ([] if not any(part) else None)
        if sol is None or any(c.denominator != 1 for c in sol):
            raise ConsistencyError(f"{part} is orthogonal to U_σ but not in the lattice span of U_σ^⊥")
        coords.append(tuple(int(c) for c in sol))
    return SurjectivityResult("membership", coordinates=tuple(coords), basis=tuple(perp))


@dataclass(frozen=True)
class GradedTable:
    group: str
    N: int
    k: int
    values: np.ndarray  # object array of shape (N,)*k holding Python ints

    @property
    def total(self) -> int:
        return int(sum(self.values.flat))

    def entry(self, v) -> int:
        return int(self.values[tuple(x % self.N for x in v)])


def _gcd_grid(N: int, k: int) -> np.ndarray:
    g = np.full((N,) * k, N, dtype=np.int64)
    for axis in range(k):
        shape = [1] * k
        shape[axis] = N
        g = np.gcd(g, np.arange(N, dtype=np.int64).reshape(shape))
    return g


def graded_table(group: str, N: int, k: int) -> GradedTable:
    """Dimension of each (Z/N)^k graded piece.

    SL: the entry at v is P(gcd(v, N)), recomputed independently as the
    number of λ ⊢ N with N/g_λ dividing gcd(v, N) (skipped when there are more
    than PARTITION_ENUM_CAP partitions).  GL: only the degree-0 piece, P(N).
    """
    spec = LatticeSpec(group, N)
    if k not in (2, 3):
        raise InputError(f"k must be 2 or 3, got {k}")
    if N**k > TABLE_CAP:
        raise InputError(f"(Z/{N})^{k} has {N**k} entries, above the table cap {TABLE_CAP}")
    if spec.group == "GL":
        values = np.zeros((N,) * k, dtype=object)
        values[(0,) * k] = partition_count(N)
        return GradedTable(spec.group, N, k, values)
    grid = _gcd_grid(N, k)
    by_p = np.zeros(N + 1, dtype=object)
    for c in divisors(N):
        by_p[c] = partition_count(c)
    values = by_p[grid]
    if partition_count(N) <= PARTITION_ENUM_CAP:
        by_count = np.zeros(N + 1, dtype=object)
        gs = [math.gcd(*lam) for lam in partitions(N)]
        for c in divisors(N):
            by_count[c] = sum(1 for g in gs if c % (N // g) == 0)
        other = by_count[grid]
        if not np.array_equal(values, other):
            bad = tuple(int(i) for i in np.argwhere(values != other)[0])
            raise ConsistencyError(f"graded entry at {bad} disagrees between the two routes")
    return GradedTable(spec.group, N, k, values)
