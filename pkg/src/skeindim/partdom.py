"""Dominance order, the survival criterion for parabolic sign idempotents, and a character oracle.

``dominated_by(mu, lam)`` means mu ⊴ lam: every prefix sum of mu is at most
the matching prefix sum of lam.  The sign idempotent e⁻_α acts nonzero on the
Specht module S^λ exactly when λ ⊴ sort(α)ᵀ.

The oracle works in the classical group algebra Q[S_n] (t = 1).  For generic t
the representation theory of the Hecke algebra matches that of S_n, which is
the soundness assumption for using it as a cross-check.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .numtheory import partitions

Partition = tuple[int, ...]
Composition = tuple[int, ...]

ORACLE_MAX_N = 8


def normalize_composition(alpha) -> Composition:
    """Drop zero parts; reject negatives."""
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise InputError(f"composition parts must be nonnegative: {alpha}")
    return tuple(a for a in alpha if a)


def _check_partition(lam) -> Partition:
    lam = normalize_composition(lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InputError(f"{lam} is not weakly decreasing")
    return lam


def sort_composition(alpha) -> Partition:
    return tuple(sorted(normalize_composition(alpha), reverse=True))


def transpose(lam) -> Partition:
    lam = _check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominated_by(mu, lam) -> bool:
    """mu ⊴ lam by prefix sums, padding the shorter partition with zeros."""
    mu, lam = _check_partition(mu), _check_partition(lam)
    if sum(mu) != sum(lam):
        raise InputError(f"dominance needs equal sizes, got |{mu}| = {sum(mu)} and |{lam}| = {sum(lam)}")
    a = b = 0
    for x, y in itertools.zip_longest(mu, lam, fillvalue=0):
        a += x
        b += y
        if a > b:
            return False
    return True


def sign_survives(alpha, lam) -> bool:
    """e⁻_α S^λ ≠ 0, i.e. λ ⊴ sort(α)ᵀ."""
    alpha = normalize_composition(alpha)
    lam = _check_partition(lam)
    if sum(alpha) != sum(lam):
        raise InputError(f"sizes differ: |α| = {sum(alpha)}, |λ| = {sum(lam)}")
    return dominated_by(lam, transpose(sort_composition(alpha)))


def specht_dim(lam) -> int:
    """Number of standard Young tableaux of shape λ (hook length formula)."""
    lam = _check_partition(lam)
    n = sum(lam)
    conj = transpose(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def _beta_set(lam: Partition) -> tuple[int, ...]:
    k = len(lam)
    return tuple(lam[i] + (k - 1 - i) for i in range(k))


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """χ^λ at cycle type μ by the Murnaghan–Nakayama rule on beta-sets.

    Removing a border strip of length r is moving a bead of the beta-set from
    b to b - r onto an empty position; the sign is (-1)^(beads jumped).
    """
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        new_beta = sorted((beads - {b}) | {target}, reverse=True)
        k = len(new_beta)
        new_lam = tuple(x for x in (new_beta[i] - (k - 1 - i) for i in range(k)) if x)
        total += (-1) ** jumped * mn_character(new_lam, rest)
    return total


def _class_size(n: int, ct: Partition) -> int:
    """Number of permutations of S_n with cycle type ct."""
    denom = 1
    for part, mult in Counter(ct).items():
        denom *= part**mult * math.factorial(mult)
    return math.factorial(n) // denom


def mn_multiplicity_oracle(alpha, lam) -> int:
    """⟨Ind_{S_α} sgn, χ^λ⟩ = (1/|S_α|) Σ_{w ∈ S_α} sgn(w) χ^λ(w).

    The sum runs over tuples of cycle types, one for each block of α, weighted
    by the product of class sizes.
    """
    alpha = normalize_composition(alpha)
    lam = _check_partition(lam)
    n = sum(alpha)
    if n != sum(lam):
        raise InputError(f"sizes differ: |α| = {n}, |λ| = {sum(lam)}")
    if n > ORACLE_MAX_N:
        raise InputError(f"oracle limited to n <= {ORACLE_MAX_N}")
    total = Fraction(0)
    order = math.prod(math.factorial(a) for a in alpha)
    for types in itertools.product(*(partitions(a) for a in alpha)):
        weight = math.prod(_class_size(a, ct) for a, ct in zip(alpha, types))
        ct = tuple(sorted((p for ctb in types for p in ctb), reverse=True))
        sign = (-1) ** (n - len(ct))
        total += weight * sign * mn_character(lam, ct)
    total /= order
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"multiplicity {total} is not a nonnegative integer")
    return int(total)


def admissible_kNr_tuples(n: int):
    """Every (ℓ, m, r1, r2, α, β) with n = ℓm + r1 + r2, r = r1 + r2 < m,
    α ⊨ ℓm + r1 with at most ℓ parts, β ⊨ r2."""
    for m in range(1, n + 1):
        for ell in range(0, n // m + 1):
            r = n - ell * m
            if r >= m:
                continue
            for r1 in range(r + 1):
                r2 = r - r1
                for alpha in compositions(ell * m + r1, max_parts=ell):
                    for beta in compositions(r2):
                        yield ell, m, r1, r2, alpha, beta


def compositions(n: int, max_parts: int | None = None):
    """All compositions of n (with at most ``max_parts`` parts), lexicographic."""
    if n == 0:
        yield ()
        return
    if max_parts is not None and max_parts <= 0:
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first, None if max_parts is None else max_parts - 1):
            yield (first,) + rest


def check_kNr_implication(n, ell, m, r1, r2, alpha, beta, lam) -> bool:
    """sign_survives((α,β), λ) ⟹ sign_survives((m^ℓ, 1^r), λ), and (m^ℓ, 1^{r1}) ⊴ sort(α).

    Returns True when both the implication and the dominance step hold.
    """
    alpha, beta = normalize_composition(alpha), normalize_composition(beta)
    lam = _check_partition(lam)
    r = r1 + r2
    if min(n, ell, r1, r2) < 0 or m < 1:
        raise InputError("parameters must be nonnegative with m >= 1")
    if n != ell * m + r:
        raise InputError(f"n = {n} is not ℓm + r1 + r2 = {ell * m + r}")
    if sum(alpha) != ell * m + r1 or len(alpha) > ell:
        raise InputError(f"α = {alpha} must be a composition of ℓm + r1 = {ell * m + r1} with at most ℓ = {ell} parts")
    if sum(beta) != r2:
        raise InputError(f"β = {beta} must be a composition of r2 = {r2}")
    if sum(lam) != n:
        raise InputError(f"λ = {lam} is not a partition of n = {n}")
    step = dominated_by(sort_composition((m,) * ell + (1,) * r1), sort_composition(alpha))
    if not step:
        return False
    if sign_survives(alpha + beta, lam):
        return sign_survives((m,) * ell + (1,) * r, lam)
    return True
