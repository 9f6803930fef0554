"""Partition counts, Jordan totients, Dirichlet convolution and the skein dimension formulas.

Everything is exact integer arithmetic.  ``skein_dim`` evaluates each formula
by three independent routes and refuses to answer if they disagree:

* the Dirichlet convolution of the partition function with a totient,
* the sum of ``gcd(λ)**k`` over partitions λ of N,
* the sum of ``P(gcd(v, N))`` over all v in (Z/N)^k (brute force, capped).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

from . import kernels
from .errors import ConsistencyError, InputError

Partition = tuple[int, ...]

# Brute enumerations over (Z/N)^k stop here rather than approximate.
BRUTE_CAP = 10**7
# Route 2 enumerates every partition of N; beyond this many it is skipped.
PARTITION_ENUM_CAP = 250_000

_ptable: list[int] = [1]
_ptable_lock = threading.Lock()


def _extend_partition_table(n: int) -> None:
    # Bounded-part recurrence p(n, k) = p(n, k-1) + p(n-k, k), run as the usual
    # part-by-part table update; rebuilt from scratch when asked for more terms.
    with _ptable_lock:
        if len(_ptable) > n:
            return
        size = max(n + 1, 2 * len(_ptable))
        table = [1] + [0] * (size - 1)
        for part in range(1, size):
            for total in range(part, size):
                table[total] += table[total - part]
        _ptable[:] = table


def partition_count(n: int) -> int:
    """Number of partitions of ``n``; ``partition_count(0) == 1``."""
    if n < 0:
        raise InputError(f"partition_count needs n >= 0, got {n}")
    if n >= len(_ptable):
        _extend_partition_table(n)
    return _ptable[n]


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise InputError(f"partitions needs n >= 0, got {n}")
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def prime_factors(d: int) -> list[int]:
    """Distinct primes dividing ``d``, by trial division."""
    if d < 1:
        raise InputError(f"prime_factors needs d >= 1, got {d}")
    primes = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            primes.append(p)
            while d % p == 0:
                d //= p
        p += 1 if p == 2 else 2
    if d > 1:
        primes.append(d)
    return primes


def divisors(n: int) -> list[int]:
    if n < 1:
        raise InputError(f"divisors needs n >= 1, got {n}")
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def jordan_totient(k: int, d: int) -> int:
    """J_k(d) = d^k prod_{p | d} (1 - p^-k), evaluated without fractions."""
    if k < 1 or d < 1:
        raise InputError(f"jordan_totient needs k, d >= 1, got k={k}, d={d}")
    result = d**k
    for p in prime_factors(d):
        result = result // p**k * (p**k - 1)
    return result


def gcd_of_partition(parts) -> int:
    parts = tuple(parts)
    if not parts:
        raise InputError("gcd of the empty partition is undefined")
    return math.gcd(*parts)


@dataclass(frozen=True)
class NatSequence:
    """A named arithmetic function d -> integer, defined for d >= 1."""

    name: str
    func: Callable[[int], int]

    def __call__(self, d: int) -> int:
        return self.func(d)


PARTITIONS = NatSequence("P", partition_count)
DELTA = NatSequence("delta", lambda d: 1 if d == 1 else 0)
ID2 = NatSequence("Id2", lambda d: d * d)
# d -> d^2 J_1(d): the divisor weights d^2 φ(d) of the SL_{N/d} summands
ID2_J1 = NatSequence("Id2*J1", lambda d: d * d * jordan_totient(1, d))


def jordan(k: int) -> NatSequence:
    return NatSequence(f"J{k}", lambda d: jordan_totient(k, d))


def dirichlet_convolve(f: NatSequence, g: NatSequence, n: int) -> int:
    """(f * g)(n) = sum over d | n of f(d) g(n/d)."""
    if n < 1:
        raise InputError(f"dirichlet_convolve needs n >= 1, got {n}")
    return sum(f(d) * g(n // d) for d in divisors(n))


def verify_id2_j2_j3(n: int) -> bool:
    """Check sum_{d | n} d^2 J_2(n/d) == J_3(n) as literally stated.

    This holds for n = 1, 2 only: at n = 3 the left side is 8 + 9 = 17 while
    J_3(3) = 26.  See ``verify_weighted_id2_j2_j3`` for the form that holds.
    """
    return dirichlet_convolve(ID2, jordan(2), n) == jordan_totient(3, n)


def verify_weighted_id2_j2_j3(n: int) -> bool:
    """Check sum_{d | n} d^2 J_1(d) J_2(n/d) == J_3(n).

    These are the weights d^2 φ(d) of the divisor sum the identity is used
    for; as Dirichlet series ζ(s-3)/ζ(s-2) · ζ(s-2)/ζ(s) = ζ(s-3)/ζ(s).
    """
    return dirichlet_convolve(ID2_J1, jordan(2), n) == jordan_totient(3, n)


def first_id2_j2_j3_counterexample(limit: int) -> int | None:
    """Smallest n <= limit where the literal identity fails, or None."""
    return next((n for n in range(1, limit + 1) if not verify_id2_j2_j3(n)), None)


def gcd_histogram(n: int, k: int) -> list[int]:
    """``hist[c]`` = #{v in (Z/n)^k : gcd(v_1, ..., v_k, n) = c}, by enumeration."""
    if n < 1 or k < 0:
        raise InputError(f"gcd_histogram needs n >= 1, k >= 0, got n={n}, k={k}")
    if n**k > BRUTE_CAP:
        raise InputError(f"(Z/{n})^{k} has {n**k} elements, above the enumeration cap {BRUTE_CAP}")
    return kernels.gcd_histogram(n, k)


def orbit_count_matches_totient(n: int, k: int) -> bool:
    """#{v : gcd(v, n) = n/d} == J_k(d) for every d | n."""
    hist = gcd_histogram(n, k)
    return all(hist[n // d] == jordan_totient(k, d) for d in divisors(n))


def _check_group(group: str) -> str:
    g = str(group).upper()
    if g not in ("GL", "SL"):
        raise InputError(f"group must be GL or SL, got {group!r}")
    return g


_MANIFOLD_DEGREE = {"T2": 2, "T3": 3}


def dimension_routes(group: str, k: int, n: int) -> dict[str, int]:
    """Evaluate the dimension formula for ``group`` in homological degree ``k``.

    Only routes whose enumerations fit under the caps are included; the
    convolution route is always present.  For GL the torsion is trivial, so
    the totient is replaced by the convolution identity and only v = 0 counts.
    """
    group = _check_group(group)
    if n < 1:
        raise InputError(f"N must be >= 1, got {n}")
    if k < 1:
        raise InputError(f"homological degree must be >= 1, got {k}")
    routes = {}
    if group == "SL":
        routes["convolution"] = dirichlet_convolve(PARTITIONS, jordan(k), n)
    else:
        routes["convolution"] = dirichlet_convolve(PARTITIONS, DELTA, n)
    if partition_count(n) <= PARTITION_ENUM_CAP:
        if group == "SL":
            routes["partition_gcds"] = sum(gcd_of_partition(lam) ** k for lam in partitions(n))
        else:
            routes["partition_gcds"] = sum(1 for _ in partitions(n))
    if n**k <= BRUTE_CAP:
        hist = gcd_histogram(n, k)
        if group == "SL":
            routes["vectors"] = sum(count * partition_count(c) for c, count in enumerate(hist) if count)
        else:
            # only the zero vector carries a class in the GL grading
            routes["vectors"] = hist[n] * partition_count(n)
    return routes


def skein_dim(group: str, manifold: str, n: int) -> int:
    """Dimension of the skein module (T3) or of HH_0 of the skein algebra (T2)."""
    group = _check_group(group)
    man = str(manifold).upper()
    if man not in _MANIFOLD_DEGREE:
        raise InputError(f"manifold must be T2 or T3, got {manifold!r}")
    routes = dimension_routes(group, _MANIFOLD_DEGREE[man], n)
    values = set(routes.values())
    if len(values) != 1:
        raise ConsistencyError(f"dimension routes disagree for {group}/{man}, N={n}: {routes}")
    return values.pop()
