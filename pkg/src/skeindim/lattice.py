"""Weight lattices of GL_N and SL_N, the action of S_N, and Smith normal form.

Λ_GL = Z^N.  Λ_SL = Z^N / Z(1,...,1); quotient computations augment the
generating set with the all-ones vector instead of choosing a basis, and
sublattices of Λ_SL are described by representatives with last coordinate 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError
from .perm import Permutation


class IntMatrix:
    """Dense rectangular matrix of Python ints (immutable by convention)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InputError("IntMatrix rows must have equal length")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, cols, nrows: int) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(c) for c in zip(*self.rows)] if self.nrows else [], self.nrows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.transpose().rows if other.nrows else [()] * other.ncols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows], other.ncols)

    def apply(self, vec) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def determinant(self) -> int:
        """Bareiss fraction-free elimination."""
        if self.nrows != self.ncols:
            raise InputError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def rank(self) -> int:
        """Rank over Q by exact fraction elimination."""
        a = [[Fraction(x) for x in r] for r in self.rows]
        rank, col = 0, 0
        while rank < self.nrows and col < self.ncols:
            piv = next((i for i in range(rank, self.nrows) if a[i][col] != 0), None)
            if piv is None:
                col += 1
                continue
            a[rank], a[piv] = a[piv], a[rank]
            for i in range(rank + 1, self.nrows):
                f = a[i][col] / a[rank][col]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
            rank += 1
            col += 1
        return rank


@dataclass(frozen=True)
class SnfResult:
    """U @ M @ V == D with U, V unimodular and D diagonal with d1 | d2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular witnesses.

    Pivot: the nonzero entry of smallest absolute value in the remaining
    block, first in row-major order.  The result is checked before returning.
    """
    if m.nrows == 0 or m.ncols == 0:
        raise InputError("smith_normal_form needs a nonempty matrix")
    rows, cols = m.nrows, m.ncols
    a = [list(r) for r in m.rows]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i][j]
                    if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    res = SnfResult(IntMatrix(u, rows), IntMatrix(a, cols), IntMatrix(v, cols))
    _check_snf(m, res)
    return res


def _check_snf(m: IntMatrix, res: SnfResult) -> None:
    if res.U @ m @ res.V != res.D:
        raise ConsistencyError("Smith normal form witness check U·M·V = D failed")
    d = res.D
    for i in range(d.nrows):
        for j in range(d.ncols):
            if i != j and d[i, j]:
                raise ConsistencyError("Smith normal form is not diagonal")
    diag = res.diagonal
    nonzero = [x for x in diag if x]
    if diag[: len(nonzero)] != tuple(nonzero) or any(x < 0 for x in diag):
        raise ConsistencyError("Smith normal form diagonal is not of the form d1, ..., dr, 0, ...")
    if any(b % a for a, b in zip(nonzero, nonzero[1:])):
        raise ConsistencyError("Smith normal form divisibility chain broken")
    if abs(res.U.determinant()) != 1 or abs(res.V.determinant()) != 1:
        raise ConsistencyError("Smith normal form witnesses are not unimodular")


def integer_kernel(m: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of {x in Z^n : M x = 0}; it is saturated by construction."""
    if m.nrows == 0:
        return [tuple(int(i == j) for j in range(m.ncols)) for i in range(m.ncols)]
    res = smith_normal_form(m)
    r = res.rank
    return [res.V.column(j) for j in range(r, m.ncols)]


@dataclass(frozen=True)
class LatticeSpec:
    group: str
    N: int

    def __post_init__(self):
        g = str(self.group).upper()
        if g not in ("GL", "SL"):
            raise InputError(f"group must be GL or SL, got {self.group!r}")
        if self.N < 1:
            raise InputError(f"N must be >= 1, got {self.N}")
        object.__setattr__(self, "group", g)

    def degree(self, vec) -> int:
        """Sum of entries; taken mod N for SL."""
        d = sum(vec)
        return d % self.N if self.group == "SL" else d

    def cartan(self, u, v) -> Fraction:
        """Standard dot product for GL; (u, v) - deg u deg v / N on SL representatives."""
        dot = sum(a * b for a, b in zip(u, v))
        if self.group == "GL":
            return Fraction(dot)
        return Fraction(dot) - Fraction(sum(u) * sum(v), self.N)

    def normalize(self, vec) -> tuple[int, ...]:
        """Canonical representative: itself for GL, last coordinate 0 for SL."""
        vec = tuple(vec)
        if self.group == "SL":
            return tuple(x - vec[-1] for x in vec)
        return vec


def _check_degree(spec: LatticeSpec, sigma: Permutation) -> None:
    if sigma.degree != spec.N:
        raise InputError(f"permutation of degree {sigma.degree} acting on a rank-{spec.N} lattice")


def one_minus_sigma(spec: LatticeSpec, sigma: Permutation) -> IntMatrix:
    """N×N matrix with columns e_j - e_σ(j)."""
    _check_degree(spec, sigma)
    n = spec.N
    cols = []
    for j in range(1, n + 1):
        col = [0] * n
        col[j - 1] += 1
        col[sigma(j) - 1] -= 1
        cols.append(col)
    return IntMatrix.from_columns(cols, n)


def _relation_matrix(spec: LatticeSpec, sigma: Permutation) -> IntMatrix:
    m = one_minus_sigma(spec, sigma)
    if spec.group == "SL":
        cols = [m.column(j) for j in range(m.ncols)] + [(1,) * spec.N]
        m = IntMatrix.from_columns(cols, spec.N)
    return m


@dataclass(frozen=True)
class CosetStructure:
    torsion_invariants: tuple[int, ...]
    free_rank: int
    generator: tuple[int, ...]
    generator_degree: int

    @property
    def torsion_order(self) -> int:
        return math.prod(self.torsion_invariants)

    @property
    def is_cyclic(self) -> bool:
        return len(self.torsion_invariants) <= 1


def coset_structure(spec: LatticeSpec, sigma: Permutation) -> CosetStructure:
    """Torsion of Λ / Im(1-σ), equal to U_σ^⊥ / Im(1-σ), from the Smith normal form.

    The SNF answer is checked against gcd(cycle type) (SL) or 1 (GL), and the
    orbit-distributed generator is checked to have exactly that order.
    """
    _check_degree(spec, sigma)
    rel = _relation_matrix(spec, sigma)
    res = smith_normal_form(rel)
    invariants = tuple(d for d in res.diagonal if d > 1)
    free_rank = spec.N - res.rank
    order = math.prod(invariants)
    cycles = sigma.cycles()
    g = math.gcd(*(len(c) for c in cycles)) if spec.group == "SL" else 1
    if order != g or len(invariants) > 1:
        raise ConsistencyError(
            f"SNF torsion {invariants} disagrees with gcd formula {g} for cycle type {sigma.cycle_type()}"
        )
    gen = [0] * spec.N
    if spec.group == "SL":
        for cyc in cycles:
            for i in cyc[: len(cyc) // g]:
                gen[i - 1] = 1
    gen = tuple(gen)
    # order of the generator's class, read off in SNF coordinates U·x
    coords = res.U.apply(gen)
    diag = res.diagonal
    gen_order = 1
    for i, c in enumerate(coords):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c != 0:
                raise ConsistencyError("torsion generator has a free component")
        elif d > 1:
            gen_order = math.lcm(gen_order, d // math.gcd(d, c))
    if gen_order != order:
        raise ConsistencyError(f"generator has order {gen_order}, expected {order}")
    degree = sum(gen) % spec.N
    if spec.group == "SL" and degree != (spec.N // g) % spec.N:
        raise ConsistencyError("generator degree differs from N/g")
    return CosetStructure(invariants, free_rank, gen, degree)


def fixed_and_perp(spec: LatticeSpec, sigma: Permutation):
    """Integral bases of U_σ = Λ^σ and of its Cartan-orthogonal complement U_σ^⊥.

    SL vectors are returned as representatives with last coordinate 0.
    """
    _check_degree(spec, sigma)
    n = spec.N
    m = one_minus_sigma(spec, sigma)
    if spec.group == "GL":
        fixed = integer_kernel(m)
        perp = integer_kernel(IntMatrix(fixed, n)) if fixed else _unit_basis(n)
        return fixed, perp
    # x with x_N = 0 and (1-σ)x in Z·(1,...,1): unknowns (x_1..x_{N-1}, c)
    rows = [list(m.rows[i][: n - 1]) + [-1] for i in range(n)]
    fixed = [tuple(v[: n - 1]) + (0,) for v in integer_kernel(IntMatrix(rows, n))]
    if not fixed:
        return [], [tuple(b[: n - 1]) + (0,) for b in _unit_basis(n)][: n - 1]
    # N·(x, u) - deg x · deg u = 0 for each u in the fixed basis, with x_N = 0
    eqs = [[n * u[i] - sum(u) for i in range(n - 1)] for u in fixed]
    perp = [tuple(v) + (0,) for v in integer_kernel(IntMatrix(eqs, n - 1))] if n > 1 else []
    return fixed, perp


def _unit_basis(n: int) -> list[tuple[int, ...]]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


# brute_coset_count works in (Z/M)^N; refuse when that set is larger than this
BRUTE_GROUP_CAP = 2_000_000


def brute_coset_count(spec: LatticeSpec, sigma: Permutation) -> int:
    """Torsion order of Λ / Im(1-σ) without Smith normal form.

    With I the relation lattice, r its rank and M the smallest nonzero r×r
    minor, the torsion T has |T| dividing M, so Λ/(I + MΛ) ≅ T ⊕ (Z/M)^f with
    f = N - r.  Its order is found by enumerating the subgroup of (Z/M)^N
    generated by the relations, then |T| = M^N / (|subgroup| · M^f).
    """
    _check_degree(spec, sigma)
    if spec.N > 6:
        raise InputError("brute_coset_count is limited to N <= 6")
    rel = _relation_matrix(spec, sigma)
    n = spec.N
    r = rel.rank()
    if r == 0:
        return 1
    mod = 0
    for rs in itertools.combinations(range(rel.nrows), r):
        for cs in itertools.combinations(range(rel.ncols), r):
            det = abs(IntMatrix([[rel[i, j] for j in cs] for i in rs], r).determinant())
            if det and (mod == 0 or det < mod):
                mod = det
    if mod ** n > BRUTE_GROUP_CAP:
        raise InputError(f"(Z/{mod})^{n} is above the enumeration cap")
    gens = [tuple(x % mod for x in rel.column(j)) for j in range(rel.ncols)]
    subgroup = {tuple([0] * n)}
    for g in gens:
        multiples, cur = [], tuple([0] * n)
        while True:
            multiples.append(cur)
            cur = tuple((a + b) % mod for a, b in zip(cur, g))
            if cur == multiples[0]:
                break
        subgroup = {tuple((a + b) % mod for a, b in zip(h, c)) for h in subgroup for c in multiples}
    free = n - r
    quotient = mod**n // len(subgroup)
    if quotient % (mod**free):
        raise ConsistencyError("brute coset count is not a multiple of M^f")
    return quotient // mod**free
