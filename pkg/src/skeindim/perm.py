"""Permutations in one-line notation and per-degree lookup tables."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1, ..., N} stored as the tuple (σ(1), ..., σ(N))."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InputError(f"not a permutation in one-line notation: {self.images!r}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def from_cycle_type(cls, cycle_type) -> "Permutation":
        """Canonical representative: cycles in decreasing length on consecutive points."""
        parts = sorted((int(p) for p in cycle_type if p), reverse=True)
        cycles, start = [], 1
        for p in parts:
            cycles.append(list(range(start, start + p)))
            start += p
        return cls.from_cycles(start - 1, cycles)

    @classmethod
    def simple_reflection(cls, n: int, i: int) -> "Permutation":
        if not 1 <= i < n:
            raise InputError(f"s_{i} is not a simple reflection of S_{n}")
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        if other.degree != self.degree:
            raise InputError("degree mismatch in permutation product")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def length(self) -> int:
        """Number of inversions, i.e. the Coxeter length."""
        imgs = self.images
        return sum(1 for i in range(len(imgs)) for j in range(i + 1, len(imgs)) if imgs[i] > imgs[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def reduced_word(self) -> tuple[int, ...]:
        """Bubble-sort reduced word (i_1, ..., i_m) with self = s_{i_1} ... s_{i_m}."""
        # Sorting the one-line array by adjacent swaps of positions j, j+1 is right
        # multiplication by s_j; reading the swaps backwards gives a word for self.
        arr = list(self.images)
        swaps = []
        changed = True
        while changed:
            changed = False
            for j in range(len(arr) - 1):
                if arr[j] > arr[j + 1]:
                    arr[j], arr[j + 1] = arr[j + 1], arr[j]
                    swaps.append(j + 1)
                    changed = True
        return tuple(reversed(swaps))

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def random_permutation(n: int, rng: random.Random) -> Permutation:
    imgs = list(range(1, n + 1))
    rng.shuffle(imgs)
    return Permutation(tuple(imgs))


class PermTable:
    """Indexed copy of S_n with right-multiplication and traversal tables.

    ``right[w][i-1]`` is the index of w·s_i and ``longer[w][i-1]`` tells whether
    ℓ(w·s_i) > ℓ(w).  ``order`` lists every index once in a depth-first
    preorder of the tree where each v ≠ id hangs below v·s_d, d the smallest
    right descent of v; ``parent``/``gen``/``depth`` describe that tree.
    """

    def __init__(self, n: int):
        self.n = n
        self.perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        self.index = {p: i for i, p in enumerate(self.perms)}
        self.lengths = [p.length() for p in self.perms]
        self.right = []
        self.longer = []
        for p in self.perms:
            row, lrow = [], []
            for i in range(1, n):
                imgs = list(p.images)
                imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
                row.append(self.index[Permutation(tuple(imgs))])
                lrow.append(p.images[i - 1] < p.images[i])
            self.right.append(tuple(row))
            self.longer.append(tuple(lrow))
        self.max_length = n * (n - 1) // 2
        ident = self.index[Permutation.identity(n)]
        self.identity_index = ident
        self.parent = [-1] * len(self.perms)
        self.gen = [-1] * len(self.perms)
        children = [[] for _ in self.perms]
        for v, p in enumerate(self.perms):
            if v == ident:
                continue
            d = next(i for i in range(1, n) if not self.longer[v][i - 1])
            u = self.right[v][d - 1]
            self.parent[v] = u
            self.gen[v] = d
            children[u].append(v)
        self.order, self.depth = [], [0] * len(self.perms)
        stack = [ident]
        while stack:
            v = stack.pop()
            self.order.append(v)
            for c in reversed(children[v]):
                self.depth[c] = self.depth[v] + 1
                stack.append(c)

    def __len__(self) -> int:
        return len(self.perms)


@lru_cache(maxsize=None)
def perm_table(n: int) -> PermTable:
    if n < 0:
        raise InputError("strand count must be nonnegative")
    return PermTable(n)
