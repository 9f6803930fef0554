"""Multisegments, their ordering and narrowness predicates, and the survival-certificate pipeline.

Model.  A start is ``(line, z)`` and stands for (base of line)·t^(2z/N0);
distinct line identifiers are distinct t^(2/N0)-lines.  Two starts lie on the
same t²-line when they share a line and z ≡ z' (mod N0).  A segment ⟨a; ℓ⟩
has ρ-eigenvalues a, a t^-2, ..., i.e. z, z - N0, ..., z - (ℓ-1) N0.

The SL twist by a uniform power of t acts as a translation of every z on a
line; every predicate here is translation invariant, so the model treats it
as the identity.

Pipeline for e⁻_{m^j} (``certificate_e_mj``):

1. ``narrow_to_k``: π-shift lines whose z-span is at least n0, link the
   inverted pairs the shift creates, re-sort; output is right-ordered and
   k-narrow.  This is a deterministic stand-in for choosing a simple
   submodule; only the properties of its own output are claimed.
2. ``decompose_AB``: per line, rotate the start-area sequence to the best
   averaging window of width ℓ·N0 and split into A (inside) and B.
3. ``split_ell_narrow``: cut the ℓ-narrow A into ℓ pieces that are 1-narrow,
   giving the composition α; β is the composition of B.
4. Dominance facts are checked through ``partdom`` with λ = sort(α, β)ᵀ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import partdom
from .errors import InputError


@dataclass(frozen=True, order=True)
class SlopeK:
    n0: int
    N0: int

    def __post_init__(self):
        if not (isinstance(self.n0, int) and isinstance(self.N0, int)):
            raise InputError("slope numerator and denominator must be integers")
        if self.n0 < 1 or self.N0 < 1:
            raise InputError(f"slope must be positive, got {self.n0}/{self.N0}")
        if math.gcd(self.n0, self.N0) != 1:
            raise InputError(f"slope {self.n0}/{self.N0} is not in lowest terms")

    @classmethod
    def of(cls, value) -> "SlopeK":
        """From an int, a Fraction, or a string like "5/2"."""
        if isinstance(value, SlopeK):
            return value
        try:
            value = Fraction(value)
        except (ValueError, TypeError, ZeroDivisionError):
            raise InputError(f"cannot read a slope from {value!r}") from None
        return cls(value.numerator, value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.n0, self.N0)

    @property
    def floor(self) -> int:
        return self.n0 // self.N0

    def __str__(self) -> str:
        return f"{self.n0}/{self.N0}" if self.N0 != 1 else str(self.n0)


@dataclass(frozen=True, order=True)
class Start:
    line: str
    z: int


@dataclass(frozen=True)
class Segment:
    start: Start
    len: int

    def __post_init__(self):
        if self.len < 0:
            raise InputError(f"segment length must be nonnegative, got {self.len}")

    @classmethod
    def at(cls, line: str, z: int, length: int) -> "Segment":
        return cls(Start(line, z), length)


@dataclass(frozen=True)
class Multisegment:
    slope: SlopeK
    segs: tuple[Segment, ...] = ()

    def __post_init__(self):
        # zero-length placeholders are dropped at construction
        object.__setattr__(self, "segs", tuple(s for s in self.segs if s.len > 0))

    @classmethod
    def build(cls, slope, items: Iterable[tuple[str, int, int]]) -> "Multisegment":
        """From ``(line, z, len)`` triples."""
        return cls(SlopeK.of(slope), tuple(Segment.at(l, z, n) for l, z, n in items))

    def __len__(self) -> int:
        return len(self.segs)

    def __iter__(self):
        return iter(self.segs)

    def lines(self) -> list[str]:
        """Line identifiers in order of first appearance."""
        return list(dict.fromkeys(s.start.line for s in self.segs))

    def on_line(self, line: str) -> list[Segment]:
        return [s for s in self.segs if s.start.line == line]

    def to_json(self) -> dict:
        return {
            "slope": {"n0": self.slope.n0, "N0": self.slope.N0},
            "segments": [{"line": s.start.line, "z": s.start.z, "len": s.len} for s in self.segs],
        }

    @classmethod
    def from_json(cls, obj) -> "Multisegment":
        try:
            slope = SlopeK(obj["slope"]["n0"], obj["slope"]["N0"])
            segs = []
            for item in obj["segments"]:
                line, z, length = item["line"], item["z"], item["len"]
                if not isinstance(line, (str, int)) or isinstance(line, bool):
                    raise InputError(f"line identifier must be a string, got {line!r}")
                if not isinstance(z, int) or not isinstance(length, int) or isinstance(z, bool):
                    raise InputError("z and len must be integers")
                segs.append(Segment.at(str(line), z, length))
        except (KeyError, TypeError) as exc:
            raise InputError(f"multisegment JSON does not match the schema: {exc}") from None
        return cls(slope, tuple(segs))


def size(delta: Multisegment) -> int:
    return sum(s.len for s in delta.segs)


def composition_of(delta: Multisegment) -> tuple[int, ...]:
    return tuple(s.len for s in delta.segs if s.len)


def area(delta: Multisegment, a: Start) -> int:
    return sum(s.len for s in delta.segs if s.start == a)


def concat(delta: Multisegment, gamma: Multisegment) -> Multisegment:
    if delta.slope != gamma.slope:
        raise InputError(f"slope mismatch: {delta.slope} vs {gamma.slope}")
    return Multisegment(delta.slope, delta.segs + gamma.segs)


def same_t2_line(a: Start, b: Start, slope: SlopeK) -> bool:
    return a.line == b.line and (a.z - b.z) % slope.N0 == 0


def _t2_key(s: Segment, slope: SlopeK) -> tuple[str, int]:
    return s.start.line, s.start.z % slope.N0


def is_right_ordered(delta: Multisegment) -> bool:
    """For i < j on one t²-line: z_j ≥ z_i, and ℓ_i ≤ ℓ_j when z_i = z_j."""
    last: dict = {}
    for s in delta.segs:
        key = _t2_key(s, delta.slope)
        cur = (s.start.z, s.len)
        prev = last.get(key)
        if prev is not None and cur < prev:
            return False
        last[key] = cur
    return True


def _by_t2_line(delta: Multisegment) -> dict:
    out: dict = {}
    for s in delta.segs:
        out.setdefault(_t2_key(s, delta.slope), []).append((s.start.z, s.len))
    return out


def equivalent(delta: Multisegment, gamma: Multisegment) -> bool:
    """Same subsequence on every t²-line, so only cross-line inversions separate them."""
    if delta.slope != gamma.slope:
        raise InputError(f"slope mismatch: {delta.slope} vs {gamma.slope}")
    return _by_t2_line(delta) == _by_t2_line(gamma)


def is_s_narrow(delta: Multisegment, s) -> bool:
    """Whenever a_i / a_j = t^(2z/N0') with z an integer, |z| < n0'.

    With the same N0 as the multisegment this is |z_i - z_j| < n0 on every
    line.  For another denominator N0', a z-gap d on one line is a power of
    t^(2/N0') exactly when d·N0' is divisible by N0, and then the bound is
    |d|·N0' < n0'·N0.  Integer s = ℓ therefore constrains pairs on one
    t²-line to |d| < ℓ·N0.
    """
    s = SlopeK.of(s)
    N0 = delta.slope.N0
    per_line: dict = {}
    for seg in delta.segs:
        per_line.setdefault(seg.start.line, []).append(seg.start.z)
    for zs in per_line.values():
        zs = sorted(set(zs))
        for i, zi in enumerate(zs):
            for zj in zs[i + 1:]:
                d = zj - zi
                if (d * s.N0) % N0 == 0 and d * s.N0 >= s.n0 * N0:
                    return False
    return True


def is_M_simple(delta: Multisegment) -> bool:
    """1-narrowness, a sufficient (not necessary) condition for M(Δ) to be simple."""
    return is_s_narrow(delta, SlopeK(1, 1))


def rho_eigenvalues(delta: Multisegment) -> list[Start]:
    N0 = delta.slope.N0
    return [Start(s.start.line, s.start.z - i * N0) for s in delta.segs for i in range(s.len)]


def group_by_line(delta: Multisegment) -> list[tuple[str, Multisegment]]:
    return [(line, Multisegment(delta.slope, tuple(delta.on_line(line)))) for line in delta.lines()]


@dataclass(frozen=True)
class StartAreaSeq:
    b: tuple[int, ...]
    base: int  # z of the first slot

    def __len__(self) -> int:
        return len(self.b)

    @property
    def total(self) -> int:
        return sum(self.b)


def start_area_sequence(delta_line: Multisegment, base: int | None = None) -> StartAreaSeq:
    """b[j] = total length of segments with z = base + j, j < n0; base defaults to min z."""
    n0 = delta_line.slope.n0
    lines = delta_line.lines()
    if len(lines) > 1:
        raise InputError(f"start_area_sequence needs a single line, got {lines}")
    zs = [s.start.z for s in delta_line.segs]
    if not zs:
        return StartAreaSeq((0,) * n0, 0 if base is None else base)
    if base is None:
        base = min(zs)
    if min(zs) < base or max(zs) - base >= n0:
        raise InputError(f"line spans z in [{min(zs)}, {max(zs)}], not inside n0 = {n0} slots from {base}")
    b = [0] * n0
    for s in delta_line.segs:
        b[s.start.z - base] += s.len
    return StartAreaSeq(tuple(b), base)


def _replace_line(delta: Multisegment, line: str, new_segs: list[Segment]) -> Multisegment:
    """Put ``new_segs`` into the slots of ``line``; extra segments go after the line's last slot."""
    slots = [i for i, s in enumerate(delta.segs) if s.start.line == line]
    out: list = []
    it = iter(new_segs)
    last = slots[-1] if slots else len(delta.segs) - 1
    for i, s in enumerate(delta.segs):
        if s.start.line == line:
            nxt = next(it, None)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(s)
        if i == last:
            out.extend(it)
    return Multisegment(delta.slope, tuple(out))


def pi_shift_line(delta: Multisegment, line: str) -> Multisegment:
    """Move the minimal-z block of ``line`` to z + n0, after the line's other segments.

    Relative to the new minimum, the start-area sequence rotates left to the
    next nonzero slot; it rotates by exactly one when that slot is occupied.
    """
    segs = delta.on_line(line)
    if not segs:
        raise InputError(f"line {line!r} has no segments")
    zmin = min(s.start.z for s in segs)
    n0 = delta.slope.n0
    keep = [s for s in segs if s.start.z != zmin]
    moved = [Segment.at(line, zmin + n0, s.len) for s in segs if s.start.z == zmin]
    return _replace_line(delta, line, keep + moved)


def _gap(s1: Segment, s2: Segment, slope: SlopeK) -> int:
    if not same_t2_line(s1.start, s2.start, slope):
        raise InputError(f"{s1.start} and {s2.start} are not on one t²-line")
    return (s2.start.z - s1.start.z) // slope.N0


def is_linked(s1: Segment, s2: Segment, slope: SlopeK = SlopeK(1, 1)) -> bool:
    """s2 starts t^(2z) above s1 with z > 0; linked iff p ≥ z ≥ p - ℓ + 1 (ℓ = |s1|, p = |s2|)."""
    z = _gap(s1, s2, slope)
    ell, p = s1.len, s2.len
    return z > 0 and p >= z >= p - ell + 1


def link(s1: Segment, s2: Segment, slope: SlopeK = SlopeK(1, 1)) -> Multisegment:
    """(⟨a; p - z⟩, ⟨b; z + ℓ⟩) for a linked pair, the pair itself otherwise."""
    if not is_linked(s1, s2, slope):
        return Multisegment(slope, (s1, s2))
    z = _gap(s1, s2, slope)
    return Multisegment(slope, (Segment(s1.start, s2.len - z), Segment(s2.start, z + s1.len)))


def _sort_line(segs: list[Segment]) -> list[Segment]:
    return sorted(segs, key=lambda s: (s.start.z, s.len))


def _span(segs: list[Segment]) -> int:
    zs = [s.start.z for s in segs]
    return max(zs) - min(zs)


def _narrow_step(delta: Multisegment, line: str, links=None):
    """One π-shift of ``line``, then links on created inversions, then a stable re-sort.

    ``links`` lists (i, j) index pairs into the post-shift line list, lower
    start first; when None they are chosen greedily and returned.
    """
    slope = delta.slope
    shifted = pi_shift_line(delta, line)
    segs = shifted.on_line(line)
    if links is None:
        old = delta.on_line(line)
        zmin = min(s.start.z for s in old)
        # pi_shift_line appends the moved block at the end of the line
        moved = list(range(len(segs) - sum(1 for s in old if s.start.z == zmin), len(segs)))
        used: set = set()
        links = []
        for i in moved:
            if i in used:
                continue
            lower = segs[i]
            # earlier segments of the same t²-line lying strictly higher: created inversions
            cands = [j for j in range(i) if j not in used and j not in moved
                     and same_t2_line(lower.start, segs[j].start, slope)
                     and segs[j].start.z > lower.start.z]
            cands.sort(key=lambda j: (segs[j].start.z, j))
            for j in cands:
                if is_linked(lower, segs[j], slope):
                    links.append((i, j))
                    used.update((i, j))
                    break
    segs = list(segs)
    for i, j in links:
        pair = link(segs[i], segs[j], slope)
        if len(pair.segs) == 2:
            segs[i], segs[j] = pair.segs
        else:
            segs[i], segs[j] = Segment(segs[i].start, 0), pair.segs[0]
    segs = _sort_line([s for s in segs if s.len])
    return _replace_line(shifted, line, segs), links


def narrow_to_k(delta: Multisegment, k=None, log: list | None = None) -> Multisegment:
    """A right-ordered k-narrow multisegment reached by π-shifts and links.

    Each step shifts the first line (in order of appearance) whose z-span is
    at least n0; its minimum strictly increases while its maximum does not,
    so the loop ends.  Each step is appended to ``log`` as (line, links).
    """
    if k is not None and SlopeK.of(k) != delta.slope:
        raise InputError(f"narrow_to_k slope {k} differs from the multisegment slope {delta.slope}")
    if not is_right_ordered(delta):
        raise InputError("narrow_to_k needs a right-ordered multisegment")
    n0 = delta.slope.n0
    while True:
        line = next((l for l in delta.lines() if _span(delta.on_line(l)) >= n0), None)
        if line is None:
            return delta
        delta, links = _narrow_step(delta, line)
        if log is not None:
            log.append((line, tuple(links)))


def replay_narrowing(delta: Multisegment, log) -> Multisegment:
    for line, links in log:
        delta, _ = _narrow_step(delta, line, [tuple(p) for p in links])
    return delta


def find_good_cyclic_shift(b, ell: int, k) -> tuple[int, int]:
    """Smallest g maximising the cyclic window sum of width w = ℓ·N0 starting at slot g.

    Some window reaches the average, so W(g)·n0 ≥ Σb·ℓ·N0 (checked).
    """
    k = SlopeK.of(k)
    b = tuple(b.b) if isinstance(b, StartAreaSeq) else tuple(b)
    n0 = k.n0
    if len(b) != n0:
        raise InputError(f"start-area sequence has length {len(b)}, expected n0 = {n0}")
    if ell < 1 or ell > k.floor:
        raise InputError(f"ℓ = {ell} must satisfy 1 <= ℓ <= ⌊k⌋ = {k.floor}")
    w = ell * k.N0
    total = sum(b)
    if w >= n0:
        g, best = 0, total
    else:
        ext = b + b
        window = sum(ext[:w])
        g, best = 0, window
        for start in range(1, n0):
            window += ext[start + w - 1] - ext[start - 1]
            if window > best:
                g, best = start, window
    if best * n0 < total * ell * k.N0:
        raise AssertionError(f"averaging bound fails for b = {b}, ℓ = {ell}, k = {k}")
    return g, best


@dataclass(frozen=True)
class Decomposition:
    A: Multisegment
    B: Multisegment
    shifts: dict  # line -> number of π-shifts applied
    windows: dict  # line -> (g, window sum)

    @property
    def gamma(self) -> Multisegment:
        return concat(self.A, self.B)


def _is_rotation(a: tuple, b: tuple) -> bool:
    return len(a) == len(b) and any(a[r:] + a[:r] == b for r in range(max(len(a), 1)))


def apply_shifts(delta: Multisegment, shifts: dict) -> Multisegment:
    for line in delta.lines():
        for _ in range(shifts.get(line, 0)):
            delta = pi_shift_line(delta, line)
    return delta


def decompose_AB(delta: Multisegment, k, m: int) -> Decomposition:
    """Split a right-ordered k-narrow Δ into Γ = A ⊔ B with A ℓ-narrow and |A| ≥ |Δ|·ℓ/k."""
    k = SlopeK.of(k)
    if k != delta.slope:
        raise InputError(f"slope {k} differs from the multisegment slope {delta.slope}")
    ell = k.floor
    n = size(delta)
    if ell < 1:
        raise InputError(f"⌊k⌋ must be at least 1, k = {k}")
    if not is_right_ordered(delta):
        raise InputError("decompose_AB needs a right-ordered multisegment")
    if not is_s_narrow(delta, k):
        raise InputError(f"decompose_AB needs a {k}-narrow multisegment")
    if m < 1 or m * k.n0 > n * k.N0:
        raise InputError(f"need 1 <= m <= |Δ|/k, got m = {m}, |Δ| = {n}, k = {k}")
    w = ell * k.N0
    shifts, windows, window_start = {}, {}, {}
    gamma = delta
    for line in delta.lines():
        seq = start_area_sequence(Multisegment(k, tuple(delta.on_line(line))))
        g, best = find_good_cyclic_shift(seq, ell, k)
        windows[line] = (g, best)
        window_start[line] = seq.base + g
        # every occupied slot before g is moved up by n0
        shifts[line] = sum(1 for x in seq.b[:g] if x)
        for _ in range(shifts[line]):
            gamma = pi_shift_line(gamma, line)
    inside = [s.start.z - window_start[s.start.line] < w for s in gamma.segs]
    A = Multisegment(k, tuple(s for s, a in zip(gamma.segs, inside) if a))
    B = Multisegment(k, tuple(s for s, a in zip(gamma.segs, inside) if not a))
    result = Decomposition(A, B, shifts, windows)
    _check_decomposition(delta, result, m)
    return result


def _check_decomposition(delta: Multisegment, dec: Decomposition, m: int) -> None:
    k = delta.slope
    ell = k.floor
    a = size(dec.A)
    if size(dec.A) + size(dec.B) != size(delta):
        raise AssertionError("decomposition does not conserve size")
    if not is_s_narrow(dec.A, SlopeK(ell, 1)):
        raise AssertionError(f"A is not {ell}-narrow")
    if a * k.n0 < size(delta) * ell * k.N0 or a < ell * m:
        raise AssertionError(f"|A| = {a} is below the averaging bound")
    gamma = dec.gamma
    if not is_right_ordered(gamma):
        raise AssertionError("A ⊔ B is not right-ordered")
    for line in delta.lines():
        before = start_area_sequence(Multisegment(k, tuple(delta.on_line(line)))).b
        after = start_area_sequence(Multisegment(k, tuple(gamma.on_line(line)))).b
        if not _is_rotation(before, after):
            raise AssertionError(f"start areas of line {line!r} are not a cyclic shift: {before} -> {after}")


def split_ell_narrow(A: Multisegment, ell: int) -> tuple[list[Multisegment], tuple[int, ...]]:
    """Piece j collects, on every t²-line, the segments at z = (line minimum) + j·N0."""
    if ell < 1:
        raise InputError("ℓ must be at least 1")
    if not is_s_narrow(A, SlopeK(ell, 1)):
        raise InputError(f"split_ell_narrow needs an {ell}-narrow multisegment")
    N0 = A.slope.N0
    zmin: dict = {}
    for s in A.segs:
        key = _t2_key(s, A.slope)
        zmin[key] = min(zmin.get(key, s.start.z), s.start.z)
    pieces: list[list[Segment]] = [[] for _ in range(ell)]
    for s in A.segs:
        j = (s.start.z - zmin[_t2_key(s, A.slope)]) // N0
        pieces[j].append(s)
    out = [Multisegment(A.slope, tuple(p)) for p in pieces]
    alpha = tuple(size(p) for p in out if size(p))
    return out, alpha


@dataclass
class SurvivalCertificate:
    input: Multisegment
    m: int
    j: int
    narrowing: list = field(default_factory=list)
    narrowed: Multisegment | None = None
    shifts: dict = field(default_factory=dict)
    A: Multisegment | None = None
    B: Multisegment | None = None
    pieces: list = field(default_factory=list)
    alpha: tuple = ()
    beta: tuple = ()
    dominance_facts: list = field(default_factory=list)
    verdict: str = "refuted"
    failing_fact: str | None = None

    @property
    def slope(self) -> SlopeK:
        return self.input.slope

    @property
    def gamma(self) -> Multisegment:
        return concat(self.A, self.B)

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "slope": {"n0": self.slope.n0, "N0": self.slope.N0},
            "m": self.m,
            "j": self.j,
            "narrowing": [{"line": line, "links": [list(p) for p in links]} for line, links in self.narrowing],
            "narrowed": self.narrowed.to_json(),
            "shifts": dict(self.shifts),
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "pieces": [p.to_json() for p in self.pieces],
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "dominance_facts": [dict(f) for f in self.dominance_facts],
            "verdict": self.verdict,
            "failing_fact": self.failing_fact,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SurvivalCertificate":
        return cls(
            input=Multisegment.from_json(obj["input"]),
            m=obj["m"],
            j=obj["j"],
            narrowing=[(d["line"], tuple(tuple(p) for p in d["links"])) for d in obj["narrowing"]],
            narrowed=Multisegment.from_json(obj["narrowed"]),
            shifts=dict(obj["shifts"]),
            A=Multisegment.from_json(obj["A"]),
            B=Multisegment.from_json(obj["B"]),
            pieces=[Multisegment.from_json(p) for p in obj["pieces"]],
            alpha=tuple(obj["alpha"]),
            beta=tuple(obj["beta"]),
            dominance_facts=[dict(f) for f in obj["dominance_facts"]],
            verdict=obj["verdict"],
            failing_fact=obj.get("failing_fact"),
        )


def _check_certificate_preconditions(delta: Multisegment, m: int, j: int) -> None:
    k = delta.slope
    ell = k.floor
    n = size(delta)
    if not is_right_ordered(delta):
        raise InputError("the multisegment must be right-ordered")
    if ell < 1:
        raise InputError(f"need ⌊k⌋ >= 1, got k = {k}")
    if not 1 <= j <= ell:
        raise InputError(f"need 1 <= j <= ⌊k⌋ = {ell}, got j = {j}")
    if m < 1:
        raise InputError(f"need m >= 1, got m = {m}")
    if m * k.n0 > n * k.N0:
        raise InputError(f"need m <= |Δ|/k: m = {m}, |Δ| = {n}, k = {k}")


def _dominance_facts(n, ell, m, j, alpha, beta) -> list[dict]:
    r = n - ell * m
    r1 = sum(alpha) - ell * m
    both = sort = partdom.sort_composition(alpha + beta)
    lam = partdom.transpose(both)
    rect = (m,) * ell + (1,) * r
    target = (m,) * j + (1,) * (n - j * m)

    def fact(name, holds):
        return {"name": name, "holds": bool(holds)}

    facts = [
        fact(f"len(alpha) <= {ell}", len(alpha) <= ell),
        fact(f"|alpha| >= {ell * m}", sum(alpha) >= ell * m),
        fact(f"{rect} dominated by {sort}", partdom.dominated_by(partdom.sort_composition(rect), sort)),
    ]
    if r1 >= 0:
        step = partdom.sort_composition((m,) * ell + (1,) * r1)
        facts.append(fact(f"{step} dominated by {partdom.sort_composition(alpha)}",
                          partdom.dominated_by(step, partdom.sort_composition(alpha))))
    facts += [
        fact(f"sign survives {alpha + beta} on {lam}", partdom.sign_survives(alpha + beta, lam)),
        fact(f"sign survives {rect} on {lam}", partdom.sign_survives(rect, lam)),
        fact(f"sign survives {target} on {lam}", partdom.sign_survives(target, lam)),
    ]
    return facts


def certificate_e_mj(delta: Multisegment, m: int, j: int) -> SurvivalCertificate:
    """Run narrow -> decompose -> split and record the dominance facts that give e⁻_{m^j}-survival."""
    _check_certificate_preconditions(delta, m, j)
    k = delta.slope
    ell = k.floor
    n = size(delta)
    cert = SurvivalCertificate(input=delta, m=m, j=j)
    log: list = []
    narrowed = narrow_to_k(delta, k, log)
    cert.narrowing, cert.narrowed = log, narrowed
    dec = decompose_AB(narrowed, k, m)
    cert.shifts, cert.A, cert.B = dict(dec.shifts), dec.A, dec.B
    pieces, alpha = split_ell_narrow(dec.A, ell)
    cert.pieces, cert.alpha, cert.beta = pieces, alpha, composition_of(dec.B)
    facts = [
        {"name": f"narrowed is {k}-narrow", "holds": is_s_narrow(narrowed, k)},
        {"name": "narrowed is right-ordered", "holds": is_right_ordered(narrowed)},
        {"name": "every piece is 1-narrow", "holds": all(is_s_narrow(p, SlopeK(1, 1)) for p in pieces)},
    ]
    facts += _dominance_facts(n, ell, m, j, cert.alpha, cert.beta)
    cert.dominance_facts = facts
    failed = next((f["name"] for f in facts if not f["holds"]), None)
    cert.verdict = "valid" if failed is None else "refuted"
    cert.failing_fact = failed
    return cert


def replay_certificate(cert: SurvivalCertificate) -> bool:
    """Re-execute the recorded steps from the input and re-verify every fact."""
    _check_certificate_preconditions(cert.input, cert.m, cert.j)
    narrowed = replay_narrowing(cert.input, cert.narrowing)
    if narrowed != cert.narrowed:
        return False
    gamma = apply_shifts(narrowed, cert.shifts)
    if not equivalent(gamma, cert.gamma) or sorted(gamma.segs, key=_seg_key) != sorted(cert.gamma.segs, key=_seg_key):
        return False
    dec = decompose_AB(narrowed, cert.slope, cert.m)
    if dec.A != cert.A or dec.B != cert.B or dec.shifts != cert.shifts:
        return False
    pieces, alpha = split_ell_narrow(cert.A, cert.slope.floor)
    if pieces != cert.pieces or alpha != cert.alpha or composition_of(cert.B) != cert.beta:
        return False
    fresh = certificate_e_mj(cert.input, cert.m, cert.j)
    return fresh.dominance_facts == cert.dominance_facts and fresh.verdict == cert.verdict


def _seg_key(s: Segment):
    return (s.start.line, s.start.z, s.len)


def random_multisegment(rng, slope, max_size: int = 12, narrow: bool = True,
                        lines: tuple[str, ...] = ("A", "B", "C")) -> Multisegment:
    """Seeded random right-ordered multisegment with |Δ| <= max_size.

    With ``narrow`` every line spans fewer than n0 slots, so the result is
    k-narrow; otherwise spans reach up to 3·n0.
    """
    slope = SlopeK.of(slope)
    target = rng.randint(1, max_size)
    span = slope.n0 if narrow else 3 * slope.n0
    offsets = {line: rng.randint(-5, 5) for line in lines}
    per_line: dict = {}
    total = 0
    while total < target:
        line = rng.choice(lines)
        length = rng.randint(1, min(3, target - total))
        z = offsets[line] + rng.randrange(span)
        per_line.setdefault(line, []).append(Segment.at(line, z, length))
        total += length
    queues = {line: _sort_line(segs) for line, segs in per_line.items()}
    order = [line for line, segs in queues.items() for _ in segs]
    rng.shuffle(order)
    segs = [queues[line].pop(0) for line in order]
    return Multisegment(slope, tuple(segs))
