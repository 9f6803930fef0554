"""Verification suites driven by ``skeindim verify``; each returns a RunReport."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import hecke, hochschild, lattice, multiseg, numtheory, partdom
from .errors import ConsistencyError, InputError
from .perm import Permutation, random_permutation


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class RunReport:
    command: str
    parameters: dict
    checks: list[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness=None) -> None:
        self.checks.append(CheckResult(name, bool(passed), None if passed or witness is None else str(witness)))

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks],
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


SLOPES = ("1", "2", "3", "3/2", "5/2", "7/3")

DEFAULTS = {
    "coset": {"max_n": 9, "cases": 3},
    "hecke": {"max_n": 5, "cases": 200},
    "dominance": {"max_n": 7, "cases": 0},
    "knr": {"max_n": 8, "cases": 0},
    "window": {"max_n": 12, "cases": 1000},
    "identity": {"max_n": 500, "cases": 0},
    "certificate": {"max_n": 12, "cases": 500},
}

CAPS = {"coset": 12, "hecke": 6, "dominance": 8, "knr": 10, "window": 60, "identity": 10**5, "certificate": 16}


def suite_coset(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    for n in range(1, max_n + 1):
        for lam in numtheory.partitions(n):
            sigma = Permutation.from_cycle_type(lam)
            for group in ("GL", "SL"):
                spec = lattice.LatticeSpec(group, n)
                name = f"{group} N={n} cycle type {lam}"
                try:
                    cs = lattice.coset_structure(spec, sigma)
                except ConsistencyError as exc:
                    report.add(name, False, exc)
                    continue
                g = math.gcd(*lam) if group == "SL" else 1
                ok = cs.torsion_order == g and cs.is_cyclic
                if group == "SL":
                    ok = ok and cs.generator_degree == (n // g) % n
                report.add(name, ok, cs)
                if n <= 5:
                    brute = lattice.brute_coset_count(spec, sigma)
                    report.add(f"{name} brute count", brute == cs.torsion_order, f"brute {brute} vs {cs.torsion_order}")
                if cases:
                    ctx = hochschild.HochschildContext(spec)
                    report.add(f"{name} conjugates", hochschild.check_conjugation_invariance(ctx, sigma, rng, cases))


def suite_hecke(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    for n in range(1, max_n + 1):
        for m in range(0, n + 1):
            for alpha in partdom.compositions(m):
                name = f"identities alpha={alpha} n={n}"
                rep = hecke.verify_idempotent_identities(alpha, n, strict=False)
                failed = [c for c, ok in rep.checks if not ok]
                report.add(name, not failed, failed)
                e = hecke.sign_idempotent(alpha, n)
                full = hecke.padded_composition(alpha, n)
                order = math.prod(math.factorial(a) for a in full)
                spec = e.specialize_at_one()
                ok = all(spec.get(w, 0) == Fraction(w.sign(), order) for w in hecke.young_subgroup(full, n))
                report.add(f"t=1 antisymmetrizer alpha={alpha} n={n}", ok and len(spec) == len(e))
    for c in range(cases):
        n = rng.randint(1, max_n)
        w, v = random_permutation(n, rng), random_permutation(n, rng)
        x, y = hecke.HeckeElement.basis(w), hecke.HeckeElement.basis(v)
        report.add(f"reduced words T{w.images} T{v.images}", hecke.multiply(x, y) == hecke.multiply_left(x, y))
    for n in range(1, min(max_n, 4) + 1):
        for m in range(1, n + 1):
            for j in range(1, n // m + 1):
                for js in range(0, j + 1):
                    name = f"ideal e-_{{{m}^{j}}} from e-_{{{m}^{js}}} n={n}"
                    try:
                        hecke.ideal_membership_witness(m, j, js, n)
                        report.add(name, True)
                    except ConsistencyError as exc:
                        report.add(name, False, exc)


def suite_dominance(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    for n in range(1, max_n + 1):
        for alpha in partdom.compositions(n):
            total = 0
            for lam in numtheory.partitions(n):
                mult = partdom.mn_multiplicity_oracle(alpha, lam)
                total += mult * partdom.specht_dim(lam)
                report.add(f"alpha={alpha} lambda={lam}", (mult > 0) == partdom.sign_survives(alpha, lam),
                           f"multiplicity {mult}")
            expected = math.factorial(n) // math.prod(math.factorial(a) for a in alpha)
            report.add(f"induced dimension alpha={alpha}", total == expected, f"{total} vs {expected}")


def suite_knr(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    for n in range(1, max_n + 1):
        count, bad = 0, None
        for tup in partdom.admissible_kNr_tuples(n):
            for lam in numtheory.partitions(n):
                count += 1
                if not partdom.check_kNr_implication(n, *tup, lam) and bad is None:
                    bad = (tup, lam)
        report.add(f"kN+r implication n={n} ({count} cases)", bad is None, bad)


def suite_window(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    bad, count = None, 0
    for c in range(cases):
        k = multiseg.SlopeK.of(SLOPES[c % len(SLOPES)])
        b = tuple(rng.randint(0, max_n) for _ in range(k.n0))
        for ell in range(1, k.floor + 1):
            count += 1
            g, best = multiseg.find_good_cyclic_shift(b, ell, k)
            w = ell * k.N0
            windows = [sum(b[(g2 + d) % k.n0] for d in range(min(w, k.n0))) for g2 in range(k.n0)]
            ok = Fraction(best) >= Fraction(sum(b) * ell * k.N0, k.n0) and best == max(windows) \
                and g == windows.index(best)
            if not ok and bad is None:
                bad = (b, ell, str(k))
    report.add(f"averaging window bound ({count} cases)", bad is None, bad)


def suite_identity(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    bad = [n for n in range(1, max_n + 1) if not numtheory.verify_weighted_id2_j2_j3(n)]
    report.add(f"(Id2 J1) * J2 = J3 for N <= {max_n}", not bad, bad[:5])
    # the unweighted reading is false; record where it first breaks
    first = numtheory.first_id2_j2_j3_counterexample(max_n)
    report.add("unweighted Id2 * J2 = J3 first fails at N = 3", first == (3 if max_n >= 3 else None), first)
    for n in range(1, min(max_n, 24) + 1):
        report.add(f"orbit counts N={n} k=3", numtheory.orbit_count_matches_totient(n, 3))


def suite_certificate(max_n: int, rng: random.Random, cases: int, report: RunReport) -> None:
    bad, count = None, 0
    for c in range(cases):
        k = multiseg.SlopeK.of(SLOPES[c % len(SLOPES)])
        delta = multiseg.random_multisegment(rng, k, max_n, narrow=True)
        n = multiseg.size(delta)
        for m in range(1, n * k.N0 // k.n0 + 1):
            for j in range(1, k.floor + 1):
                count += 1
                cert = multiseg.certificate_e_mj(delta, m, j)
                ok = cert.verdict == "valid" and multiseg.replay_certificate(cert)
                if not ok and bad is None:
                    bad = (delta.to_json(), m, j, cert.failing_fact)
    report.add(f"certificates ({count} cases)", bad is None, bad)


SUITES = {
    "coset": suite_coset,
    "hecke": suite_hecke,
    "dominance": suite_dominance,
    "knr": suite_knr,
    "window": suite_window,
    "identity": suite_identity,
    "certificate": suite_certificate,
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0, cases: int | None = None) -> RunReport:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    max_n = DEFAULTS[name]["max_n"] if max_n is None else max_n
    cases = DEFAULTS[name]["cases"] if cases is None else cases
    if max_n < 1 or max_n > CAPS[name]:
        raise InputError(f"--max-n for suite {name} must be in [1, {CAPS[name]}], got {max_n}")
    if cases < 0:
        raise InputError("--cases must be nonnegative")
    report = RunReport("verify", {"suite": name, "max_n": max_n, "seed": seed, "cases": cases})
    start = time.perf_counter()
    SUITES[name](max_n, random.Random(seed), cases, report)
    report.wall_time = time.perf_counter() - start
    return report
