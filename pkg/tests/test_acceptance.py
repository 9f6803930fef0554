"""The twelve acceptance criteria, each at its stated tolerance and time limit.

Every test records one PASS/FAIL line, shown in the terminal summary.
"""

import json
import math
import random
import time

import pytest

from skeindim import hecke, lattice, multiseg, numtheory, partdom
from skeindim.cli import main
from skeindim.perm import Permutation

GL = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297]
SL_T2 = [5, 11, 23, 31, 60, 63, 109, 126, 183, 176, 330, 269, 420, 496, 645, 585]
SL_T3 = [9, 29, 75, 131, 266, 357, 617, 810, 1207, 1386, 2272, 2297, 3318, 3954, 5145, 5209, 7745, 7348]
SLOPES = ["1", "2", "3", "3/2", "5/2", "7/3"]


class LiteralIdentityFails(AssertionError):
    pass


def dims(capsys, group, target, max_n):
    assert main(["dims", "--group", group, "--target", target, "--max-n", str(max_n)]) == 0
    rows = capsys.readouterr().out.strip().splitlines()[1:]
    return [int(r.split(",")[1]) for r in rows]


def test_01_gl_sequences(capsys, report_criterion):
    start = time.perf_counter()
    ok = dims(capsys, "gl", "t2", 17) == GL and dims(capsys, "gl", "t3", 17) == GL
    elapsed = time.perf_counter() - start
    report_criterion(1, ok and elapsed < 1, elapsed, 1, "GL T2 and T3, N = 1..17")
    assert ok and elapsed < 1


def test_02_sl_t2_sequence(capsys, report_criterion):
    start = time.perf_counter()
    ok = dims(capsys, "sl", "t2", 17) == SL_T2
    elapsed = time.perf_counter() - start
    report_criterion(2, ok and elapsed < 1, elapsed, 1, "SL T2, N = 2..17")
    assert ok and elapsed < 1


def test_03_sl_t3_sequence(capsys, report_criterion):
    start = time.perf_counter()
    ok = dims(capsys, "sl", "t3", 19) == SL_T3
    elapsed = time.perf_counter() - start
    report_criterion(3, ok and elapsed < 1, elapsed, 1, "SL T3, N = 2..19")
    assert ok and elapsed < 1


def test_04_three_routes(report_criterion):
    start = time.perf_counter()
    bad = []
    for group in ("GL", "SL"):
        for n in range(1, 21):
            spec = lattice.LatticeSpec(group, n)
            orders = [lattice.coset_structure(spec, Permutation.from_cycle_type(lam)).torsion_order
                      for lam in numtheory.partitions(n)]
            for k in (2, 3):
                routes = numtheory.dimension_routes(group, k, n)
                routes["class_snf"] = sum(g**k for g in orders)
                if len(routes) != 4 or len(set(routes.values())) != 1:
                    bad.append((group, k, n, routes))
    elapsed = time.perf_counter() - start
    ok = not bad
    report_criterion(4, ok and elapsed < 30, elapsed, 30, "convolution, gcd sum, vector sum, per-class SNF; N <= 20")
    assert ok, bad[:3]
    assert elapsed < 30


def test_05_coset_structure(report_criterion):
    start = time.perf_counter()
    bad = []
    for n in range(1, 10):
        for lam in numtheory.partitions(n):
            sigma = Permutation.from_cycle_type(lam)
            g = math.gcd(*lam)
            sl = lattice.coset_structure(lattice.LatticeSpec("SL", n), sigma)
            gl = lattice.coset_structure(lattice.LatticeSpec("GL", n), sigma)
            if not (sl.torsion_order == g and sl.is_cyclic and sl.generator_degree == (n // g) % n
                    and gl.torsion_order == 1):
                bad.append(lam)
            if n <= 5:
                for group, expected in (("SL", g), ("GL", 1)):
                    if lattice.brute_coset_count(lattice.LatticeSpec(group, n), sigma) != expected:
                        bad.append((group, lam))
    elapsed = time.perf_counter() - start
    ok = not bad
    report_criterion(5, ok and elapsed < 10, elapsed, 10, "SNF torsion vs gcd(cycle type), brute oracle N <= 5")
    assert ok, bad
    assert elapsed < 10


@pytest.mark.xfail(raises=LiteralIdentityFails, strict=True,
                   reason="Id2 * J2 = J3 is false from N = 3 (17 vs 26); (Id2 J1) * J2 = J3 holds instead")
def test_06_identity(report_criterion):
    start = time.perf_counter()
    orbits = all(numtheory.orbit_count_matches_totient(n, 3) for n in range(1, 25))
    weighted = all(numtheory.verify_weighted_id2_j2_j3(n) for n in range(1, 501))
    literal_bad = [n for n in range(1, 501) if not numtheory.verify_id2_j2_j3(n)]
    elapsed = time.perf_counter() - start
    detail = (f"orbit counts N <= 24: {'ok' if orbits else 'BAD'}; "
              f"(Id2 J1) * J2 = J3 N <= 500: {'ok' if weighted else 'BAD'}; "
              f"literal Id2 * J2 = J3 fails at {len(literal_bad)} of 500 values, first N = {literal_bad[:1]}")
    report_criterion(6, orbits and weighted and not literal_bad and elapsed < 10, elapsed, 10, detail)
    assert orbits and weighted and elapsed < 10
    if literal_bad:
        raise LiteralIdentityFails(detail)


def test_07_hecke_identities(report_criterion):
    start = time.perf_counter()
    bad, count = [], 0
    for n in range(1, 6):
        for m in range(n + 1):
            for alpha in partdom.compositions(m):
                rep = hecke.verify_idempotent_identities(alpha, n, strict=False)
                count += len(rep.checks)
                bad += [(alpha, n, c) for c, ok in rep.checks if not ok]
    elapsed = time.perf_counter() - start
    ok = not bad
    report_criterion(7, ok and elapsed < 60, elapsed, 60, f"{count} exact identities, n <= 5")
    assert ok, bad[:3]
    assert elapsed < 60


def test_08_dominance_oracle(report_criterion):
    start = time.perf_counter()
    bad, count = [], 0
    for n in range(1, 8):
        for alpha in partdom.compositions(n):
            total = 0
            for lam in numtheory.partitions(n):
                mult = partdom.mn_multiplicity_oracle(alpha, lam)
                total += mult * partdom.specht_dim(lam)
                count += 1
                if (mult > 0) != partdom.sign_survives(alpha, lam):
                    bad.append((alpha, lam))
            if total != math.factorial(n) // math.prod(math.factorial(a) for a in alpha):
                bad.append((alpha, "dimension"))
    elapsed = time.perf_counter() - start
    ok = not bad
    report_criterion(8, ok and elapsed < 60, elapsed, 60, f"{count} (alpha, lambda) pairs, n <= 7")
    assert ok, bad[:3]
    assert elapsed < 60


def test_09_knr(report_criterion):
    start = time.perf_counter()
    bad, count = [], 0
    for n in range(1, 9):
        for tup in partdom.admissible_kNr_tuples(n):
            for lam in numtheory.partitions(n):
                count += 1
                if not partdom.check_kNr_implication(n, *tup, lam):
                    bad.append((n, tup, lam))
    elapsed = time.perf_counter() - start
    ok = not bad
    report_criterion(9, ok and elapsed < 60, elapsed, 60, f"{count} admissible cases, n <= 8")
    assert ok, bad[:3]
    assert elapsed < 60


def test_10_averaging_window(report_criterion):
    from fractions import Fraction

    start = time.perf_counter()
    rng = random.Random(0)
    bad = []
    for c in range(1000):
        k = multiseg.SlopeK.of(SLOPES[c % len(SLOPES)])
        delta = multiseg.random_multisegment(rng, k, 12, narrow=True, lines=("L",))
        seq = multiseg.start_area_sequence(delta)
        for ell in range(1, k.floor + 1):
            g, best = multiseg.find_good_cyclic_shift(seq, ell, k)
            if Fraction(best) < Fraction(seq.total * ell * k.N0, k.n0):
                bad.append((seq.b, ell, str(k)))
    elapsed = time.perf_counter() - start
    ok = not bad
    report_criterion(10, ok and elapsed < 5, elapsed, 5, "1000 random start-area sequences")
    assert ok, bad[:3]
    assert elapsed < 5


def test_11_certificates(report_criterion):
    start = time.perf_counter()
    rng = random.Random(0)
    bad, count = [], 0
    for c in range(500):
        k = multiseg.SlopeK.of(SLOPES[c % len(SLOPES)])
        delta = multiseg.random_multisegment(rng, k, 12, narrow=True)
        assert multiseg.is_right_ordered(delta) and multiseg.is_s_narrow(delta, k)
        n = multiseg.size(delta)
        for m in range(1, n * k.N0 // k.n0 + 1):
            for j in range(1, k.floor + 1):
                count += 1
                cert = multiseg.certificate_e_mj(delta, m, j)
                text = json.dumps(cert.to_json(), sort_keys=True)
                again = multiseg.SurvivalCertificate.from_json(json.loads(text))
                if cert.verdict != "valid" or not multiseg.replay_certificate(again) \
                        or json.dumps(again.to_json(), sort_keys=True) != text:
                    bad.append((delta.to_json(), m, j, cert.failing_fact))
    rect = multiseg.Multisegment.build(2, [("L", 0, 2), ("L", 1, 2)])
    try:
        multiseg.certificate_e_mj(rect, 4, 1)
        rejected = False
    except multiseg.InputError:
        rejected = True
    elapsed = time.perf_counter() - start
    ok = not bad and rejected
    report_criterion(11, ok and elapsed < 60, elapsed, 60,
                     f"{count} certificates from 500 inputs; k=2, n=4, m=4 rejected: {rejected}")
    assert ok, bad[:3]
    assert elapsed < 60


def test_12_cube(capsys, report_criterion):
    start = time.perf_counter()
    assert main(["cube", "--group", "sl", "--n", "2", "--dim-k", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    values = data["values"]
    ok = values[0][0][0] == 2 and sorted(x for a in values for b in a for x in b) == [1] * 7 + [2] \
        and data["total"] == 9
    elapsed = time.perf_counter() - start
    report_criterion(12, ok and elapsed < 1, elapsed, 1, "SL, N = 2, k = 3: 2 at origin, 1 elsewhere, total 9")
    assert ok and elapsed < 1
