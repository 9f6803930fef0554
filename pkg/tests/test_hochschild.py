import random
from fractions import Fraction

import pytest

from skeindim import hochschild as hh
from skeindim.errors import InputError
from skeindim.numtheory import partitions, skein_dim
from skeindim.perm import Permutation


def test_twisted_dims():
    sl4 = hh.HochschildContext.of("SL", 4)
    assert hh.twisted_hh0_dim(sl4, Permutation.identity(4)) == 1
    assert hh.twisted_hh0_dim(sl4, Permutation.from_cycle_type((4,))) == 16
    assert hh.twisted_hh0_dim(sl4, Permutation.from_cycle_type((2, 2))) == 4
    assert hh.twisted_hh0_dim(sl4, Permutation.from_cycle_type((2, 2)), k=3) == 8
    assert hh.twisted_hh0_dim(sl4, Permutation.from_cycle_type((3, 1))) == 1
    gl4 = hh.HochschildContext.of("GL", 4)
    assert all(hh.twisted_hh0_dim(gl4, Permutation.from_cycle_type(l)) == 1 for l in partitions(4))
    with pytest.raises(InputError):
        hh.twisted_hh0_dim(sl4, Permutation.identity(3))


@pytest.mark.parametrize("group", ["GL", "SL"])
@pytest.mark.parametrize("k", [2, 3])
def test_class_sum_matches_formula(group, k):
    for n in range(1, 11):
        if group == "SL" and n == 1:
            continue
        assert hh.hh0_smash_dim(group, n, k) == skein_dim(group, f"T{k}", n)


def test_conjugation_invariance():
    rng = random.Random(3)
    for n in range(2, 7):
        ctx = hh.HochschildContext.of("SL", n)
        for lam in partitions(n):
            assert hh.check_conjugation_invariance(ctx, Permutation.from_cycle_type(lam), rng, 3)


def test_omega_is_antisymmetric():
    ctx = hh.HochschildContext.of("GL", 3)
    a = ((1, 0, 2), (0, 1, -1))
    b = ((2, 1, 0), (1, 1, 1))
    assert ctx.omega(a, b) == -ctx.omega(b, a)
    assert ctx.omega(a, a) == 0


def test_renormalization_exponent():
    ctx = hh.HochschildContext.of("GL", 2)
    sigma = Permutation((2, 1))
    # (1-σ) maps (1/2, -1/2) to (1, -1); ω((x, x), (u, u)) = 0
    a = ((1, -1), (1, -1))
    assert ctx.renormalization_exponent(sigma, a) == 0
    b = ((1, -1), (0, 0))
    assert ctx.renormalization_exponent(sigma, b) == Fraction(0)
    with pytest.raises(InputError):
        ctx.renormalization_exponent(sigma, ((1, 0), (0, 0)))


def test_surjectivity_witness_and_membership():
    ctx = hh.HochschildContext.of("GL", 3)
    sigma = Permutation((2, 1, 3))
    res = hh.surjectivity_witness(ctx, sigma, ((0, 0, 1), (0, 0, 0)))
    assert res.kind == "witness" and res.omega != 0
    res = hh.surjectivity_witness(ctx, sigma, ((1, -1, 0), (2, -2, 0)))
    assert res.kind == "membership"
    (cu, cv), basis = res.coordinates, res.basis
    assert tuple(sum(c * b[i] for c, b in zip(cu, basis)) for i in range(3)) == (1, -1, 0)
    assert tuple(sum(c * b[i] for c, b in zip(cv, basis)) for i in range(3)) == (2, -2, 0)


def test_graded_table_cube():
    table = hh.graded_table("SL", 2, 3)
    assert table.values.shape == (2, 2, 2)
    assert table.entry((0, 0, 0)) == 2
    assert sorted(int(x) for x in table.values.flat) == [1] * 7 + [2]
    assert table.total == 9


@pytest.mark.parametrize("group,n,k", [("SL", 3, 2), ("SL", 6, 3), ("SL", 12, 2), ("GL", 5, 2), ("GL", 4, 3)])
def test_graded_table_totals(group, n, k):
    table = hh.graded_table(group, n, k)
    assert table.total == skein_dim(group, f"T{k}", n)
    assert table.entry((0,) * k) == skein_dim("GL", "T2", n)


def test_graded_table_bounds():
    with pytest.raises(InputError):
        hh.graded_table("SL", 200, 3)
    with pytest.raises(InputError):
        hh.graded_table("SL", 4, 4)
