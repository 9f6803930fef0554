import random

import pytest

from skeindim import _fallback, hecke, kernels
from skeindim.perm import perm_table

needs_compiled = pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernels not built")


@needs_compiled
@pytest.mark.parametrize("n,k", [(1, 1), (7, 1), (12, 2), (12, 3), (30, 3), (5, 4)])
def test_gcd_histogram_backends_agree(n, k):
    assert kernels.gcd_histogram(n, k, "compiled") == kernels.gcd_histogram(n, k, "python")


def test_gcd_histogram_zero_dimensional():
    assert _fallback.gcd_histogram(5, 0) == [0, 0, 0, 0, 0, 1]


def _random_element(rng, table, terms):
    out = {}
    for _ in range(terms):
        w = rng.randrange(len(table))
        out.setdefault(w, {})[rng.randint(-3, 3)] = rng.randint(-5, 5) or 1
    return out


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hecke_product_backends_agree(n):
    rng = random.Random(n)
    table = perm_table(n)
    for _ in range(10):
        x = _random_element(rng, table, rng.randint(1, 8))
        y = _random_element(rng, table, rng.randint(1, 8))
        assert kernels.hecke_product(table, x, y, "compiled") == kernels.hecke_product(table, x, y, "python")


@needs_compiled
def test_idempotent_product_backends_agree():
    e = hecke.sign_idempotent((3, 2), 5)
    f = hecke.trivial_idempotent(5)
    assert hecke.multiply(e, f, backend="compiled") == hecke.multiply(e, f, backend="python")


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.gcd_histogram(3, 2, "gpu")


def test_large_coefficients_fall_back_to_python():
    table = perm_table(3)
    x = {0: {0: 2**40}}
    y = {1: {0: 2**40}}
    assert kernels.hecke_product(table, x, y) == _fallback.hecke_product(table, x, y)
