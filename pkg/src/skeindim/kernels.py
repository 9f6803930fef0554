"""Backend selection for the hot loops.

The compiled extension ``skeindim._kernels`` is used when it imports;
otherwise, or when ``SKEINDIM_PURE_PYTHON=1`` is set, the pure-Python
versions in ``skeindim._fallback`` are used.  ``BACKEND`` names the choice.
"""

from __future__ import annotations

import os

from . import _fallback

_compiled = None
if os.environ.get("SKEINDIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# int64 headroom for the dense Hecke kernel
_INT64_SAFE = 2**62


def compiled_available() -> bool:
    return _compiled is not None


def gcd_histogram(n: int, k: int, backend: str | None = None) -> list[int]:
    impl = _pick(backend)
    return impl.gcd_histogram(n, k)


def _pick(backend):
    if backend is None:
        return _compiled if _compiled is not None else _fallback
    if backend == "python":
        return _fallback
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")


def hecke_product(table, x: dict, y: dict, backend: str | None = None) -> dict:
    """Multiply Hecke elements given as ``{perm index: {exponent: coeff}}``."""
    if not x or not y:
        return {}
    impl = _pick(backend)
    if impl is _fallback:
        return _fallback.hecke_product(table, x, y)
    bound = sum(abs(c) for p in x.values() for c in p.values())
    bound *= sum(abs(c) for p in y.values() for c in p.values())
    bound *= 3 ** table.max_length
    if bound >= _INT64_SAFE:
        if backend == "compiled":
            raise OverflowError("coefficients may exceed int64 in the compiled kernel")
        return _fallback.hecke_product(table, x, y)
    return _dense_product(table, x, y)


_table_arrays: dict = {}


def _arrays_for(table):
    import numpy as np

    arrs = _table_arrays.get(table.n)
    if arrs is None:
        nperm = len(table)
        width = max(table.n - 1, 1)
        right = np.zeros((nperm, width), dtype=np.int32)
        longer = np.zeros((nperm, width), dtype=np.uint8)
        if table.n > 1:
            right[:, : table.n - 1] = np.array(table.right, dtype=np.int32).reshape(nperm, table.n - 1)
            longer[:, : table.n - 1] = np.array(table.longer, dtype=np.uint8).reshape(nperm, table.n - 1)
        arrs = (
            right,
            longer,
            np.array(table.order, dtype=np.int32),
            np.array(table.gen, dtype=np.int32),
            np.array(table.depth, dtype=np.int32),
        )
        _table_arrays[table.n] = arrs
    return arrs


def _to_dense(table, elem: dict):
    import numpy as np

    low = min(e for p in elem.values() for e in p)
    high = max(e for p in elem.values() for e in p)
    arr = np.zeros((len(table), high - low + 1), dtype=np.int64)
    for w, poly in elem.items():
        for e, c in poly.items():
            arr[w, e - low] = c
    return arr, low


def _dense_product(table, x: dict, y: dict) -> dict:
    import numpy as np

    right, longer, order, gen, depth = _arrays_for(table)
    xa, xlow = _to_dense(table, x)
    ya, ylow = _to_dense(table, y)
    needed = np.array(_fallback.needed_nodes(table, y.keys()), dtype=np.uint8)
    res = _compiled.hecke_product_dense(xa, ya, right, longer, order, gen, depth, needed, table.max_length)
    base = xlow + ylow - table.max_length
    out: dict = {}
    rows, cols = np.nonzero(res)
    for w, c in zip(rows.tolist(), cols.tolist()):
        out.setdefault(w, {})[base + c] = int(res[w, c])
    return out
