"""Pure-Python versions of the hot loops; the reference the compiled core is tested against."""

from __future__ import annotations

import math


def gcd_histogram(n: int, k: int) -> list[int]:
    hist = [0] * (n + 1)
    if k == 0:
        hist[n] = 1
        return hist
    gcd = math.gcd

    def rec(level: int, g: int) -> None:
        if level == k - 1:
            for x in range(n):
                hist[gcd(g, x)] += 1
        else:
            for x in range(n):
                rec(level + 1, gcd(g, x))

    rec(0, n)
    return hist


def _add_into(target: dict, key: int, poly: dict, scale: int = 1, shift: int = 0) -> None:
    slot = target.setdefault(key, {})
    for e, c in poly.items():
        e2 = e + shift
        v = slot.get(e2, 0) + scale * c
        if v:
            slot[e2] = v
        else:
            slot.pop(e2, None)
    if not slot:
        del target[key]


def _right_mult_generator(table, elem: dict, i: int) -> dict:
    out: dict = {}
    right, longer = table.right, table.longer
    for w, poly in elem.items():
        ws = right[w][i - 1]
        if longer[w][i - 1]:
            _add_into(out, ws, poly)
        else:
            # T_w T_i = (t - t^-1) T_w + T_{w s_i} when w s_i is shorter
            _add_into(out, w, poly, 1, 1)
            _add_into(out, w, poly, -1, -1)
            _add_into(out, ws, poly)
    return out


def needed_nodes(table, support) -> list[bool]:
    """Mark every node of the traversal tree lying above some index in ``support``."""
    needed = [False] * len(table)
    for v in support:
        while v != -1 and not needed[v]:
            needed[v] = True
            v = table.parent[v]
    return needed


def hecke_product(table, x: dict, y: dict) -> dict:
    """Product of Hecke elements with Laurent-polynomial coefficients.

    ``x`` and ``y`` map permutation indices of ``table`` to ``{exponent: coeff}``.
    Computes sum over v of y_v * (x · T_v), building x · T_v along the
    traversal tree one generator at a time.
    """
    needed = needed_nodes(table, y.keys())
    stack: list = [None] * (table.max_length + 1)
    result: dict = {}
    for v in table.order:
        if not needed[v]:
            continue
        d = table.depth[v]
        if d == 0:
            cur = x
        else:
            cur = _right_mult_generator(table, stack[d - 1], table.gen[v])
        stack[d] = cur
        yv = y.get(v)
        if yv:
            for w, poly in cur.items():
                for f, c in yv.items():
                    _add_into(result, w, poly, c, f)
    return result
