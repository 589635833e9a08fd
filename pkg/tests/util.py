"""Shared test helpers: independent oracles and random-instance generators.

Oracles here deliberately avoid the library's own code paths (Fraction
Gaussian elimination for determinants, direct powering for orders, a plain
integer simulator for the n=1, d=1 degenerate register) so that agreement
is evidence rather than tautology.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from importlib import resources
from math import gcd

import dvfcsr as dv

# test_acceptance appends one "PASS ..."/"FAIL ..." line per criterion here;
# conftest prints them in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def load_register(name: str):
    """Bundled register fixture pair (spec, state) by basename."""
    pkg = resources.files("dvfcsr") / "fixtures"
    spec = dv.spec_from_dict(json.loads((pkg / f"{name}_spec.json").read_text()))
    state = dv.state_from_dict(
        json.loads((pkg / f"{name}_state.json").read_text()), spec
    )
    return spec, state


def det_fraction(rows) -> int:
    """Determinant over Q by Gaussian elimination; exact for integer input."""
    m = [[Fraction(v) for v in row] for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)


def brute_order(base: int, modulus: int) -> int:
    """Multiplicative order by direct iteration. O(order) but honest."""
    assert gcd(base, modulus) == 1 and modulus >= 2
    acc = base % modulus
    k = 1
    while acc != 1:
        acc = acc * base % modulus
        k += 1
    return k


def poly_pow_mod(p: int, poly, exponent: int):
    """X^exponent mod (p, poly) with poly monic; returns coefficient tuple."""
    n = len(poly) - 1
    red = [(-c) % p for c in poly[:n]]

    def mul(a, b):
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for deg in range(2 * n - 2, n - 1, -1):
            lead = prod[deg]
            if lead:
                prod[deg] = 0
                for j in range(n):
                    prod[deg - n + j] = (prod[deg - n + j] + lead * red[j]) % p
        return prod[:n]

    result = [1] + [0] * (n - 1)
    # X itself, already reduced when n == 1.
    square = [0, 1] + [0] * (n - 2) if n > 1 else [(-poly[0]) % p]
    e = exponent
    while e:
        if e & 1:
            result = mul(result, square)
        square = mul(square, square)
        e >>= 1
    return tuple(result)


def scalar_fcsr(p: int, qs, cells, memory: int, ticks: int):
    """Independent feedback-with-carry simulator over plain integers.

    Returns (outputs, memory_trace, final_cells, final_memory) where
    outputs lists the initial cells followed by each computed cell and
    memory_trace lists the memory value before any tick and after each.
    """
    cells = list(cells)
    outputs = list(cells)
    memory_trace = [memory]
    for _ in range(ticks):
        sigma = sum(q * a for q, a in zip(qs, reversed(cells))) + memory
        out = sigma % p
        memory = (sigma - out) // p
        cells.pop(0)
        cells.append(out)
        outputs.append(out)
        memory_trace.append(memory)
    return outputs, memory_trace, cells, memory


def find_primitive_poly(p: int, n: int, rng: random.Random):
    """Random monic degree-n integer polynomial accepted by the ground builder."""
    for _ in range(4000):
        coeffs = tuple(rng.randrange(-p, p) for _ in range(n)) + (1,)
        try:
            dv.make_ground_params(p, 1, coeffs)
        except dv.NotPrimitivePolynomialError:
            continue
        return coeffs
    raise AssertionError(f"no primitive polynomial found for p={p}, n={n}")


_GROUND_CACHE: dict[tuple[int, int, int], object] = {}


def ground(p: int, d: int, n: int, rng: random.Random | None = None):
    """Cached ground parameters with a known-primitive defining polynomial."""
    key = (p, d, n)
    if key not in _GROUND_CACHE:
        fixed = {
            (2, 1): (-1, 1),
            (2, 2): (-1, -1, 1),
            (2, 3): (1, 1, 0, 1),
            (3, 1): (-2, 1),
            (3, 2): (-1, -1, 1),
            (3, 3): (-2, -2, -1, 1),
            (5, 1): (-2, 1),
            (5, 2): (-3, -1, 1),
            (5, 3): (-3, -4, -1, 1),
            (7, 1): (-3, 1),
            (11, 1): (-2, 1),
        }
        if (p, n) in fixed:
            poly = fixed[(p, n)]
        else:
            poly = find_primitive_poly(p, n, rng or random.Random(0xA5))
        _GROUND_CACHE[key] = dv.make_ground_params(p, d, poly)
    return _GROUND_CACHE[key]


def random_spec(g, rng: random.Random, max_r: int = 6):
    """Register with canonical coefficient digits in [0, p)."""
    r = rng.randrange(1, max_r + 1)
    rows = [[rng.randrange(g.p) for _ in range(g.n)] for _ in range(r)]
    return dv.register_spec(g, rows)


def random_state(spec, rng: random.Random, memory_span: int = 4):
    g = spec.ground
    cells = [[rng.randrange(g.p) for _ in range(g.n)] for _ in range(spec.r)]
    memory = [
        [rng.randrange(-memory_span, memory_span + 1) for _ in range(g.n)]
        for _ in range(g.d)
    ]
    return dv.register_state(spec, cells, memory)
