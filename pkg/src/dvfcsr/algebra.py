"""Exact arithmetic in the carry ring Z[pi, beta].

The ground structure is parameterized by a prime p, a carry depth d >= 1
and a monic integer polynomial P of degree n >= 1 whose reduction mod p is
primitive over F_p. The ring is

    Z[pi, beta],   pi^d = p,   P(beta) = 0,

a free Z-module with basis {pi^k * beta^j : 0 <= k < d, 0 <= j < n}.

Representation conventions:

- RingElement.coords is a d x n grid of plain ints; coords[k][j] is the
  coefficient of pi^k * beta^j. Coefficients are NOT reduced mod p.
- BetaPoly.coords is an n-tuple, an element of Z[beta] (the pi^0 slice).
- ZPiElement.coords is a d-tuple, an element of Z[pi].
- The flattened basis orders pi^k * beta^j at index j*d + k (j-major), so
  for d = n = 2 the order is 1, pi, beta, pi*beta. Matrices returned by
  mult_matrix_Q use this indexing for both rows and columns.
- All matrices are nested tuples, row-major.

Everything here is pure and exact; values are immutable and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegreeZeroError,
    NonSquareMatrixError,
    NotPrimeError,
    NotPrimitivePolynomialError,
)
from .ntheory import factorize, is_prime

IntGrid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GroundParams:
    """Ground structure (p, d, P). Build via make_ground_params only.

    beta_powers[t] holds the coordinates of beta^(n+t) reduced to the basis
    1, beta, ..., beta^(n-1) over Z, for t = 0 .. n-2. These rows are what
    products of two basis elements need.
    """

    p: int
    d: int
    n: int
    poly: tuple[int, ...]
    beta_powers: IntGrid

    @property
    def size(self) -> int:
        """Rank n*d of the ring as a Z-module."""
        return self.n * self.d

    def flat_index(self, k: int, j: int) -> int:
        """Index of pi^k * beta^j in the flattened basis."""
        if not (0 <= k < self.d and 0 <= j < self.n):
            raise IndexError(f"basis index (k={k}, j={j}) out of range for d={self.d}, n={self.n}")
        return j * self.d + k


@dataclass(frozen=True)
class RingElement:
    """Element of Z[pi, beta]; coords[k][j] multiplies pi^k * beta^j."""

    coords: IntGrid


@dataclass(frozen=True)
class BetaPoly:
    """Element of Z[beta]; coords[j] multiplies beta^j."""

    coords: tuple[int, ...]


@dataclass(frozen=True)
class ZPiElement:
    """Element of Z[pi]; coords[k] multiplies pi^k."""

    coords: tuple[int, ...]


# ---------------------------------------------------------------------------
# ground construction


def _poly_mul_mod(a: list[int], b: list[int], pbar: Sequence[int], p: int) -> list[int]:
    # product in F_p[X] reduced by the monic polynomial pbar
    n = len(pbar) - 1
    acc = [0] * (2 * n - 1 if n > 1 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                acc[i + j] = (acc[i + j] + ai * bj) % p
    for deg in range(len(acc) - 1, n - 1, -1):
        v = acc[deg]
        if v:
            acc[deg] = 0
            for j in range(n):
                acc[deg - n + j] = (acc[deg - n + j] - v * pbar[j]) % p
    return [c % p for c in acc[:n]]


def _x_power_mod(e: int, pbar: Sequence[int], p: int) -> list[int]:
    # X^e in F_p[X]/(pbar), square and multiply
    n = len(pbar) - 1
    x = [0] * n
    if n == 1:
        x[0] = (-pbar[0]) % p
    else:
        x[1] = 1
    result = [1] + [0] * (n - 1)
    base = x
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, pbar, p)
        base = _poly_mul_mod(base, base, pbar, p)
        e >>= 1
    return result


def make_ground_params(p: int, d: int, poly: Sequence[int]) -> GroundParams:
    """Validate (p, d, P) and precompute the beta reduction rows.

    poly lists the coefficients of a monic integer lift of P, lowest degree
    first, length n+1. The reduction of P mod p must be primitive over F_p:
    X must have multiplicative order p^n - 1 in F_p[X]/(P mod p). That
    order forces the quotient to be a field, so irreducibility is implied.

    Raises NotPrimeError, DegreeZeroError, NotPrimitivePolynomialError, or
    FactorizationBudgetError (when p^n - 1 resists the trial budget).
    """
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")
    if d < 1:
        raise ValueError(f"carry depth d must be >= 1, got {d}")
    coeffs = tuple(int(c) for c in poly)
    if len(coeffs) < 2:
        raise DegreeZeroError(f"defining polynomial needs degree >= 1, got coefficients {coeffs}")
    n = len(coeffs) - 1
    if coeffs[n] != 1:
        raise ValueError(f"defining polynomial must be monic over Z, leading coefficient {coeffs[n]}")

    pbar = tuple(c % p for c in coeffs)
    e = p**n - 1
    one = [1] + [0] * (n - 1)
    if _x_power_mod(e, pbar, p) != one:
        raise NotPrimitivePolynomialError(f"X^({p}^{n}-1) != 1 mod (p, P): polynomial {coeffs} is not primitive")
    for prime in factorize(e):
        if _x_power_mod(e // prime, pbar, p) == one:
            raise NotPrimitivePolynomialError(
                f"X has order dividing {e}//{prime} mod (p, P): polynomial {coeffs} is not primitive"
            )

    beta_rows: list[tuple[int, ...]] = []
    if n >= 2:
        base = [-coeffs[j] for j in range(n)]
        beta_rows.append(tuple(base))
        cur = base
        for _ in range(n - 2):
            nxt = [0] * n
            for j in range(n - 1):
                nxt[j + 1] = cur[j]
            top = cur[n - 1]
            if top:
                for j in range(n):
                    nxt[j] += top * base[j]
            beta_rows.append(tuple(nxt))
            cur = nxt
    return GroundParams(p=p, d=d, n=n, poly=coeffs, beta_powers=tuple(beta_rows))


# ---------------------------------------------------------------------------
# element constructors and linear operations


def _as_grid(rows: Sequence[Sequence[int]], d: int, n: int, what: str) -> IntGrid:
    grid = tuple(tuple(int(v) for v in row) for row in rows)
    if len(grid) != d or any(len(row) != n for row in grid):
        raise ValueError(f"{what} must be a {d} x {n} grid, got shape {[len(r) for r in grid]}")
    return grid


def ring_element(g: GroundParams, rows: Sequence[Sequence[int]]) -> RingElement:
    """Build a RingElement from a d x n coordinate grid, validating shape."""
    return RingElement(_as_grid(rows, g.d, g.n, "ring element coordinates"))


def ring_zero(g: GroundParams) -> RingElement:
    return RingElement(tuple((0,) * g.n for _ in range(g.d)))


def ring_one(g: GroundParams) -> RingElement:
    return ring_basis(g, 0, 0)


def ring_basis(g: GroundParams, k: int, j: int) -> RingElement:
    """The basis element pi^k * beta^j."""
    g.flat_index(k, j)  # range check
    return RingElement(
        tuple(tuple(1 if (kk == k and jj == j) else 0 for jj in range(g.n)) for kk in range(g.d))
    )


def embed_beta(b: BetaPoly, g: GroundParams) -> RingElement:
    """Include Z[beta] into Z[pi, beta] at the pi^0 slice."""
    if len(b.coords) != g.n:
        raise ValueError(f"beta polynomial has {len(b.coords)} coordinates, ground expects {g.n}")
    rows = [tuple(b.coords)]
    rows.extend((0,) * g.n for _ in range(g.d - 1))
    return RingElement(tuple(rows))


def add_ring(a: RingElement, b: RingElement) -> RingElement:
    return RingElement(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.coords, b.coords)))


def sub_ring(a: RingElement, b: RingElement) -> RingElement:
    return RingElement(tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.coords, b.coords)))


def neg_ring(a: RingElement) -> RingElement:
    return RingElement(tuple(tuple(-x for x in row) for row in a.coords))


def mod_p(a: RingElement, g: GroundParams) -> RingElement:
    """Reduce every coordinate to its least nonnegative residue mod p."""
    return RingElement(tuple(tuple(x % g.p for x in row) for row in a.coords))


# ---------------------------------------------------------------------------
# products


def mul_beta(a: BetaPoly, b: BetaPoly, g: GroundParams) -> BetaPoly:
    """Product in Z[beta], reduced to degree < n via the beta_powers rows."""
    n = g.n
    if len(a.coords) != n or len(b.coords) != n:
        raise ValueError("beta polynomial length does not match the ground parameters")
    acc = [0] * (2 * n - 1)
    for i, ai in enumerate(a.coords):
        if ai:
            for j, bj in enumerate(b.coords):
                acc[i + j] += ai * bj
    out = list(acc[:n])
    for deg in range(n, 2 * n - 1):
        v = acc[deg]
        if v:
            row = g.beta_powers[deg - n]
            for j in range(n):
                out[j] += v * row[j]
    return BetaPoly(tuple(out))


def mul_ring(a: RingElement, b: RingElement, g: GroundParams) -> RingElement:
    """Product in Z[pi, beta]: convolve, fold pi^d = p, fold beta via P."""
    d, n, p = g.d, g.n, g.p
    _as_grid(a.coords, d, n, "left factor")
    _as_grid(b.coords, d, n, "right factor")
    wide = 2 * n - 1
    acc = [[0] * wide for _ in range(2 * d - 1)]
    for k1 in range(d):
        for j1 in range(n):
            c1 = a.coords[k1][j1]
            if c1 == 0:
                continue
            for k2 in range(d):
                row = b.coords[k2]
                for j2 in range(n):
                    c2 = row[j2]
                    if c2:
                        acc[k1 + k2][j1 + j2] += c1 * c2
    # pi^(d+t) = p * pi^t
    for k in range(d, 2 * d - 1):
        for j in range(wide):
            v = acc[k][j]
            if v:
                acc[k - d][j] += p * v
    out = [[acc[k][j] for j in range(n)] for k in range(d)]
    for deg in range(n, wide):
        row = g.beta_powers[deg - n]
        for k in range(d):
            v = acc[k][deg]
            if v:
                for j in range(n):
                    out[k][j] += v * row[j]
    return RingElement(tuple(tuple(r) for r in out))


def zpi_add(x: ZPiElement, y: ZPiElement) -> ZPiElement:
    return ZPiElement(tuple(a + b for a, b in zip(x.coords, y.coords)))


def zpi_sub(x: ZPiElement, y: ZPiElement) -> ZPiElement:
    return ZPiElement(tuple(a - b for a, b in zip(x.coords, y.coords)))


def zpi_neg(x: ZPiElement) -> ZPiElement:
    return ZPiElement(tuple(-a for a in x.coords))


def zpi_mul(x: ZPiElement, y: ZPiElement, g: GroundParams) -> ZPiElement:
    """Product in Z[pi] with pi^d = p."""
    d, p = g.d, g.p
    acc = [0] * (2 * d - 1)
    for i, xi in enumerate(x.coords):
        if xi:
            for j, yj in enumerate(y.coords):
                acc[i + j] += xi * yj
    out = list(acc[:d])
    for k in range(d, 2 * d - 1):
        out[k - d] += p * acc[k]
    return ZPiElement(tuple(out))


# ---------------------------------------------------------------------------
# multiplication matrices, determinants, norms


def mult_matrix_Q(a: RingElement, g: GroundParams) -> IntGrid:
    """Matrix of y -> a*y on the flattened basis, over Z. Shape nd x nd.

    Column flat_index(k, j) holds the coordinates of a * pi^k * beta^j.
    """
    size = g.size
    cols: list[list[int] | None] = [None] * size
    for j in range(g.n):
        for k in range(g.d):
            prod = mul_ring(a, ring_basis(g, k, j), g)
            cols[g.flat_index(k, j)] = [prod.coords[kk][jj] for jj in range(g.n) for kk in range(g.d)]
    return tuple(tuple(cols[c][r] for c in range(size)) for r in range(size))


def mult_matrix_Zpi(a: RingElement, g: GroundParams) -> tuple[tuple[ZPiElement, ...], ...]:
    """Matrix of y -> a*y on the basis 1, beta, ..., beta^(n-1) over Z[pi]."""
    cols: list[list[ZPiElement]] = []
    for j in range(g.n):
        prod = mul_ring(a, ring_basis(g, 0, j), g)
        cols.append([ZPiElement(tuple(prod.coords[k][jj] for k in range(g.d))) for jj in range(g.n)])
    return tuple(tuple(cols[c][r] for c in range(g.n)) for r in range(g.n))


def _check_square(m: Sequence[Sequence], what: str) -> int:
    size = len(m)
    if any(len(row) != size for row in m):
        raise NonSquareMatrixError(f"{what} requires a square matrix, got row lengths {[len(r) for r in m]}")
    return size


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant, fraction-free (Bareiss) with row pivoting."""
    size = _check_square(m, "det_int")
    if size == 0:
        return 1
    rows = [[int(v) for v in row] for row in m]
    sign = 1
    prev = 1
    for i in range(size - 1):
        piv = next((r for r in range(i, size) if rows[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            rows[i], rows[piv] = rows[piv], rows[i]
            sign = -sign
        pivot = rows[i][i]
        for r in range(i + 1, size):
            head = rows[r][i]
            rows[r][i] = 0
            for c in range(i + 1, size):
                rows[r][c] = (rows[r][c] * pivot - head * rows[i][c]) // prev
        prev = pivot
    return sign * rows[size - 1][size - 1]


def det_Zpi(m: Sequence[Sequence[ZPiElement]], g: GroundParams) -> ZPiElement:
    """Determinant over Z[pi] by cofactor expansion along the first row."""
    size = _check_square(m, "det_Zpi")
    if size == 0:
        return ZPiElement((1,) + (0,) * (g.d - 1))
    if size == 1:
        return m[0][0]
    total = ZPiElement((0,) * g.d)
    for c in range(size):
        lead = m[0][c]
        if all(v == 0 for v in lead.coords):
            continue
        minor = tuple(tuple(row[cc] for cc in range(size) if cc != c) for row in m[1:])
        term = zpi_mul(lead, det_Zpi(minor, g), g)
        total = zpi_add(total, term) if c % 2 == 0 else zpi_sub(total, term)
    return total


def norm_Zpi_to_Z(x: ZPiElement, g: GroundParams) -> int:
    """Field norm from Q(pi) down to Q, restricted to Z[pi].

    Computed as the determinant of multiplication by x on the basis
    1, pi, ..., pi^(d-1): entry (i, j) is x[i-j] for i >= j and
    p * x[d+i-j] above the diagonal.
    """
    d, p = g.d, g.p
    if len(x.coords) != d:
        raise ValueError(f"Z[pi] element has {len(x.coords)} coordinates, ground expects {d}")
    m = tuple(
        tuple(x.coords[i - j] if i >= j else p * x.coords[d + i - j] for j in range(d))
        for i in range(d)
    )
    return det_int(m)
