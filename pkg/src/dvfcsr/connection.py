"""Connection element analysis: q, the folded grid, matrices and norms.

A register with coefficients q_1, ..., q_r determines the connection
element

    q = -1 + sum_{i=1..r} q_i * pi^i   in Z[pi, beta].

Folding pi^d = p groups the coefficients by residue k = i mod d into the
d x n integer grid

    q~[k][j] = sum_{i : 1 <= d*i + k <= r} (q_{d*i+k})_j * p^i,

so q = -1 + sum_{k,j} q~[k][j] * pi^k * beta^j. Row k = 0 of the grid is
always divisible by p (its terms carry at least one factor p).

The analysis packages multiplication by -q in two forms: the nd x nd
integer matrix on the flattened basis and the n x n matrix over Z[pi].
Their determinants are N (over Z[pi]) and the integer N' = norm of N,
the modulus that controls every period of the register's output streams.
The signed N' is congruent to 1 mod p, so it is never zero and never
shares a factor with p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    GroundParams,
    IntGrid,
    RingElement,
    ZPiElement,
    det_int,
    det_Zpi,
    mult_matrix_Q,
    mult_matrix_Zpi,
    neg_ring,
)
from .errors import NotCongruentMinusOneError
from .register import RegisterSpec, register_spec


@dataclass(frozen=True)
class ConnectionAnalysis:
    """Connection element q with its matrices and norms (see module docstring)."""

    q: RingElement
    q_tilde: IntGrid
    mult_matrix_int: IntGrid
    mult_matrix_pi: tuple[tuple[ZPiElement, ...], ...]
    norm_pi: ZPiElement
    norm_signed: int

    @property
    def norm_abs(self) -> int:
        return abs(self.norm_signed)


def analyze(spec: RegisterSpec) -> ConnectionAnalysis:
    """Fold the coefficients of spec into q and compute matrices and norms."""
    g = spec.ground
    p, d, n, r = g.p, g.d, g.n, spec.r
    q_tilde = []
    for k in range(d):
        row = [0] * n
        i = 0
        while True:
            idx = d * i + k
            if idx > r:
                break
            if idx >= 1:
                coeff = spec.coeffs[idx - 1].coords
                w = p**i
                for j in range(n):
                    row[j] += coeff[j] * w
            i += 1
        q_tilde.append(tuple(row))
    grid = [list(row) for row in q_tilde]
    grid[0][0] -= 1
    q = RingElement(tuple(tuple(row) for row in grid))
    a = neg_ring(q)
    m_int = mult_matrix_Q(a, g)
    m_pi = mult_matrix_Zpi(a, g)
    norm_pi = det_Zpi(m_pi, g)
    norm_signed = det_int(m_int)
    return ConnectionAnalysis(
        q=q,
        q_tilde=tuple(q_tilde),
        mult_matrix_int=m_int,
        mult_matrix_pi=m_pi,
        norm_pi=norm_pi,
        norm_signed=norm_signed,
    )


def mult_matrix_Q_2_2(x: int, y: int, z: int, t: int) -> IntGrid:
    """Closed form of the 4 x 4 integer multiplication matrix for p = 2,
    d = n = 2, P = X^2 - X - 1, in terms of the folded grid

        q~ = [[x, z], [y, t]]   (so q = -1 + x + y*pi + z*beta + t*pi*beta).

    Equals mult_matrix_Q(-q) on the basis 1, pi, beta, pi*beta. The
    determinant is the integer norm N', an integral binary-quadratic-like
    form in (x, y, z, t) whose values are the moduli reachable by size-r
    registers over this ground.
    """
    return (
        (1 - x, -2 * y, -z, -2 * t),
        (-y, 1 - x, -t, -z),
        (-z, -2 * t, 1 - x - z, -2 * y - 2 * t),
        (-t, -z, -y - t, 1 - x - z),
    )


def spec_from_connection(g: GroundParams, q: RingElement) -> RegisterSpec:
    """Invert analyze: recover a register whose connection element is q.

    The grid q + 1 is expanded in signed base-p digits per slot; digit i of
    slot (k, j) (sign carried on the digit) becomes coordinate j of the
    coefficient q_{d*i+k}. The register size is the largest coefficient
    index that receives a nonzero digit, clamped to at least 1 (the
    all-zero register represents q = -1).

    Raises NotCongruentMinusOneError unless q == -1 mod pi, i.e. the pi^0
    row of q is congruent to (-1, 0, ..., 0) coordinatewise mod p.
    """
    p, d, n = g.p, g.d, g.n
    coords = q.coords
    if len(coords) != d or any(len(row) != n for row in coords):
        raise ValueError(f"connection element must be a {d} x {n} grid")
    if (coords[0][0] + 1) % p != 0 or any(coords[0][j] % p != 0 for j in range(1, n)):
        raise NotCongruentMinusOneError(
            f"pi^0 row {coords[0]} of the connection element is not congruent to -1 mod pi"
        )
    digits: dict[int, list[int]] = {}
    r = 1
    for k in range(d):
        for j in range(n):
            v = coords[k][j] + (1 if k == 0 and j == 0 else 0)
            sign = 1 if v >= 0 else -1
            u = abs(v)
            i = 0
            while u:
                u, e = divmod(u, p)
                if e:
                    idx = d * i + k
                    # k = 0 slots are multiples of p, so digit 0 is empty there
                    digits.setdefault(idx, [0] * n)[j] += sign * e
                    r = max(r, idx)
                i += 1
    rows = [digits.get(idx, [0] * n) for idx in range(1, r + 1)]
    return register_spec(g, rows)
