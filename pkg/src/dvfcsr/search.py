"""Search over folded connection grids for large-period moduli.

A candidate is a d x n grid of folded values q~[k][j] (row k = 0 must use
multiples of p; see connection.py). Its integer norm N' = det of the
multiplication matrix is the modulus that bounds every period the
register can reach, so the search enumerates grids, computes |N'|, and
annotates primality, the order of p, and the maximal-period criterion.

Enumeration order is deterministic: slots are flattened j-major (basis
order) and iterated lexicographically, each slot ascending.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from math import gcd
from typing import Iterator

from .algebra import GroundParams, IntGrid, RingElement, det_int, make_ground_params, mult_matrix_Q, neg_ring
from .analysis import mult_order
from .connection import mult_matrix_Q_2_2
from .errors import FactorizationBudgetError
from .ntheory import is_prime

__all__ = [
    "SearchConfig",
    "Candidate",
    "enumerate_candidates",
    "enumerate",
    "is_prime",
    "NormTableRow",
    "NormTableReport",
    "verify_norm_table",
]


@dataclass(frozen=True)
class SearchConfig:
    """Grid bounds and filters for enumerate_candidates.

    bounds[k][j] is the inclusive magnitude bound for slot (k, j); slots
    with k = 0 range over multiples of p only. include_negative mirrors
    every slot range to negative values. limit caps the number of yielded
    candidates (None = exhaust the grid).
    """

    ground: GroundParams
    bounds: IntGrid
    include_negative: bool = False
    require_prime: bool = False
    require_max_period: bool = False
    limit: int | None = None


@dataclass(frozen=True)
class Candidate:
    """One enumerated grid with its modulus and period annotations.

    order and max_period are None when they are not defined (|N'| < 2) or
    when the factorization budget ruled them out. max_period is |N'| - 1
    under the maximal-period criterion and d * order otherwise.
    """

    q_tilde: IntGrid
    norm_signed: int
    norm_abs: int
    prime: bool
    order: int | None
    max_period: int | None
    criterion_ok: bool


def _slot_values(bound: int, step: int, include_negative: bool) -> list[int]:
    vals = list(range(0, bound + 1, step))
    if include_negative:
        vals = [-v for v in vals[1:]][::-1] + vals
    return vals


def enumerate_candidates(cfg: SearchConfig) -> Iterator[Candidate]:
    """Yield candidates for every grid within bounds, applying the filters."""
    g = cfg.ground
    p, d, n = g.p, g.d, g.n
    bounds = cfg.bounds
    if len(bounds) != d or any(len(row) != n for row in bounds):
        raise ValueError(f"bounds must be a {d} x {n} grid")
    slots = [(k, j) for j in range(n) for k in range(d)]
    ranges = [
        _slot_values(bounds[k][j], p if k == 0 else 1, cfg.include_negative) for (k, j) in slots
    ]
    if cfg.limit is not None and cfg.limit <= 0:
        return
    yielded = 0
    indices = [0] * len(slots)
    while True:
        grid = [[0] * n for _ in range(d)]
        for pos in range(len(slots)):
            k, j = slots[pos]
            grid[k][j] = ranges[pos][indices[pos]]
        cand = _candidate(g, tuple(tuple(row) for row in grid))
        keep = True
        if cfg.require_prime and not cand.prime:
            keep = False
        if cfg.require_max_period and not cand.criterion_ok:
            keep = False
        if keep:
            yield cand
            yielded += 1
            if cfg.limit is not None and yielded >= cfg.limit:
                return
        # lexicographic increment, last slot fastest
        pos = len(slots) - 1
        while pos >= 0:
            indices[pos] += 1
            if indices[pos] < len(ranges[pos]):
                break
            indices[pos] = 0
            pos -= 1
        if pos < 0:
            return


def _candidate(g: GroundParams, q_tilde: IntGrid) -> Candidate:
    grid = [list(row) for row in q_tilde]
    grid[0][0] -= 1
    q = RingElement(tuple(tuple(row) for row in grid))
    norm_signed = det_int(mult_matrix_Q(neg_ring(q), g))
    norm_abs = abs(norm_signed)
    prime = is_prime(norm_abs)
    order: int | None = None
    if norm_abs >= 2:
        try:
            order = mult_order(g.p, norm_abs)
        except FactorizationBudgetError:
            order = None
    criterion = bool(prime and order is not None and order == norm_abs - 1 and gcd(g.d, norm_abs - 1) == 1)
    if criterion:
        max_period: int | None = norm_abs - 1
    elif order is not None:
        max_period = g.d * order
    else:
        max_period = None
    return Candidate(
        q_tilde=q_tilde,
        norm_signed=norm_signed,
        norm_abs=norm_abs,
        prime=prime,
        order=order,
        max_period=max_period,
        criterion_ok=criterion,
    )


# keep the natural name available as a module attribute; code in this module
# never calls the builtin of the same name
enumerate = enumerate_candidates


# ---------------------------------------------------------------------------
# bundled norm table verification


@dataclass(frozen=True)
class NormTableRow:
    """One bundled table row checked against a fresh computation."""

    listed: int
    grid: tuple[int, int, int, int]
    det_signed: int
    det_matches: bool
    template_matches_general: bool
    prime: bool


@dataclass(frozen=True)
class NormTableReport:
    rows: tuple[NormTableRow, ...]
    ok: bool

    @property
    def composites(self) -> tuple[int, ...]:
        return tuple(row.listed for row in self.rows if not row.prime)


def verify_norm_table() -> NormTableReport:
    """Recompute the bundled (p=2, d=n=2) norm table from scratch.

    For every row (N', x, y, z, t): the closed-form template matrix must
    equal the general multiplication matrix entrywise, and |det| must
    equal the listed N'. Rows are annotated with the true primality of
    the listed value (the table intends primes; several listed values are
    composite, and the annotation says so rather than hiding it).
    """
    text = resources.files("dvfcsr").joinpath("fixtures/norm_table_2_2.csv").read_text(encoding="utf-8")
    g = make_ground_params(2, 2, (-1, -1, 1))
    rows = []
    all_ok = True
    for rec in csv.DictReader(text.splitlines()):
        listed = int(rec["norm_abs"])
        x, y, z, t = (int(rec[c]) for c in ("x", "y", "z", "t"))
        template = mult_matrix_Q_2_2(x, y, z, t)
        q = RingElement(((x - 1, z), (y, t)))
        general = mult_matrix_Q(neg_ring(q), g)
        same = template == general
        det = det_int(template)
        match = abs(det) == listed
        all_ok = all_ok and same and match
        rows.append(
            NormTableRow(
                listed=listed,
                grid=(x, y, z, t),
                det_signed=det,
                det_matches=match,
                template_matches_general=same,
                prime=is_prime(listed),
            )
        )
    return NormTableReport(rows=tuple(rows), ok=all_ok)
