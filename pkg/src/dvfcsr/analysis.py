"""Periodicity and p-adic rationality analysis of register output.

The d-decimated coordinate streams of a register's output are p-adic
expansions of rationals with denominator N', the integer norm of the
connection element. Writing alpha'[k][j] = sum_z a_j^{d*z+k} * p^z, the
streams satisfy the exact linear system

    M' * alpha' = y'

with M' the integer multiplication matrix of -q and y' an integer vector
determined by the initial state. Consequences checked here:

- every (k, j) stream is eventually periodic with period dividing
  ord_{N'}(p), each coordinate stream has period dividing d * ord, and
  the full output period is the lcm of the coordinate periods;
- when |N'| is prime, p generates the units mod |N'| and gcd(d, |N'|-1)
  is 1, the reachable maximum d * ord collapses to |N'| - 1.

verify_rationality confirms the linear system numerically: it lifts y'
from a finite window (stable across two precisions), solves for the
numerators via the adjugate, and checks that w / N' re-expands to the
observed digit streams.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .algebra import IntGrid, det_int
from .connection import analyze
from .errors import (
    ModulusTooSmallError,
    NotCoprimeError,
    PrecisionTooLowError,
    UndeterminedPeriodError,
)
from .ntheory import factorize, is_prime
from .register import RegisterSpec, RegisterState, run, subsequence


@dataclass(frozen=True)
class PAdicExpansion:
    """Truncated p-adic expansion; digits[z] multiplies p^z."""

    p: int
    digits: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.digits)

    def as_int(self) -> int:
        """The value sum digits[z] * p^z (an integer mod p^precision)."""
        v = 0
        for dig in reversed(self.digits):
            v = v * self.p + dig
        return v


@dataclass(frozen=True)
class PeriodReport:
    """Observed periods of one register run against the norm-order bounds.

    sub_periods[k][j] and coord_periods[j] are (transient, period) pairs.
    divisibility_ok records whether every sub-period divides order and
    every coordinate period divides d * order; total_period is the lcm of
    the coordinate periods. criterion_ok records the maximal-period test
    on (|N'|, p, d) alone, independent of the observed run.
    """

    norm_abs: int
    order: int
    horizon: int
    sub_periods: tuple[tuple[tuple[int, int], ...], ...]
    coord_periods: tuple[tuple[int, int], ...]
    total_period: int
    divisibility_ok: bool
    criterion_ok: bool


@dataclass(frozen=True)
class RationalityReport:
    """Outcome of the exact rationality check (see verify_rationality).

    Grids are d x n in (k, j) layout. expansions[k][j] re-expands
    numerators[k][j] / norm_signed to the working precision.
    """

    ok: bool
    precision: int
    norm_signed: int
    y: IntGrid
    numerators: IntGrid
    reduced_denominators: IntGrid
    expansions: tuple[tuple[PAdicExpansion, ...], ...]


def mult_order(base: int, m: int) -> int:
    """Multiplicative order of base mod m, m >= 2, gcd(base, m) = 1.

    Exact: starts from Euler's phi(m) and strips prime factors that keep
    the power at 1. Raises ModulusTooSmallError, NotCoprimeError, or
    FactorizationBudgetError when m (or phi) resists factorization.
    """
    if m < 2:
        raise ModulusTooSmallError(f"multiplicative order needs a modulus >= 2, got {m}")
    b = base % m
    if gcd(b, m) != 1:
        raise NotCoprimeError(f"base {base} shares a factor with modulus {m}")
    phi = 1
    for prime, exp in factorize(m).items():
        phi *= prime ** (exp - 1) * (prime - 1)
    e = phi
    for prime in factorize(phi):
        while e % prime == 0 and pow(b, e // prime, m) == 1:
            e //= prime
    return e


def detect_period(seq: Sequence, max_period: int | None = None) -> tuple[int, int]:
    """Eventual period of a finite observation window.

    Returns (transient, period) for the smallest period whose matching
    tail both shows at least two full periods (transient + 2*period <=
    len) and covers the back half of the window (2*transient <= len).
    The second condition rejects short coincidental tails that a bare
    two-period rule accepts. Raises UndeterminedPeriodError when no
    period up to max_period (default len // 2) qualifies, i.e. the
    window is too short to certify anything.
    """
    size = len(seq)
    if max_period is None:
        max_period = size // 2
    for ell in range(1, max_period + 1):
        t = 0
        for i in range(size - 1 - ell, -1, -1):
            if seq[i] != seq[i + ell]:
                t = i + 1
                break
        if t + 2 * ell <= size and 2 * t <= size:
            return (t, ell)
    raise UndeterminedPeriodError(
        f"no eventual period up to {max_period} certifiable in a window of {size}"
    )


def max_period_criterion(norm_abs: int, p: int, d: int) -> bool:
    """Whether (|N'|, p, d) guarantees the maximal output period |N'| - 1.

    True when |N'| is prime, p is a primitive root mod |N'|, and d is
    coprime to |N'| - 1.
    """
    if norm_abs < 2 or not is_prime(norm_abs):
        return False
    if gcd(d, norm_abs - 1) != 1:
        return False
    return mult_order(p, norm_abs) == norm_abs - 1


def periodicity_report(
    spec: RegisterSpec,
    state: RegisterState,
    horizon: int | None = None,
    memory_bound: int | None = None,
) -> PeriodReport:
    """Run the register and compare every observed period to the norm bounds.

    The default horizon is 4 * d * order + 64 columns, enough to certify
    periods up to the theoretical maximum with modest transients. |N'| = 1
    is the degenerate case: the expansions are integers, the streams are
    eventually constant, and the order is taken to be 1.

    Raises UndeterminedPeriodError if any stream cannot be certified
    within the horizon, and MemoryDivergedError under memory_bound.
    """
    g = spec.ground
    p, d, n = g.p, g.d, g.n
    an = analyze(spec)
    norm_abs = an.norm_abs
    order = 1 if norm_abs == 1 else mult_order(p, norm_abs)
    if horizon is None:
        horizon = 4 * d * order + 64
    res = run(spec, state, horizon, memory_bound=memory_bound)
    subs = []
    for k in range(d):
        row = []
        for j in range(n):
            row.append(detect_period(subsequence(res.outputs, k, j, d)))
        subs.append(tuple(row))
    coords = []
    for j in range(n):
        coords.append(detect_period([a.coords[j] for a in res.outputs]))
    total = lcm(*(ell for _, ell in coords)) if coords else 1
    ok = all(order % ell == 0 for row in subs for _, ell in row) and all(
        (d * order) % ell == 0 for _, ell in coords
    )
    return PeriodReport(
        norm_abs=norm_abs,
        order=order,
        horizon=horizon,
        sub_periods=tuple(subs),
        coord_periods=tuple(coords),
        total_period=total,
        divisibility_ok=ok,
        criterion_ok=max_period_criterion(norm_abs, p, d),
    )


def _adjugate(m: IntGrid) -> IntGrid:
    size = len(m)
    adj = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = tuple(
                tuple(m[rr][cc] for cc in range(size) if cc != j)
                for rr in range(size)
                if rr != i
            )
            cof = det_int(minor)
            adj[j][i] = -cof if (i + j) % 2 else cof
    return tuple(tuple(row) for row in adj)


def _balanced(v: int, mod: int) -> int:
    r = v % mod
    return r - mod if r > mod // 2 else r


def verify_rationality(
    spec: RegisterSpec,
    state: RegisterState,
    precision: int | None = None,
    memory_bound: int | None = None,
) -> RationalityReport:
    """Certify that the observed streams solve M' * alpha' = y' exactly.

    Procedure: run d * (K + 8) columns; form alpha' mod p^K and mod
    p^(K+8); lift y' = M' * alpha' balanced at both precisions and demand
    they agree (otherwise PrecisionTooLowError: the window cannot pin
    down the integer vector y'). Then w = adj(M') * y' gives N' * alpha'
    = w exactly if the streams really are the claimed rationals, which is
    checked as w == N' * alpha' mod p^(K+8) per slot, plus a digit-level
    re-expansion of w / N' included in the report.

    The default K leaves 32 digits of headroom past a crude bound on the
    numerators from the initial state; the stability check is what makes
    the verdict trustworthy, the heuristic only sizes the window.
    """
    g = spec.ground
    p, d, n = g.p, g.d, g.n
    an = analyze(spec)
    norm = an.norm_signed
    if precision is None:
        bound = 1 + sum(abs(v) for row in state.memory.coords for v in row) + p * spec.r * n
        target = 2 * abs(norm) * bound
        precision = 32
        while target:
            precision += 1
            target //= p
    k_hi = precision + 8
    res = run(spec, state, d * k_hi, memory_bound=memory_bound)
    streams = [[subsequence(res.outputs, k, j, d)[:k_hi] for j in range(n)] for k in range(d)]
    size = g.size
    matrix = an.mult_matrix_int

    def y_at(prec: int) -> list[int]:
        mod = p**prec
        alpha = [0] * size
        for k in range(d):
            for j in range(n):
                alpha[g.flat_index(k, j)] = PAdicExpansion(p, tuple(streams[k][j][:prec])).as_int()
        return [_balanced(sum(matrix[rr][cc] * alpha[cc] for cc in range(size)), mod) for rr in range(size)]

    y_lo = y_at(precision)
    y_hi = y_at(k_hi)
    if y_lo != y_hi:
        raise PrecisionTooLowError(
            f"lifted y' changed between precision {precision} and {k_hi}; state overflows the window"
        )
    adj = _adjugate(matrix)
    w = [sum(adj[rr][cc] * y_hi[cc] for cc in range(size)) for rr in range(size)]

    mod_hi = p**k_hi
    inv_norm = pow(norm, -1, p)
    ok = True
    numerators = []
    reduced = []
    expansions = []
    for k in range(d):
        num_row = []
        red_row = []
        exp_row = []
        for j in range(n):
            idx = g.flat_index(k, j)
            wv = w[idx]
            alpha_v = PAdicExpansion(p, tuple(streams[k][j])).as_int()
            if (wv - norm * alpha_v) % mod_hi != 0:
                ok = False
            digs = []
            u = wv
            for _ in range(k_hi):
                dig = (u * inv_norm) % p
                digs.append(dig)
                u = (u - dig * norm) // p
            num_row.append(wv)
            red_row.append(abs(norm) // gcd(abs(norm), abs(wv)))
            exp_row.append(PAdicExpansion(p, tuple(digs)))
        numerators.append(tuple(num_row))
        reduced.append(tuple(red_row))
        expansions.append(tuple(exp_row))
    return RationalityReport(
        ok=ok,
        precision=k_hi,
        norm_signed=norm,
        y=tuple(
            tuple(y_hi[g.flat_index(k, j)] for j in range(n)) for k in range(d)
        ),
        numerators=tuple(numerators),
        reduced_denominators=tuple(reduced),
        expansions=tuple(expansions),
    )
