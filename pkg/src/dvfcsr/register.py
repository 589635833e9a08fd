"""Vectorial feedback-with-carry shift register simulation.

A register of size r over the ground structure (p, d, P) holds r cells
a_0, ..., a_{r-1} in Z[beta] (digits: canonical cells have coordinates in
[0, p)) and a memory m in Z[pi, beta]. Feedback coefficients q_1, ..., q_r
live in Z[beta]. One clock tick computes the accumulator

    sigma = q_1 * a_{r-1} + q_2 * a_{r-2} + ... + q_r * a_0 + m

whose pi^0 row is the only newly computed row (the pi^k rows for k >= 1
are the old memory rows k). The new cell is the pi^0 row reduced mod p,
and the carry pi-division shifts the memory:

    a_r           = sigma_0 mod p          (coordinatewise)
    m'_k          = sigma_{k+1} = m_{k+1}  for k = 0 .. d-2
    m'_{d-1}      = (sigma_0 - a_r) / p    (exact)

so a_r = sigma_0 - p * m'_{d-1} always holds. Cells shift left; the state
after the tick is (a_1, ..., a_r; m').

Trace layout convention (used by run and the CSV serializer): a trace of
`steps` columns pairs output column i = a_i (the first r columns are the
initial cells) with memory column i = the memory after i computed ticks,
column 0 being the initial memory. Producing `steps` columns therefore
clocks the register steps - 1 times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import BetaPoly, GroundParams, RingElement
from .errors import MemoryDivergedError


@dataclass(frozen=True)
class RegisterSpec:
    """Feedback connection: ground structure plus coefficients q_1 .. q_r."""

    ground: GroundParams
    coeffs: tuple[BetaPoly, ...]

    @property
    def r(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class RegisterState:
    """Register contents: cells a_0 .. a_{r-1} (oldest first) and memory."""

    cells: tuple[BetaPoly, ...]
    memory: RingElement


@dataclass(frozen=True)
class StepTrace:
    """One tick: the full accumulator sigma, the emitted cell, the next state."""

    sigma: RingElement
    output: BetaPoly
    state: RegisterState


@dataclass(frozen=True)
class RunResult:
    """Trace of a run: outputs a_0 .. a_{steps-1}, memory snapshots, final state."""

    outputs: tuple[BetaPoly, ...]
    memories: tuple[RingElement, ...]
    final_state: RegisterState


def register_spec(g: GroundParams, coeff_rows: Sequence[Sequence[int]]) -> RegisterSpec:
    """Build a RegisterSpec from integer coefficient rows (q_i, low beta degree first)."""
    if len(coeff_rows) < 1:
        raise ValueError("a register needs at least one feedback coefficient")
    coeffs = []
    for i, row in enumerate(coeff_rows):
        vals = tuple(int(v) for v in row)
        if len(vals) != g.n:
            raise ValueError(f"coefficient q_{i + 1} has {len(vals)} coordinates, ground expects {g.n}")
        coeffs.append(BetaPoly(vals))
    return RegisterSpec(ground=g, coeffs=tuple(coeffs))


def register_state(
    spec: RegisterSpec, cell_rows: Sequence[Sequence[int]], memory_rows: Sequence[Sequence[int]]
) -> RegisterState:
    """Build a RegisterState for spec, validating shapes."""
    g = spec.ground
    if len(cell_rows) != spec.r:
        raise ValueError(f"register of size {spec.r} needs {spec.r} cells, got {len(cell_rows)}")
    cells = []
    for i, row in enumerate(cell_rows):
        vals = tuple(int(v) for v in row)
        if len(vals) != g.n:
            raise ValueError(f"cell a_{i} has {len(vals)} coordinates, ground expects {g.n}")
        cells.append(BetaPoly(vals))
    mem = tuple(tuple(int(v) for v in row) for row in memory_rows)
    if len(mem) != g.d or any(len(row) != g.n for row in mem):
        raise ValueError(f"memory must be a {g.d} x {g.n} grid")
    return RegisterState(cells=tuple(cells), memory=RingElement(mem))


def _validate(spec: RegisterSpec, state: RegisterState) -> None:
    g = spec.ground
    if spec.r < 1:
        raise ValueError("a register needs at least one feedback coefficient")
    if any(len(q.coords) != g.n for q in spec.coeffs):
        raise ValueError("feedback coefficient width does not match the ground parameters")
    if len(state.cells) != spec.r:
        raise ValueError(f"state has {len(state.cells)} cells, register size is {spec.r}")
    if any(len(a.coords) != g.n for a in state.cells):
        raise ValueError("cell width does not match the ground parameters")
    mem = state.memory.coords
    if len(mem) != g.d or any(len(row) != g.n for row in mem):
        raise ValueError("memory shape does not match the ground parameters")


def _tick(
    g: GroundParams,
    coeffs: Sequence[tuple[int, ...]],
    cells: list[tuple[int, ...]],
    mem: list[tuple[int, ...]],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Advance (cells, mem) in place; return (sigma_0 row, new cell)."""
    p, n = g.p, g.n
    r = len(coeffs)
    wide = [0] * (2 * n - 1)
    for i in range(r):
        q = coeffs[i]
        a = cells[r - 1 - i]
        for j1 in range(n):
            c1 = q[j1]
            if c1:
                for j2 in range(n):
                    c2 = a[j2]
                    if c2:
                        wide[j1 + j2] += c1 * c2
    sig0 = [wide[j] + mem[0][j] for j in range(n)]
    for deg in range(n, 2 * n - 1):
        v = wide[deg]
        if v:
            row = g.beta_powers[deg - n]
            for j in range(n):
                sig0[j] += v * row[j]
    out = tuple(v % p for v in sig0)
    top = tuple((sig0[j] - out[j]) // p for j in range(n))
    del mem[0]
    mem.append(top)
    del cells[0]
    cells.append(out)
    return tuple(sig0), out


def step(spec: RegisterSpec, state: RegisterState) -> StepTrace:
    """One clock tick. Pure: returns the accumulator, the new cell, the new state."""
    _validate(spec, state)
    g = spec.ground
    coeffs = [q.coords for q in spec.coeffs]
    cells = [a.coords for a in state.cells]
    mem = [row for row in state.memory.coords]
    old_mem_tail = mem[1:]
    sig0, out = _tick(g, coeffs, cells, mem)
    sigma = RingElement((sig0, *old_mem_tail))
    new_state = RegisterState(
        cells=tuple(BetaPoly(c) for c in cells),
        memory=RingElement(tuple(mem)),
    )
    return StepTrace(sigma=sigma, output=BetaPoly(out), state=new_state)


def run(
    spec: RegisterSpec,
    state: RegisterState,
    steps: int,
    memory_bound: int | None = None,
) -> RunResult:
    """Produce a `steps`-column trace (see the module docstring for the layout).

    outputs[i] is a_i (initial cells first, then computed cells);
    memories[i] is the memory after i computed ticks. The register is
    clocked steps - 1 times; steps = 0 returns an empty trace and the
    unchanged state.

    memory_bound, when given, raises MemoryDivergedError as soon as any
    memory coordinate leaves [-memory_bound, memory_bound].
    """
    _validate(spec, state)
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    if steps == 0:
        return RunResult(outputs=(), memories=(), final_state=state)
    g = spec.ground
    coeffs = [q.coords for q in spec.coeffs]
    cells = [a.coords for a in state.cells]
    mem = [row for row in state.memory.coords]
    outputs: list[tuple[int, ...]] = [a.coords for a in state.cells]
    memories: list[RingElement] = [state.memory]
    for t in range(steps - 1):
        _, out = _tick(g, coeffs, cells, mem)
        outputs.append(out)
        memories.append(RingElement(tuple(mem)))
        if memory_bound is not None:
            for row in mem:
                for v in row:
                    if v > memory_bound or v < -memory_bound:
                        raise MemoryDivergedError(
                            f"memory coordinate {v} left [-{memory_bound}, {memory_bound}] "
                            f"after {t + 1} ticks"
                        )
    final = RegisterState(cells=tuple(BetaPoly(c) for c in cells), memory=RingElement(tuple(mem)))
    return RunResult(
        outputs=tuple(BetaPoly(c) for c in outputs[:steps]),
        memories=tuple(memories),
        final_state=final,
    )


def subsequence(seq: Sequence[BetaPoly], k: int, j: int, dec: int) -> list[int]:
    """Coordinate-j digits of every dec-th element starting at index k.

    These are the streams whose p-adic values the connection analysis
    controls: for decimation dec = d, the (k, j) stream collects the
    beta^j coordinate of a_k, a_{k+d}, a_{k+2d}, ...
    """
    if dec < 1:
        raise ValueError(f"decimation must be >= 1, got {dec}")
    if not 0 <= k < dec:
        raise IndexError(f"shift index k = {k} out of range for decimation {dec}")
    if seq and not 0 <= j < len(seq[0].coords):
        raise IndexError(f"coordinate index j = {j} out of range")
    return [elt.coords[j] for elt in seq[k::dec]]
