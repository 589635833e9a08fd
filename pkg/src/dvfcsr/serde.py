"""JSON and CSV codecs for the library's value types.

JSON conventions: UTF-8, sorted keys, two-space indent, trailing newline.
Schemas:

- ground:  {"p": int, "d": int, "P": [c0, ..., 1]}        (P monic, low first)
- spec:    {"ground": <ground>, "r": int, "coeffs": [[int * n] * r]}
- state:   {"cells": [[int * n] * r], "memory": [[int * n] * d]}

Grids are row-major with the (k, j) layout of algebra.RingElement. The
trace CSV uses the layout described in register.run: a header row
"series,0,1,...", one row per output coordinate (a_0 .. a_{n-1}), then one
row per memory slot in k-major order (m_0_0, m_0_1, ..., m_{d-1}_{n-1}).

Schema violations raise ValueError with a message naming the offending
key; callers (the CLI) map that to the parse-error exit code.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from .algebra import BetaPoly, GroundParams, RingElement, make_ground_params
from .analysis import PeriodReport, RationalityReport
from .connection import ConnectionAnalysis
from .register import RegisterSpec, RegisterState, register_spec, register_state


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _require(mapping: Any, key: str, what: str) -> Any:
    if not isinstance(mapping, dict):
        raise ValueError(f"{what} must be a JSON object")
    if key not in mapping:
        raise ValueError(f"{what} is missing the key {key!r}")
    return mapping[key]


def _int_rows(value: Any, what: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise ValueError(f"{what} must be a list of lists of integers")
    out = []
    for row in value:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise ValueError(f"{what} must contain integers only")
        out.append([int(v) for v in row])
    return out


# ---------------------------------------------------------------------------
# ground / spec / state


def ground_to_dict(g: GroundParams) -> dict:
    return {"p": g.p, "d": g.d, "P": list(g.poly)}


def ground_from_dict(data: Any) -> GroundParams:
    p = _require(data, "p", "ground")
    d = _require(data, "d", "ground")
    poly = _require(data, "P", "ground")
    if not isinstance(p, int) or not isinstance(d, int):
        raise ValueError("ground keys 'p' and 'd' must be integers")
    if not isinstance(poly, list) or not all(isinstance(c, int) for c in poly):
        raise ValueError("ground key 'P' must be a list of integers")
    return make_ground_params(p, d, poly)


def spec_to_dict(spec: RegisterSpec) -> dict:
    return {
        "ground": ground_to_dict(spec.ground),
        "r": spec.r,
        "coeffs": [list(q.coords) for q in spec.coeffs],
    }


def spec_from_dict(data: Any) -> RegisterSpec:
    g = ground_from_dict(_require(data, "ground", "register spec"))
    r = _require(data, "r", "register spec")
    coeffs = _int_rows(_require(data, "coeffs", "register spec"), "register spec key 'coeffs'")
    if not isinstance(r, int) or r < 1:
        raise ValueError("register spec key 'r' must be a positive integer")
    if len(coeffs) != r:
        raise ValueError(f"register spec lists r = {r} but {len(coeffs)} coefficient rows")
    return register_spec(g, coeffs)


def state_to_dict(state: RegisterState) -> dict:
    return {
        "cells": [list(a.coords) for a in state.cells],
        "memory": [list(row) for row in state.memory.coords],
    }


def state_from_dict(data: Any, spec: RegisterSpec) -> RegisterState:
    cells = _int_rows(_require(data, "cells", "register state"), "register state key 'cells'")
    memory = _int_rows(_require(data, "memory", "register state"), "register state key 'memory'")
    return register_state(spec, cells, memory)


# ---------------------------------------------------------------------------
# reports


def analysis_to_dict(an: ConnectionAnalysis) -> dict:
    return {
        "q": [list(row) for row in an.q.coords],
        "q_tilde": [list(row) for row in an.q_tilde],
        "mult_matrix_int": [list(row) for row in an.mult_matrix_int],
        "mult_matrix_pi": [[list(e.coords) for e in row] for row in an.mult_matrix_pi],
        "norm_pi": list(an.norm_pi.coords),
        "norm_signed": an.norm_signed,
        "norm_abs": an.norm_abs,
    }


def period_report_to_dict(rep: PeriodReport) -> dict:
    return {
        "norm_abs": rep.norm_abs,
        "order": rep.order,
        "horizon": rep.horizon,
        "sub_periods": [[list(pair) for pair in row] for row in rep.sub_periods],
        "coord_periods": [list(pair) for pair in rep.coord_periods],
        "total_period": rep.total_period,
        "divisibility_ok": rep.divisibility_ok,
        "criterion_ok": rep.criterion_ok,
    }


def rationality_report_to_dict(rep: RationalityReport) -> dict:
    return {
        "ok": rep.ok,
        "precision": rep.precision,
        "norm_signed": rep.norm_signed,
        "y": [list(row) for row in rep.y],
        "numerators": [list(row) for row in rep.numerators],
        "reduced_denominators": [list(row) for row in rep.reduced_denominators],
    }


# ---------------------------------------------------------------------------
# trace CSV


def trace_labels(g: GroundParams) -> list[str]:
    labels = [f"a_{j}" for j in range(g.n)]
    labels.extend(f"m_{k}_{j}" for k in range(g.d) for j in range(g.n))
    return labels


def trace_to_csv(g: GroundParams, outputs: Sequence[BetaPoly], memories: Sequence[RingElement]) -> str:
    """Render a run trace in the documented layout; see the module docstring."""
    if len(outputs) != len(memories):
        raise ValueError(f"trace needs equal column counts, got {len(outputs)} outputs, {len(memories)} memories")
    steps = len(outputs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["series"] + [str(i) for i in range(steps)])
    for j in range(g.n):
        writer.writerow([f"a_{j}"] + [str(a.coords[j]) for a in outputs])
    for k in range(g.d):
        for j in range(g.n):
            writer.writerow([f"m_{k}_{j}"] + [str(m.coords[k][j]) for m in memories])
    return buf.getvalue()


def trace_from_csv(text: str) -> dict[str, list[int]]:
    """Parse a trace CSV back into {series label: column values}."""
    rows = list(csv.reader(text.splitlines()))
    if not rows or rows[0][:1] != ["series"]:
        raise ValueError("trace CSV must start with a 'series' header row")
    out: dict[str, list[int]] = {}
    width = len(rows[0]) - 1
    for row in rows[1:]:
        if not row:
            continue
        if len(row) != width + 1:
            raise ValueError(f"trace row {row[0]!r} has {len(row) - 1} columns, header has {width}")
        out[row[0]] = [int(v) for v in row[1:]]
    return out
