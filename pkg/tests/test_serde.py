"""JSON and CSV codecs: round trips and schema rejection."""
from __future__ import annotations

import json
import random

import pytest

import dvfcsr as dv
import util


def test_ground_round_trip():
    g = util.ground(3, 2, 2)
    data = dv.ground_to_dict(g)
    assert data == {"p": 3, "d": 2, "P": [-1, -1, 1]}
    assert dv.ground_from_dict(json.loads(json.dumps(data))) == g


def test_spec_and_state_round_trip():
    rng = random.Random(89)
    for _ in range(30):
        p = rng.choice([2, 3, 5])
        g = util.ground(p, rng.randrange(1, 4), rng.randrange(1, 3))
        spec = util.random_spec(g, rng)
        state = util.random_state(spec, rng)
        spec2 = dv.spec_from_dict(json.loads(json.dumps(dv.spec_to_dict(spec))))
        assert spec2 == spec
        state2 = dv.state_from_dict(
            json.loads(json.dumps(dv.state_to_dict(state))), spec2
        )
        assert state2 == state


def test_dumps_is_stable():
    g = util.ground(2, 2, 2)
    text = dv.dumps(dv.ground_to_dict(g))
    round_tripped = dv.dumps(dv.ground_to_dict(dv.ground_from_dict(json.loads(text))))
    assert round_tripped == text
    assert text.endswith("\n")
    # keys come out sorted, so the serialization is reproducible
    assert text.index('"P"') < text.index('"d"') < text.index('"p"')


def test_schema_rejections():
    good = {"p": 2, "d": 2, "P": [-1, -1, 1]}
    with pytest.raises(ValueError):
        dv.ground_from_dict([])
    with pytest.raises(ValueError):
        dv.ground_from_dict({"p": 2, "d": 2})
    with pytest.raises(ValueError):
        dv.ground_from_dict({**good, "p": "2"})
    with pytest.raises(ValueError):
        dv.ground_from_dict({**good, "P": [-1, "x", 1]})

    spec_data = {"ground": good, "r": 2, "coeffs": [[1, 0], [0, 1]]}
    dv.spec_from_dict(spec_data)
    with pytest.raises(ValueError):
        dv.spec_from_dict({**spec_data, "r": 3})
    with pytest.raises(ValueError):
        dv.spec_from_dict({**spec_data, "r": 0, "coeffs": []})
    with pytest.raises(ValueError):
        dv.spec_from_dict({**spec_data, "coeffs": [[1, 0], [0, True]]})
    with pytest.raises(ValueError):
        dv.spec_from_dict({**spec_data, "coeffs": [[1], [0]]})

    spec = dv.spec_from_dict(spec_data)
    with pytest.raises(ValueError):
        dv.state_from_dict({"cells": [[1, 0]]}, spec)
    with pytest.raises(ValueError):
        dv.state_from_dict({"cells": [[1, 0]], "memory": [[0, 0], [0, 0]]}, spec)


def test_report_dicts_are_json_ready():
    spec, state = util.load_register("reg151")
    an = dv.analyze(spec)
    d1 = dv.analysis_to_dict(an)
    assert d1["norm_signed"] == -151 and d1["norm_abs"] == 151
    rep = dv.periodicity_report(spec, state)
    d2 = dv.period_report_to_dict(rep)
    assert d2["total_period"] == 15
    rat = dv.verify_rationality(spec, state)
    d3 = dv.rationality_report_to_dict(rat)
    assert d3["ok"] is True
    for d in (d1, d2, d3):
        json.loads(dv.dumps(d))


def test_trace_csv_round_trip():
    rng = random.Random(97)
    g = util.ground(3, 2, 2)
    spec = util.random_spec(g, rng, max_r=3)
    state = util.random_state(spec, rng)
    res = dv.run(spec, state, 12)
    text = dv.trace_to_csv(g, res.outputs, res.memories)
    table = dv.trace_from_csv(text)
    assert set(table) == set(dv.trace_labels(g))
    for j in range(g.n):
        assert table[f"a_{j}"] == [a.coords[j] for a in res.outputs]
    for k in range(g.d):
        for j in range(g.n):
            assert table[f"m_{k}_{j}"] == [m.coords[k][j] for m in res.memories]


def test_trace_csv_rejects_malformed():
    with pytest.raises(ValueError):
        dv.trace_from_csv("nope,0,1\n1,2,3\n")
    with pytest.raises(ValueError):
        dv.trace_from_csv("series,0,1\na_0,1\n")
    g = util.ground(2, 2, 2)
    spec, state = util.load_register("reg151")
    res = dv.run(spec, state, 5)
    with pytest.raises(ValueError):
        dv.trace_to_csv(g, res.outputs, res.memories[:-1])
