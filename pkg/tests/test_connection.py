"""Connection element extraction, the 4x4 template, and the inverse map."""
from __future__ import annotations

import csv
import random
from importlib import resources

import pytest

import dvfcsr as dv
import util


def test_analyze_known_registers():
    spec, _ = util.load_register("reg151")
    an = dv.analyze(spec)
    assert an.q.coords == ((-1, 2), (1, 2))
    assert an.q_tilde == ((0, 2), (1, 2))
    assert an.norm_pi.coords == (-7, -10)
    assert an.norm_signed == -151
    assert an.norm_abs == 151

    spec, _ = util.load_register("reg401")
    an = dv.analyze(spec)
    assert an.q_tilde == ((0, 0), (3, 2))
    assert an.norm_pi.coords == (23, -8)
    assert an.norm_signed == 401

    spec, _ = util.load_register("reg409")
    an = dv.analyze(spec)
    assert an.q_tilde == ((0, 4), (1, 3))
    assert an.norm_pi.coords == (-29, -25)
    assert an.norm_signed == -409


def test_folded_grid_row_zero_divisible_by_p():
    rng = random.Random(59)
    for _ in range(100):
        p = rng.choice([2, 3, 5])
        g = util.ground(p, rng.randrange(1, 4), rng.randrange(1, 3))
        spec = util.random_spec(g, rng, max_r=6)
        an = dv.analyze(spec)
        assert all(v % p == 0 for v in an.q_tilde[0])
        # q differs from the folded grid only by the -1 at the corner.
        assert an.q.coords[0][0] == an.q_tilde[0][0] - 1
        assert an.q.coords[0][1:] == an.q_tilde[0][1:]
        for k in range(1, g.d):
            assert an.q.coords[k] == an.q_tilde[k]


def _template_ground():
    return util.ground(2, 2, 2)


def test_template_matches_general_matrix_on_table_rows():
    g = _template_ground()
    table = (resources.files("dvfcsr") / "fixtures" / "norm_table_2_2.csv").read_text()
    rows = list(csv.DictReader(table.splitlines()))
    assert len(rows) == 52
    for row in rows:
        x, y, z, t = (int(row[c]) for c in "xyzt")
        q = dv.ring_element(g, [[x - 1, z], [y, t]])
        general = dv.mult_matrix_Q(dv.neg_ring(q), g)
        assert dv.mult_matrix_Q_2_2(x, y, z, t) == general
        assert abs(dv.det_int(general)) == int(row["norm_abs"])


def test_template_matches_general_matrix_on_random_grids():
    # the template is a polynomial identity in (x, y, z, t); it must hold
    # for arbitrary integers, not only folded grids.
    g = _template_ground()
    rng = random.Random(61)
    assert dv.mult_matrix_Q_2_2(0, 0, 0, 0) == tuple(
        tuple(int(i == j) for j in range(4)) for i in range(4)
    )
    for _ in range(300):
        x, y, z, t = (rng.randrange(-20, 21) for _ in range(4))
        q = dv.ring_element(g, [[x - 1, z], [y, t]])
        assert dv.mult_matrix_Q_2_2(x, y, z, t) == dv.mult_matrix_Q(
            dv.neg_ring(q), g
        )


def test_spec_from_connection_recovers_known_register():
    spec, _ = util.load_register("reg151")
    q = dv.analyze(spec).q
    rebuilt = dv.spec_from_connection(spec.ground, q)
    assert rebuilt == spec


def test_spec_from_connection_edge_cases():
    g = _template_ground()
    # q = -1 has an empty digit expansion; the register still needs one cell.
    minus_one = dv.ring_element(g, [[-1, 0], [0, 0]])
    spec = dv.spec_from_connection(g, minus_one)
    assert spec.r == 1
    assert spec.coeffs == (dv.BetaPoly((0, 0)),)

    pi_only = dv.ring_element(g, [[-1, 0], [1, 0]])
    spec = dv.spec_from_connection(g, pi_only)
    assert spec.r == 1
    assert spec.coeffs == (dv.BetaPoly((1, 0)),)

    with pytest.raises(dv.NotCongruentMinusOneError):
        dv.spec_from_connection(g, dv.ring_element(g, [[0, 0], [0, 0]]))
    with pytest.raises(dv.NotCongruentMinusOneError):
        dv.spec_from_connection(g, dv.ring_element(g, [[-1, 1], [0, 0]]))


def test_connection_round_trip_random():
    # analyze . spec_from_connection is the identity on admissible elements,
    # including ones with negative coordinates.
    rng = random.Random(67)
    for _ in range(150):
        p = rng.choice([2, 3])
        g = util.ground(p, rng.randrange(1, 4), rng.randrange(1, 3))
        rows = []
        for k in range(g.d):
            row = []
            for j in range(g.n):
                v = rng.randrange(-4 * p, 4 * p + 1)
                if k == 0:
                    v -= v % p  # row zero must be divisible by p
                    if j == 0:
                        v -= 1
                row.append(v)
            rows.append(row)
        q = dv.ring_element(g, rows)
        spec = dv.spec_from_connection(g, q)
        assert dv.analyze(spec).q == q


def test_spec_round_trip_canonical_digits():
    # registers whose coefficients are canonical base-p digits are recovered
    # exactly from their connection element, trailing zero rows trimmed.
    rng = random.Random(71)
    for _ in range(100):
        p = rng.choice([2, 3, 5])
        g = util.ground(p, rng.randrange(1, 3), rng.randrange(1, 3))
        spec = util.random_spec(g, rng, max_r=5)
        q = dv.analyze(spec).q
        rebuilt = dv.spec_from_connection(g, q)
        trimmed = len(spec.coeffs)
        while trimmed > 1 and all(v == 0 for v in spec.coeffs[trimmed - 1].coords):
            trimmed -= 1
        assert rebuilt.coeffs == spec.coeffs[:trimmed]
