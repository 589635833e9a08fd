"""Grid enumeration, candidate annotations, bundled norm table verification."""
from __future__ import annotations

import csv
import itertools
from importlib import resources

import pytest
import sympy

import dvfcsr as dv
import dvfcsr.search
import util


def _cfg(**kw):
    g = util.ground(2, 2, 2)
    return dv.SearchConfig(ground=g, bounds=((2, 2), (1, 1)), **kw)


def test_enumeration_order_and_count():
    cands = list(dv.enumerate_candidates(_cfg()))
    assert len(cands) == 16
    # slots are j-major, last slot fastest, each ascending from zero
    assert [c.q_tilde for c in cands[:5]] == [
        ((0, 0), (0, 0)),
        ((0, 0), (0, 1)),
        ((0, 2), (0, 0)),
        ((0, 2), (0, 1)),
        ((0, 0), (1, 0)),
    ]
    assert cands[0].norm_abs == 1
    assert cands[0].order is None and cands[0].max_period is None
    # deterministic: a second pass yields the identical sequence
    assert list(dv.enumerate_candidates(_cfg())) == cands


def test_enumeration_filters_and_limit():
    all_cands = list(dv.enumerate_candidates(_cfg()))
    primes = list(dv.enumerate_candidates(_cfg(require_prime=True)))
    assert primes == [c for c in all_cands if c.prime]
    assert len(primes) < len(all_cands)
    capped = list(dv.enumerate_candidates(_cfg(limit=5)))
    assert capped == all_cands[:5]
    assert list(dv.enumerate_candidates(_cfg(limit=0))) == []


def test_enumeration_negative_ranges():
    cands = list(dv.enumerate_candidates(_cfg(include_negative=True)))
    assert len(cands) == 81  # {-2,0,2} x {-1,0,1} x {-2,0,2} x {-1,0,1}
    assert all(c.q_tilde[0][0] % 2 == 0 and c.q_tilde[0][1] % 2 == 0 for c in cands)
    assert min(c.q_tilde[1][0] for c in cands) == -1


def test_enumeration_rejects_bad_bounds():
    g = util.ground(2, 2, 2)
    with pytest.raises(ValueError):
        list(dv.enumerate_candidates(dv.SearchConfig(ground=g, bounds=((1, 1),))))


def test_candidate_annotations_recomputed():
    g = util.ground(2, 2, 2)
    cfg = dv.SearchConfig(ground=g, bounds=((4, 4), (2, 2)), include_negative=True)
    for c in itertools.islice(dv.enumerate_candidates(cfg), 0, None, 7):
        grid = [list(row) for row in c.q_tilde]
        grid[0][0] -= 1
        q = dv.ring_element(g, grid)
        norm = dv.det_int(dv.mult_matrix_Q(dv.neg_ring(q), g))
        assert c.norm_signed == norm
        assert c.norm_abs == abs(norm)
        assert c.norm_signed % 2 == 1  # always odd for p = 2
        assert c.prime == dv.is_prime(c.norm_abs)
        if c.norm_abs >= 2:
            assert c.order == dv.mult_order(2, c.norm_abs)
            assert c.criterion_ok == dv.max_period_criterion(c.norm_abs, 2, 2)
            # d = 2 and an odd modulus: |N'| - 1 is even, so the
            # maximal-period criterion can never hold here
            assert not c.criterion_ok
            assert c.max_period == 2 * c.order
        else:
            assert c.order is None and c.max_period is None


def test_criterion_positive_case_in_search():
    # d = 3 over the prime field reaches criterion grids quickly
    g = dv.make_ground_params(2, 3, (-1, 1))
    cfg = dv.SearchConfig(
        ground=g, bounds=((2,), (1,), (1,)), require_max_period=True
    )
    hits = list(dv.enumerate_candidates(cfg))
    assert hits, "expected at least one maximal-period grid"
    for c in hits:
        assert c.criterion_ok and c.prime
        assert c.max_period == c.norm_abs - 1
    assert any(c.norm_abs == 11 for c in hits)


def test_enumerate_alias():
    assert dvfcsr.search.enumerate is dv.enumerate_candidates


def test_search_covers_bundled_table():
    cfg = dv.SearchConfig(ground=util.ground(2, 2, 2), bounds=((6, 6), (3, 3)))
    by_grid = {c.q_tilde: c for c in dv.enumerate_candidates(cfg)}
    assert len(by_grid) == 256
    text = (resources.files("dvfcsr") / "fixtures" / "norm_table_2_2.csv").read_text()
    for rec in csv.DictReader(text.splitlines()):
        grid = ((int(rec["x"]), int(rec["z"])), (int(rec["y"]), int(rec["t"])))
        cand = by_grid[grid]
        assert cand.norm_abs == int(rec["norm_abs"])


def test_verify_norm_table():
    rep = dv.verify_norm_table()
    assert rep.ok
    assert len(rep.rows) == 52
    for row in rep.rows:
        assert row.det_matches
        assert row.template_matches_general
        assert abs(row.det_signed) == row.listed
        assert row.det_signed % 2 == 1
        assert row.prime == (sympy.isprime(row.listed))
    assert len(rep.composites) == 19
    assert rep.composites == tuple(
        row.listed for row in rep.rows if not sympy.isprime(row.listed)
    )
    assert {9, 25, 49, 729, 1025} <= set(rep.composites)
