import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclolab.cyclotomic import CycInt, NonRationalTrace, trace_to_Q
from cyclolab.formula import (
    N_STRATEGIES, TraceCache, correction_count, distinct_count, evaluate_cell, shifted_traces,
    sweep, thm2_coeff_form, thm2_orbit_form, thm2_trace_form,
)
from cyclolab.matrix import build_orbit_table

from conftest import SMALL_FIELDS, ctx_for


@pytest.mark.parametrize("l,want", [(3, 64), (5, 442), (7, 1650)])
def test_distinct_count(l, want):
    assert distinct_count(l) == want


@pytest.mark.parametrize("l", [3, 5])
def test_distinct_count_is_orbit_count(l):
    e = 2 * l * l
    for parity in ("odd", "even"):
        assert build_orbit_table(e, parity).class_count == distinct_count(l)


def test_correction_count():
    assert correction_count(3) == 33


@pytest.mark.parametrize("e", [9, 18, 50])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_shifted_traces_match_scalar_trace(e, data):
    counts = np.array(data.draw(st.lists(st.integers(0, 30), min_size=e, max_size=e)))
    tr = shifted_traces(counts)
    alpha = CycInt.from_exponents(e, counts)
    for x in (0, 1, e - 1):
        assert tr[x] == trace_to_Q(alpha * CycInt.zeta(e, -x))


def test_shifted_traces_cross_check(monkeypatch):
    from cyclolab import formula
    monkeypatch.setattr(formula, "power_traces", lambda e: (0,) * e)
    with pytest.raises(NonRationalTrace):
        shifted_traces(np.arange(18))


@pytest.mark.parametrize("p,r,l", SMALL_FIELDS)
def test_orbit_form_is_exact(p, r, l):
    ctx = ctx_for(p, r, l)
    tc = TraceCache(ctx)
    for a in range(ctx.e):
        for b in range(ctx.e):
            assert thm2_orbit_form(ctx, a, b, tc) == 4 * l**4 * ctx.table[a, b]


def test_trace_form_spot_cell():
    ctx = ctx_for(19, 1, 3, 13)
    assert ctx.table[0, 11] == 1
    assert thm2_orbit_form(ctx, 0, 11) == 324


def test_trace_form_is_deterministic(ctx19):
    tc = TraceCache(ctx19)
    assert thm2_trace_form(ctx19, 3, 4, tc) == thm2_trace_form(ctx19, 3, 4)


def test_coeff_form_strategies(ctx19):
    for s in N_STRATEGIES:
        assert isinstance(thm2_coeff_form(ctx19, 0, 0, s), int)
    with pytest.raises(ValueError):
        thm2_coeff_form(ctx19, 0, 0, "nope")


def test_evaluate_cell_and_sweep(ctx19):
    ev = evaluate_cell(ctx19, 1, 2)
    assert ev.ground_truth == 324 * ctx19.table[1, 2] == ev.orbit_form
    assert set(ev.to_json()["coeff_form_by_strategy"]) == set(N_STRATEGIES)
    rows = sweep(ctx19, strategies=("per_term",))
    assert len(rows) == 324
    assert all(r.orbit_form == r.ground_truth for r in rows)
