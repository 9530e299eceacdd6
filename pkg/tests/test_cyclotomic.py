import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from cyclolab.cyclotomic import (
    CycInt, CycPoly, EvenM, NonRationalTrace, NotCoprime, NotDivisible, OrderMismatch,
    canonicalize, collapse_to_odd, conjugate, cyclotomic_polynomial, embed_numeric,
    expand_from_odd, lift_order, phi, power_traces, trace_mobius, trace_to_Q, units,
)
from cyclolab.sums import context_for


def close(x, y, tol=1e-12):
    return abs(x - y) < tol


@pytest.mark.parametrize("e,coeffs", [
    (3, (1, 1, 1)),
    (9, (1, 0, 0, 1, 0, 0, 1)),
    (18, (1, 0, 0, -1, 0, 0, 1)),
    (2, (1, 1)),
    (1, (-1, 1)),
])
def test_cyclotomic_polynomial(e, coeffs):
    assert cyclotomic_polynomial(e) == coeffs


def test_phi18_is_phi9_at_minus_x():
    p9 = cyclotomic_polynomial(9)
    assert cyclotomic_polynomial(18) == tuple(c * (-1) ** i for i, c in enumerate(p9))


def test_canonicalize_examples():
    assert canonicalize(CycPoly(3, (1, 1, 1))) == CycInt.const(3, 0)
    assert canonicalize(CycPoly(3, (0, 0, 1))).coeffs == (-1, -1)
    z6 = canonicalize(CycPoly(18, tuple(int(i == 6) for i in range(18))))
    assert close(embed_numeric(z6), cmath.exp(2j * math.pi * 6 / 18))


def test_length_is_checked():
    with pytest.raises(ValueError):
        CycInt(18, (1, 2, 3))


def test_multiplication_examples():
    assert CycInt.zeta(18, 10) * CycInt.zeta(18, 12) == CycInt.zeta(18, 4)
    one = CycInt.const(3, 1)
    assert (one + CycInt.zeta(3)) * (one + CycInt.zeta(3, 2)) == one


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        CycInt.zeta(18) + CycInt.zeta(9)


def test_conjugate_examples():
    z = CycInt.zeta(18)
    assert conjugate(z, 5) == CycInt.zeta(18, 5)
    a = CycInt(18, (3, -1, 4, 1, -5, 9))
    assert conjugate(conjugate(a, 5), 11) == a
    b = CycInt.const(3, 2) + 3 * CycInt.zeta(3, 2)
    c = conjugate(b, 2)
    assert c == CycInt(3, (2, 3))
    assert close(embed_numeric(c), 2 + 3 * cmath.exp(2j * math.pi / 3))
    with pytest.raises(NotCoprime):
        conjugate(z, 3)


def test_trace_examples():
    assert trace_to_Q(CycInt.const(18, 1)) == 6
    assert trace_to_Q(CycInt.zeta(18, 6)) == -3
    # the primitive ninth root has trace mu(9) * 6 / 6 = 0
    assert trace_to_Q(CycInt.zeta(18, 2)) == 0
    assert trace_to_Q(CycInt.zeta(50, 2)) == 0
    assert trace_to_Q(CycInt.zeta(50, 10)) == -5


def test_trace_rejects_nonrational_result():
    # a genuine trace is always rational; guard the check itself by feeding a broken unit set
    with pytest.raises(NonRationalTrace):
        from cyclolab import cyclotomic as cy
        orig = cy.units
        try:
            cy.units = lambda e: [1]
            cy.trace_to_Q(CycInt.zeta(18))
        finally:
            cy.units = orig


def test_lift_examples():
    assert lift_order(CycInt.zeta(3), 3, 18) == CycInt.zeta(18, 6)
    assert lift_order(CycInt.const(9, 17), 9, 18) == CycInt.const(18, 17)
    j = context_for(7, 1, 3, 3).jacobi_sum(1, 1)
    lifted = lift_order(j, 3, 18)
    assert close(embed_numeric(lifted), embed_numeric(j), 1e-9)
    with pytest.raises(NotDivisible):
        lift_order(CycInt.zeta(4), 4, 18)


def test_collapse_examples():
    z = CycInt.zeta(18)
    c = collapse_to_odd(z)
    assert c == -CycInt.zeta(9, 5)
    assert close(embed_numeric(c), embed_numeric(z))
    assert collapse_to_odd(CycInt.const(18, 7)) == CycInt.const(9, 7)
    assert collapse_to_odd(CycInt.zeta(18, 2)) == CycInt.zeta(9)
    with pytest.raises(EvenM):
        collapse_to_odd(CycInt.zeta(12))
    with pytest.raises(EvenM):
        collapse_to_odd(CycInt.zeta(9))


def test_embed_examples():
    assert embed_numeric(CycInt.const(18, 1)) == 1
    assert close(embed_numeric(CycInt.zeta(18, 9)), -1)
    j = context_for(7, 1, 3, 3).jacobi_sum(1, 1)
    assert j.coeffs == (-1, -3)
    assert abs(abs(embed_numeric(j)) ** 2 - 7) < 1e-9


def test_json_round_trip():
    a = CycInt(50, tuple(range(20)))
    assert CycInt.from_json(a.to_json()) == a


# -- properties ------------------------------------------------------------------

def elements(e, lo=-20, hi=20):
    return st.lists(st.integers(lo, hi), min_size=phi(e), max_size=phi(e)).map(
        lambda c: CycInt(e, tuple(c)))


@pytest.mark.parametrize("e", [18, 50])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_ring_axioms(e, data):
    a, b, c = (data.draw(elements(e)) for _ in range(3))
    zero, one = CycInt.const(e, 0), CycInt.const(e, 1)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + zero == a
    assert a - a == zero
    assert a * one == a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("e", [18, 50])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_embedding_is_a_ring_map(e, data):
    a, b = data.draw(elements(e, -5, 5)), data.draw(elements(e, -5, 5))
    for k in units(e)[:3]:
        assert abs(embed_numeric(a * b, k) - embed_numeric(a, k) * embed_numeric(b, k)) < 1e-6
        assert abs(embed_numeric(a + b, k) - embed_numeric(a, k) - embed_numeric(b, k)) < 1e-9


@pytest.mark.parametrize("e", [9, 18, 50])
def test_trace_two_paths_all_powers(e):
    tr = power_traces(e)
    for t in range(e):
        z = CycInt.zeta(e, t)
        assert trace_to_Q(z) == tr[t] == trace_mobius(z)


@pytest.mark.parametrize("e", [9, 18, 50])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_trace_two_paths_random(e, data):
    a = data.draw(elements(e))
    assert trace_to_Q(a) == trace_mobius(a)


@pytest.mark.parametrize("e", [18, 50])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_collapse_expand_inverse(e, data):
    a = data.draw(elements(e))
    c = collapse_to_odd(a)
    assert abs(embed_numeric(c) - embed_numeric(a)) < 1e-6
    assert expand_from_odd(c) == a
