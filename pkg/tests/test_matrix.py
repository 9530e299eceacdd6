import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cyclolab.field import all_generators, make_field
from cyclolab.matrix import (
    IntMatrix, build_orbit_table, canonical_pair, char_poly, cyclo_matrix, determinant,
    eigenvalues, generator_permutation, is_squarefree, orbit,
)

from conftest import ctx_for


def test_canonical_pair_examples():
    assert canonical_pair(18, "odd", 5, 0) == (4, 4)
    assert canonical_pair(18, "even", 17, 16) == (1, 2)
    for parity in ("odd", "even"):
        assert canonical_pair(18, parity, 0, 0) == (0, 0)


def test_orbits_respect_true_symmetries(ctx19, ctx37):
    for ctx in (ctx19, ctx37):
        T = ctx.table
        parity = "even" if ctx.k_even else "odd"
        for a in range(18):
            for b in range(18):
                assert all(T[x, y] == T[a, b] for x, y in orbit(18, parity, a, b))


def test_orbit_table_render():
    t = build_orbit_table(18, "odd")
    lines = t.render().splitlines()
    assert len(lines) == 19
    assert "(4,4)" in lines[6]
    with pytest.raises(ValueError):
        build_orbit_table(18, "sideways")


def test_matrix_examples(ctx19, ctx37):
    A, B = cyclo_matrix(ctx19), cyclo_matrix(ctx37)
    assert A.total() == 17 and not any(A.rows[9])
    assert B.total() == 35 and B.trace() == 1


def test_identity_and_diagonal():
    I = IntMatrix.identity(18)
    assert determinant(I) == 1
    D = IntMatrix(tuple(tuple(2 * (i == j) for j in range(18)) for i in range(18)))
    x = sympy.Symbol("x")
    want = [int(c) for c in sympy.Poly((x - 2) ** 18, x).all_coeffs()]
    assert char_poly(D) == want
    assert not is_squarefree(want)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_and_charpoly_match_sympy(rows):
    M = IntMatrix(tuple(map(tuple, rows)))
    S = sympy.Matrix(rows)
    assert determinant(M) == S.det()
    assert char_poly(M) == [int(c) for c in S.charpoly().all_coeffs()]


def test_det_with_pivoting():
    M = IntMatrix(((0, 1, 2), (1, 0, 3), (4, -3, 8)))
    assert determinant(M) == -2


def test_matrix_power_and_csv():
    M = IntMatrix(((0, 1), (0, 0)))
    assert (M ** 2).is_zero()
    assert M.to_csv() == "0,1\r\n0,0\r\n"


def test_eigenvalues_simple():
    M = IntMatrix(((2, 1), (1, 2)))
    ev = eigenvalues(M)
    assert np.allclose(ev, [3, 1])
    assert eigenvalues(IntMatrix(((0, 1), (0, 0)))) == [0j, 0j]


def test_generator_permutation_conjugates(ctx19):
    base = cyclo_matrix(ctx19)
    g0 = ctx19.dlog.generator
    f = ctx19.field
    for s in (5, 7, 11):
        other = cyclo_matrix(ctx_for(19, 1, 3, f.pow(g0, s)))
        assert other == base.permuted(generator_permutation(18, s))


@pytest.mark.parametrize("p", [19, 37])
def test_invariants_over_all_generators(p):
    gens = all_generators(make_field(p))
    assert len(gens) == {19: 6, 37: 12}[p]
    mats = [cyclo_matrix(ctx_for(p, 1, 3, g)) for g in gens]
    dets = {determinant(M) for M in mats}
    polys = {tuple(char_poly(M)) for M in mats}
    assert len(dets) == 1 and len(polys) == 1
