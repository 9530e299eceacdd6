import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclolab.field import (
    NonPrime, NotAGenerator, Reducible, SizeExceeded, all_generators, build_dlog_table,
    find_generator, has_full_order, is_irreducible, make_field, smallest_irreducible,
)

from conftest import FIELDS


def test_prime_field_descriptor():
    f = make_field(19)
    assert (f.p, f.r, f.q) == (19, 1, 19)


def test_quadratic_extension_uses_least_irreducible():
    f = make_field(17, 2)
    assert f.q == 289
    assert f.defining_poly == smallest_irreducible(17, 2)
    # exhaustive: no smaller monic quadratic over F_17 is irreducible
    c0, c1, _ = f.defining_poly
    for a0 in range(1, 17):
        for a1 in range(17):
            if (a0, a1) < (c0, c1):
                assert not is_irreducible((a0, a1, 1), 17)


@pytest.mark.parametrize("bad", [(15, 1), (1, 1), (2, 3), (3, 1), (5, 1)])
def test_rejects_bad_parameters(bad):
    with pytest.raises(ValueError):
        make_field(*bad)


def test_nonprime_type():
    with pytest.raises(NonPrime):
        make_field(15)


def test_reducible_poly_rejected():
    with pytest.raises(Reducible):
        make_field(17, 2, (0, 0, 1))


def test_size_bound():
    with pytest.raises(SizeExceeded):
        make_field(101, 3, size_bound=10_000)


@pytest.mark.parametrize("p,g", [(19, 2), (37, 2), (7, 3), (73, 5), (101, 2)])
def test_least_generator(p, g):
    assert make_field(p).encode(find_generator(make_field(p))) == g


def test_generator_counts():
    assert len(all_generators(make_field(19))) == 6
    assert len(all_generators(make_field(37))) == 12
    assert not has_full_order(make_field(19), 7)


def test_dlog_examples():
    t = build_dlog_table(make_field(19), 2)
    assert (t[1], t[18], t[4]) == (0, 9, 2)
    assert t.index_of[0] == -1


def test_non_generator_rejected():
    with pytest.raises(NotAGenerator):
        build_dlog_table(make_field(19), 7)


def test_cache_round_trip(tmp_path):
    f = make_field(17, 2)
    g = f.encode(find_generator(f))
    fresh = build_dlog_table(f, g, tmp_path)
    assert list(tmp_path.glob("*.npy"))
    cached = build_dlog_table(f, g, tmp_path)
    assert np.array_equal(fresh.index_of, cached.index_of)
    assert fresh.key() == cached.key()


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("CYCLOLAB_CACHE", str(tmp_path))
    build_dlog_table(make_field(37), 2)
    assert list(tmp_path.glob("*.npy"))


_tables = {}


def _table(p, r):
    if (p, r) not in _tables:
        f = make_field(p, r)
        _tables[p, r] = build_dlog_table(f, find_generator(f))
    return _tables[p, r]


@pytest.mark.parametrize("p,r", sorted({(p, r) for p, r, _ in FIELDS}))
@settings(max_examples=1000, deadline=None)
@given(data=st.data())
def test_dlog_homomorphism(p, r, data):
    t = _table(p, r)
    f = t.field
    v = data.draw(st.integers(1, f.q - 1))
    w = data.draw(st.integers(1, f.q - 1))
    assert t[f.mul(v, w)] == (t[v] + t[w]) % (f.q - 1)


@pytest.mark.parametrize("p,r", [(19, 1), (17, 2)])
def test_dlog_is_bijection(p, r):
    t = _table(p, r)
    f = t.field
    assert sorted(t.index_of[1:].tolist()) == list(range(f.q - 1))
    g = t.generator
    for i in (0, 1, 5, f.q - 2):
        assert t[f.pow(g, i)] == i
