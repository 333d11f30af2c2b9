import pytest
from hypothesis import given, strategies as st

from crystalpaths import CLW, DELTA, L0, L1, Weight, classical, orbit_canonical, simple_root

coord = st.integers(min_value=-20, max_value=20)
weights = st.builds(Weight, coord, coord, coord)


def test_basis_constants():
    assert L0 == Weight(1, 0, 0)
    assert L1 == Weight(0, 1, 0)
    assert DELTA == Weight(0, 0, 1)
    assert CLW == L0 - L1


def test_simple_roots():
    assert simple_root(1) == Weight(-2, 2, 0)
    assert simple_root(0) == Weight(2, -2, 1)
    assert simple_root(0) + simple_root(1) == DELTA


def test_pairing_ignores_delta():
    w = Weight(3, -1, 7)
    assert w.pairing(0) == Weight(3, -1, 0).pairing(0)
    assert w.pairing(1) == Weight(3, -1, 0).pairing(1)
    assert DELTA.pairing(0) == 0 and DELTA.pairing(1) == 0


def test_pairing_values():
    assert L0.pairing(0) == 1 and L0.pairing(1) == 0
    assert L1.pairing(1) == 1 and L1.pairing(0) == 0
    assert simple_root(1).pairing(1) == 2
    assert simple_root(1).pairing(0) == -2


@given(weights)
def test_level_is_pairing_with_canonical_central_element(w):
    assert w.level == w.a0 + w.a1


@given(weights, st.sampled_from([0, 1]))
def test_reflection_is_involution(w, i):
    assert w.reflect(i).reflect(i) == w


@given(weights, st.sampled_from([0, 1]))
def test_reflection_formula(w, i):
    assert w.reflect(i) == w - simple_root(i) * w.pairing(i)


@given(weights, weights)
def test_additive_group(u, w):
    assert u + w - w == u
    assert -(-u) == u
    assert u * 3 == u + u + u


def test_classical():
    assert classical(2) == Weight(2, -2, 0)
    assert classical(-1, 5) == Weight(-1, 1, 5)
    assert classical(0).level == 0


@given(st.integers(min_value=-6, max_value=6).filter(lambda m: m != 0),
       st.integers(min_value=-10, max_value=10))
def test_orbit_canonical_reaches_fundamental_domain(m, l):
    canon, word = orbit_canonical(classical(m, l))
    assert canon == classical(abs(m), l % abs(m))
    w = classical(m, l)
    for i in word:
        w = w.reflect(i)
    assert w == canon


def test_orbit_canonical_fixed_points():
    for m in (1, 2, 3):
        for l in range(m):
            canon, word = orbit_canonical(classical(m, l))
            assert canon == classical(m, l)
            assert word == []
