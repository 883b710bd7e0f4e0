from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import residue_sum
from sumsetlab.core_sets import IntSet, make_set, sumset
from sumsetlab.modular import (
    ResidueSet,
    chowla_check,
    e_transform,
    e_transform_check,
    improved_chowla_check,
    project,
    residue_sumset,
    stabilizer_check,
)


def R(n, *xs):
    return ResidueSet.of(n, xs)


def test_project_examples():
    assert project(make_set([0, 1, 5]), 4) == R(4, 0, 1)
    assert project(make_set([0, 4, 8]), 4) == R(4, 0)
    assert project(make_set([-1]), 4) == R(4, 3)


def test_residue_sumset_examples():
    assert residue_sumset(R(4, 0, 1), R(4, 0, 1)) == R(4, 0, 1, 2)
    assert residue_sumset(R(4, 0, 2), R(4, 0, 2)) == R(4, 0, 2)
    s = residue_sumset(R(8, 0, 1, 2), R(8, 0, 1, 3))
    assert s == R(8, 0, 1, 2, 3, 4, 5) and len(s) == 6
    with pytest.raises(ValueError):
        residue_sumset(R(4, 0), R(5, 0))


def test_residue_set_basics():
    a = R(6, 1, 3)
    assert 7 in a and -3 in a and 2 not in a
    assert a.shift(4).members == (1, 5)
    assert ResidueSet.full(5).members == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        ResidueSet(1)


@given(st.integers(2, 12), st.data())
def test_residue_sumset_matches_oracle(n, data):
    a = data.draw(st.sets(st.integers(0, n - 1), min_size=1))
    b = data.draw(st.sets(st.integers(0, n - 1), min_size=1))
    assert set(residue_sumset(R(n, *a), R(n, *b)).members) == residue_sum(a, b, n)


@given(
    st.sets(st.integers(-30, 30), min_size=1, max_size=8),
    st.sets(st.integers(-30, 30), min_size=1, max_size=8),
    st.integers(2, 12),
)
def test_projection_is_a_homomorphism(a, b, k):
    a, b = make_set(a), make_set(b)
    assert project(sumset(a, b), k) == residue_sumset(project(a, k), project(b, k))


def test_chowla_examples():
    r = chowla_check(R(8, 0, 1, 2), R(8, 0, 1, 3))
    assert r.applicable and r.holds and (r.lhs, r.rhs) == (6, 5)
    a = R(8, 1, 4, 6)
    r = chowla_check(a, R(8, 0))
    assert r.applicable and r.holds and r.lhs == r.rhs == 3
    assert not chowla_check(R(8, 0, 4), R(8, 0, 2)).applicable


def test_stabilizer_examples():
    r = stabilizer_check(R(6, 1, 3, 5), 2)
    assert r.fixed and r.structure == (2, (1,)) and r.divides
    r = stabilizer_check(ResidueSet.full(5), 2)
    assert r.fixed and r.structure == (1, (0,))
    assert not stabilizer_check(R(6, 0, 1), 2).fixed
    with pytest.raises(ValueError):
        stabilizer_check(R(6, 0), 0)


def test_stabilizer_oracle_k12():
    # Fixed iff a union of cosets of the subgroup generated by gcd(k, alpha).
    k = 12
    for mask in range(1, 1 << k):
        members = {r for r in range(k) if mask >> r & 1}
        for alpha in range(1, k):
            fixed = {(x + alpha) % k for x in members} == members
            d = gcd(k, alpha)
            union = {(beta + d * t) % k for beta in members for t in range(k // d)}
            assert fixed == (union == members)
            assert stabilizer_check(ResidueSet(k, mask), alpha).fixed == fixed


def test_improved_chowla_examples():
    r = improved_chowla_check(R(6, 0, 1), R(6, 0, 3, 5), 3)
    assert r.applicable and r.holds and (r.lhs, r.rhs) == (5, 4)
    r = improved_chowla_check(R(6, 0, 2, 4), R(6, 0, 3), 3)
    assert r.applicable and (r.lhs, r.rhs) == (6, 4)
    assert not improved_chowla_check(R(6, 0, 3), R(6, 0, 3), 3).applicable
    with pytest.raises(ValueError):
        improved_chowla_check(R(7, 0), R(7, 0), 0)


def test_improved_chowla_applicable_implies_bound_k6():
    k = 6
    for q, bm, am in product(range(k), range(1, 1 << k), range(1, 1 << k)):
        b = ResidueSet(k, bm)
        r = improved_chowla_check(ResidueSet(k, am), b, q)
        if r.applicable:
            assert r.lhs >= r.rhs


def test_e_transform_examples():
    ae, be = e_transform(make_set([0, 1]), make_set([0, 2]), 1)
    assert ae == make_set([0, 1, 3]) and be == make_set([0])
    a, b = make_set([0, 1, 2, 5]), make_set([0, 1])
    assert e_transform(a, b, 1) == (a, b)  # b + 1 inside a
    ae, be = e_transform(R(4, 0, 2), R(4, 0, 1), 2)
    assert ae == R(4, 0, 2, 3) and be == R(4, 0)
    with pytest.raises(TypeError):
        e_transform(make_set([0]), R(4, 0), 1)


int_sets = st.sets(st.integers(-20, 20), min_size=1, max_size=8).map(make_set)


@given(int_sets, int_sets, st.integers(-40, 40))
def test_e_transform_properties_over_z(a, b, e):
    ae, be = e_transform(a, b, e)
    assert len(ae) + len(be) == len(a) + len(b)
    if be:
        assert sumset(ae, be).issubset(sumset(a, b))
    assert e_transform_check(a, b, e).holds


@given(st.integers(2, 12), st.data())
def test_e_transform_properties_mod_k(k, data):
    a = R(k, *data.draw(st.sets(st.integers(0, k - 1), min_size=1)))
    b = R(k, *data.draw(st.sets(st.integers(0, k - 1), min_size=1)))
    e = data.draw(st.integers(0, k - 1))
    ae, be = e_transform(a, b, e)
    assert len(ae) + len(be) == len(a) + len(b)
    if be:
        assert set(residue_sumset(ae, be).members) <= residue_sum(a.members, b.members, k)
    assert e_transform_check(a, b, e).holds


def test_e_transform_membership_clause():
    a, b = make_set([0, 3, 7]), make_set([0, 5])
    r = e_transform_check(a, b, 3)
    assert r.membership is True
    assert e_transform_check(make_set([1]), make_set([2]), 0).membership is None
    assert isinstance(IntSet((0,)), IntSet)
