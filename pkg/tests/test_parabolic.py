from fractions import Fraction
from itertools import chain, combinations

import pytest

from bggkit.errors import InvalidInputError
from bggkit.parabolic import ParabolicSpec, filtration_pairing_check, make_parabolic

from conftest import ALL_TYPES, SMALL_TYPES, algebra_of, pd_of, rs_of


def all_parabolics(name):
    n = rs_of(name).rank
    nodes = range(1, n + 1)
    return [c for c in chain.from_iterable(combinations(nodes, k) for k in range(1, n + 1))]


def test_make_parabolic_examples():
    b = pd_of("A2", (1, 2))
    assert b.grading.depth_k == 2
    assert (b.grading.dims[1], b.grading.dims[2], b.grading.dims[0]) == (2, 1, 2)
    p = pd_of("A2", (1,))
    assert p.grading.depth_k == 1 and p.grading.dims[1] == 2 and p.grading.dims[0] == 4
    a1 = pd_of("A1", (1,))
    assert a1.grading.depth_k == 1 and a1.grading.dims[1] == 1


def test_make_parabolic_errors():
    rs = rs_of("A2")
    with pytest.raises(InvalidInputError):
        make_parabolic(rs, ())
    with pytest.raises(InvalidInputError):
        make_parabolic(rs, (3,))
    with pytest.raises(InvalidInputError):
        make_parabolic(rs, ParabolicSpec.of([0, 1]))


def test_grading_element_examples():
    ge = pd_of("A1", (1,)).grading_element
    assert ge.on_weight((2,)) == 1
    ge = pd_of("A2", (1,)).grading_element
    assert ge.on_weight((2, -1)) == 1 and ge.on_weight((-1, 2)) == 0
    pd = pd_of("A2", (1, 2))
    assert pd.grading_element.on_weight(pd.rs.root_to_weight(pd.rs.highest_root)) == 2


@pytest.mark.parametrize("name", ALL_TYPES)
def test_grading_invariants_all_parabolics(name):
    rs = rs_of(name)
    for cr in all_parabolics(name)[:12]:
        pd = make_parabolic(rs, cr)
        g = pd.grading
        assert all(g.dims[i] == g.dims[-i] for i in g.dims)
        assert sum(g.dims.values()) == rs.dimension
        assert set(pd.levi_positive).isdisjoint(pd.pplus_positive)
        assert set(pd.levi_positive) | set(pd.pplus_positive) == set(rs.positive_roots)
        for i, roots in g.layer.items():
            for r in roots:
                assert pd.grading_element.on_weight(rs.root_to_weight(r)) == i
        for i in range(rs.rank):
            expected = int(i + 1 in cr)
            assert pd.grading_element.on_weight(rs.cartan[i]) == expected
        assert len(pd.filtration(1)) == pd.pplus_dim


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_brackets_respect_grading(name):
    L = algebra_of(name)
    for cr in all_parabolics(name):
        pd = pd_of(name, cr)
        for (a, b), vec in L.brackets.items():
            target = L.degree_of(pd, a) + L.degree_of(pd, b)
            assert all(L.degree_of(pd, c) == target for c in vec)


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_filtration_pairing_all_parabolics(name):
    L = algebra_of(name)
    for cr in all_parabolics(name):
        res = filtration_pairing_check(pd_of(name, cr), L)
        assert res["ok"], (cr, res)
        assert res["pairs"]["0,0"] == "nondegenerate"


def test_filtration_pairing_examples():
    res = filtration_pairing_check(pd_of("A2", (1, 2)), algebra_of("A2"))
    assert res["pairs"]["1,-1"] == "nondegenerate" and res["pairs"]["2,-2"] == "nondegenerate"
    assert res["pairs"]["1,1"] == "zero" and res["pairs"]["1,-2"] == "zero"
    L = algebra_of("A1")
    e, f = L.e_index[(1,)], L.f_index[(1,)]
    assert L.killing[e][e] == 0 and L.killing[e][f] != 0
