from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from bggkit.errors import GuardrailError, InvalidInputError
from bggkit.kostant import (
    chain_character,
    decompose_g0_rep,
    hasse_diagram,
    hasse_edges,
    hasse_size,
    homology,
    is_hasse_member,
    laplacian_eigenvalue,
    levi_dimension,
    levi_highest,
    lowest_weight_data,
)
from bggkit.rootsys import character, dot_action, enumerate_weyl, rho

from conftest import pd_of, rs_of
from test_parabolic import all_parabolics


def test_hasse_examples():
    assert Counter(h.degree for h in hasse_diagram(pd_of("A2", (1, 2)))) == Counter({0: 1, 1: 2, 2: 2, 3: 1})
    assert [h.degree for h in hasse_diagram(pd_of("A2", (1,)))] == [0, 1, 2]
    assert [h.degree for h in hasse_diagram(pd_of("A1", (1,)))] == [0, 1]
    with pytest.raises(GuardrailError):
        hasse_diagram(pd_of("E8", (1,)), limit=100)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "C3", "D4"])
def test_hasse_equals_filtered_weyl_group(name):
    """Independent route: filter the full Weyl group by Levi-dominance of w(rho)."""
    rs = rs_of(name)
    ws = enumerate_weyl(rs)
    for cr in all_parabolics(name):
        pd = pd_of(name, cr)
        members = [w for w in ws if is_hasse_member(pd, w)]
        hd = hasse_diagram(pd)
        assert len(hd) == len(members) == hasse_size(pd)
        assert Counter(h.degree for h in hd) == Counter(w.length for w in members)
        for h in hd:
            assert len(h.inversion_set) == h.degree
            assert set(h.inversion_set) <= set(pd.pplus_positive)
            assert is_hasse_member(pd, h.word)


def test_hasse_edges_a2():
    pd = pd_of("A2", (1, 2))
    hd = hasse_diagram(pd)
    edges = hasse_edges(pd, hd)
    assert len(edges) == 8
    assert all(hd[b].degree == hd[a].degree + 1 for a, b in edges)


def test_homology_examples():
    d = homology(pd_of("A1", (1,)), (0,))
    assert d.multiset() == Counter({(0, (0,)): 1, (1, (2,)): 1})
    d = homology(pd_of("A1", (1,)), (2,))
    assert d.multiset() == Counter({(0, (-2,)): 1, (1, (4,)): 1})
    for name in ["A3", "B3", "G2"]:
        rs = rs_of(name)
        for cr in all_parabolics(name):
            d = homology(pd_of(name, cr), (0,) * rs.rank)
            assert [c.lowest_weight for c in d.components if c.degree == 0] == [(0,) * rs.rank]
    with pytest.raises(InvalidInputError):
        homology(pd_of("A2", (1,)), (-1, 0))
    with pytest.raises(InvalidInputError):
        homology(pd_of("A2", (1,)), (1,))


@pytest.mark.parametrize("name,cr,lam", [("A2", (1,), (1, 1)), ("B2", (2,), (1, 0)), ("G2", (1, 2), (0, 1)),
                                         ("B3", (1,), (0, 1, 0)), ("C3", (3,), (1, 0, 0))])
def test_homology_invariants(name, cr, lam):
    pd = pd_of(name, cr)
    rs = pd.rs
    d = homology(pd, lam)
    _, lam_low = lowest_weight_data(rs, lam)
    for deg, comps in d.by_degree().items():
        weights = [c.lowest_weight for c in comps]
        assert len(set(weights)) == len(weights)
    for c in d.components:
        assert c.multiplicity == 1
        assert all(c.lowest_weight[i - 1] <= 0 for i in pd.levi_nodes)
        assert laplacian_eigenvalue(rs, lam_low, tuple(-x for x in c.lowest_weight)) == 0
        assert c.homogeneity == pd.grading_element.on_weight(c.lowest_weight)
    # Euler characteristic
    dim_v = sum(character(rs, lam).values())

    lhs = sum((-1) ** k * comb(pd.pplus_dim, k) * dim_v for k in range(pd.pplus_dim + 1))
    rhs = sum((-1) ** c.degree * levi_dimension(pd, c.lowest_weight) for c in d.components)
    assert lhs == rhs


def test_laplacian_examples():
    rs = rs_of("A1")
    assert laplacian_eigenvalue(rs, (2,), (2,)) == 0
    # trivial V: the degree-1 homology component has lowest weight alpha, so nu = -alpha
    assert laplacian_eigenvalue(rs, (0,), (-2,)) == 0
    # adjoint V: component of lowest weight -2 alpha evaluated at nu = 2 alpha
    assert laplacian_eigenvalue(rs, (2,), (4,)) == 1
    for w in enumerate_weyl(rs_of("B2")):
        lam = (1, 1)
        assert laplacian_eigenvalue(rs_of("B2"), lam, dot_action(rs_of("B2"), w, lam)) == 0


def test_decompose_examples():
    pd = pd_of("A2", (1, 2))
    pplus = [pd.rs.root_to_weight(r) for r in pd.pplus_positive]
    assert decompose_g0_rep(pd, pplus) == sorted((w, 1) for w in pplus)
    a1 = pd_of("A1", (1,))
    ch = chain_character(a1, {(2,): 1, (0,): 1, (-2,): 1}, 1)
    assert decompose_g0_rep(a1, ch) == [((0,), 1), ((2,), 1), ((4,), 1)]
    p = pd_of("A2", (1,))
    comps = decompose_g0_rep(p, [p.rs.root_to_weight(r) for r in p.pplus_positive])
    assert len(comps) == 1 and levi_dimension(p, comps[0][0]) == 2
    with pytest.raises(InvalidInputError):
        decompose_g0_rep(p, [(2, -1)])


@given(st.sampled_from([("A2", (1,)), ("B2", (2,)), ("A3", (2,)), ("B3", (1,)), ("C3", (3,)), ("G2", (1,))]),
       st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_decompose_reconstructs_the_character(case, lam):
    name, cr = case
    pd = pd_of(name, cr)
    lam = tuple(lam[: pd.rs.rank])
    ch = character(pd.rs, lam)
    total = Counter()

    for lw, m in decompose_g0_rep(pd, ch):
        for w, k in character(pd.rs, levi_highest(pd, lw), pd.levi_nodes).items():
            total[w] += m * k
    assert dict(total) == ch
