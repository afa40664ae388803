from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bggkit.casimir import (
    FiltrationLevel,
    LevelComponent,
    c0,
    c0_from_highest,
    eigen_report,
    eigenvalue,
    filtration_from_character,
    graded_casimir_audit,
    splitting_factors,
)
from bggkit.errors import InvalidInputError
from bggkit.kostant import homology, lowest_weight_data
from bggkit.rootsys import dot_action, enumerate_weyl, neg

from conftest import ALL_TYPES, pd_of, rs_of
from test_parabolic import all_parabolics


def test_eigenvalue_examples():
    assert eigenvalue(rs_of("A2"), (0, 0)) == 0
    assert eigenvalue(rs_of("A1"), (2,)) == 1


@pytest.mark.parametrize("name", ALL_TYPES)
def test_adjoint_eigenvalue_is_one(name):
    rs = rs_of(name)
    theta = rs.root_to_weight(rs.highest_root)
    assert eigenvalue(rs, theta) == 1
    _, lam_low = lowest_weight_data(rs, theta)
    assert c0(rs, lam_low) == 1


def test_c0_examples():
    rs = rs_of("A2")
    assert c0(rs, (0, 0)) == 0
    _, lam_low = lowest_weight_data(rs, (1, 0))
    assert c0(rs, lam_low) == c0_from_highest(rs, (1, 0)) == Fraction(4, 9)
    with pytest.raises(InvalidInputError):
        c0(rs, (Fraction(1, 2), 0))


@given(st.sampled_from(["A2", "B2", "G2", "A3", "B3"]), st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.data())
def test_eigenvalue_is_dot_invariant(name, lam, data):
    rs = rs_of(name)
    lam = tuple(lam[: rs.rank])
    w = data.draw(st.sampled_from(enumerate_weyl(rs)))
    assert eigenvalue(rs, dot_action(rs, w, lam)) == eigenvalue(rs, lam)


@given(st.sampled_from(["A2", "B2", "G2", "C3"]), st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_eigenvalue_scales_with_the_form(name, nu, c):
    rs = rs_of(name)
    nu = tuple(nu[: rs.rank])
    scaled = [[c * x for x in row] for row in rs.gram]
    assert eigenvalue(rs, nu, scaled) / c == eigenvalue(rs, nu)


def test_graded_audit_examples():
    pd = pd_of("A2", (1,))
    rs = pd.rs
    reports = graded_casimir_audit(pd, (1, 1), 0)
    _, lam_low = lowest_weight_data(rs, (1, 1))
    own = [r for r in reports if r.lowest_weight == neg(lam_low)]
    assert len(own) == 1 and own[0].casimir == own[0].c0 == 1 and own[0].laplacian == 0
    with pytest.raises(InvalidInputError):
        graded_casimir_audit(pd, (1, 1), 9)
    with pytest.raises(InvalidInputError):
        graded_casimir_audit(pd, (-1, 1), 0)


def test_a1_adjoint_formula_values():
    rep = eigen_report(rs_of("A1"), (2,), (-4,), degree=1)
    # nu = 2 alpha: casimir 3, laplacian 1/2 (|5 rho|^2 - |3 rho|^2) = 1, c0 = 1
    assert (rep.casimir, rep.laplacian, rep.c0, rep.identity_holds) == (3, 1, 1, True)


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "B3", "C3"])
def test_identity_on_every_graded_component(name):
    rs = rs_of(name)
    theta = rs.root_to_weight(rs.highest_root)
    for cr in all_parabolics(name)[:4]:
        pd = pd_of(name, cr)
        for lam in [(0,) * rs.rank, theta]:
            hom = homology(pd, lam)
            _, lam_low = lowest_weight_data(rs, lam)
            for k in range(pd.pplus_dim + 1):
                reps = graded_casimir_audit(pd, lam, k)
                assert all(r.identity_holds for r in reps)
                zero = {r.lowest_weight for r in reps if r.laplacian == 0}
                assert zero == {c.lowest_weight for c in hom.components if c.degree == k}
            for c in hom.components:
                assert eigenvalue(rs, neg(c.lowest_weight)) == c0(rs, lam_low)


A1_ADJOINT_LEVELS = [
    FiltrationLevel(0, Fraction(-1), (LevelComponent((-2,), Fraction(1)),)),
    FiltrationLevel(1, Fraction(0), (LevelComponent((0,), Fraction(0)),)),
    FiltrationLevel(2, Fraction(1), (LevelComponent((2,), Fraction(0)),)),
]


def test_character_filtration_a1_adjoint():
    assert filtration_from_character(pd_of("A1", (1,)), (2,)) == A1_ADJOINT_LEVELS


def test_splitting_examples():
    single = [FiltrationLevel(0, Fraction(0), (LevelComponent((0,), Fraction(5)),))]
    r = splitting_factors(None, single, (0, (0,)))
    assert r.product == 1 and r.splits and r.factors == ()
    r = splitting_factors(None, A1_ADJOINT_LEVELS, (0, (-2,)))
    assert r.mu0 == 1 and r.product == 1 and r.splits
    r = splitting_factors(None, A1_ADJOINT_LEVELS, (1, (0,)))
    assert r.product == 0 and not r.splits
    with pytest.raises(InvalidInputError):
        splitting_factors(None, A1_ADJOINT_LEVELS, (5, (0,)))
    with pytest.raises(InvalidInputError):
        splitting_factors(None, A1_ADJOINT_LEVELS, (0, (4,)))


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_splitting_duplicates_collapse(eigs, mu0):
    top = FiltrationLevel(1, None, tuple(LevelComponent((i,), e) for i, e in enumerate(eigs)))
    dup = FiltrationLevel(1, None, top.components + tuple(LevelComponent((i + 10,), e) for i, e in enumerate(eigs)))
    base = FiltrationLevel(0, None, (LevelComponent((-1,), mu0),))
    a = splitting_factors(None, [base, top], (0, (-1,)))
    b = splitting_factors(None, [base, dup], (0, (-1,)))
    assert a.product == b.product and a.factors == b.factors
    assert a.splits == (mu0 not in eigs)
    assert len(a.factors[0][1]) == len(set(eigs))
