from collections import Counter
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from bggkit.errors import GuardrailError, InvalidInputError
from bggkit.linalg import inverse
from bggkit.oracle.algebra import killing_dual_form_check
from bggkit.rootsys import (
    DynkinSpec,
    WeylWord,
    act,
    add,
    build_root_system,
    character,
    dot_action,
    enumerate_weyl,
    inversion_count,
    killing_inner,
    norm2,
    reflect,
    rho,
    weyl_dimension,
    weyl_order,
)

from conftest import ALL_TYPES, SMALL_TYPES, algebra_of, irrep_of, rs_of

POSITIVE_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16, "C3": 9, "C4": 16,
                   "D4": 12, "D5": 20, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384, "C3": 48, "C4": 384,
               "D4": 192, "D5": 1920, "G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}


def reflection_closure(cartan):
    """Roots generated from the simple roots by simple reflections (root coordinates)."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                gamma = tuple(b - pairing * int(j == i) for j, b in enumerate(beta))
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return seen


def killing_gram_from_roots(rs):
    """<w_i, w_j> as the inverse of B(h_i, h_j) = sum over all roots of alpha(h_i) alpha(h_j)."""
    n = rs.rank
    K = [[Fraction(0)] * n for _ in range(n)]
    for a in rs.positive_roots_fund:
        for i in range(n):
            for j in range(n):
                K[i][j] += 2 * a[i] * a[j]
    return inverse(K)


def test_bourbaki_cartan_tables():
    assert rs_of("B3").cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert rs_of("C3").cartan == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert rs_of("G2").cartan == ((2, -1), (-3, 2))
    assert rs_of("F4").cartan == ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))
    d4 = rs_of("D4").cartan
    assert [sum(1 for x in row if x == -1) for row in d4] == [1, 3, 1, 1]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_positive_roots_match_reflection_closure(name):
    rs = rs_of(name)
    roots = reflection_closure(rs.cartan)
    positive = {r for r in roots if min(r) >= 0}
    assert positive == set(rs.positive_roots)
    assert len(roots) == 2 * len(positive)
    assert len(positive) == POSITIVE_COUNTS[name]


def test_positive_root_examples():
    assert set(rs_of("A2").positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rs_of("A1").positive_roots == ((1,),)
    assert len(rs_of("G2").positive_roots) == 6


@pytest.mark.parametrize("name", ALL_TYPES)
def test_inner_form_matches_killing_summed_over_roots(name):
    rs = rs_of(name)
    gram = killing_gram_from_roots(rs)
    assert [list(r) for r in rs.gram] == gram


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_inner_form_matches_oracle_killing_dual(name):
    assert killing_dual_form_check(algebra_of(name), rs_of(name))


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_positive_root_count_against_oracle_dimension(name):
    rs, L = rs_of(name), algebra_of(name)
    assert len(rs.positive_roots) == (L.dim - rs.rank) // 2


@pytest.mark.parametrize("name", ALL_TYPES)
def test_rho_is_half_the_positive_root_sum(name):
    rs = rs_of(name)
    assert rho(rs) == (1,) * rs.rank
    half = [Fraction(sum(r[i] for r in rs.positive_roots), 2) for i in range(rs.rank)]
    assert list(rs.weight_to_root_coords(rho(rs))) == half


def test_rho_examples():
    assert rho(rs_of("A2")) == (1, 1)
    assert rho(rs_of("A1")) == (1,)
    assert rs_of("B2").weight_to_root_coords((1, 1)) == (Fraction(3, 2), Fraction(2))


def test_killing_inner_examples():
    rs = rs_of("A1")
    assert killing_inner(rs, (2,), (2,)) == Fraction(1, 2)
    assert killing_inner(rs, (1,), (1,)) == Fraction(1, 8)
    for name in ["A2", "G2", "E6"]:
        r = rs_of(name)
        assert killing_inner(r, (0,) * r.rank, rho(r)) == 0
    with pytest.raises(InvalidInputError):
        killing_inner(rs_of("A2"), (1, 0), (1,))


@pytest.mark.parametrize("name", ALL_TYPES)
def test_inner_form_is_symmetric_positive_definite(name):
    g = rs_of(name).gram
    n = len(g)
    assert all(g[i][j] == g[j][i] for i in range(n) for j in range(n))
    # leading principal minors
    for k in range(1, n + 1):
        sub = [list(g[i][:k]) for i in range(k)]
        det = Fraction(1)
        m = [row[:] for row in sub]
        for c in range(k):
            piv = next(r for r in range(c, k) if m[r][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            det *= m[c][c] * (1 if piv == c else -1)
            for r in range(c + 1, k):
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        assert det > 0


def test_reflect_examples_and_errors():
    assert reflect(rs_of("A1"), 1, (1,)) == (-1,)
    assert reflect(rs_of("A2"), 1, (1, 0)) == (-1, 1)
    assert reflect(rs_of("G2"), 2, (0, 0)) == (0, 0)
    with pytest.raises(InvalidInputError):
        reflect(rs_of("A2"), 3, (1, 0))
    with pytest.raises(InvalidInputError):
        reflect(rs_of("A2"), 0, (1, 0))


def test_enumerate_weyl_examples():
    assert sorted(w.length for w in enumerate_weyl(rs_of("A2"))) == [0, 1, 1, 2, 2, 3]
    assert len(enumerate_weyl(rs_of("A1"))) == 2
    b2 = enumerate_weyl(rs_of("B2"))
    assert len(b2) == 8 and max(w.length for w in b2) == 4
    with pytest.raises(GuardrailError):
        enumerate_weyl(rs_of("E6"), limit=1000)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_weyl_order_formula(name):
    assert weyl_order(rs_of(name)) == WEYL_ORDERS[name]


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"])
def test_enumeration_is_complete_and_reduced(name):
    rs = rs_of(name)
    ws = enumerate_weyl(rs)
    assert len(ws) == WEYL_ORDERS[name]
    images = {act(rs, w, rho(rs)) for w in ws}
    assert len(images) == len(ws)
    assert all(inversion_count(rs, w) == w.length for w in ws)
    assert max(w.length for w in ws) == len(rs.positive_roots)


def test_dot_action_examples():
    rs = rs_of("A1")
    s = WeylWord((1,))
    assert dot_action(rs, s, (0,)) == (-2,)
    assert dot_action(rs, s, (2,)) == (-4,)
    assert dot_action(rs, WeylWord(()), (3,)) == (3,)


weights2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
weights3 = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))


@given(st.sampled_from(["A2", "B2", "G2"]), weights2, weights2, st.data())
def test_weyl_invariance_rank2(name, lam, mu, data):
    _check_invariance(name, lam, mu, data)


@given(st.sampled_from(["A3", "B3", "C3"]), weights3, weights3, st.data())
def test_weyl_invariance_rank3(name, lam, mu, data):
    _check_invariance(name, lam, mu, data)


def _check_invariance(name, lam, mu, data):
    rs = rs_of(name)
    ws = enumerate_weyl(rs)
    w = data.draw(st.sampled_from(ws))
    v = data.draw(st.sampled_from(ws))
    assert killing_inner(rs, act(rs, w, lam), act(rs, w, mu)) == killing_inner(rs, lam, mu)
    r = rho(rs)
    assert norm2(rs, add(dot_action(rs, w, lam), r)) == norm2(rs, add(lam, r))
    # (w v) . lam == w . (v . lam)
    assert dot_action(rs, w * v, lam) == dot_action(rs, w, dot_action(rs, v, lam))
    assert reflect(rs, 1, reflect(rs, 1, lam)) == tuple(lam)


def test_dynkin_spec_validation():
    assert str(DynkinSpec.parse("b3")) == "B3"
    DynkinSpec.parse("C2")
    for bad in ["B1", "C1", "D2", "E5", "E9", "F3", "G3", "A0", "Q2", "A", "2A"]:
        with pytest.raises(InvalidInputError):
            DynkinSpec.parse(bad)
    for prod in ["A1xA1", "A1+B2", "A1 A1"]:
        with pytest.raises(InvalidInputError, match="simple types"):
            DynkinSpec.parse(prod)


@pytest.mark.parametrize("name,highest", [
    ("A2", (1, 0)), ("A2", (1, 1)), ("A2", (2, 1)), ("B2", (0, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("G2", (0, 1)),
    ("B3", (0, 0, 1)), ("C3", (0, 1, 0)), ("A3", (1, 0, 1)),
])
def test_freudenthal_matches_oracle_weight_spaces(name, highest):
    rep = irrep_of(name, highest)
    assert character(rs_of(name), highest) == dict(Counter(rep.weights))
    assert weyl_dimension(rs_of(name), highest) == rep.dim


def test_dimension_examples():
    assert weyl_dimension(rs_of("E8"), (0, 0, 0, 0, 0, 0, 0, 1)) == 248
    assert weyl_dimension(rs_of("E6"), (1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dimension(rs_of("F4"), (0, 0, 0, 1)) == 26
