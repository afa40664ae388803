"""Oracle cross-checks for one (type, parabolic, V) case.

Each check compares a fast combinatorial answer with the explicit matrix
realization and returns a :class:`CheckResult`.  The CLI ``verify`` mode and
the acceptance suite both run these.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .casimir import (
    FiltrationLevel,
    LevelComponent,
    eigenvalue,
    filtration_from_character,
    laplacian_eigenvalue,
    splitting_factors,
)
from .guardrails import Guardrails, default_guardrails
from .kostant import chain_character, decompose_g0_rep, homology, levi_dimension, levi_lowest, lowest_weight_data
from .linalg import Echelon, Vec, add_into
from .oracle.algebra import (
    LieAlgebraRealization,
    adapted_basis,
    dual_bases,
    jacobi_holds,
    killing_dual_form_check,
    realize_algebra,
)
from .oracle.chains import ChainComplex, ChainDegreeModule
from .oracle.reps import (
    RepRealization,
    WeightModule,
    build_irrep,
    casimir_from_bases,
    casimir_matrix,
    g0_casimir_apply,
    g0_casimir_data,
    g0_casimir_formula,
    levi_highest_weight_vectors,
    p_filtration,
)
from .errors import InvalidInputError, InvariantError
from .parabolic import ParabolicData, filtration_pairing_check, make_parabolic
from .rootsys import DynkinSpec, RootSystem, Weight, build_root_system, character, neg, normalize_weight


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Case:
    """Lazily built oracle objects for one case."""

    rs: RootSystem
    crossed: Tuple[int, ...]
    highest: Weight
    guardrails: Guardrails = field(default_factory=default_guardrails)

    @cached_property
    def pd(self) -> ParabolicData:
        return make_parabolic(self.rs, self.crossed)

    @cached_property
    def algebra(self) -> LieAlgebraRealization:
        return realize_algebra(self.rs, self.guardrails.algebra_dim)

    @cached_property
    def rep(self) -> RepRealization:
        return build_irrep(self.algebra, self.highest, self.guardrails.rep_dim)

    @cached_property
    def chains(self) -> ChainComplex:
        return ChainComplex(self.pd, self.rep, self.guardrails.chain_dim)

    @cached_property
    def lam_low(self) -> Weight:
        return lowest_weight_data(self.rs, self.highest)[1]

    @cached_property
    def c0_matrix(self) -> Optional[Fraction]:
        """Casimir scalar on V read off the oracle matrix (None if not scalar)."""
        return casimir_matrix(self.algebra, self.rep).scalar_value()


def check_killing(case: Case) -> CheckResult:
    try:
        killing_dual_form_check(case.algebra, case.rs)
    except InvariantError as exc:
        return CheckResult("killing_normalization", False, str(exc))
    return CheckResult("killing_normalization", True, "dual of the realized Killing form equals the inner form")


def check_jacobi(case: Case) -> CheckResult:
    ok = jacobi_holds(case.algebra)
    return CheckResult("jacobi", ok, f"dim g = {case.algebra.dim}")


def check_grading_pairing(case: Case) -> CheckResult:
    res = filtration_pairing_check(case.pd, case.algebra)
    bad = [k for k, v in res["pairs"].items() if v in ("DEGENERATE", "NONZERO")]
    return CheckResult("grading_pairing", bool(res["ok"]), "all layer pairings as expected" if not bad else f"bad: {bad}")


def check_adapted_basis(case: Case) -> CheckResult:
    try:
        ab = adapted_basis(case.algebra, case.pd)
    except InvariantError as exc:
        return CheckResult("adapted_basis", False, str(exc))
    basis, dual = dual_bases(case.algebra)
    same = casimir_from_bases(case.rep, ab.frame(), ab.dual_frame()) == casimir_from_bases(case.rep, basis, dual)
    return CheckResult("adapted_basis", same, "adapted-frame Casimir equals the dual-basis Casimir" if same else
                       "Casimir depends on the basis")


def check_casimir_scalar(case: Case) -> CheckResult:
    c = case.c0_matrix
    expected = eigenvalue(case.rs, case.highest)
    from_low = eigenvalue(case.rs, case.lam_low)
    ok = c is not None and c == expected == from_low
    return CheckResult("casimir_scalar", ok, f"matrix {c}, <lam, lam+2rho> = {expected}, from lowest weight {from_low}")


def check_d_star_squared(case: Case) -> CheckResult:
    res = case.chains.squares_to_zero()
    bad = [k for k, v in res.items() if not v]
    return CheckResult("d_star_squared_zero", not bad, f"degrees 2..{case.chains.n}" if not bad else f"fails in {bad}")


def check_homology(case: Case) -> CheckResult:
    brute = case.chains.homology_components()
    fast = homology(case.pd, case.highest, case.guardrails.weyl_order).multiset()
    ok = brute == fast
    detail = f"{sum(fast.values())} components" if ok else f"brute {sorted(brute.items())} vs fast {sorted(fast.items())}"
    return CheckResult("homology_matches_kostant", ok, detail)


def check_pplus_on_homology(case: Case) -> CheckResult:
    ok, msg = case.chains.pplus_preserves_image()
    return CheckResult("pplus_maps_ker_to_im", ok, msg or "exact membership in every weight block")


def check_euler(case: Case) -> CheckResult:
    cc = case.chains
    lhs = cc.euler_characteristic()
    diag = homology(case.pd, case.highest, case.guardrails.weyl_order)
    rhs = sum((-1) ** c.degree * levi_dimension(case.pd, c.lowest_weight) for c in diag.components)
    brute = sum((-1) ** k * d for k, d in enumerate(cc.homology_dims()))
    ok = lhs == rhs == brute
    return CheckResult("euler_characteristic", ok, f"chains {lhs}, Kostant {rhs}, brute homology {brute}")


def _eigen_on(data, module: WeightModule, vec: Vec) -> Optional[Fraction]:
    """Scalar c with formula(vec) == c * vec, else None."""
    img = g0_casimir_apply(data, module, vec)
    k, x = next(iter(vec.items()))
    c = img.get(k, Fraction(0)) / x
    diff = dict(img)
    add_into(diff, vec, -c)
    return None if diff else c


@dataclass(frozen=True)
class ChainComponentAudit:
    degree: int
    lowest_weight: Weight
    casimir_matrix: Optional[Fraction]
    casimir_formula: Fraction
    laplacian: Fraction
    c0: Fraction
    identity_holds: bool


def chain_component_audit(case: Case) -> List[ChainComponentAudit]:
    """Every g_0-component of every Lambda^k p_+ (x) V.

    The Casimir side is the g_0-level Casimir formula applied to the
    component's Levi highest weight vector; c_0 is the scalar of the oracle
    Casimir matrix on V; the Laplacian uses its closed formula.
    """
    cc = case.chains
    data = g0_casimir_data(case.algebra, case.pd)
    c0 = case.c0_matrix
    out = []
    for k in range(cc.n + 1):
        module = ChainDegreeModule(cc, k)
        for mu, vecs in sorted(cc.levi_highest_vectors(k).items()):
            lw = levi_lowest(case.pd, mu)
            nu = neg(lw)
            formula = eigenvalue(case.rs, nu)
            lap = laplacian_eigenvalue(case.rs, case.lam_low, nu)
            for v in vecs:
                cm = _eigen_on(data, module, v)
                holds = cm is not None and c0 is not None and cm == formula == 2 * lap + c0
                out.append(ChainComponentAudit(k, lw, cm, formula, lap, c0, holds))
    return out


def check_laplacian_identity(case: Case) -> List[CheckResult]:
    audit = chain_component_audit(case)
    bad = [a for a in audit if not a.identity_holds]
    res = [CheckResult("laplacian_identity", not bad, f"{len(audit)} components" if not bad else f"fails: {bad[:3]}")]
    zero = Counter((a.degree, a.lowest_weight) for a in audit if a.laplacian == 0)
    fast = homology(case.pd, case.highest, case.guardrails.weyl_order).multiset()
    ok = zero == fast
    res.append(CheckResult("laplacian_kernel_is_homology", ok,
                           "Laplacian vanishes exactly on the homology components" if ok else
                           f"zero set {sorted(zero.items())} vs homology {sorted(fast.items())}"))
    oracle = Counter((a.degree, a.lowest_weight) for a in audit)
    vw = character(case.rs, case.highest)
    fastc: Counter = Counter()
    for k in range(case.chains.n + 1):
        for lw, m in decompose_g0_rep(case.pd, chain_character(case.pd, vw, k)):
            fastc[(k, lw)] += m
    ok = oracle == fastc
    res.append(CheckResult("chain_components_match_character", ok,
                           "highest-weight vectors agree with character peeling" if ok else "component multisets differ"))
    return res


def oracle_filtration_levels(case: Case) -> Tuple[List[FiltrationLevel], List[CheckResult]]:
    """p-filtration of V from the matrices, with g_0-level Casimir formula eigenvalues per component."""
    pf = p_filtration(case.pd, case.rep)
    data = g0_casimir_data(case.algebra, case.pd)
    L = case.algebra
    lowering = [L.f_index[tuple(int(j == i - 1) for j in range(case.rs.rank))] for i in case.pd.levi_nodes]
    levels: List[FiltrationLevel] = []
    trivial = all(l.pplus_trivial for l in pf.levels)
    cas_ok = True
    detail = []
    for lvl in pf.levels:
        q = lvl.quotient
        try:
            mat = g0_casimir_formula(L, case.pd, q)
        except InvalidInputError as exc:  # quotient is not p_+-trivial
            cas_ok = False
            detail.append(f"level {lvl.index}: {exc}")
            continue
        comps: Counter = Counter()
        for mu, vecs in levi_highest_weight_vectors(case.pd, q).items():
            lw = levi_lowest(case.pd, mu)
            expected = eigenvalue(case.rs, neg(lw))
            for v in vecs:
                # the g_0-irreducible generated by v, closed under Levi lowering
                ech = Echelon()
                ech.add(v)
                span = [v]
                frontier = [v]
                while frontier:
                    nxt = []
                    for u in frontier:
                        for f in lowering:
                            w = q.act(f, u)
                            if w and ech.add(w) is None:
                                span.append(w)
                                nxt.append(w)
                    frontier = nxt
                for u in span:
                    img = mat.apply(u)
                    diff = dict(img)
                    add_into(diff, u, -expected)
                    if diff:
                        cas_ok = False
                        detail.append(f"level {lvl.index}, component {lw}: not {expected} * id")
                        break
                comps[(lw, expected)] += 1
        levels.append(FiltrationLevel(lvl.index, lvl.grading_eigenvalue,
                                      tuple(LevelComponent(lw, ev, m) for (lw, ev), m in sorted(comps.items()))))
    results = [
        CheckResult("filtration_pplus_trivial", trivial, f"dims {pf.dims}"),
        CheckResult("filtration_ladder", pf.ladder_ok(),
                    "grading eigenvalues " + ", ".join(str(l.grading_eigenvalue) for l in pf.levels)),
        CheckResult("casimir_formula_on_quotients", cas_ok, "; ".join(detail) or "scalar on every irreducible subquotient"),
    ]
    fast = filtration_from_character(case.pd, case.highest)
    agree = [(f.index, f.grading_eigenvalue, tuple(sorted(f.components, key=lambda c: c.lowest_weight))) for f in fast] == [
        (l.index, l.grading_eigenvalue, tuple(sorted(l.components, key=lambda c: c.lowest_weight))) for l in levels]
    results.append(CheckResult("filtration_matches_character", agree,
                               "oracle and character filtrations agree" if agree else "filtrations differ"))
    return levels, results


def check_splitting(levels: Sequence[FiltrationLevel]) -> CheckResult:
    """splits iff no higher-level eigenvalue equals mu_0; a planted collision must not split."""
    problems = []
    count = 0
    top = max(l.index for l in levels)
    for lvl in levels:
        for comp in lvl.components:
            count += 1
            rep = splitting_factors(None, levels, (lvl.index, comp.lowest_weight))
            expect = all(mu != rep.mu0 for _, mus in rep.factors for mu in mus)
            if rep.splits != expect or (rep.product != 0) != expect:
                problems.append(f"level {lvl.index} {comp.lowest_weight}")
            # plant mu_0 one level higher
            planted = LevelComponent((0,) * len(comp.lowest_weight), rep.mu0, 1)
            j = lvl.index + 1
            if j <= top:
                mod = [replace(l, components=l.components + (planted,)) if l.index == j else l for l in levels]
            else:
                mod = list(levels) + [FiltrationLevel(j, None, (planted,))]
            bad = splitting_factors(None, mod, (lvl.index, comp.lowest_weight))
            if bad.splits or bad.product != 0:
                problems.append(f"planted collision at level {j} still splits")
    return CheckResult("splitting_condition", not problems,
                       f"{count} targets, plus planted collisions" if not problems else "; ".join(problems[:3]))


def run_checks(case: Case) -> List[CheckResult]:
    out = [
        check_killing(case),
        check_jacobi(case),
        check_grading_pairing(case),
        check_adapted_basis(case),
        check_casimir_scalar(case),
        check_d_star_squared(case),
        check_homology(case),
        check_pplus_on_homology(case),
        check_euler(case),
    ]
    out.extend(check_laplacian_identity(case))
    levels, res = oracle_filtration_levels(case)
    out.extend(res)
    out.append(check_splitting(levels))
    return out


def make_case(type_name: str, crossed: Sequence[int], highest: Sequence[int],
              guardrails: Optional[Guardrails] = None) -> Case:
    rs = build_root_system(DynkinSpec.parse(type_name))
    return Case(rs, tuple(sorted(crossed)), normalize_weight(highest), guardrails or default_guardrails())


SUITE_TYPES = ("A1", "A2", "B2", "A3", "B3", "C3", "G2")

# acceptance criterion -> the checks that decide it
CRITERIA: Dict[int, Tuple[str, ...]] = {
    1: ("d_star_squared_zero",),
    2: ("homology_matches_kostant",),
    3: ("casimir_scalar", "killing_normalization"),
    4: ("casimir_formula_on_quotients",),
    5: ("laplacian_identity", "laplacian_kernel_is_homology", "chain_components_match_character"),
    6: ("euler_characteristic",),
    7: ("filtration_pplus_trivial", "filtration_ladder", "splitting_condition"),
    8: ("pplus_maps_ker_to_im",),
}


def suite_cases(types: Sequence[str] = SUITE_TYPES) -> List[Tuple[str, Tuple[int, ...], str, Weight]]:
    """(type, crossed, V label, highest weight): Borel and every single crossed node,
    V trivial, adjoint and first fundamental."""
    out = []
    for t in types:
        rs = build_root_system(DynkinSpec.parse(t))
        n = rs.rank
        reps = [
            ("trivial", (0,) * n),
            ("adjoint", rs.root_to_weight(rs.highest_root)),
            ("fundamental", tuple(int(i == 0) for i in range(n))),
        ]
        parabolics = [tuple(range(1, n + 1))] + [(i,) for i in range(1, n + 1) if n > 1]
        for cr in parabolics:
            for label, lam in reps:
                out.append((t, cr, label, normalize_weight(lam)))
    return out
