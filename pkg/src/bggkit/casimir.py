"""Scalar Casimir bookkeeping: eigenvalues, c_0, the 2*Laplacian + c_0 identity,
and the eigenvalue products that decide whether a splitting operator exists."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvalidInputError
from .kostant import (
    chain_character,
    decompose_g0_rep,
    laplacian_eigenvalue,
    lowest_weight_data,
)
from .parabolic import ParabolicData
from .rootsys import (
    RootSystem,
    Weight,
    character,
    is_dominant_integral,
    killing_inner,
    neg,
    normalize_weight,
    rho,
)


@dataclass(frozen=True)
class EigenvalueReport:
    lowest_weight: Weight
    casimir: Fraction
    laplacian: Fraction
    c0: Fraction
    identity_holds: bool
    degree: Optional[int] = None
    multiplicity: int = 1


@dataclass(frozen=True)
class LevelComponent:
    lowest_weight: Weight
    eigenvalue: Fraction
    multiplicity: int = 1


@dataclass(frozen=True)
class FiltrationLevel:
    index: int
    grading_eigenvalue: Optional[Fraction]
    components: Tuple[LevelComponent, ...]


@dataclass(frozen=True)
class SplittingReport:
    level: int
    lowest_weight: Weight
    mu0: Fraction
    factors: Tuple[Tuple[int, Tuple[Fraction, ...]], ...]
    product: Fraction
    splits: bool
    note: str = "the P-submodule generated by the target may need fewer factors (not computed)"


def eigenvalue(rs: RootSystem, nu: Sequence, gram: Optional[Sequence[Sequence[Fraction]]] = None) -> Fraction:
    """Casimir scalar on the irreducible with lowest weight -nu: <nu, nu> + 2 <nu, rho>.

    ``gram`` overrides the Killing-normalized form (fundamental-weight basis).
    """
    if gram is None:
        inner = lambda a, b: killing_inner(rs, a, b)  # noqa: E731
    else:
        n = rs.rank

        def inner(a, b):
            return sum((Fraction(a[i]) * gram[i][j] * b[j] for i in range(n) for j in range(n)), Fraction(0))

    return inner(nu, nu) + 2 * inner(nu, rho(rs))


def c0(rs: RootSystem, lam_low: Sequence) -> Fraction:
    """Casimir scalar on V, where -lam_low is the lowest weight of V."""
    if any(Fraction(x).denominator != 1 for x in lam_low):
        raise InvalidInputError(f"lambda_low {tuple(lam_low)} is not integral")
    return eigenvalue(rs, lam_low)


def c0_from_highest(rs: RootSystem, highest: Sequence) -> Fraction:
    """<lambda, lambda + 2 rho> for the highest weight lambda of V."""
    return eigenvalue(rs, highest)


def eigen_report(rs: RootSystem, lam_low: Sequence, lowest_weight: Sequence, degree: Optional[int] = None,
                 multiplicity: int = 1) -> EigenvalueReport:
    nu = neg(lowest_weight)
    cas = eigenvalue(rs, nu)
    lap = laplacian_eigenvalue(rs, lam_low, nu)
    cz = c0(rs, lam_low)
    return EigenvalueReport(normalize_weight(lowest_weight), cas, lap, cz, cas == 2 * lap + cz, degree, multiplicity)


def graded_casimir_audit(pd: ParabolicData, highest: Sequence, k: int) -> List[EigenvalueReport]:
    """One report per g_0-irreducible component of Lambda^k p_+ tensor V."""
    rs = pd.rs
    lam = normalize_weight(highest)
    if not is_dominant_integral(lam):
        raise InvalidInputError(f"highest weight {lam} is not dominant integral")
    if not 0 <= k <= pd.pplus_dim:
        raise InvalidInputError(f"degree {k} out of range 0..{pd.pplus_dim}")
    _, lam_low = lowest_weight_data(rs, lam)
    vw = character(rs, lam)
    comps = decompose_g0_rep(pd, chain_character(pd, vw, k))
    return [eigen_report(rs, lam_low, lw, k, m) for lw, m in comps]


def filtration_from_character(pd: ParabolicData, highest: Sequence) -> List[FiltrationLevel]:
    """Composition levels of V restricted to p, from weights alone.

    For irreducible V the p_+-socle filtration is the grading-element
    eigenspace filtration: level j carries eigenvalue a_0 + j, and the top
    level (the p_+-invariants) has the largest eigenvalue.
    """
    rs = pd.rs
    lam = normalize_weight(highest)
    ge = pd.grading_element
    by_value: Dict[Fraction, Counter] = {}
    for w, m in character(rs, lam).items():
        by_value.setdefault(ge.on_weight(w), Counter())[w] += m
    a0 = min(by_value)
    levels = []
    for val in sorted(by_value):
        comps = tuple(
            LevelComponent(lw, eigenvalue(rs, neg(lw)), m) for lw, m in decompose_g0_rep(pd, by_value[val])
        )
        levels.append(FiltrationLevel(int(val - a0), val, comps))
    return levels


def splitting_factors(pd: Optional[ParabolicData], levels: Sequence[FiltrationLevel],
                      target: Tuple[int, Sequence]) -> SplittingReport:
    """Eigenvalue product prod_{j>i} prod_k (mu_0 - mu^j_k) over distinct mu^j_k per level."""
    i, lw = target
    lw = normalize_weight(lw)
    by_index = {lvl.index: lvl for lvl in levels}
    if i not in by_index:
        raise InvalidInputError(f"level {i} not present in the filtration")
    match = [c for c in by_index[i].components if normalize_weight(c.lowest_weight) == lw]
    if not match:
        raise InvalidInputError(f"no component with lowest weight {lw} at level {i}")
    mu0 = match[0].eigenvalue
    factors = []
    product = Fraction(1)
    for j in sorted(by_index):
        if j <= i:
            continue
        distinct = tuple(sorted({c.eigenvalue for c in by_index[j].components}))
        factors.append((j, distinct))
        for mu in distinct:
            product *= mu0 - mu
    return SplittingReport(i, lw, mu0, tuple(factors), product, product != 0)
