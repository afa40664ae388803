"""Representations of a realized algebra: irreducibles, Casimir matrices,
the g_0-level Casimir formula on p_+-trivial modules, and the p_+-socle
filtration of a p-module."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import InvalidInputError, InvariantError
from ..guardrails import default_guardrails
from ..kostant import levi_lowest
from ..linalg import Echelon, Mat, Vec, add_into, commutator, inverse, kernel_of_columns
from ..parabolic import ParabolicData
from ..rootsys import Weight, normalize_weight
from .algebra import LieAlgebraRealization, apply_recipe, dual_bases, highest_weight_module


class WeightModule:
    """A module with a weight basis: subclasses provide ``weights`` and ``act``."""

    algebra: LieAlgebraRealization
    weights: List[Weight]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def act(self, a: int, vec: Vec) -> Vec:  # pragma: no cover - interface
        raise NotImplementedError

    def act_element(self, x: Vec, vec: Vec) -> Vec:
        out: Vec = {}
        for a, c in x.items():
            add_into(out, self.act(a, vec), c)
        return out

    def matrix(self, a: int) -> Mat:
        return Mat(self.dim, self.dim, {m: v for m in range(self.dim) if (v := self.act(a, {m: Fraction(1)}))})

    @cached_property
    def weight_spaces(self) -> Dict[Weight, List[int]]:
        out: Dict[Weight, List[int]] = {}
        for m, w in enumerate(self.weights):
            out.setdefault(w, []).append(m)
        return out


@dataclass(eq=False)
class RepRealization(WeightModule):
    algebra: LieAlgebraRealization
    highest: Weight
    weights: List[Weight]
    mats: List[Mat]

    def act(self, a: int, vec: Vec) -> Vec:
        return self.mats[a].apply(vec)

    def matrix(self, a: int) -> Mat:
        return self.mats[a]

    def element(self, x: Vec) -> Mat:
        out = Mat(self.dim, self.dim)
        for a, c in x.items():
            out = out.combine(self.mats[a], c)
        return out


def build_irrep(L: LieAlgebraRealization, highest: Sequence, max_dim: Optional[int] = None) -> RepRealization:
    limit = default_guardrails().rep_dim if max_dim is None else max_dim
    mod = highest_weight_module(L.rs, highest, limit)
    return RepRealization(L, mod.highest, mod.weights, apply_recipe(mod, L.recipe))


def homomorphism_holds(rep: RepRealization) -> bool:
    """rho([a, b]) == rho(a) rho(b) - rho(b) rho(a) on every basis pair."""
    L = rep.algebra
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            if rep.element(L.bracket(a, b)) != commutator(rep.mats[a], rep.mats[b]):
                return False
    return True


def casimir_from_bases(module: WeightModule, basis: Sequence[Vec], dual: Sequence[Vec]) -> Mat:
    """sum_l xi^l . xi_l . v as a matrix."""
    n = module.dim
    cols: Dict[int, Vec] = {}
    for m in range(n):
        out: Vec = {}
        e = {m: Fraction(1)}
        for x, y in zip(basis, dual):
            add_into(out, module.act_element(x, module.act_element(y, e)))
        if out:
            cols[m] = out
    return Mat(n, n, cols)


def casimir_matrix(L: LieAlgebraRealization, rep: RepRealization) -> Mat:
    basis, dual = dual_bases(L)
    if isinstance(rep, RepRealization):
        out = Mat(rep.dim, rep.dim)
        for x, y in zip(basis, dual):
            out = out + rep.element(x) @ rep.element(y)
        return out
    return casimir_from_bases(rep, basis, dual)


@dataclass
class G0CasimirData:
    """B-dual bases used by the g_0-level Casimir formula."""

    trace_term: Vec  # sum_i [Z^i, X_i]
    A: List[Vec]
    A_dual: List[Vec]
    pplus: List[int]


def g0_casimir_data(L: LieAlgebraRealization, pd: ParabolicData) -> G0CasimirData:
    idx = L.indices(pd)
    M = [[L.killing[x][z] for z in idx["pplus"]] for x in idx["gminus"]]
    Minv = inverse(M) if M else []
    trace: Vec = {}
    for i, z in enumerate(idx["pplus"]):
        X = {idx["gminus"][r]: Minv[i][r] for r in range(len(Minv)) if Minv[i][r]}
        add_into(trace, L.bracket_vec({z: Fraction(1)}, X))
    g0 = idx["g0"]
    Bg = [[L.killing[a][b] for b in g0] for a in g0]
    Bginv = inverse(Bg)
    A = [{a: Fraction(1)} for a in g0]
    A_dual = [{g0[s]: Bginv[s][r] for s in range(len(g0)) if Bginv[s][r]} for r in range(len(g0))]
    return G0CasimirData(trace, A, A_dual, idx["pplus"])


def g0_casimir_apply(data: G0CasimirData, module: WeightModule, vec: Vec) -> Vec:
    """w -> -sum_i [Z^i, X_i] . w + sum_r A^r . A_r . w."""
    out = module.act_element(data.trace_term, vec)
    out = {k: -v for k, v in out.items()}
    for a, ad in zip(data.A, data.A_dual):
        add_into(out, module.act_element(ad, module.act_element(a, vec)))
    return out


def g0_casimir_formula(L: LieAlgebraRealization, pd: ParabolicData, module: WeightModule,
                       check_trivial: bool = True) -> Mat:
    """Matrix of the g_0-level Casimir formula on a module where p_+ acts trivially."""
    data = g0_casimir_data(L, pd)
    n = module.dim
    if check_trivial:
        for z in data.pplus:
            for m in range(n):
                if module.act(z, {m: Fraction(1)}):
                    raise InvalidInputError("p_+ acts nontrivially; the formula needs a p_+-trivial module")
    cols = {m: v for m in range(n) if (v := g0_casimir_apply(data, module, {m: Fraction(1)}))}
    return Mat(n, n, cols)


@dataclass(eq=False)
class Subquotient(WeightModule):
    """Quotient upper/lower of a p-stable pair of subspaces, in a weight basis."""

    parent: WeightModule
    lower: List[Vec]
    complement: List[Vec]
    weights: List[Weight]

    def __post_init__(self) -> None:
        self.algebra = self.parent.algebra
        self._ech = Echelon(track=True)
        for v in self.lower:
            self._ech.add(v)
        for v in self.complement:
            if self._ech.add(v) is not None:
                raise InvariantError("complement vectors are dependent modulo the lower subspace")
        self._off = len(self.lower)

    def lift(self, vec: Vec) -> Vec:
        out: Vec = {}
        for k, c in vec.items():
            add_into(out, self.complement[k], c)
        return out

    def project(self, parent_vec: Vec) -> Vec:
        coeffs = self._ech.express(parent_vec)
        if coeffs is None:
            raise InvariantError("vector left the upper subspace")
        return {k - self._off: c for k, c in coeffs.items() if k >= self._off and c}

    def act(self, a: int, vec: Vec) -> Vec:
        return self.project(self.parent.act(a, self.lift(vec)))


def weight_graded_complement(module: WeightModule, upper: List[Vec], lower: List[Vec]) -> Tuple[List[Vec], List[Weight]]:
    """Weight vectors completing ``lower`` to ``upper`` (both h-stable)."""
    comp: List[Vec] = []
    wts: List[Weight] = []
    for w, idxs in sorted(module.weight_spaces.items(), key=lambda t: tuple(-x for x in t[0])):
        s = set(idxs)
        ech = Echelon()
        for v in lower:
            p = {k: c for k, c in v.items() if k in s}
            if p:
                ech.add(p)
        for v in upper:
            p = {k: c for k, c in v.items() if k in s}
            if p and ech.add(p) is None:
                comp.append(p)
                wts.append(w)
    return comp, wts


def levi_highest_weight_vectors(pd: ParabolicData, module: WeightModule) -> Dict[Weight, List[Vec]]:
    """Joint kernel of the Levi simple raising operators in each weight space."""
    L = module.algebra
    raising = [L.e_index[tuple(int(j == i - 1) for j in range(pd.rs.rank))] for i in pd.levi_nodes]
    out: Dict[Weight, List[Vec]] = {}
    for w, idxs in module.weight_spaces.items():
        if not raising:
            out[w] = [{m: Fraction(1)} for m in idxs]
            continue
        cols = []
        for m in idxs:
            img: Vec = {}
            for r, a in enumerate(raising):
                for k, c in module.act(a, {m: Fraction(1)}).items():
                    img[k * len(raising) + r] = c
            cols.append(img)
        ker = kernel_of_columns(cols)
        if ker:
            out[w] = [{idxs[t]: c for t, c in v.items()} for v in ker]
    return out


def g0_components(pd: ParabolicData, module: WeightModule) -> Counter:
    """Lowest weights (with multiplicity) of the g_0-irreducible summands."""
    out: Counter = Counter()
    for w, vecs in levi_highest_weight_vectors(pd, module).items():
        out[levi_lowest(pd, w)] += len(vecs)
    return out


@dataclass
class FiltrationLevelData:
    index: int
    quotient: Subquotient
    grading_eigenvalue: Optional[Fraction]
    pplus_trivial: bool
    components: Counter


@dataclass
class PFiltration:
    subspaces: List[List[Vec]]  # W^N, W^{N-1}, ..., W^0
    levels: List[FiltrationLevelData]  # indexed by j: W^j / W^{j+1}

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.subspaces)

    @property
    def depth(self) -> int:
        return len(self.subspaces) - 1

    def ladder_ok(self) -> bool:
        vals = [lvl.grading_eigenvalue for lvl in self.levels]
        if any(v is None for v in vals):
            return False
        return all(vals[j + 1] - vals[j] == 1 for j in range(len(vals) - 1))


def _preimage(module: WeightModule, pplus: List[int], target: List[Vec]) -> List[Vec]:
    """{w : Z w in span(target) for all Z in p_+}."""
    ech = Echelon()
    for v in target:
        ech.add(v)
    n = module.dim
    k = len(pplus)
    cols = []
    for m in range(n):
        img: Vec = {}
        for r, z in enumerate(pplus):
            res = ech.residue(module.act(z, {m: Fraction(1)}))
            for i, c in res.items():
                img[i * k + r] = c
        cols.append(img)
    return kernel_of_columns(cols)


def p_filtration(pd: ParabolicData, module: WeightModule) -> PFiltration:
    """W^N = p_+-invariants, W^{j-1} = {w : p_+ . w in W^j}, up to all of W."""
    L = module.algebra
    pplus = L.indices(pd)["pplus"]
    n = module.dim
    subspaces: List[List[Vec]] = []
    current: List[Vec] = []
    while len(current) < n:
        nxt = _preimage(module, pplus, current)
        if len(nxt) <= len(current):
            raise InvariantError("p_+ does not act nilpotently; filtration stalled")
        subspaces.append(nxt)
        current = nxt
    N = len(subspaces) - 1
    ge = pd.grading_element
    levels = []
    for j in range(N + 1):
        upper = subspaces[N - j]
        lower = subspaces[N - j - 1] if j < N else []
        comp, wts = weight_graded_complement(module, upper, lower)
        q = Subquotient(module, lower, comp, wts)
        evs = {ge.on_weight(w) for w in wts}
        grading = evs.pop() if len(evs) == 1 else None
        trivial = all(not q.act(z, {m: Fraction(1)}) for z in pplus for m in range(q.dim))
        levels.append(FiltrationLevelData(j, q, grading, trivial, g0_components(pd, q)))
    return PFiltration(subspaces, levels)


def restrict_hw(vec_by_weight: Dict[Weight, List[Vec]]) -> List[Tuple[Weight, Vec]]:
    return [(w, v) for w in sorted(vec_by_weight) for v in vec_by_weight[w]]
