"""Matrix realization of a simple Lie algebra over the rationals.

Everything is derived from the Cartan matrix alone.  An irreducible highest
weight module is built weight space by weight space: at each weight the
vectors f_j b span the space, and a combination is zero exactly when every
raising operator e_i kills it (no singular vectors below the top in an
irreducible module).  The Lie algebra is the matrix algebra generated by
e_i, f_i, h_i on the adjoint module; root vectors are iterated brackets
E_beta = [e_i, E_{beta - alpha_i}], F_beta = [f_i, F_{beta - alpha_i}], and
the same recipe applied in any module gives a representation of the same
basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import GuardrailError, InvalidInputError, InvariantError
from ..guardrails import default_guardrails
from ..linalg import Echelon, Mat, Vec, add_into, commutator, inverse, scaled
from ..parabolic import ParabolicData
from ..rootsys import Root, RootSystem, Weight, add, is_dominant_integral, normalize_weight, sub, weyl_dimension

# recipe entries: ("e", i) | ("f", i) | ("h", i) | ("ce", i, a) | ("cf", i, a)
Recipe = Tuple


@dataclass
class HighestWeightModule:
    highest: Weight
    weights: List[Weight]
    e: List[Mat]
    f: List[Mat]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def h(self, i: int) -> Mat:
        """Cartan generator h_i (0-based) acting diagonally by weight coordinate i."""
        return Mat(self.dim, self.dim, {v: {v: Fraction(w[i])} for v, w in enumerate(self.weights) if w[i]})


def highest_weight_module(rs: RootSystem, highest: Sequence, max_dim: Optional[int] = None) -> HighestWeightModule:
    """Irreducible module L(highest) with exact matrices for e_i, f_i."""
    lam = normalize_weight(highest)
    n = rs.rank
    if len(lam) != n:
        raise InvalidInputError(f"highest weight must have {n} entries")
    if not is_dominant_integral(lam):
        raise InvalidInputError(f"highest weight {lam} is not dominant integral")
    expected = int(weyl_dimension(rs, lam))
    if max_dim is not None and expected > max_dim:
        raise GuardrailError(f"dim L({lam}) = {expected} exceeds the representation guardrail {max_dim}")
    alphas = [rs.cartan[i] for i in range(n)]
    weights: List[Weight] = [lam]
    spaces: Dict[Weight, List[int]] = {lam: [0]}
    ecols: List[Dict[int, Vec]] = [{} for _ in range(n)]
    fcols: List[Dict[int, Vec]] = [{} for _ in range(n)]
    layer = [lam]
    while layer:
        targets = sorted({sub(mu, alphas[j]) for mu in layer for j in range(n)}, key=lambda w: tuple(-x for x in w))
        next_layer = []
        for nu in targets:
            ech = Echelon(track=True)
            cands: List[Tuple[int, int]] = []
            parts_list: List[List[Vec]] = []
            chosen: Dict[int, int] = {}  # insertion index -> global basis index
            for j in range(n):
                src = add(nu, alphas[j])
                for b in spaces.get(src, ()):
                    parts = []
                    for i in range(n):
                        vec: Vec = {}
                        eb = ecols[i].get(b)
                        if eb:
                            for c, x in eb.items():
                                fc = fcols[j].get(c)
                                if fc:
                                    add_into(vec, fc, x)
                        if i == j and weights[b][i]:
                            add_into(vec, {b: Fraction(1)}, Fraction(weights[b][i]))
                        parts.append(vec)
                    image: Vec = {}
                    for p in parts:
                        image.update(p)
                    ins = len(cands)
                    cands.append((j, b))
                    parts_list.append(parts)
                    rel = ech.add(image)
                    if rel is None:
                        g = len(weights)
                        weights.append(nu)
                        spaces.setdefault(nu, []).append(g)
                        chosen[ins] = g
                        fcols[j][b] = {g: Fraction(1)}
                        for i in range(n):
                            if parts[i]:
                                ecols[i][g] = parts[i]
                    else:
                        self_c = rel.pop(ins)
                        col = {chosen[k]: -c / self_c for k, c in rel.items() if c}
                        if col:
                            fcols[j][b] = col
            if nu in spaces:
                next_layer.append(nu)
        layer = next_layer
    dim = len(weights)
    if dim != expected:
        raise InvariantError(f"built dimension {dim} differs from the Weyl dimension {expected} for {lam}")
    e = [Mat(dim, dim, ecols[i]) for i in range(n)]
    f = [Mat(dim, dim, fcols[i]) for i in range(n)]
    return HighestWeightModule(lam, weights, e, f)


def apply_recipe(module: HighestWeightModule, recipe: Sequence[Recipe]) -> List[Mat]:
    """Matrices of every algebra basis element in the given module."""
    mats: List[Mat] = []
    for r in recipe:
        kind = r[0]
        if kind == "e":
            mats.append(module.e[r[1]])
        elif kind == "f":
            mats.append(module.f[r[1]])
        elif kind == "h":
            mats.append(module.h(r[1]))
        elif kind == "ce":
            mats.append(commutator(module.e[r[1]], mats[r[2]]))
        elif kind == "cf":
            mats.append(commutator(module.f[r[1]], mats[r[2]]))
        else:  # pragma: no cover
            raise ValueError(kind)
    return mats


def _recipe(rs: RootSystem) -> Tuple[List[Recipe], List[str], List[Optional[Root]]]:
    """Basis order: E_beta (positive roots in order), H_1..H_r, F_beta."""
    n = rs.rank
    pos = rs.positive_roots
    npos = len(pos)
    e_slot = {}
    recipe: List[Recipe] = []
    labels: List[str] = []
    roots: List[Optional[Root]] = []
    # E block is filled in root order; each non-simple root uses the first
    # simple root it can be lowered by, whose E vector precedes it.
    for k, beta in enumerate(pos):
        if sum(beta) == 1:
            i = beta.index(1)
            recipe.append(("e", i))
        else:
            i = next(i for i in range(n) if beta[i] > 0 and tuple(b - int(j == i) for j, b in enumerate(beta)) in e_slot)
            gamma = tuple(b - int(j == i) for j, b in enumerate(beta))
            recipe.append(("ce", i, e_slot[gamma]))
        e_slot[beta] = k
        labels.append("E" + "".join(str(c) for c in beta))
        roots.append(beta)
    for i in range(n):
        recipe.append(("h", i))
        labels.append(f"H{i + 1}")
        roots.append(None)
    off = npos + n
    for k, r in enumerate(recipe[:npos]):
        if r[0] == "e":
            recipe.append(("f", r[1]))
        else:
            recipe.append(("cf", r[1], r[2] + off))
        labels.append("F" + "".join(str(c) for c in pos[k]))
        roots.append(tuple(-c for c in pos[k]))
    return recipe, labels, roots


@dataclass(eq=False)
class LieAlgebraRealization:
    rs: RootSystem
    labels: List[str]
    roots: List[Optional[Root]]
    recipe: List[Recipe]
    brackets: Dict[Tuple[int, int], Vec]  # a < b only
    killing: List[List[Fraction]]

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def e_index(self) -> Dict[Root, int]:
        return {r: a for a, r in enumerate(self.roots) if r is not None and min(r) >= 0}

    @cached_property
    def f_index(self) -> Dict[Root, int]:
        return {tuple(-c for c in r): a for a, r in enumerate(self.roots) if r is not None and max(r) <= 0}

    @cached_property
    def h_indices(self) -> List[int]:
        return [a for a, r in enumerate(self.roots) if r is None]

    def bracket(self, a: int, b: int) -> Vec:
        if a == b:
            return {}
        if a < b:
            return self.brackets.get((a, b), {})
        return scaled(self.brackets.get((b, a), {}), Fraction(-1))

    def bracket_vec(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for a, u in x.items():
            for b, v in y.items():
                c = self.bracket(a, b)
                if c:
                    add_into(out, c, u * v)
        return out

    @cached_property
    def ad(self) -> List[Mat]:
        return [Mat(self.dim, self.dim, {b: dict(self.bracket(a, b)) for b in range(self.dim) if self.bracket(a, b)})
                for a in range(self.dim)]

    def form(self, x: Vec, y: Vec) -> Fraction:
        B = self.killing
        return sum((u * v * B[a][b] for a, u in x.items() for b, v in y.items()), Fraction(0))

    @cached_property
    def killing_inverse(self) -> List[List[Fraction]]:
        return inverse(self.killing)

    def weight_of(self, a: int) -> Weight:
        r = self.roots[a]
        return (0,) * self.rs.rank if r is None else self.rs.root_to_weight(r)

    def degree_of(self, pd: ParabolicData, a: int) -> int:
        r = self.roots[a]
        return 0 if r is None else pd.layer_of(r)

    def indices(self, pd: ParabolicData) -> Dict[str, List[int]]:
        """Basis indices of p_+, g_0 and g_- for a parabolic."""
        out: Dict[str, List[int]] = {"pplus": [], "g0": [], "gminus": []}
        for a in range(self.dim):
            d = self.degree_of(pd, a)
            out["pplus" if d > 0 else "g0" if d == 0 else "gminus"].append(a)
        return out


def _decompose(mat: Mat, root: Optional[Root], basis: List[Mat], slot: Dict[Root, int], h_ech: Echelon,
               h_slots: List[int], module: HighestWeightModule) -> Vec:
    if mat.is_zero():
        return {}
    if root is None:
        diag = {v: mat.entry(v, v) for v in range(module.dim) if mat.entry(v, v)}
        coeffs = h_ech.express(diag)
        if coeffs is None:
            raise InvariantError("weight-zero bracket is not in the Cartan span")
        out = {h_slots[i]: c for i, c in coeffs.items() if c}
        check = Mat(module.dim, module.dim)
        for a, c in out.items():
            check = check.combine(basis[a], c)
        if check != mat:
            raise InvariantError("weight-zero bracket is not diagonal in the Cartan span")
        return out
    a = slot.get(root)
    if a is None:
        raise InvariantError(f"nonzero bracket at non-root {root}")
    ref = basis[a]
    j, col = next(iter(ref.cols.items()))
    i, x = next(iter(col.items()))
    c = mat.entry(i, j) / x
    if ref.scale(c) != mat:
        raise InvariantError(f"bracket is not proportional to the root vector of {root}")
    return {a: c}


def realize_algebra(rs: RootSystem, max_dim: Optional[int] = None) -> LieAlgebraRealization:
    """Structure constants and Killing matrix, from matrices on the adjoint module."""
    limit = default_guardrails().algebra_dim if max_dim is None else max_dim
    if rs.dimension > limit:
        raise GuardrailError(f"dim {rs.name} = {rs.dimension} exceeds the algebra guardrail {limit}")
    recipe, labels, roots = _recipe(rs)
    adj = highest_weight_module(rs, rs.root_to_weight(rs.highest_root))
    mats = apply_recipe(adj, recipe)
    slot = {r: a for a, r in enumerate(roots) if r is not None}
    h_slots = [a for a, r in enumerate(roots) if r is None]
    h_ech = Echelon(track=True)
    for a in h_slots:
        h_ech.add({v: mats[a].entry(v, v) for v in range(adj.dim) if mats[a].entry(v, v)})
    dim = len(recipe)
    brackets: Dict[Tuple[int, int], Vec] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            ra, rb = roots[a], roots[b]
            if ra is None and rb is None:
                continue
            if ra is None or rb is None:
                # [H_i, X_beta] = beta(h_i) X_beta
                x, r = (b, rb) if ra is None else (a, ra)
                hi = h_slots.index(a if ra is None else b)
                val = Fraction(rs.root_to_weight(r)[hi])
                if val:
                    brackets[(a, b)] = {x: val if ra is None else -val}
                continue
            s = tuple(p + q for p, q in zip(ra, rb))
            target = None if not any(s) else s
            if target is not None and target not in slot:
                continue
            vec = _decompose(commutator(mats[a], mats[b]), target, mats, slot, h_ech, h_slots, adj)
            if vec:
                brackets[(a, b)] = vec
    alg = LieAlgebraRealization(rs, labels, roots, recipe, brackets, [])
    ad = alg.ad
    killing = [[Fraction(0)] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(a, dim):
            t = _trace_product(ad[a], ad[b])
            killing[a][b] = killing[b][a] = t
    alg.killing = killing
    return alg


def _trace_product(A: Mat, B: Mat) -> Fraction:
    total = Fraction(0)
    for j, col in B.cols.items():
        for k, v in col.items():
            a = A.cols.get(k)
            if a:
                x = a.get(j)
                if x:
                    total += x * v
    return total


def jacobi_holds(L: LieAlgebraRealization) -> bool:
    dim = L.dim
    for a in range(dim):
        for b in range(a + 1, dim):
            for c in range(b + 1, dim):
                total: Vec = {}
                add_into(total, L.bracket_vec({a: Fraction(1)}, L.bracket(b, c)))
                add_into(total, L.bracket_vec({b: Fraction(1)}, L.bracket(c, a)))
                add_into(total, L.bracket_vec({c: Fraction(1)}, L.bracket(a, b)))
                if total:
                    return False
    return True


def killing_dual_form(L: LieAlgebraRealization) -> List[List[Fraction]]:
    """Form on h* obtained by dualizing B restricted to the Cartan (coroot basis).

    With K_ij = B(h_i, h_j) and lambda(h_i) = lambda_i, the dual form in
    fundamental-weight coordinates is K^{-1}.
    """
    hs = L.h_indices
    K = [[L.killing[a][b] for b in hs] for a in hs]
    return inverse(K)


def killing_dual_form_check(L: LieAlgebraRealization, rs: Optional[RootSystem] = None) -> bool:
    rs = L.rs if rs is None else rs
    dual = killing_dual_form(L)
    n = rs.rank
    for i in range(n):
        for j in range(n):
            if dual[i][j] != rs.gram[i][j]:
                raise InvariantError(
                    f"Killing normalization mismatch at ({i + 1},{j + 1}): matrix {dual[i][j]} vs table {rs.gram[i][j]}"
                )
    return True


def dual_bases(L: LieAlgebraRealization) -> Tuple[List[Vec], List[Vec]]:
    """Standard basis and its B-dual: B(basis[l], dual[m]) = delta_lm."""
    dim = L.dim
    Binv = L.killing_inverse
    basis = [{a: Fraction(1)} for a in range(dim)]
    dual = [{c: Binv[c][a] for c in range(dim) if Binv[c][a]} for a in range(dim)]
    return basis, dual


@dataclass
class AdaptedBasis:
    X: List[Vec]
    A: List[Vec]
    Z: List[Vec]
    A_dual: List[Vec]

    def frame(self) -> List[Vec]:
        return self.X + self.A + self.Z

    def dual_frame(self) -> List[Vec]:
        """Dual with respect to B, in matching order: (Z^i, A^r, X_i)."""
        return self.Z + self.A_dual + self.X


def adapted_basis(L: LieAlgebraRealization, pd: ParabolicData, perturb: bool = True) -> AdaptedBasis:
    """Adapted frame {X_i, A_r, Z^i} built as in the Gram-Schmidt style construction.

    Z^i spans p_+; X~_i are representatives of g/p dual to Z^i, optionally
    shifted by elements of p to exercise the correction steps.
    """
    idx = L.indices(pd)
    Z = [{a: Fraction(1)} for a in idx["pplus"]]
    # duality between g_- and p_+ through B
    M = [[L.killing[x][z] for z in idx["pplus"]] for x in idx["gminus"]]
    Minv = inverse(M) if M else []
    Xt: List[Vec] = []
    for i in range(len(Z)):
        v = {idx["gminus"][r]: Minv[i][r] for r in range(len(Minv)) if Minv[i][r]}
        if perturb:
            # shift by p-elements: one Cartan element and the next p_+ vector
            add_into(v, {L.h_indices[i % len(L.h_indices)]: Fraction(1, i + 2)})
            add_into(v, Z[(i + 1) % len(Z)], Fraction(i + 1, 3))
        Xt.append(v)
    X = []
    for i, xi in enumerate(Xt):
        v = dict(xi)
        for j, xj in enumerate(Xt):
            add_into(v, Z[j], -L.form(xi, xj) / 2)
        X.append(v)
    At: List[Vec] = []
    for r, a in enumerate(idx["g0"]):
        v = {a: Fraction(1)}
        if perturb and Z:
            add_into(v, Z[r % len(Z)], Fraction(r + 1, 5))
        At.append(v)
    A = []
    for at in At:
        v = dict(at)
        for i, xi in enumerate(X):
            add_into(v, Z[i], -L.form(xi, at))
        A.append(v)
    frame = X + A + Z
    G = [[L.form(u, w) for w in frame] for u in frame]
    Ginv = inverse(G)
    dual = []
    for l in range(len(frame)):
        v: Vec = {}
        for m, w in enumerate(frame):
            if Ginv[m][l]:
                add_into(v, w, Ginv[m][l])
        dual.append(v)
    nx, na = len(X), len(A)
    for i in range(nx):
        if dual[i] != Z[i] or dual[nx + na + i] != X[i]:
            raise InvariantError("adapted frame dual does not have the (Z, A*, X) shape")
    return AdaptedBasis(X, A, Z, dual[nx:nx + na])


def dump_json(L: LieAlgebraRealization) -> Dict[str, object]:
    """Debug layout: labels, roots, nonzero brackets and the Killing matrix, rationals as "p/q"."""
    from ..report import fmt_q

    return {
        "schema_version": "1",
        "type": L.rs.name,
        "labels": L.labels,
        "roots": [list(r) if r is not None else None for r in L.roots],
        "brackets": [
            {"a": L.labels[a], "b": L.labels[b], "value": {L.labels[c]: fmt_q(v) for c, v in sorted(vec.items())}}
            for (a, b), vec in sorted(L.brackets.items())
        ],
        "killing": [[fmt_q(x) for x in row] for row in L.killing],
    }
