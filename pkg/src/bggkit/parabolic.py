"""Standard parabolic subalgebras given by crossed Dynkin nodes.

A root lies in grading layer ``i`` when the sum of its coefficients over the
crossed simple roots is ``i``.  Then p = g_0 + ... + g_k and p_+ = g_1 + ... + g_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import InvalidInputError
from .linalg import dense_rank
from .rootsys import Root, RootSystem, neg


@dataclass(frozen=True)
class ParabolicSpec:
    crossed: FrozenSet[int]

    @classmethod
    def of(cls, nodes: Iterable[int]) -> "ParabolicSpec":
        return cls(frozenset(int(i) for i in nodes))


@dataclass(frozen=True)
class Grading:
    depth_k: int
    layer: Dict[int, Tuple[Root, ...]]
    dims: Dict[int, int]


@dataclass(frozen=True)
class GradingElement:
    coweight_coords: Tuple[int, ...]  # alpha_i(E) for each simple root
    coroot_coords: Tuple[Fraction, ...]  # E = sum_j c_j h_j

    def on_weight(self, weight: Sequence) -> Fraction:
        """Eigenvalue of E on a weight vector: weight(E)."""
        return sum((Fraction(w) * c for w, c in zip(weight, self.coroot_coords)), Fraction(0))


@dataclass(frozen=True, eq=False)
class ParabolicData:
    rs: RootSystem
    crossed: Tuple[int, ...]
    grading: Grading
    grading_element: GradingElement
    levi_positive: Tuple[Root, ...]
    pplus_positive: Tuple[Root, ...]

    @property
    def levi_nodes(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.rs.rank + 1) if i not in self.crossed)

    @property
    def is_borel(self) -> bool:
        return len(self.crossed) == self.rs.rank

    def layer_of(self, root: Sequence[int]) -> int:
        return sum(root[i - 1] for i in self.crossed)

    def filtration(self, i: int) -> Tuple[Root, ...]:
        """Roots spanning g^i = g_i + ... + g_k (the Cartan is added for i <= 0)."""
        k = self.grading.depth_k
        out: List[Root] = []
        for j in range(max(i, -k), k + 1):
            out.extend(self.grading.layer[j])
        return tuple(out)

    @property
    def pplus_dim(self) -> int:
        return len(self.pplus_positive)


def make_parabolic(rs: RootSystem, crossed: Iterable[int] | ParabolicSpec) -> ParabolicData:
    nodes = crossed.crossed if isinstance(crossed, ParabolicSpec) else frozenset(crossed)
    if not nodes:
        raise InvalidInputError("crossed node set must be nonempty")
    bad = [i for i in nodes if not isinstance(i, int) or not 1 <= i <= rs.rank]
    if bad:
        raise InvalidInputError(f"crossed node(s) {sorted(bad)} out of range 1..{rs.rank} for {rs.name}")
    cr = tuple(sorted(nodes))

    def height(r: Root) -> int:
        return sum(r[i - 1] for i in cr)

    levi = tuple(r for r in rs.positive_roots if height(r) == 0)
    pplus = tuple(r for r in rs.positive_roots if height(r) > 0)
    k = max(height(r) for r in rs.positive_roots)
    layer: Dict[int, List[Root]] = {i: [] for i in range(-k, k + 1)}
    for r in rs.positive_roots:
        h = height(r)
        layer[h].append(r)
        layer[-h].append(neg(r))
    dims = {i: len(v) + (rs.rank if i == 0 else 0) for i, v in layer.items()}
    grading = Grading(depth_k=k, layer={i: tuple(v) for i, v in layer.items()}, dims=dims)
    return ParabolicData(rs, cr, grading, grading_element(rs, cr), levi, pplus)


def grading_element(rs: RootSystem, crossed: Sequence[int]) -> GradingElement:
    """Solve alpha_i(E) = [i crossed] for E in the coroot basis: cartan . c = delta."""
    n = rs.rank
    delta = tuple(int(i + 1 in set(crossed)) for i in range(n))
    # cartan[i][j] = alpha_i(h_j), so c = cartan^{-1} delta; cartan_inverse is C^{-1}
    ci = rs.cartan_inverse
    c = tuple(sum((ci[j][i] * delta[i] for i in range(n)), Fraction(0)) for j in range(n))
    return GradingElement(delta, c)


def filtration_pairing_check(pd: ParabolicData, algebra) -> Dict[str, object]:
    """Check the Killing form against the grading on a matrix realization.

    Confirms B(g_i, g_j) = 0 unless i + j = 0, nondegeneracy of
    g_i x g_{-i} (including g_0), and that g^i is exactly the B-annihilator
    of g^{-i+1}.
    """
    B = algebra.killing
    layers = [pd.layer_of(r) if r is not None else 0 for r in algebra.roots]
    k = pd.grading.depth_k
    by_layer: Dict[int, List[int]] = {i: [] for i in range(-k, k + 1)}
    for a, l in enumerate(layers):
        by_layer[l].append(a)
    pairs: Dict[str, str] = {}
    ok = True
    for i in range(-k, k + 1):
        for j in range(-k, k + 1):
            block = [[B[a][b] for b in by_layer[j]] for a in by_layer[i]]
            if i + j == 0:
                good = dense_rank(block) == len(by_layer[i]) == len(by_layer[j])
                pairs[f"{i},{j}"] = "nondegenerate" if good else "DEGENERATE"
            else:
                good = all(x == 0 for row in block for x in row)
                pairs[f"{i},{j}"] = "zero" if good else "NONZERO"
            ok = ok and good
    annihilators: Dict[int, bool] = {}
    dim = len(layers)
    for i in range(-k + 1, k + 1):
        upper = [a for a in range(dim) if layers[a] >= i]
        other = [b for b in range(dim) if layers[b] >= -i + 1]
        # annihilator of g^{-i+1} = kernel of the map x -> (B(x, b))_b
        rows = [{a: B[a][b] for a in range(dim) if B[a][b]} for b in other]
        ann_dim = dim - dense_rank([[r.get(a, 0) for a in range(dim)] for r in rows])
        contained = all(B[a][b] == 0 for a in upper for b in other)
        annihilators[i] = contained and ann_dim == len(upper)
        ok = ok and annihilators[i]
    return {"ok": ok, "pairs": pairs, "annihilators": annihilators}
