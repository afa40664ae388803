"""Chain spaces Lambda^k p_+ (x) V, the Kostant codifferential and brute-force homology.

A basis vector of degree k is a pair (wedge, v): ``wedge`` is an increasing
tuple of positions into the p_+ basis, ``v`` a basis index of V.  The global
index is ``wedge_index * dim V + v``.  Everything is weight-graded, so kernels
and images are computed one weight block at a time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import GuardrailError, InvariantError
from ..guardrails import default_guardrails
from ..kostant import levi_lowest
from ..linalg import Echelon, Mat, Vec, add_into, kernel_of_columns
from ..parabolic import ParabolicData
from ..rootsys import Weight, add
from .algebra import LieAlgebraRealization
from .reps import RepRealization, WeightModule


def sort_wedge(positions: Sequence[int]) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Sign and sorted tuple of a wedge monomial; (0, None) on a repeated factor."""
    if len(set(positions)) != len(positions):
        return 0, None
    p = list(positions)
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(p)):
        j = i
        while j > 0 and p[j - 1] > p[j]:
            p[j - 1], p[j] = p[j], p[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(p)


@dataclass
class WeightBlock:
    kernel: List[Vec]
    image: Echelon


class ChainComplex:
    def __init__(self, pd: ParabolicData, rep: RepRealization, max_chain_dim: Optional[int] = None) -> None:
        self.pd = pd
        self.rep = rep
        self.algebra: LieAlgebraRealization = rep.algebra
        L = self.algebra
        self.pplus: List[int] = L.indices(pd)["pplus"]
        self.n = len(self.pplus)
        limit = default_guardrails().chain_dim if max_chain_dim is None else max_chain_dim
        self.wedges: List[List[Tuple[int, ...]]] = []
        self.wedge_index: List[Dict[Tuple[int, ...], int]] = []
        for k in range(self.n + 1):
            ws = list(combinations(range(self.n), k))
            if len(ws) * rep.dim > limit:
                raise GuardrailError(
                    f"dim Lambda^{k} p_+ (x) V = {len(ws) * rep.dim} exceeds the chain guardrail {limit}"
                )
            self.wedges.append(ws)
            self.wedge_index.append({w: t for t, w in enumerate(ws)})
        self.pos_of = {a: p for p, a in enumerate(self.pplus)}
        self.root_weights = [L.weight_of(a) for a in self.pplus]
        # brackets within p_+ as position vectors
        self.pbracket: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                br = L.bracket(self.pplus[i], self.pplus[j])
                if br:
                    self.pbracket[(i, j)] = {self._pos(c): x for c, x in br.items()}

    def _pos(self, a: int) -> int:
        p = self.pos_of.get(a)
        if p is None:
            raise InvariantError(f"bracket left p_+ at {self.algebra.labels[a]}")
        return p

    # -- bases -----------------------------------------------------------
    def dim(self, k: int) -> int:
        return len(self.wedges[k]) * self.rep.dim

    def split(self, k: int, idx: int) -> Tuple[Tuple[int, ...], int]:
        t, v = divmod(idx, self.rep.dim)
        return self.wedges[k][t], v

    def index(self, k: int, wedge: Tuple[int, ...], v: int) -> int:
        return self.wedge_index[k][wedge] * self.rep.dim + v

    def wedge_weight(self, wedge: Sequence[int]) -> Weight:
        w: Weight = (0,) * self.pd.rs.rank
        for p in wedge:
            w = add(w, self.root_weights[p])
        return w

    @cached_property
    def weights(self) -> List[List[Weight]]:
        out = []
        for k in range(self.n + 1):
            ww = [self.wedge_weight(w) for w in self.wedges[k]]
            out.append([add(a, b) for a in ww for b in self.rep.weights])
        return out

    @cached_property
    def blocks(self) -> List[Dict[Weight, List[int]]]:
        out = []
        for k in range(self.n + 1):
            d: Dict[Weight, List[int]] = {}
            for i, w in enumerate(self.weights[k]):
                d.setdefault(w, []).append(i)
            out.append(d)
        return out

    # -- codifferential ---------------------------------------------------
    def d_star_column(self, k: int, idx: int) -> Vec:
        """del*(phi_1 ^ ... ^ phi_k (x) s) with 1-based signs (-1)^i and (-1)^(i+j)."""
        wedge, v = self.split(k, idx)
        out: Vec = {}
        e_v = {v: Fraction(1)}
        for i in range(1, k + 1):
            rest = wedge[: i - 1] + wedge[i:]
            sign = -1 if i % 2 else 1
            zv = self.rep.act(self.pplus[wedge[i - 1]], e_v)
            base = self.wedge_index[k - 1][rest] * self.rep.dim
            for u, c in zv.items():
                add_into(out, {base + u: c}, Fraction(sign))
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                br = self.pbracket.get((wedge[i - 1], wedge[j - 1]))
                if not br:
                    continue
                rest = tuple(p for t, p in enumerate(wedge) if t not in (i - 1, j - 1))
                sign = 1 if (i + j) % 2 == 0 else -1
                for q, c in br.items():
                    s, w = sort_wedge((q,) + rest)
                    if s:
                        add_into(out, {self.index(k - 1, w, v): c}, Fraction(sign * s))
        return out

    def d_star(self, k: int) -> Mat:
        """Matrix of del*: degree k -> k-1 (k >= 1)."""
        return self._d_cache(k)

    def _d_cache(self, k: int) -> Mat:
        cache = self.__dict__.setdefault("_dmats", {})
        if k not in cache:
            cols = {i: c for i in range(self.dim(k)) if (c := self.d_star_column(k, i))}
            cache[k] = Mat(self.dim(k - 1), self.dim(k), cols)
        return cache[k]

    def squares_to_zero(self) -> Dict[int, bool]:
        return {k: (self.d_star(k - 1) @ self.d_star(k)).is_zero() for k in range(2, self.n + 1)}

    # -- algebra action on chains ----------------------------------------
    def act(self, k: int, a: int, vec: Vec) -> Vec:
        """Derivation action of a p-basis element on a degree-k chain vector."""
        L = self.algebra
        out: Vec = {}
        for idx, c in vec.items():
            wedge, v = self.split(k, idx)
            t = self.wedge_index[k][wedge] * self.rep.dim
            for u, x in self.rep.act(a, {v: Fraction(1)}).items():
                add_into(out, {t + u: x}, c)
            for pos in range(k):
                br = L.bracket(a, self.pplus[wedge[pos]])
                for b, x in br.items():
                    s, w = sort_wedge(wedge[:pos] + (self._pos(b),) + wedge[pos + 1:])
                    if s:
                        add_into(out, {self.index(k, w, v): x}, c * s)
        return out

    def action_matrix(self, k: int, a: int) -> Mat:
        n = self.dim(k)
        return Mat(n, n, {i: c for i in range(n) if (c := self.act(k, a, {i: Fraction(1)}))})

    def equivariant(self, g0: Optional[Sequence[int]] = None) -> bool:
        """del* o rho_k(a) == rho_{k-1}(a) o del* for every g_0 basis element."""
        g0 = self.algebra.indices(self.pd)["g0"] if g0 is None else g0
        for k in range(1, self.n + 1):
            d = self.d_star(k)
            for a in g0:
                if d @ self.action_matrix(k, a) != self.action_matrix(k - 1, a) @ d:
                    return False
        return True

    # -- homology ---------------------------------------------------------
    @cached_property
    def weight_blocks(self) -> List[Dict[Weight, WeightBlock]]:
        """Per degree and weight: kernel basis of del* and an echelon of its image."""
        out: List[Dict[Weight, WeightBlock]] = []
        for k in range(self.n + 1):
            d: Dict[Weight, WeightBlock] = {}
            for w, idxs in self.blocks[k].items():
                if k == 0:
                    ker = [{i: Fraction(1)} for i in idxs]
                else:
                    mat = self.d_star(k)
                    rel = kernel_of_columns([mat.col(i) for i in idxs])
                    ker = [{idxs[t]: c for t, c in r.items()} for r in rel]
                img = Echelon()
                if k < self.n:
                    mat = self.d_star(k + 1)
                    for i in self.blocks[k + 1].get(w, ()):
                        col = mat.col(i)
                        if col:
                            img.add(col)
                d[w] = WeightBlock(ker, img)
            out.append(d)
        return out

    def homology_dims(self) -> List[int]:
        return [sum(len(b.kernel) - b.image.rank for b in blocks.values()) for blocks in self.weight_blocks]

    def _levi_raising(self) -> List[int]:
        L, rs = self.algebra, self.pd.rs
        return [L.e_index[tuple(int(j == i - 1) for j in range(rs.rank))] for i in self.pd.levi_nodes]

    def homology_components(self) -> Counter:
        """(degree, lowest weight) multiset of H_k as g_0-modules.

        Levi highest-weight vectors of ker/im at weight mu number
        dim K_mu - rank(K_mu -> sum_j C_{mu+alpha_j} / I_{mu+alpha_j}) - dim I_mu.
        """
        raising = self._levi_raising()
        rs = self.pd.rs
        out: Counter = Counter()
        for k in range(self.n + 1):
            blocks = self.weight_blocks[k]
            for mu, blk in blocks.items():
                h = len(blk.kernel) - blk.image.rank
                if h == 0:
                    continue
                if raising:
                    cols = []
                    nblk = len(raising)
                    for x in blk.kernel:
                        img: Vec = {}
                        for r, a in enumerate(raising):
                            target = add(mu, rs.cartan[self.pd.levi_nodes[r] - 1])
                            tb = blocks.get(target)
                            y = self.act(k, a, x)
                            if tb is not None:
                                y = tb.image.residue(y)
                            for i, c in y.items():
                                img[i * nblk + r] = c
                        cols.append(img)
                    rk = len(cols) - len(kernel_of_columns(cols))
                    count = len(blk.kernel) - rk - blk.image.rank
                else:
                    count = h
                if count:
                    out[(k, levi_lowest(self.pd, mu))] += count
        return out

    def pplus_preserves_image(self) -> Tuple[bool, Optional[str]]:
        """Every Z in p_+ maps ker(del*) into im(del*)."""
        for k in range(self.n + 1):
            blocks = self.weight_blocks[k]
            for mu, blk in blocks.items():
                for p, z in enumerate(self.pplus):
                    target = add(mu, self.root_weights[p])
                    tb = blocks.get(target)
                    for x in blk.kernel:
                        y = self.act(k, z, x)
                        if not y:
                            continue
                        if tb is None or tb.image.residue(y):
                            lab = self.algebra.labels[z]
                            return False, f"degree {k}, weight {mu}: {lab} . ker not in im"
        return True, None

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.dim(k) for k in range(self.n + 1))

    # -- g_0 components of the chain spaces --------------------------------
    def levi_highest_vectors(self, k: int) -> Dict[Weight, List[Vec]]:
        raising = self._levi_raising()
        out: Dict[Weight, List[Vec]] = {}
        for w, idxs in self.blocks[k].items():
            if not raising:
                out[w] = [{i: Fraction(1)} for i in idxs]
                continue
            cols = []
            for i in idxs:
                img: Vec = {}
                for r, a in enumerate(raising):
                    for t, c in self.act(k, a, {i: Fraction(1)}).items():
                        img[t * len(raising) + r] = c
                cols.append(img)
            ker = kernel_of_columns(cols)
            if ker:
                out[w] = [{idxs[t]: c for t, c in v.items()} for v in ker]
        return out


class ChainDegreeModule(WeightModule):
    """Degree-k chain space seen as a p-module (for the g_0-level formulas)."""

    def __init__(self, cc: ChainComplex, k: int) -> None:
        self.cc = cc
        self.k = k
        self.algebra = cc.algebra
        self.weights = cc.weights[k]

    def act(self, a: int, vec: Vec) -> Vec:
        return self.cc.act(self.k, a, vec)


def chain_complex(pd: ParabolicData, rep: RepRealization, max_chain_dim: Optional[int] = None) -> ChainComplex:
    return ChainComplex(pd, rep, max_chain_dim)


def homology_bruteforce(cc: ChainComplex) -> Counter:
    return cc.homology_components()
