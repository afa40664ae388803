"""Hasse diagrams W^p, Kostant homology H_k(p_+, V) and Laplacian eigenvalues.

W^p here is the set of minimal-length representatives of W_Levi \\ W, i.e. the
w with w^{-1}(Delta^+(g_0)) in Delta^+.  For such w and dominant lambda the
weight w.lambda is g_0-dominant.  H_k(p_+, V) is dual to H^k(p_+, V*), so
each w of length k contributes one g_0-irreducible whose lowest weight is
-(w . lambda_low), where -lambda_low is the lowest weight of V.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GuardrailError, InvalidInputError
from .guardrails import default_guardrails
from .parabolic import ParabolicData
from .rootsys import (
    DynkinSpec,
    Root,
    RootSystem,
    Weight,
    WeylWord,
    _orbit_words,
    act,
    add,
    antidominant_representative,
    character,
    dominant_representative,
    dot_action,
    is_dominant_integral,
    killing_inner,
    neg,
    norm2,
    normalize_weight,
    reflect_root,
    rho,
    sub,
    weyl_dimension,
)


@dataclass(frozen=True)
class HasseElement:
    word: WeylWord
    degree: int
    inversion_set: Tuple[Root, ...]
    rho_image: Weight

    @property
    def inverse_word(self) -> WeylWord:
        return self.word.inverse()


@dataclass(frozen=True)
class HomologyComponent:
    degree: int
    lowest_weight: Weight
    source_word: Optional[HasseElement] = None
    multiplicity: int = 1
    homogeneity: Fraction = Fraction(0)


@dataclass(frozen=True)
class BGGDiagram:
    type: DynkinSpec
    crossed: Tuple[int, ...]
    highest_weight: Weight
    lowest_weight_of_v: Weight
    components: Tuple[HomologyComponent, ...]

    def by_degree(self) -> Dict[int, List[HomologyComponent]]:
        out: Dict[int, List[HomologyComponent]] = {}
        for c in self.components:
            out.setdefault(c.degree, []).append(c)
        return out

    def multiset(self) -> Counter:
        return Counter((c.degree, c.lowest_weight) for c in self.components for _ in range(c.multiplicity))


def parabolic_weight(pd: ParabolicData) -> Weight:
    """Sum of the fundamental weights of the crossed nodes; its stabilizer is W_Levi."""
    return tuple(int(i + 1 in pd.crossed) for i in range(pd.rs.rank))


def hasse_size(pd: ParabolicData) -> int:
    """|W^p| = |W| / |W_Levi| via the height-product formula on both systems."""
    num, den = 1, 1
    for r in pd.rs.positive_roots:
        h = sum(r)
        num *= h + 1
        den *= h
    lnum, lden = 1, 1
    for r in pd.levi_positive:
        h = sum(r)
        lnum *= h + 1
        lden *= h
    return (num * lden) // (den * lnum)


def hasse_diagram(pd: ParabolicData, limit: Optional[int] = None) -> List[HasseElement]:
    """Minimal-length coset representatives W^p, sorted by (degree, image of rho).

    The orbit of the crossed fundamental-weight sum is in bijection with
    W / W_Levi; breadth-first words there are minimal representatives u of
    u W_Levi, and w = u^{-1} is then minimal in W_Levi w.
    """
    if limit is None:
        limit = default_guardrails().weyl_order
    size = hasse_size(pd)
    if size > limit:
        raise GuardrailError(f"|W^p| = {size} exceeds the guardrail {limit}")
    rs = pd.rs
    r = rho(rs)
    out = []
    for u, _ in _orbit_words(rs, parabolic_weight(pd)):
        w = u.inverse()
        img = act(rs, w, r)
        inv = tuple(beta for beta, bf in zip(rs.positive_roots, rs.positive_roots_fund) if killing_inner(rs, img, bf) < 0)
        out.append(HasseElement(w, w.length, inv, img))
    out.sort(key=lambda h: (h.degree, tuple(-Fraction(x) for x in h.rho_image)))
    return out


def is_hasse_member(pd: ParabolicData, word: WeylWord) -> bool:
    """w in W^p iff w(rho) is dominant for the Levi, i.e. w^{-1} keeps Levi roots positive."""
    img = act(pd.rs, word, rho(pd.rs))
    return all(img[i - 1] > 0 for i in pd.levi_nodes)


def hasse_edges(pd: ParabolicData, elements: Sequence[HasseElement]) -> List[Tuple[int, int]]:
    """Bruhat covering relations among W^p: index pairs (u, w) with l(w) = l(u)+1 and w = s_beta u."""
    rs = pd.rs
    by_img = {h.rho_image: k for k, h in enumerate(elements)}
    edges = set()
    for k, h in enumerate(elements):
        for bf in rs.positive_roots_fund:
            img = reflect_root(rs, bf, h.rho_image)
            j = by_img.get(img)
            if j is not None and elements[j].degree == h.degree + 1:
                edges.add((k, j))
    return sorted(edges)


def lowest_weight_data(rs: RootSystem, highest: Sequence) -> Tuple[Weight, Weight]:
    """Return (lowest weight of V, lambda_low) with lambda_low = -w0(lambda)."""
    low = antidominant_representative(rs, tuple(highest))
    return low, neg(low)


def homology(pd: ParabolicData, highest: Sequence, limit: Optional[int] = None) -> BGGDiagram:
    """Kostant's theorem: one g_0-irreducible per w in W^p, in degree l(w)."""
    rs = pd.rs
    lam = normalize_weight(highest)
    if len(lam) != rs.rank:
        raise InvalidInputError(f"highest weight must have {rs.rank} entries, got {len(lam)}")
    if not is_dominant_integral(lam):
        raise InvalidInputError(f"highest weight {lam} is not dominant integral")
    low_v, lam_low = lowest_weight_data(rs, lam)
    ge = pd.grading_element
    comps = []
    for h in hasse_diagram(pd, limit):
        lw = neg(dot_action(rs, h.word, lam_low))
        comps.append(HomologyComponent(h.degree, lw, h, 1, ge.on_weight(lw)))
    return BGGDiagram(rs.spec, pd.crossed, lam, low_v, tuple(comps))


def laplacian_eigenvalue(rs: RootSystem, lam_low: Sequence, nu: Sequence) -> Fraction:
    """Kostant Laplacian on the component of lowest weight -nu: (|nu+rho|^2 - |lam+rho|^2)/2."""
    r = rho(rs)
    return (norm2(rs, add(nu, r)) - norm2(rs, add(lam_low, r))) / 2


def levi_highest(pd: ParabolicData, lowest: Sequence) -> Weight:
    """Highest weight of the g_0-irreducible with the given lowest weight."""
    dom, _ = dominant_representative(pd.rs, tuple(lowest), pd.levi_nodes)
    return dom


def levi_lowest(pd: ParabolicData, highest: Sequence) -> Weight:
    return antidominant_representative(pd.rs, tuple(highest), pd.levi_nodes)


def levi_dimension(pd: ParabolicData, lowest: Sequence) -> int:
    d = weyl_dimension(pd.rs, levi_highest(pd, lowest), pd.levi_positive)
    return int(d)


def _levi_height(pd: ParabolicData, weight: Sequence) -> Fraction:
    coords = pd.rs.weight_to_root_coords(weight)
    return sum((coords[i - 1] for i in pd.levi_nodes), Fraction(0))


def decompose_g0_rep(pd: ParabolicData, weights: Iterable[Sequence] | Mapping) -> List[Tuple[Weight, int]]:
    """Split a g_0-character into irreducibles by peeling off extreme weights.

    ``weights`` is a multiset (iterable with repeats, or weight -> count).
    Returns sorted (lowest weight, multiplicity) pairs.
    """
    if isinstance(weights, Mapping):
        counts = Counter({normalize_weight(w): int(m) for w, m in weights.items() if m})
    else:
        counts = Counter(normalize_weight(w) for w in weights)
    if not pd.levi_nodes:
        return sorted(counts.items())
    nodes = pd.levi_nodes
    order = sorted(counts, key=lambda w: (-_levi_height(pd, w), w))
    out: Counter = Counter()
    for mu in order:
        m = counts[mu]
        if m == 0:
            continue
        if m < 0 or any(mu[i - 1] < 0 for i in nodes):
            raise InvalidInputError(f"not a g_0-character: weight {mu} has no valid extreme-weight peel")
        for nu, k in character(pd.rs, mu, nodes).items():
            counts[nu] -= m * k
            if counts[nu] < 0:
                raise InvalidInputError(f"not a g_0-character: weight {nu} goes negative after peeling {mu}")
        out[levi_lowest(pd, mu)] += m
    return sorted(out.items())


def chain_character(pd: ParabolicData, v_weights: Mapping[Weight, int], k: int) -> Counter:
    """Weights of Lambda^k p_+ tensor V as a multiset."""
    rs = pd.rs
    roots = [rs.root_to_weight(r) for r in pd.pplus_positive]
    wedge = Counter()
    for combo in combinations(range(len(roots)), k):
        w = (0,) * rs.rank
        for c in combo:
            w = add(w, roots[c])
        wedge[w] += 1
    out: Counter = Counter()
    for a, m in wedge.items():
        for b, n in v_weights.items():
            out[normalize_weight(add(a, b))] += m * n
    return out
