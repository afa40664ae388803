"""Root systems, weight lattices and Weyl groups of the simple Lie algebras.

Conventions
-----------
* Nodes are numbered as in Bourbaki, 1-based in every public API.
* ``cartan[i][j] = <alpha_i, alpha_j^vee> = alpha_i(h_j)``, so that
  ``alpha_i = sum_j cartan[i][j] * omega_j``.
* Roots are integer tuples in the simple-root basis; weights are tuples
  (int or Fraction) in the fundamental-weight basis.
* Inner products are normalized by the Killing form: the standard form with
  long roots of squared length 2, divided by twice the dual Coxeter number.
* A Weyl word ``(i1, ..., ik)`` denotes ``s_i1 s_i2 ... s_ik``, so ``s_ik``
  acts first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import GuardrailError, InvalidInputError
from .guardrails import default_guardrails
from .linalg import inverse

Root = Tuple[int, ...]
Weight = Tuple  # tuple of int or Fraction, fundamental-weight coordinates

FAMILIES = "ABCDEFG"

DUAL_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 9,
    "G": lambda n: 4,
}


@dataclass(frozen=True)
class DynkinSpec:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam not in FAMILIES or len(fam) != 1:
            raise InvalidInputError(f"unknown Lie type family {fam!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidInputError(f"rank must be an integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": 6 <= n <= 8,
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise InvalidInputError(f"type {fam}{n} does not exist (rank out of range for family {fam})")

    @classmethod
    def parse(cls, text: str) -> "DynkinSpec":
        """Parse ``"B3"`` style names; products like ``"A1xA1"`` are rejected."""
        t = text.strip().upper()
        if any(sep in t for sep in ("X", "+", "*", " ")):
            raise InvalidInputError(f"{text!r}: only simple types are supported, not semisimple products")
        if len(t) < 2 or not t[1:].isdigit():
            raise InvalidInputError(f"cannot parse Lie type {text!r}; expected e.g. A2, B3, G2")
        return cls(t[0], int(t[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _diagram(spec: DynkinSpec) -> Tuple[List[Fraction], List[Tuple[int, int, int]]]:
    """Squared root lengths (long = 2) and bonds (i, j, multiplicity), 0-based."""
    fam, n = spec.family, spec.rank
    two, one = Fraction(2), Fraction(1)
    chain = [(i, i + 1, 1) for i in range(n - 1)]
    if fam == "A":
        return [two] * n, chain
    if fam == "B":
        return [two] * (n - 1) + [one], chain[:-1] + [(n - 2, n - 1, 2)]
    if fam == "C":
        return [one] * (n - 1) + [two], chain[:-1] + [(n - 2, n - 1, 2)]
    if fam == "D":
        return [two] * n, [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
    if fam == "E":
        edges = [(0, 2, 1), (2, 3, 1), (1, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1)]
        return [two] * n, [e for e in edges if e[1] < n]
    if fam == "F":
        return [two, two, one, one], [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    return [Fraction(2, 3), two], [(0, 1, 3)]


def _standard_form(spec: DynkinSpec) -> List[List[Fraction]]:
    lengths, bonds = _diagram(spec)
    n = spec.rank
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = lengths[i]
    for i, j, m in bonds:
        v = -m * min(lengths[i], lengths[j]) / 2
        form[i][j] = form[j][i] = v
    return form


@dataclass(frozen=True)
class WeylWord:
    letters: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.letters)

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.letters)))

    def __mul__(self, other: "WeylWord") -> "WeylWord":
        # concatenation; not reduced in general
        return WeylWord(self.letters + other.letters)


@dataclass(frozen=True, eq=False)
class RootSystem:
    spec: DynkinSpec
    cartan: Tuple[Tuple[int, ...], ...]
    standard: Tuple[Tuple[Fraction, ...], ...]  # (alpha_i, alpha_j), long roots length^2 = 2
    positive_roots: Tuple[Root, ...]
    dual_coxeter: int
    gram: Tuple[Tuple[Fraction, ...], ...]  # Killing-normalized <omega_i, omega_j>
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def name(self) -> str:
        return str(self.spec)

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @cached_property
    def simple_roots_fund(self) -> Tuple[Weight, ...]:
        return tuple(tuple(row) for row in self.cartan)

    @cached_property
    def positive_roots_fund(self) -> Tuple[Weight, ...]:
        return tuple(self.root_to_weight(r) for r in self.positive_roots)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    @cached_property
    def root_index(self) -> Dict[Root, int]:
        return {r: k for k, r in enumerate(self.positive_roots)}

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        n = self.rank
        return tuple(sum(root[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def weight_to_root_coords(self, weight: Sequence) -> Tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis (rational)."""
        n = self.rank
        ci = self.cartan_inverse
        return tuple(sum((Fraction(weight[j]) * ci[j][k] for j in range(n)), Fraction(0)) for k in range(n))

    def coroot_pairing(self, weight: Sequence, root: Sequence[int]) -> Fraction:
        """<weight, root^vee> = 2 (weight, root) / (root, root)."""
        rw = self.root_to_weight(root)
        return 2 * killing_inner(self, weight, rw) / killing_inner(self, rw, rw)


def build_root_system(spec: DynkinSpec) -> RootSystem:
    """Cartan data, positive roots and Killing-normalized form for a simple type."""
    if not isinstance(spec, DynkinSpec):
        raise InvalidInputError(f"expected DynkinSpec, got {type(spec).__name__}")
    n = spec.rank
    std = _standard_form(spec)
    cartan = tuple(tuple(int(2 * std[i][j] / std[j][j]) for j in range(n)) for i in range(n))
    roots = _positive_roots(cartan)
    hv = DUAL_COXETER[spec.family](n)
    cinv = inverse([[Fraction(x) for x in row] for row in cartan])
    # <omega_i, omega_j> = sum_kl C^-1_ik C^-1_jl (alpha_k, alpha_l) / (2 h^vee)
    gram = tuple(
        tuple(
            sum(cinv[i][k] * cinv[j][l] * std[k][l] for k in range(n) for l in range(n)) / (2 * hv)
            for j in range(n)
        )
        for i in range(n)
    )
    return RootSystem(
        spec=spec,
        cartan=cartan,
        standard=tuple(tuple(r) for r in std),
        positive_roots=roots,
        dual_coxeter=hv,
        gram=gram,
        cartan_inverse=tuple(tuple(r) for r in cinv),
    )


def _positive_roots(cartan: Sequence[Sequence[int]]) -> Tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # alpha_i-string through beta: p steps down, q = p - <beta, alpha_i^vee> steps up
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))


def killing_inner(rs: RootSystem, a: Sequence, b: Sequence) -> Fraction:
    """Killing-normalized inner product of two weights (fundamental coordinates)."""
    n = rs.rank
    if len(a) != n or len(b) != n:
        raise InvalidInputError(f"weight length mismatch: expected {n}, got {len(a)} and {len(b)}")
    g = rs.gram
    total = Fraction(0)
    for i in range(n):
        if a[i]:
            row = g[i]
            total += a[i] * sum((row[j] * b[j] for j in range(n) if b[j]), Fraction(0))
    return total


def norm2(rs: RootSystem, a: Sequence) -> Fraction:
    return killing_inner(rs, a, a)


def add(a: Sequence, b: Sequence) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence) -> Weight:
    return tuple(-x for x in a)


def scale(c, a: Sequence) -> Weight:
    return tuple(c * x for x in a)


def normalize_weight(a: Iterable) -> Weight:
    """Canonical hashable form: Fractions with denominator 1 become ints."""
    out = []
    for x in a:
        x = Fraction(x)
        out.append(x.numerator if x.denominator == 1 else x)
    return tuple(out)


def rho(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def zero(rs: RootSystem) -> Weight:
    return (0,) * rs.rank


def reflect(rs: RootSystem, i: int, weight: Sequence) -> Weight:
    """Simple reflection s_i (1-based node) applied to a weight."""
    if not 1 <= i <= rs.rank:
        raise InvalidInputError(f"simple reflection index {i} out of range 1..{rs.rank}")
    c = weight[i - 1]
    if not c:
        return tuple(weight)
    alpha = rs.cartan[i - 1]
    return tuple(w - c * a for w, a in zip(weight, alpha))


def act(rs: RootSystem, word: WeylWord, weight: Sequence) -> Weight:
    """Linear action of a Weyl word on a weight (rightmost letter first)."""
    out = tuple(weight)
    for i in reversed(word.letters):
        out = reflect(rs, i, out)
    return out


def dot_action(rs: RootSystem, word: WeylWord, weight: Sequence) -> Weight:
    """w . lambda = w(lambda + rho) - rho."""
    r = rho(rs)
    return sub(act(rs, word, add(weight, r)), r)


def reflect_root(rs: RootSystem, root_fund: Sequence, weight: Sequence) -> Weight:
    """Reflection in an arbitrary root (root given in fundamental coordinates)."""
    c = 2 * killing_inner(rs, weight, root_fund) / killing_inner(rs, root_fund, root_fund)
    return normalize_weight(w - c * a for w, a in zip(weight, root_fund))


def dominant_representative(rs: RootSystem, weight: Sequence, nodes: Optional[Iterable[int]] = None) -> Tuple[Weight, WeylWord]:
    """Reflect into the dominant chamber for the subsystem on ``nodes`` (1-based).

    Returns the dominant weight and a word w with w(weight) = result.
    """
    nodes = list(range(1, rs.rank + 1)) if nodes is None else sorted(nodes)
    w = tuple(weight)
    letters: List[int] = []
    while True:
        for i in nodes:
            if w[i - 1] < 0:
                w = reflect(rs, i, w)
                letters.insert(0, i)
                break
        else:
            return w, WeylWord(tuple(letters))


def antidominant_representative(rs: RootSystem, weight: Sequence, nodes: Optional[Iterable[int]] = None) -> Weight:
    """Reflect into the antidominant chamber (all coordinates on ``nodes`` <= 0)."""
    nodes = list(range(1, rs.rank + 1)) if nodes is None else sorted(nodes)
    w = tuple(weight)
    while True:
        for i in nodes:
            if w[i - 1] > 0:
                w = reflect(rs, i, w)
                break
        else:
            return w


def lowest_of_highest(rs: RootSystem, highest: Sequence) -> Weight:
    """Lowest weight w0(lambda) of the irreducible module with highest weight lambda."""
    return antidominant_representative(rs, highest)


def weyl_order(rs: RootSystem) -> int:
    """|W| = prod over positive roots of (ht + 1) / ht, which equals prod (m_i + 1) over the exponents."""
    num, den = 1, 1
    for r in rs.positive_roots:
        h = sum(r)
        num *= h + 1
        den *= h
    return num // den


def enumerate_weyl(rs: RootSystem, limit: Optional[int] = None) -> List[WeylWord]:
    """All Weyl group elements as reduced words, sorted by (length, image of rho).

    Elements are identified by their image of rho (faithful since rho is
    regular); breadth-first search along left multiplication by simple
    reflections yields reduced words.
    """
    if limit is None:
        limit = default_guardrails().weyl_order
    order = weyl_order(rs)
    if order > limit:
        raise GuardrailError(f"|W({rs.name})| = {order} exceeds the Weyl-group guardrail {limit}")
    return [w for w, _ in _orbit_words(rs, rho(rs))]


def _orbit_words(rs: RootSystem, start: Weight) -> List[Tuple[WeylWord, Weight]]:
    """BFS over the W-orbit of a dominant weight; words are minimal-length."""
    seen = {start: ()}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        word = seen[mu]
        for i in range(1, rs.rank + 1):
            nu = reflect(rs, i, mu)
            if nu not in seen:
                seen[nu] = (i,) + word
                queue.append(nu)
    items = [(WeylWord(word), mu) for mu, word in seen.items()]
    items.sort(key=lambda t: (t[0].length, tuple(-Fraction(x) for x in t[1])))
    return items


def inversion_count(rs: RootSystem, word: WeylWord) -> int:
    """Number of positive roots beta with w^{-1}(beta) < 0, i.e. (w rho, beta) < 0."""
    wr = act(rs, word, rho(rs))
    return sum(1 for beta in rs.positive_roots_fund if killing_inner(rs, wr, beta) < 0)


def weyl_dimension(rs: RootSystem, highest: Sequence, roots: Optional[Iterable[Root]] = None) -> Fraction:
    """Weyl dimension formula over the given positive roots (default: all).

    Restricting to a Levi subsystem gives the dimension of the Levi
    irreducible with that highest weight (rho may be the full rho because
    rho - rho_Levi is orthogonal to the Levi roots).
    """
    r = rho(rs)
    lr = add(highest, r)
    num = Fraction(1)
    for root in (rs.positive_roots if roots is None else roots):
        rf = rs.root_to_weight(root)
        num *= killing_inner(rs, lr, rf) / killing_inner(rs, r, rf)
    return num


def character(rs: RootSystem, highest: Sequence, nodes: Optional[Iterable[int]] = None) -> Dict[Weight, int]:
    """Weight multiplicities of an irreducible module via Freudenthal's formula.

    With ``nodes`` given, the module is the irreducible of the Levi
    subalgebra spanned by those simple roots (plus the full Cartan).
    """
    n = rs.rank
    nodes = list(range(1, n + 1)) if nodes is None else sorted(set(nodes))
    mu = normalize_weight(highest)
    for i in nodes:
        if mu[i - 1] < 0 or Fraction(mu[i - 1]).denominator != 1:
            raise InvalidInputError(f"highest weight {mu} is not dominant integral on nodes {nodes}")
    node_set = set(nodes)
    levi_roots = [r for r in rs.positive_roots if all(r[k] == 0 or (k + 1) in node_set for k in range(n))]
    levi_fund = [rs.root_to_weight(r) for r in levi_roots]
    rho_l = tuple(sum((Fraction(r[j]) for r in levi_fund), Fraction(0)) / 2 for j in range(n))
    top = norm2(rs, add(mu, rho_l))
    simple = {i: rs.cartan[i - 1] for i in nodes}
    heights = [sum(r) for r in levi_roots]
    mult: Dict[Weight, int] = {mu: 1}
    depth_of: Dict[Weight, int] = {mu: 0}
    layer = [mu]
    d = 0
    while layer:
        d += 1
        cands = set()
        for nu in layer:
            for i, a in simple.items():
                cands.add(normalize_weight(sub(nu, a)))
        nxt = []
        for nu in sorted(cands):
            if nu in mult:
                continue
            dom, _ = dominant_representative(rs, nu, nodes)
            diff = rs.weight_to_root_coords(sub(mu, dom))
            if any(c < 0 or c.denominator != 1 for c in diff):
                continue
            s = Fraction(0)
            for rf, h in zip(levi_fund, heights):
                k = 1
                while k * h <= d:
                    up = normalize_weight(add(nu, scale(k, rf)))
                    m = mult.get(up)
                    if not m:
                        break
                    s += m * killing_inner(rs, up, rf)
                    k += 1
            den = top - norm2(rs, add(nu, rho_l))
            if den == 0:
                continue
            m = 2 * s / den
            if m.denominator != 1:
                raise ArithmeticError(f"non-integral Freudenthal multiplicity {m} at {nu}")
            if m > 0:
                mult[nu] = int(m)
                depth_of[nu] = d
                nxt.append(nu)
        layer = nxt
    return mult


def is_dominant_integral(weight: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 and x >= 0 for x in weight)
