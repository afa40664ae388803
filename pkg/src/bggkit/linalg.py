"""Exact rational linear algebra on sparse vectors.

Vectors are ``dict[int, Fraction]`` (missing keys are zero).  Row reduction
is fraction-free: every stored row is an integer vector with content 1, and
elimination uses only integer cross-multiplication.  Rationals appear only at
the boundary (input scaling, output normalization).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Vec = Dict[int, Fraction]
IntVec = Dict[int, int]


def _to_int(vec: Mapping[int, Fraction]) -> IntVec:
    """Scale a rational vector to a primitive integer vector (same span)."""
    den = 1
    for v in vec.values():
        if v:
            den = lcm(den, Fraction(v).denominator)
    out = {k: int(Fraction(v) * den) for k, v in vec.items() if v}
    return _primitive(out)


def _primitive(vec: IntVec) -> IntVec:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        return {k: v // g for k, v in vec.items()}
    return vec


def _combine(a: int, x: IntVec, b: int, y: IntVec) -> IntVec:
    """Return a*x - b*y with zeros dropped."""
    out = {k: a * v for k, v in x.items()} if a != 1 else dict(x)
    for k, v in y.items():
        nv = out.get(k, 0) - b * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incremental fully-reduced echelon basis of a subspace.

    With ``track=True`` every stored row remembers which combination of the
    inserted vectors produced it, so dependent insertions yield explicit
    linear relations (used for kernels and for solving).
    """

    def __init__(self, track: bool = False) -> None:
        self.rows: Dict[int, IntVec] = {}
        self.track = track
        self._combo: Dict[int, IntVec] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: IntVec, combo: Optional[IntVec]) -> Tuple[IntVec, Optional[IntVec], int]:
        # scale tracks the overall multiplier applied to the original vector
        scale = 1
        for p in [c for c in vec if c in self.rows]:
            c = vec.get(p, 0)
            if not c:
                continue
            row = self.rows[p]
            piv = row[p]
            g = gcd(piv, c)
            a, b = piv // g, c // g
            vec = _combine(a, vec, b, row)
            scale *= a
            if combo is not None:
                combo = _combine(a, combo, b, self._combo[p])
        return vec, combo, scale

    def reduce(self, vec: Mapping[int, Fraction]) -> IntVec:
        """Residue of ``vec`` modulo the stored span (up to a nonzero scalar)."""
        out, _, _ = self._reduce(_to_int(vec), None)
        return out

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping[int, Fraction]) -> Optional[Vec]:
        """Insert a vector.

        Returns ``None`` if it enlarged the span.  If it was dependent and
        tracking is on, returns the relation as a vector over insertion
        indices (``sum coeff_j * inserted_j == 0``); untracked dependent
        insertions return an empty dict.
        """
        idx = self._count
        self._count += 1
        den = 1
        for v in vec.values():
            if v:
                den = lcm(den, Fraction(v).denominator)
        ivec = {k: int(Fraction(v) * den) for k, v in vec.items() if v}
        combo: Optional[IntVec] = {idx: den} if self.track else None
        ivec, combo, _ = self._reduce(ivec, combo)
        if not ivec:
            if combo is None:
                return {}
            g = 0
            for v in combo.values():
                g = gcd(g, v)
            return {k: Fraction(v, g) for k, v in combo.items()}
        g = 0
        for v in ivec.values():
            g = gcd(g, v)
        if combo is not None:
            for v in combo.values():
                g = gcd(g, v)
        if g > 1:
            ivec = {k: v // g for k, v in ivec.items()}
            if combo is not None:
                combo = {k: v // g for k, v in combo.items()}
        piv = min(ivec)
        if ivec[piv] < 0:
            ivec = {k: -v for k, v in ivec.items()}
            if combo is not None:
                combo = {k: -v for k, v in combo.items()}
        # keep the basis fully reduced in the new pivot column
        pv = ivec[piv]
        for p, row in list(self.rows.items()):
            c = row.get(piv, 0)
            if c:
                h = gcd(pv, c)
                a, b = pv // h, c // h
                newrow = _combine(a, row, b, ivec)
                if self.track:
                    newc = _combine(a, self._combo[p], b, combo)
                    g2 = 0
                    for v in newrow.values():
                        g2 = gcd(g2, v)
                    for v in newc.values():
                        g2 = gcd(g2, v)
                    if g2 > 1:
                        newrow = {k: v // g2 for k, v in newrow.items()}
                        newc = {k: v // g2 for k, v in newc.items()}
                    self._combo[p] = newc
                else:
                    newrow = _primitive(newrow)
                self.rows[p] = newrow
        self.rows[piv] = ivec
        if self.track:
            self._combo[piv] = combo
        return None

    def residue(self, vec: Mapping[int, Fraction]) -> Vec:
        """Linear projection killing the span: v - sum_p (v_p / row_p[p]) row_p."""
        out: Vec = {k: Fraction(v) for k, v in vec.items() if v}
        for p in [c for c in out if c in self.rows]:
            row = self.rows[p]
            add_into(out, row, -out[p] / row[p])
        return out

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[Vec]:
        """Reduced basis rows, normalized so each pivot entry is 1."""
        out = []
        for p in sorted(self.rows):
            row = self.rows[p]
            pv = row[p]
            out.append({k: Fraction(v, pv) for k, v in sorted(row.items())})
        return out

    def express(self, vec: Mapping[int, Fraction]) -> Optional[Vec]:
        """Coefficients over insertion indices reproducing ``vec``, or None.

        Requires tracking.  Only independent insertions receive nonzero
        coefficients.
        """
        if not self.track:
            raise ValueError("express() needs a tracking Echelon")
        den = 1
        for v in vec.values():
            if v:
                den = lcm(den, Fraction(v).denominator)
        ivec = {k: int(Fraction(v) * den) for k, v in vec.items() if v}
        scale = den
        combo: IntVec = {}
        for p in [c for c in ivec if c in self.rows]:
            c = ivec.get(p, 0)
            if not c:
                continue
            row = self.rows[p]
            piv = row[p]
            g = gcd(piv, c)
            a, b = piv // g, c // g
            ivec = _combine(a, ivec, b, row)
            scale *= a
            combo = _combine(a, combo, -b, self._combo[p])
        if ivec:
            return None
        # scale * vec == sum combo_j * inserted_j
        return {k: Fraction(v, scale) for k, v in combo.items() if v}


def rank(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def span_basis(vectors: Iterable[Mapping[int, Fraction]]) -> List[Vec]:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.basis()


def kernel_of_columns(columns: Sequence[Mapping[int, Fraction]]) -> List[Vec]:
    """Basis of {x : sum_j x_j * columns[j] == 0}, as vectors over column indices."""
    ech = Echelon(track=True)
    out = []
    for col in columns:
        rel = ech.add(col)
        if rel is not None:
            out.append(rel)
    return out


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[Vec]:
    """Basis of the kernel of the matrix with the given sparse rows."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    pivots = set(ech.rows)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec: Vec = {f: Fraction(1)}
        for p, row in ech.rows.items():
            c = row.get(f, 0)
            if c:
                vec[p] = Fraction(-c, row[p])
        out.append(vec)
    return out


def inverse(mat: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse of a small dense square matrix."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def dense_rank(mat: Sequence[Sequence[Fraction]]) -> int:
    return rank({j: Fraction(x) for j, x in enumerate(row) if x} for row in mat)


def add_into(acc: Vec, vec: Mapping[int, Fraction], coeff: Fraction = Fraction(1)) -> Vec:
    """acc += coeff * vec, in place, dropping zeros."""
    if not coeff:
        return acc
    for k, v in vec.items():
        nv = acc.get(k, 0) + coeff * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def scaled(vec: Mapping[int, Fraction], c: Fraction) -> Vec:
    if not c:
        return {}
    return {k: c * v for k, v in vec.items()}


class Mat:
    """Sparse rational matrix stored by columns: ``cols[j] = {i: value}``."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[Dict[int, Vec]] = None) -> None:
        self.nrows = nrows
        self.ncols = ncols
        self.cols: Dict[int, Vec] = cols if cols is not None else {}

    @classmethod
    def identity(cls, n: int, c: Fraction = Fraction(1)) -> "Mat":
        return cls(n, n, {j: {j: Fraction(c)} for j in range(n)} if c else {})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Fraction]]) -> "Mat":
        n = len(rows)
        m = len(rows[0]) if n else 0
        cols: Dict[int, Vec] = {}
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x:
                    cols.setdefault(j, {})[i] = Fraction(x)
        return cls(n, m, cols)

    def col(self, j: int) -> Vec:
        return self.cols.get(j, {})

    def apply(self, vec: Mapping[int, Fraction]) -> Vec:
        out: Vec = {}
        for j, x in vec.items():
            c = self.cols.get(j)
            if c and x:
                add_into(out, c, x)
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = {}
        for j, c in other.cols.items():
            v = self.apply(c)
            if v:
                cols[j] = v
        return Mat(self.nrows, other.ncols, cols)

    def __add__(self, other: "Mat") -> "Mat":
        return self.combine(other, Fraction(1))

    def __sub__(self, other: "Mat") -> "Mat":
        return self.combine(other, Fraction(-1))

    def combine(self, other: "Mat", c: Fraction) -> "Mat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        cols = {j: dict(v) for j, v in self.cols.items()}
        for j, v in other.cols.items():
            add_into(cols.setdefault(j, {}), v, c)
            if not cols[j]:
                del cols[j]
        return Mat(self.nrows, self.ncols, cols)

    def scale(self, c: Fraction) -> "Mat":
        if not c:
            return Mat(self.nrows, self.ncols)
        return Mat(self.nrows, self.ncols, {j: scaled(v, c) for j, v in self.cols.items()})

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        keys = set(self.cols) | set(other.cols)
        return all(self.cols.get(j, {}) == other.cols.get(j, {}) for j in keys)

    def entry(self, i: int, j: int) -> Fraction:
        return self.cols.get(j, {}).get(i, Fraction(0))

    def trace(self) -> Fraction:
        return sum((self.entry(j, j) for j in range(min(self.nrows, self.ncols))), Fraction(0))

    def scalar_value(self) -> Optional[Fraction]:
        """Return c if the matrix equals c * identity, else None."""
        if self.nrows != self.ncols:
            return None
        if self.nrows == 0:
            return Fraction(0)
        c = self.entry(0, 0)
        for j in range(self.ncols):
            col = self.cols.get(j, {})
            expected = {j: c} if c else {}
            if col != expected:
                return None
        return c

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, c in self.cols.items():
            for i, v in c.items():
                out[i][j] = v
        return out

    def rank(self) -> int:
        return rank(self.cols.values())

    def __repr__(self) -> str:
        nnz = sum(len(c) for c in self.cols.values())
        return f"Mat({self.nrows}x{self.ncols}, nnz={nnz})"


def commutator(a: Mat, b: Mat) -> Mat:
    return (a @ b) - (b @ a)
