"""Report assembly and serialization (JSON, text, DOT).

Rationals are written as "p/q" strings in lowest terms with a positive
denominator (always present, so 2 is "2/1").  Integer weight coordinates stay
JSON integers.  Output is byte-deterministic for a fixed job.
"""

from __future__ import annotations

import dataclasses
import json
import typing
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence, Tuple

from .casimir import eigen_report, filtration_from_character, splitting_factors
from .errors import GuardrailError, InvalidInputError
from .guardrails import Guardrails, default_guardrails
from .kostant import hasse_diagram, hasse_edges, homology, lowest_weight_data
from .parabolic import make_parabolic
from .rootsys import DynkinSpec, build_root_system, is_dominant_integral, normalize_weight, weyl_dimension

SCHEMA_VERSION = "1"
SPLITTING_NOTE = "the P-submodule generated by the target may need fewer factors (not computed)"
ORDER_NOTE = "candidate orders are grading-element differences along Hasse covers (derived metadata)"


def fmt_q(x) -> str:
    q = Fraction(x)
    return f"{q.numerator}/{q.denominator}"


def parse_q(s: str) -> Fraction:
    if not isinstance(s, str) or s.count("/") != 1:
        raise InvalidInputError(f"expected a 'p/q' rational string, got {s!r}")
    p, q = s.split("/")
    return Fraction(int(p), int(q))


@dataclass(frozen=True)
class JobEcho:
    mode: str
    type: str
    crossed: Tuple[int, ...]
    highest_weight: Tuple[int, ...]


@dataclass(frozen=True)
class LayerDim:
    layer: int
    dim: int


@dataclass(frozen=True)
class GradingSummary:
    depth: int
    dims: Tuple[LayerDim, ...]
    pplus_dim: int
    levi_nodes: Tuple[int, ...]
    grading_element: Tuple[Fraction, ...]  # coroot coordinates


@dataclass(frozen=True)
class HasseEntry:
    word: Tuple[int, ...]
    degree: int
    inversion_set: Tuple[Tuple[int, ...], ...]
    rho_image: Tuple[int, ...]


@dataclass(frozen=True)
class ComponentEntry:
    index: int
    degree: int
    lowest_weight: Tuple[int, ...]
    homogeneity: Fraction
    casimir: Fraction
    laplacian: Fraction
    c0: Fraction
    identity_holds: bool
    word: Tuple[int, ...]


@dataclass(frozen=True)
class EdgeEntry:
    source: int
    target: int
    candidate_order: Fraction


@dataclass(frozen=True)
class LevelComponentEntry:
    lowest_weight: Tuple[int, ...]
    eigenvalue: Fraction
    multiplicity: int


@dataclass(frozen=True)
class LevelEntry:
    index: int
    grading_eigenvalue: Fraction
    components: Tuple[LevelComponentEntry, ...]


@dataclass(frozen=True)
class FactorEntry:
    level: int
    eigenvalues: Tuple[Fraction, ...]


@dataclass(frozen=True)
class SplittingEntry:
    level: int
    lowest_weight: Tuple[int, ...]
    mu0: Fraction
    factors: Tuple[FactorEntry, ...]
    product: Fraction
    splits: bool


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Report:
    schema_version: str
    job: JobEcho
    grading: GradingSummary
    lowest_weight_of_v: Tuple[int, ...]
    lambda_low: Tuple[int, ...]
    c0: Fraction
    hasse: Tuple[HasseEntry, ...]
    components: Tuple[ComponentEntry, ...]
    edges: Tuple[EdgeEntry, ...]
    order_note: str
    filtration: Tuple[LevelEntry, ...]
    splitting: Tuple[SplittingEntry, ...]
    splitting_note: str
    verification: Optional[Tuple[CheckEntry, ...]] = None

    @property
    def all_checks_passed(self) -> bool:
        return self.verification is None or all(c.passed for c in self.verification)

    def to_dict(self) -> dict:
        return _encode(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise InvalidInputError(f"unsupported schema_version {data.get('schema_version')!r}")
        return _decode(cls, data)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def _encode(obj: Any) -> Any:
    if dataclasses.is_dataclass(obj):
        return {f.name: _encode(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return fmt_q(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (tuple, list)):
        return [_encode(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _decode(tp: Any, value: Any) -> Any:
    origin = typing.get_origin(tp)
    if origin is typing.Union:
        args = [a for a in typing.get_args(tp) if a is not type(None)]
        return None if value is None else _decode(args[0], value)
    if origin is tuple:
        args = typing.get_args(tp)
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(_decode(args[0], v) for v in value)
        return tuple(_decode(a, v) for a, v in zip(args, value))
    if dataclasses.is_dataclass(tp):
        hints = typing.get_type_hints(tp)
        return tp(**{f.name: _decode(hints[f.name], value[f.name]) for f in dataclasses.fields(tp) if f.name in value})
    if tp is Fraction:
        return parse_q(value)
    if tp is bool:
        return bool(value)
    if tp is int:
        return int(value)
    return value


def _ints(w: Sequence) -> Tuple[int, ...]:
    out = []
    for x in w:
        q = Fraction(x)
        if q.denominator != 1:
            raise InvalidInputError(f"weight {tuple(w)} is not integral")
        out.append(int(q))
    return tuple(out)


def parse_type(name: str) -> DynkinSpec:
    try:
        return DynkinSpec.parse(name)
    except InvalidInputError:
        raise
    except (ValueError, TypeError) as exc:
        raise InvalidInputError(str(exc)) from exc


def build_report(mode: str, type_name: str, crossed: Sequence[int], highest: Sequence[int],
                 guardrails: Optional[Guardrails] = None) -> Report:
    """Fast-path report; in verify mode the oracle checks are embedded."""
    g = guardrails or default_guardrails()
    spec = parse_type(type_name)
    rs = build_root_system(spec)
    lam = normalize_weight(highest)
    if len(lam) != rs.rank:
        raise InvalidInputError(f"{rs.name} needs a weight with {rs.rank} entries, got {len(lam)}")
    if not is_dominant_integral(lam):
        raise InvalidInputError(f"highest weight {lam} is not dominant integral")
    pd = make_parabolic(rs, crossed)
    dim_v = weyl_dimension(rs, lam)
    if dim_v > g.character_dim:
        raise GuardrailError(f"dim V = {dim_v} exceeds the character guardrail {g.character_dim}")
    low_v, lam_low = lowest_weight_data(rs, lam)
    hasse = hasse_diagram(pd, g.weyl_order)
    diag = homology(pd, lam, g.weyl_order)
    comps = []
    for idx, c in enumerate(diag.components):
        er = eigen_report(rs, lam_low, c.lowest_weight, c.degree)
        comps.append(ComponentEntry(idx, c.degree, _ints(c.lowest_weight), c.homogeneity, er.casimir, er.laplacian,
                                    er.c0, er.identity_holds, c.source_word.word.letters))
    edges = tuple(
        EdgeEntry(a, b, comps[b].homogeneity - comps[a].homogeneity) for a, b in hasse_edges(pd, hasse)
    )
    levels = filtration_from_character(pd, lam)
    split = []
    for lvl in levels:
        for comp in lvl.components:
            sr = splitting_factors(pd, levels, (lvl.index, comp.lowest_weight))
            split.append(SplittingEntry(sr.level, _ints(sr.lowest_weight), sr.mu0,
                                        tuple(FactorEntry(j, mus) for j, mus in sr.factors), sr.product, sr.splits))
    grading = GradingSummary(
        pd.grading.depth_k,
        tuple(LayerDim(i, d) for i, d in sorted(pd.grading.dims.items())),
        pd.pplus_dim,
        pd.levi_nodes,
        pd.grading_element.coroot_coords,
    )
    verification = None
    if mode == "verify":
        from .verify import Case, run_checks

        case = Case(rs, pd.crossed, lam, g)
        verification = tuple(CheckEntry(r.name, r.passed, r.detail) for r in run_checks(case))
    return Report(
        SCHEMA_VERSION,
        JobEcho(mode, rs.name, pd.crossed, _ints(lam)),
        grading,
        _ints(low_v),
        _ints(lam_low),
        eigen_report(rs, lam_low, low_v).c0,
        tuple(HasseEntry(h.word.letters, h.degree, h.inversion_set, _ints(h.rho_image)) for h in hasse),
        tuple(comps),
        edges,
        ORDER_NOTE,
        tuple(LevelEntry(l.index, l.grading_eigenvalue,
                         tuple(LevelComponentEntry(_ints(c.lowest_weight), c.eigenvalue, c.multiplicity)
                               for c in l.components)) for l in levels),
        tuple(split),
        SPLITTING_NOTE,
        verification,
    )


def _w(w: Sequence) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def emit_text(r: Report) -> str:
    j = r.job
    lines = [
        f"bggkit report (schema {r.schema_version})",
        f"type {j.type}, crossed {{{','.join(map(str, j.crossed))}}}, highest weight {_w(j.highest_weight)}",
        f"grading depth {r.grading.depth}; dims "
        + ", ".join(f"g_{d.layer}:{d.dim}" for d in r.grading.dims)
        + f"; grading element (coroot basis) {_w(fmt_q(x) for x in r.grading.grading_element)}",
        f"lowest weight of V {_w(r.lowest_weight_of_v)}, lambda_low {_w(r.lambda_low)}, c0 {fmt_q(r.c0)}",
        f"Hasse diagram: {len(r.hasse)} elements",
        "BGG diagram (homology components):",
    ]
    for c in r.components:
        lines.append(
            f"  [{c.index}] degree {c.degree}  lowest weight {_w(c.lowest_weight)}  homogeneity {fmt_q(c.homogeneity)}"
            f"  casimir {fmt_q(c.casimir)}  laplacian {fmt_q(c.laplacian)}"
            f"  identity {'ok' if c.identity_holds else 'FAILED'}  word {_w(c.word)}"
        )
    lines.append("Hasse covers (" + r.order_note + "):")
    for e in r.edges:
        lines.append(f"  {e.source} -> {e.target}  candidate order {fmt_q(e.candidate_order)}")
    lines.append("p-filtration of V (level: grading eigenvalue; lowest weight = Casimir eigenvalue x multiplicity):")
    for l in r.filtration:
        parts = ", ".join(f"{_w(c.lowest_weight)}={fmt_q(c.eigenvalue)}x{c.multiplicity}" for c in l.components)
        lines.append(f"  W^{l.index}/W^{l.index + 1}: {fmt_q(l.grading_eigenvalue)}; {parts}")
    lines.append("splitting operators (" + r.splitting_note + "):")
    for s in r.splitting:
        lines.append(f"  level {s.level} {_w(s.lowest_weight)}: mu0 {fmt_q(s.mu0)}, product {fmt_q(s.product)}, "
                     f"{'splits' if s.splits else 'does not split'}")
    if r.verification is not None:
        lines.append("verification:")
        for c in r.verification:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    return "\n".join(lines) + "\n"


def emit_dot(r: Report) -> str:
    """BGG graph: one node per homology component, edges along Hasse covers."""
    j = r.job
    title = f"{j.type} crossed {{{','.join(map(str, j.crossed))}}} highest weight {_w(j.highest_weight)}"
    lines = [
        "digraph BGG {",
        "  rankdir=LR;",
        f'  label="{title}";',
        "  node [shape=box, fontname=monospace];",
    ]
    for d in sorted({c.degree for c in r.components}):
        ids = " ".join(f"c{c.index};" for c in r.components if c.degree == d)
        lines.append(f"  {{ rank=same; {ids} }}")
    for c in r.components:
        lines.append(
            f'  c{c.index} [label="H{c.degree} {_w(c.lowest_weight)}\\ncasimir {fmt_q(c.casimir)}'
            f'\\nhomogeneity {fmt_q(c.homogeneity)}"];'
        )
    for e in r.edges:
        lines.append(f'  c{e.source} -> c{e.target} [label="order {fmt_q(e.candidate_order)} (derived)"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit(r: Report, fmt: str) -> str:
    if fmt == "json":
        return r.to_json()
    if fmt == "text":
        return emit_text(r)
    if fmt == "dot":
        return emit_dot(r)
    raise InvalidInputError(f"unknown format {fmt!r}")
