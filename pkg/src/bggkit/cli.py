"""Command-line front end.

    bggkit <report|verify|diagram> --type Xn --crossed i,j,... --weight a1,...,an
           [--format json|text|dot] [--max-dim N] [--out FILE]

Exit codes: 0 success, 2 usage or invalid input, 3 guardrail exceeded,
4 internal invariant failure (in verify mode also: some check failed).
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import GuardrailError, InvalidInputError, InvariantError
from .guardrails import ENV_SCALE, Guardrails, default_guardrails
from .report import build_report, emit, parse_type

EXIT_OK, EXIT_USAGE, EXIT_GUARDRAIL, EXIT_INVARIANT = 0, 2, 3, 4

NODE_HELP = (
    "Dynkin nodes use Bourbaki numbering: A_n chain 1..n; B_n/C_n node n is the short/long end; "
    "D_n nodes n-1, n are the fork; E_n node 2 hangs off node 4; F4 1-2 long, 3-4 short; G2 node 1 short."
)


@dataclass(frozen=True)
class JobSpec:
    mode: str
    type: str
    crossed: Tuple[int, ...]
    highest_weight: Tuple[int, ...]
    format: str
    guardrails: Guardrails
    out: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep argparse's exit code 2, with our prefix
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"bggkit: error: {message}\n")


def _int_list(text: str, what: str) -> Tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise InvalidInputError(f"{what} must be a comma-separated list of integers, got {text!r}")
    if not vals:
        raise InvalidInputError(f"{what} must not be empty")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bggkit", description="Exact BGG / Kostant / Casimir data for parabolic geometries.",
                epilog=NODE_HELP + f" Set {ENV_SCALE} to multiply every guardrail.")
    sub = p.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    for mode, help_ in [("report", "fast-path report"), ("verify", "report plus oracle cross-checks"),
                        ("diagram", "BGG diagram (defaults to DOT output)")]:
        s = sub.add_parser(mode, help=help_, epilog=NODE_HELP)
        s.add_argument("--type", required=True, help="simple type, e.g. A2, B3, G2")
        s.add_argument("--crossed", required=True, help="crossed nodes, e.g. 1,2 (Bourbaki numbering)")
        s.add_argument("--weight", required=True, help="highest weight in fundamental-weight coordinates")
        s.add_argument("--format", choices=("json", "text", "dot"), default="dot" if mode == "diagram" else "json")
        s.add_argument("--max-dim", type=int, default=None,
                       help="override the guardrail on dim V for the matrix oracle (default 200)")
        s.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    return p


def parse_args(argv: Optional[Sequence[str]] = None) -> JobSpec:
    """Validated JobSpec; usage errors exit with code 2 via argparse or raise InvalidInputError."""
    ns = build_parser().parse_args(argv)
    spec = parse_type(ns.type)
    crossed = _int_list(ns.crossed, "--crossed")
    weight = _int_list(ns.weight, "--weight")
    bad = sorted({i for i in crossed if not 1 <= i <= spec.rank})
    if bad:
        raise InvalidInputError(f"crossed node(s) {bad} out of range 1..{spec.rank} for {ns.type}")
    if len(weight) != spec.rank:
        raise InvalidInputError(f"{ns.type} needs {spec.rank} weight entries, got {len(weight)}")
    if any(x < 0 for x in weight):
        raise InvalidInputError(f"highest weight {weight} is not dominant")
    g = default_guardrails()
    if ns.max_dim is not None:
        if ns.max_dim <= 0:
            raise InvalidInputError("--max-dim must be positive")
        g = dataclasses.replace(g, rep_dim=ns.max_dim)
    return JobSpec(ns.mode, ns.type, tuple(sorted(set(crossed))), weight, ns.format, g, ns.out)


def run(job: JobSpec) -> Tuple[str, bool]:
    rep = build_report(job.mode, job.type, job.crossed, job.highest_weight, job.guardrails)
    return emit(rep, job.format), rep.all_checks_passed


def main(argv: Optional[List[str]] = None) -> int:
    try:
        job = parse_args(argv)
        text, ok = run(job)
    except InvalidInputError as exc:
        print(f"bggkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardrailError as exc:
        print(f"bggkit: guardrail: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except InvariantError as exc:
        print(f"bggkit: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if job.out:
        with open(job.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not ok:
        print("bggkit: verification failed", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
