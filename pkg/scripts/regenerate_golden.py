"""Freeze golden report JSON for the Borel trivial-V cases of A1, A2 and B2.

Each case is first run in verify mode; a golden file is written only if every
oracle cross-check passes.

    python3 scripts/regenerate_golden.py [--out tests/golden]
"""

import argparse
import pathlib
import sys

from bggkit.report import build_report

GOLDEN_CASES = [("A1", (1,), (0,)), ("A2", (1, 2), (0, 0)), ("B2", (1, 2), (0, 0))]


def golden_name(type_name: str) -> str:
    return f"{type_name}_borel_trivial.json"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"))
    args = ap.parse_args(argv)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, crossed, lam in GOLDEN_CASES:
        checked = build_report("verify", name, crossed, lam, None)
        failed = [c.name for c in checked.verification if not c.passed]
        if failed:
            print(f"{name}: oracle checks failed {failed}; golden not written", file=sys.stderr)
            return 1
        text = build_report("report", name, crossed, lam, None).to_json()
        (out / golden_name(name)).write_text(text, encoding="utf-8")
        print(f"{name}: {len(checked.verification)} checks passed, wrote {golden_name(name)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
