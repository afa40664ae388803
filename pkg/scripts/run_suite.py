"""Run every oracle cross-check over the acceptance suite and print a summary.

    python scripts/run_suite.py [TYPE ...] [--quiet]
"""

import argparse
import sys
import time
from collections import defaultdict

from bggkit.verify import CRITERIA, SUITE_TYPES, make_case, run_checks, suite_cases


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("types", nargs="*", default=list(SUITE_TYPES))
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()
    failures = defaultdict(list)
    t_all = time.perf_counter()
    for t, cr, label, lam in suite_cases(args.types):
        t0 = time.perf_counter()
        results = run_checks(make_case(t, cr, lam))
        bad = [r for r in results if not r.passed]
        for r in results:
            if not r.passed:
                failures[r.name].append(f"{t} {cr} {label}: {r.detail}")
        if not args.quiet:
            status = "ok" if not bad else "FAIL " + ",".join(r.name for r in bad)
            print(f"{t:3} crossed {str(cr):10} V={label:12} {time.perf_counter() - t0:7.2f}s  {status}", flush=True)
    for n, names in CRITERIA.items():
        bad = [f for name in names for f in failures.get(name, [])]
        print(f"criterion {n}: {'PASS' if not bad else 'FAIL'} ({', '.join(names)})")
        for line in bad[:5]:
            print("    " + line)
    print(f"total {time.perf_counter() - t_all:.1f}s")
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())
