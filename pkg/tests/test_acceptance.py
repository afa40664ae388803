"""Acceptance criteria 1-9, all exact.

The oracle suite is {A1, A2, B2, A3, B3, C3, G2} x {Borel, each single crossed
node} x V in {trivial, adjoint, first fundamental}. Every check runs once per
case; each criterion test prints one PASS/FAIL line.
"""

import os
import pathlib
import subprocess
import sys
import time

import pytest

from bggkit.linalg import Mat
from bggkit.oracle.reps import casimir_matrix
from bggkit.verify import CRITERIA, SUITE_TYPES, make_case, run_checks, suite_cases

import conftest

GOLDEN = pathlib.Path(__file__).parent / "golden"
GOLDEN_CASES = [("A1", "1", "0"), ("A2", "1,2", "0,0"), ("B2", "1,2", "0,0")]


@pytest.fixture(scope="session")
def suite_results():
    results = {}
    t0 = time.perf_counter()
    for name, crossed, label, lam in suite_cases():
        case = make_case(name, crossed, lam)
        results[(name, crossed, label)] = {c.name: c for c in run_checks(case)}
    return results, time.perf_counter() - t0


def _report(number, failures, detail):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number}: {status} ({detail})"
    if failures:
        line += "; failing: " + ", ".join(failures[:5])
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def _criterion_failures(results, number):
    failures = []
    for (name, crossed, label), checks in results.items():
        for check in CRITERIA[number]:
            res = checks.get(check)
            if res is None or not res.passed:
                failures.append(f"{name} {crossed} {label}: {check}")
    return failures


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_oracle_criterion(number, suite_results):
    results, seconds = suite_results
    failures = _criterion_failures(results, number)
    extra = ""
    if number == 3:
        # the adjoint representation has Casimir exactly 1 for every suite type
        for name in SUITE_TYPES:
            case = make_case(name, (1,), case_adjoint(name))
            C = casimir_matrix(case.algebra, case.rep)
            if C != Mat.identity(case.rep.dim):
                failures.append(f"{name} adjoint: Casimir is not the identity")
        extra = ", adjoint scalar 1 on all suite types"
    _report(number, failures, f"{len(results)} cases{extra}, checks {'+'.join(CRITERIA[number])}, suite {seconds:.0f}s")
    assert not failures


def case_adjoint(name):
    return next(lam for t, _, label, lam in suite_cases((name,)) if label == "adjoint")


def test_criterion_9_determinism_and_goldens():
    failures = []
    for name, crossed, weight in GOLDEN_CASES:
        args = [sys.executable, "-m", "bggkit.cli", "report", "--type", name, "--crossed", crossed, "--weight", weight]
        runs = [subprocess.run(args, capture_output=True, text=True, env=dict(os.environ)) for _ in range(2)]
        if any(r.returncode != 0 for r in runs) or runs[0].stdout != runs[1].stdout:
            failures.append(f"{name}: output differs between runs")
            continue
        golden = (GOLDEN / f"{name}_borel_trivial.json").read_text(encoding="utf-8")
        if runs[0].stdout != golden:
            failures.append(f"{name}: output differs from golden file")
    _report(9, failures, f"{len(GOLDEN_CASES)} golden reports, two runs each")
    assert not failures
