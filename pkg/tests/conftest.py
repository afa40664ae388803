import functools

import pytest
from hypothesis import HealthCheck, settings

from bggkit.oracle.algebra import realize_algebra
from bggkit.oracle.reps import build_irrep
from bggkit.parabolic import make_parabolic
from bggkit.rootsys import DynkinSpec, build_root_system

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]
SMALL_TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


@functools.lru_cache(maxsize=None)
def rs_of(name):
    return build_root_system(DynkinSpec.parse(name))


@functools.lru_cache(maxsize=None)
def algebra_of(name):
    return realize_algebra(rs_of(name))


@functools.lru_cache(maxsize=None)
def irrep_of(name, highest):
    return build_irrep(algebra_of(name), highest)


def pd_of(name, crossed):
    return make_parabolic(rs_of(name), crossed)


def adjoint_weight(name):
    rs = rs_of(name)
    return rs.root_to_weight(rs.highest_root)


# acceptance result lines, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
