import pytest
from hypothesis import settings, strategies as st

from argkit.framework import Framework
from argkit.logic import CnfFormula, MinsatInstance, Qbf2Formula

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def frameworks(draw, max_args=6):
    n = draw(st.integers(0, max_args))
    args = [f"a{i}" for i in range(n)]
    pairs = [(a, b) for a in args for b in args]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Framework(args, chosen)


@st.composite
def framework_and_sets(draw, max_args=6, count=2):
    F = draw(frameworks(max_args))
    masks = [draw(st.integers(0, F.all_mask)) for _ in range(count)]
    return F, [F.from_mask(m) for m in masks]


def ex1_formula():
    """forall y1 exists x1 x2 : (x1 | x2 | y1) & (-x1 | -x2 | -y1)."""
    return Qbf2Formula.build(["y1"], ["x1", "x2"], [["x1", "x2", "y1"], ["-x1", "-x2", "-y1"]])


def ex3_formula():
    return Qbf2Formula.build(["y1"], ["z1", "z2"], [["z1", "z2", "y1"], ["-z1", "-z2", "-y1"]])


def ex4_formula():
    return Qbf2Formula.build(["y1", "y2"], ["z3", "z4"],
                             [["y1", "y2", "z3"], ["y2", "-z3", "-z4"], ["y2", "z3", "z4"]])


def ex5_cnf():
    return CnfFormula(["y1", "y2", "z3", "z4"],
                      [["y1", "y2", "z3"], ["-y2", "-z3", "-z4"], ["-y1", "-y2", "z4"]])


def ex5_instance(target="y1"):
    return MinsatInstance(ex5_cnf(), target)


def ex6_formula():
    return Qbf2Formula.build(["y1", "y2"], ["z3", "z4"],
                             [["y1", "y2", "z3"], ["-y2", "-z3", "-z4"], ["-y1", "-y2", "z4"]])


@pytest.fixture
def ex1():
    return ex1_formula()


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
