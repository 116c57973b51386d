from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from argkit.errors import CapacityError, UsageError
from argkit.logic import (CnfFormula, Literal, MinsatInstance, Qbf2Formula, enumerate_minsat,
                          enumerate_qbf2, is_model, is_monotone, is_satisfiable, minimal_models,
                          minsat_member, qbf2_valid, sample_minsat, sample_qbf2)

from conftest import ex1_formula, ex5_cnf, ex5_instance


def test_literal():
    lit = Literal.parse("-x")
    assert lit == Literal("x", True) and -lit == Literal("x", False) and str(lit) == "-x"
    with pytest.raises(UsageError):
        Literal("", False)


def test_cnf_invariants():
    with pytest.raises(UsageError):
        CnfFormula(["x"], [["x", "-x"]])
    with pytest.raises(UsageError):
        CnfFormula(["x"], [[]])
    with pytest.raises(UsageError):
        CnfFormula(["x"], [["y"]])
    with pytest.raises(UsageError):
        Qbf2Formula.build(["x"], ["x"], [])


def test_is_model_examples():
    assert is_model(CnfFormula(["x"], []), [])
    phi = ex1_formula().matrix
    assert is_model(phi, ["x1"])
    assert not is_model(phi, ["x1", "x2", "y1"])
    with pytest.raises(UsageError):
        is_model(phi, ["q"])


def test_is_monotone_examples():
    ok, pos, neg = is_monotone(ex1_formula().matrix)
    assert ok and len(pos) == 1 and len(neg) == 1
    assert not is_monotone(CnfFormula(["x", "y"], [["x", "-y"]]))[0]
    ok, pos, neg = is_monotone(CnfFormula([], []))
    assert ok and not pos and not neg


def test_qbf2_valid_examples():
    assert qbf2_valid(Qbf2Formula.build([], ["x"], [["x"]]))
    assert not qbf2_valid(Qbf2Formula.build(["y"], [], [["y"]]))
    assert qbf2_valid(ex1_formula())
    big = Qbf2Formula.build([f"y{i}" for i in range(21)], [], [])
    with pytest.raises(CapacityError):
        qbf2_valid(big)


def test_minimal_models_examples():
    assert minimal_models(CnfFormula(["x1", "x2"], [["x1", "x2"]])) == [{"x1"}, {"x2"}]
    assert minimal_models(CnfFormula(["x"], [["x"], ["-x"]])) == []
    mm = minimal_models(ex5_cnf())
    assert {"z3"} in mm and {"y1"} in mm


def test_minsat_member_examples():
    assert minsat_member(ex5_instance("y1"))
    assert not minsat_member(MinsatInstance(CnfFormula(["x1", "x2"], [["x2"]]), "x1"))
    assert not minsat_member(MinsatInstance(CnfFormula(["x"], [["x"], ["-x"]]), "x"))
    with pytest.raises(UsageError):
        MinsatInstance(CnfFormula(["x"], []), "y")


def test_enumerate_qbf2_small():
    got = [str(P) for P in enumerate_qbf2(1, 0, 1, 1, monotone=False)]
    assert got == ["forall - exists - : T", "forall y1 exists - : (y1)", "forall y1 exists - : (-y1)"]


def _clause_sets(P):
    return {frozenset(map(str, c)) for c in P.clauses}


def test_enumerate_qbf2_contains_ex1_shape():
    target = Qbf2Formula.build(["y1"], ["z1", "z2"], [["z1", "z2", "y1"], ["-z1", "-z2", "-y1"]])
    family = list(enumerate_qbf2(1, 2, 2, 3, monotone=True))
    assert _clause_sets(target) in [_clause_sets(P) for P in family]
    assert all(is_monotone(P.matrix)[0] for P in family)


def test_enumeration_deterministic_and_duplicate_free():
    a = [str(P) for P in enumerate_qbf2(2, 1, 2, 2, monotone=False)]
    assert a == [str(P) for P in enumerate_qbf2(2, 1, 2, 2, monotone=False)]
    assert len(a) == len(set(a))
    touch = list(enumerate_qbf2(2, 2, 2, 3, monotone=True, touch_z=True))
    assert all(P.touches_existential() for P in touch)


def test_family_sizes():
    assert sum(1 for _ in enumerate_qbf2(2, 2, 3, 3, monotone=True)) == 1141
    assert sum(1 for _ in enumerate_qbf2(2, 2, 3, 3, monotone=True, all_vars_used=False)) == 1784
    assert sum(1 for _ in enumerate_minsat(3, 3)) == 1510


def test_samplers_seeded():
    assert [str(P) for P in sample_qbf2(3, 20, monotone=True, touch_z=True)] == \
        [str(P) for P in sample_qbf2(3, 20, monotone=True, touch_z=True)]
    assert [str(I) for I in sample_minsat(1, 20)] == [str(I) for I in sample_minsat(1, 20)]


@st.composite
def cnfs(draw, max_vars=5, max_clauses=5):
    n = draw(st.integers(1, max_vars))
    vs = [f"x{i + 1}" for i in range(n)]
    clauses = []
    for _ in range(draw(st.integers(0, max_clauses))):
        chosen = draw(st.lists(st.sampled_from(vs), min_size=1, max_size=3, unique=True))
        clauses.append([("-" if draw(st.booleans()) else "") + v for v in chosen])
    return CnfFormula(vs, clauses)


@given(cnfs())
def test_minimal_models_antichain_and_cover(phi):
    mm = minimal_models(phi)
    for a in mm:
        assert is_model(phi, a)
        assert not any(b < a for b in mm)
    vs = phi.variables
    for k in range(len(vs) + 1):
        for M in combinations(vs, k):
            if is_model(phi, M):
                assert any(m <= set(M) for m in mm)
    assert is_satisfiable(phi) == bool(mm)


@given(cnfs())
def test_qbf_without_universals_is_sat(phi):
    assert qbf2_valid(Qbf2Formula([], list(phi.variables), phi)) == is_satisfiable(phi)
