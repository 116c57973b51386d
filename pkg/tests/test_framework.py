import pytest
from hypothesis import given

from argkit.errors import UsageError
from argkit.framework import ArgSet, Framework, characteristic, defends, is_conflict_free, range_of
from argkit.reductions import reduce1
from argkit.reference import reference_range

from conftest import ex1_formula, framework_and_sets, frameworks


def test_construction_rejects_bad_input():
    with pytest.raises(UsageError):
        Framework(["a", "a"])
    with pytest.raises(UsageError):
        Framework(["a"], [("a", "b")])


def test_immutable():
    F = Framework(["a"])
    with pytest.raises(AttributeError):
        F.arguments = ("b",)


def test_range_examples():
    F = Framework(["a", "b"], [("a", "b")])
    assert range_of(F, F.empty).names == ()
    assert range_of(F, F.argset(["a"])).names == ("a", "b")


def test_range_of_b_in_ex1_literal():
    F = reduce1(ex1_formula(), "literal").framework
    got = set(range_of(F, F.argset(["b"])))
    assert got == {"b", "c1", "nx1", "nx2", "ny1"}


def test_conflict_free_examples():
    F = Framework(["a"], [("a", "a")])
    assert is_conflict_free(F, F.empty)
    assert not is_conflict_free(F, F.argset(["a"]))
    G = reduce1(ex1_formula()).framework
    assert not is_conflict_free(G, G.argset(["y1", "ny1"]))


def test_defends_examples():
    F = Framework(["a", "b", "c"], [("b", "a"), ("c", "b")])
    assert defends(F, F.empty, "c")
    assert defends(F, F.argset(["c"]), "a")
    assert not defends(F, F.empty, "a")
    G = reduce1(ex1_formula(), "literal").framework
    assert defends(G, G.argset(["x1", "nx2", "y1"]), "phi")
    with pytest.raises(UsageError):
        defends(F, F.empty, "zz")


def test_characteristic_examples():
    F = Framework(["u", "a", "b"], [("a", "b"), ("b", "a")])
    assert "u" in characteristic(F, F.empty)
    G = Framework(["a", "b"], [("a", "b"), ("b", "a")])
    assert characteristic(G, G.empty).names == ()
    H = Framework(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert characteristic(H, H.argset(["a"])).names == ("a", "c")


def test_foreign_set_rejected():
    F = Framework(["a", "b"])
    G = Framework(["a", "b"], [("a", "b")])
    with pytest.raises(UsageError):
        range_of(G, F.argset(["a"]))
    with pytest.raises(UsageError):
        F.argset(["a"]) | G.argset(["b"])


def test_argset_ops():
    F = Framework(["a", "b", "c"])
    S, T = F.argset(["a", "b"]), F.argset(["b", "c"])
    assert (S | T) == F.full
    assert (S & T).names == ("b",)
    assert (S - T).names == ("a",)
    assert F.argset(["b"]) < S and not S <= T
    assert repr(S) == "{a, b}"


def test_restrict_and_remove():
    F = Framework(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    G = F.remove(["b"])
    assert G.arguments == ("a", "c") and G.attack_names == [("c", "a")]


@given(framework_and_sets())
def test_range_monotone_and_matches_reference(data):
    F, (S, T) = data
    assert set(range_of(F, S)) == reference_range(F, S.names)
    U = S | T
    assert range_of(F, S) <= range_of(F, U)
    assert S <= range_of(F, S)


@given(framework_and_sets())
def test_conflict_freeness_is_downward_closed(data):
    F, (S, T) = data
    if is_conflict_free(F, S):
        assert is_conflict_free(F, S & T)


@given(framework_and_sets())
def test_characteristic_monotone(data):
    F, (S, T) = data
    assert characteristic(F, S & T) <= characteristic(F, S)


@given(frameworks())
def test_equality_and_hash(F):
    G = Framework(F.arguments, list(reversed(F.attack_names)))
    assert F == G and hash(F) == hash(G)
    assert ArgSet(F, F.all_mask) == ArgSet(G, G.all_mask)
