from itertools import combinations, product

import pytest
from hypothesis import given

from argkit.errors import CapacityError
from argkit.framework import Framework
from argkit.graph_classes import (GraphClassId, distance, greedy_deletion, is_member,
                                  simple_cycles, verify_deletion)
from argkit.logic import Qbf2Formula
from argkit.reductions import reduce1, reduce2, reduce5, reduce6

from conftest import ex1_formula, ex5_instance, ex6_formula, frameworks

CLASSES = list(GraphClassId)


def brute_bipartite(F):
    if F.self_attacking:
        return False
    n = len(F)
    for colors in product((0, 1), repeat=n):
        if all(colors[i] != colors[j] for i, j in F.attacks):
            return True
    return n == 0


def test_empty_framework_in_every_class():
    for g in CLASSES:
        assert is_member(Framework([]), g)


def test_mutual_attack_membership():
    F = Framework(["a", "b"], [("a", "b"), ("b", "a")])
    assert is_member(F, "sym") and is_member(F, "bip")
    assert not is_member(F, "acy") and not is_member(F, "noeven")
    assert is_member(F, "noeven", count_two_cycles=False)


def test_self_loop_conventions():
    F = Framework(["a"], [("a", "a")])
    assert not is_member(F, "acy")
    assert is_member(F, "noeven")
    assert not is_member(F, "bip")
    assert not is_member(F, "sym")


def test_ex1_minus_phi_is_bipartite():
    F = reduce1(ex1_formula(), "literal").framework
    assert is_member(F.remove(["phi"]), "bip")
    assert not is_member(F, "bip")


def test_simple_cycles_examples():
    assert simple_cycles(Framework(["a", "b"], [("a", "b")])) == []
    assert simple_cycles(Framework(["a"], [("a", "a")])) == [["a"]]
    assert simple_cycles(reduce5(ex5_instance()).framework) == [["b"]]
    F = Framework(["a", "b", "c"], [("b", "c"), ("c", "a"), ("a", "b"), ("a", "c")])
    assert simple_cycles(F) == [["a", "c"], ["a", "b", "c"]]


def test_simple_cycles_cap():
    F = Framework(["a", "b", "c"], [(x, y) for x in "abc" for y in "abc"])
    with pytest.raises(CapacityError):
        simple_cycles(F, cap=3)


def test_distance_examples():
    F = Framework(["a", "b"], [("a", "b")])
    cert = distance(F, "acy")
    assert cert.k == 0 and len(cert.deletion_set) == 0
    cert = distance(reduce1(ex1_formula(), "literal").framework, "bip")
    assert (cert.k, cert.deletion_set.names) == (1, ("phi",))
    cert = distance(reduce2(ex1_formula(), "literal").framework, "sym")
    assert (cert.k, cert.deletion_set.names) == (2, ("phi", "b"))


def test_distance_budget():
    F = Framework([f"a{i}" for i in range(8)], [(f"a{i}", f"a{i}") for i in range(8)])
    with pytest.raises(CapacityError) as exc:
        distance(F, "acy", budget=50)
    assert exc.value.best.k == 8
    assert distance(F, "acy").k == 8


def test_verify_deletion_examples():
    F = Framework(["a", "b"], [("a", "a"), ("a", "b")])
    for g in CLASSES:
        assert verify_deletion(F, g, F.arguments)
    G = reduce6(ex6_formula()).framework
    assert verify_deletion(G, "sym", ["u", "v", "b", "phi"])
    mono = Qbf2Formula.build(["y1", "y2"], ["z3", "z4"], [["y1", "z3"], ["-y2", "-z3", "-z4"], ["z4"]])
    H = reduce6(mono).framework
    assert verify_deletion(H, "bip", ["u", "v", "b", "phi"])


@given(frameworks(max_args=6))
def test_membership_properties(F):
    if is_member(F, "acy"):
        assert is_member(F, "noeven")
    sym = all((b, a) in F.attack_names and a != b for a, b in F.attack_names)
    assert is_member(F, "sym") == sym
    assert is_member(F, "bip") == brute_bipartite(F)
    cycles = simple_cycles(F)
    assert is_member(F, "acy") == (cycles == [])
    assert is_member(F, "noeven") == all(len(c) % 2 for c in cycles)


@given(frameworks(max_args=6))
def test_distance_is_minimal(F):
    for g in CLASSES:
        cert = distance(F, g)
        assert verify_deletion(F, g, cert.deletion_set)
        assert (cert.k == 0) == is_member(F, g)
        assert bin(greedy_deletion(F, g)).count("1") >= cert.k
        for k in range(cert.k):
            for S in combinations(F.arguments, k):
                assert not verify_deletion(F, g, S)
