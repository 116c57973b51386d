"""Tractable graph classes and distance (deletion backdoors) to them.

Conventions:

* ACY: no directed cycle; a self-attack is a cycle of length 1.
* NOEVEN: no directed simple cycle of even length. A mutual attack is an
  even cycle of length 2 unless ``count_two_cycles=False`` is passed.
* BIP: the underlying undirected graph is 2-colorable; a self-attack
  disqualifies.
* SYM: the attack relation is symmetric and irreflexive.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

import networkx as nx

from argkit.errors import CapacityError, UsageError
from argkit.framework import ArgSet, Framework, bits

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_BUDGET = 2_000_000


class GraphClassId(str, enum.Enum):
    ACY = "acy"
    NOEVEN = "noeven"
    BIP = "bip"
    SYM = "sym"

    @classmethod
    def parse(cls, value) -> "GraphClassId":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"unknown graph class {value!r}") from None


@dataclass(frozen=True)
class DistanceCertificate:
    graph_class: GraphClassId
    k: int
    deletion_set: ArgSet


def _digraph(F: Framework, alive: int) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(bits(alive))
    for i, j in F.attacks:
        if alive >> i & 1 and alive >> j & 1:
            G.add_edge(i, j)
    return G


def _acyclic(F: Framework, alive: int) -> bool:
    into = F.into
    left = alive
    changed = True
    while left and changed:
        changed = False
        for i in bits(left):
            if not into[i] & left:
                left &= ~(1 << i)
                changed = True
    return not left


def _symmetric(F: Framework, alive: int) -> bool:
    if F.self_attacking & alive:
        return False
    out, into = F.out, F.into
    return all(out[i] & alive & ~into[i] == 0 for i in bits(alive))


def _odd_edge(F: Framework, alive: int) -> int:
    """Endpoints of the first monochromatic edge of a BFS 2-coloring, or 0."""
    out, into = F.out, F.into
    color: dict[int, int] = {}
    for s in bits(alive):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in bits((out[u] | into[u]) & alive):
                if w not in color:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return (1 << u) | (1 << w)
    return 0


def _bipartite(F: Framework, alive: int) -> bool:
    return not F.self_attacking & alive and not _odd_edge(F, alive)


def _even_cycle(F: Framework, alive: int, count_two_cycles: bool = True):
    """First even simple cycle found (as an index list), or None."""
    if not _acyclic(F, alive):
        G = _digraph(F, alive)
        for cyc in nx.simple_cycles(G):
            if len(cyc) % 2 == 0 and (count_two_cycles or len(cyc) > 2):
                return cyc
    return None


def member_mask(F: Framework, g: GraphClassId, alive: int, count_two_cycles: bool = True) -> bool:
    if g is GraphClassId.ACY:
        return _acyclic(F, alive)
    if g is GraphClassId.SYM:
        return _symmetric(F, alive)
    if g is GraphClassId.BIP:
        return _bipartite(F, alive)
    if g is GraphClassId.NOEVEN:
        return _even_cycle(F, alive, count_two_cycles) is None
    raise UsageError(f"unknown graph class {g!r}")  # pragma: no cover


def is_member(F: Framework, g, *, count_two_cycles: bool = True) -> bool:
    return member_mask(F, GraphClassId.parse(g), F.all_mask, count_two_cycles)


def simple_cycles(F: Framework, cap: int = DEFAULT_CYCLE_CAP) -> list[list[str]]:
    """All directed simple cycles, each rotated to start at its lowest index.

    Self-attacks are cycles of length one. Sorted by length, then indices.
    """
    found = []
    for cyc in nx.simple_cycles(_digraph(F, F.all_mask)):
        if len(found) >= cap:
            raise CapacityError(f"more than {cap} simple cycles")
        r = cyc.index(min(cyc))
        found.append(cyc[r:] + cyc[:r])
    found.sort(key=lambda c: (len(c), c))
    return [[F.arguments[i] for i in c] for c in found]


def _as_mask(F: Framework, S) -> int:
    if isinstance(S, ArgSet):
        if S.framework is not F and S.framework != F:
            raise UsageError("ArgSet belongs to a different framework")
        return S.mask
    return F.mask_of(S)


def verify_deletion(F: Framework, g, S, *, count_two_cycles: bool = True) -> bool:
    """Is ``F`` minus ``S`` (with incident attacks) in class ``g``?"""
    return member_mask(F, GraphClassId.parse(g), F.all_mask & ~_as_mask(F, S), count_two_cycles)


def _violation(F: Framework, g: GraphClassId, alive: int) -> int:
    """Mask of arguments involved in some violation of ``g`` (0 if none)."""
    if g is GraphClassId.NOEVEN:
        cyc = _even_cycle(F, alive)
        return sum(1 << i for i in cyc) if cyc else 0
    if F.self_attacking & alive:
        return F.self_attacking & alive
    if g is GraphClassId.SYM:
        out, into = F.out, F.into
        for i in bits(alive):
            bad = out[i] & alive & ~into[i]
            if bad:
                return (1 << i) | (bad & -bad)
        return 0
    if g is GraphClassId.ACY:
        for comp in nx.strongly_connected_components(_digraph(F, alive)):
            if len(comp) > 1:
                return sum(1 << i for i in comp)
        return 0
    return _odd_edge(F, alive)


def greedy_deletion(F: Framework, g) -> int:
    """Upper bound: repeatedly delete the highest-degree violating argument."""
    g = GraphClassId.parse(g)
    alive = F.all_mask
    out, into = F.out, F.into
    while not member_mask(F, g, alive):
        viol = _violation(F, g, alive) or alive
        pick = max(bits(viol), key=lambda i: (bin((out[i] | into[i]) & alive).count("1"), -i))
        alive &= ~(1 << pick)
    return F.all_mask & ~alive


def distance(F: Framework, g, budget: int = DEFAULT_BUDGET) -> DistanceCertificate:
    """Exact distance with the lexicographically least minimum deletion set.

    Tries k = 0, 1, ... over index combinations. Refuses with
    :class:`CapacityError` (carrying a greedy certificate) as soon as the
    next size class would push the number of examined subsets past
    ``budget``.
    """
    g = GraphClassId.parse(g)
    n = len(F)
    upper = greedy_deletion(F, g)
    ub = bin(upper).count("1")
    spent = 0
    for k in range(ub + 1):
        spent += comb(n, k)
        if spent > budget:
            raise CapacityError(
                f"distance search would exceed the budget of {budget} subsets at k={k}",
                best=DistanceCertificate(g, ub, ArgSet(F, upper)),
            )
        for combo in combinations(range(n), k):
            dele = 0
            for i in combo:
                dele |= 1 << i
            if member_mask(F, g, F.all_mask & ~dele):
                return DistanceCertificate(g, k, ArgSet(F, dele))
    raise AssertionError("greedy bound was not attained")  # pragma: no cover
