"""Power-set reference semantics.

Written straight from the textbook definitions over Python ``frozenset``s of
names, sharing no code with :mod:`argkit.semantics`. Exponential in |A| and
only meant as a test oracle for small frameworks.
"""
from __future__ import annotations

from itertools import combinations

from argkit.framework import Framework

MAX_ARGS = 12


def _subsets(args):
    for k in range(len(args) + 1):
        for combo in combinations(args, k):
            yield frozenset(combo)


def reference_extensions(F: Framework, sigma: str) -> set[frozenset[str]]:
    if len(F) > MAX_ARGS:
        raise ValueError("reference enumeration is limited to small frameworks")
    A = list(F.arguments)
    R = set(F.attack_names)
    attackers = {a: {x for (x, y) in R if y == a} for a in A}

    def rng(S):
        return set(S) | {y for (x, y) in R if x in S}

    def cf(S):
        return not any((x, y) in R for x in S for y in S)

    def defended(S, a):
        return all(any((s, b) in R for s in S) for b in attackers[a])

    def adm(S):
        return cf(S) and all(defended(S, a) for a in S)

    def com(S):
        return adm(S) and all(a in S for a in A if defended(S, a))

    subsets = list(_subsets(A))
    sigma = str(getattr(sigma, "value", sigma)).lower()
    if sigma == "cf":
        return {S for S in subsets if cf(S)}
    CF = [S for S in subsets if cf(S)]
    if sigma == "naive":
        return {S for S in CF if not any(S < T for T in CF)}
    if sigma == "stb":
        return {S for S in CF if rng(S) == set(A)}
    if sigma == "stg":
        return {S for S in CF if not any(rng(S) < rng(T) for T in CF)}
    ADM = [S for S in CF if adm(S)]
    if sigma == "adm":
        return set(ADM)
    if sigma == "prf":
        return {S for S in ADM if not any(S < T for T in ADM)}
    if sigma == "sem":
        return {S for S in ADM if not any(rng(S) < rng(T) for T in ADM)}
    COM = [S for S in ADM if com(S)]
    if sigma == "com":
        return set(COM)
    if sigma == "grd":
        return {S for S in COM if not any(T < S for T in COM)}
    raise ValueError(f"unknown semantics {sigma!r}")


def reference_range(F: Framework, S) -> set[str]:
    """Per-element range loop used to cross-check the bitset kernel."""
    res = set(S)
    for a in S:
        for (x, y) in F.attack_names:
            if x == a:
                res.add(y)
    return res
