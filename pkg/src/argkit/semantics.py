"""Extension enumeration and acceptance for the classical semantics.

Candidates are produced by depth-first subset search (conflict-free sets,
admissible sets with defense-based pruning, or maximal conflict-free sets
via Bron-Kerbosch) and then filtered for subset- or range-maximality.
Nothing here materializes the power set.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from argkit.errors import CapacityError, UsageError
from argkit.framework import ArgSet, Framework, bits

DEFAULT_BOUND = 24


class SemanticsId(str, enum.Enum):
    CF = "cf"
    NAIVE = "naive"
    ADM = "adm"
    STB = "stb"
    COM = "com"
    GRD = "grd"
    PRF = "prf"
    STG = "stg"
    SEM = "sem"

    @classmethod
    def parse(cls, value) -> "SemanticsId":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"unknown semantics {value!r}") from None


def canonical_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class ExtensionSet:
    framework: Framework
    extensions: tuple[ArgSet, ...]

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)

    def __contains__(self, item) -> bool:
        if isinstance(item, ArgSet):
            return item in self.extensions
        mask = self.framework.mask_of(item)
        return any(e.mask == mask for e in self.extensions)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(e.mask for e in self.extensions)

    def as_names(self) -> list[tuple[str, ...]]:
        return [e.names for e in self.extensions]


# ---------------------------------------------------------------- candidates


def conflict_free_masks(F: Framework) -> Iterator[int]:
    out, into = F.out, F.into
    conflict = [out[i] | into[i] for i in range(len(F))]

    def rec(S: int, cand: int) -> Iterator[int]:
        yield S
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            yield from rec(S | low, cand & ~conflict[i])

    return rec(0, F.all_mask & ~F.self_attacking)


def admissible_masks(F: Framework) -> list[int]:
    """All admissible sets.

    Members are added in increasing index order. A branch dies as soon as
    some attacker of the partial set can no longer be counter-attacked by
    the partial set or any remaining candidate.
    """
    out, into = F.out, F.into
    conflict = [out[i] | into[i] for i in range(len(F))]
    found: list[int] = []

    def rec(S: int, hit: int, att: int, cand: int) -> None:
        need = att & ~hit
        if not need:
            found.append(S)
        else:
            m = need
            while m:
                low = m & -m
                if not into[low.bit_length() - 1] & cand:
                    return
                m ^= low
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            rec(S | low, hit | out[i], att | into[i], cand & ~conflict[i])

    rec(0, 0, 0, F.all_mask & ~F.self_attacking)
    return found


def naive_masks(F: Framework) -> list[int]:
    """Maximal conflict-free sets (Bron-Kerbosch on the conflict graph)."""
    out, into = F.out, F.into
    n = len(F)
    closed = [out[i] | into[i] | (1 << i) for i in range(n)]
    found: list[int] = []

    def rec(R: int, P: int, X: int) -> None:
        if not P:
            if not X:
                found.append(R)
            return
        # pivot maximizing |P ∩ closed[u]| minimizes branching
        best, pivot = -1, 0
        for u in bits(P | X):
            c = bin(P & closed[u]).count("1")
            if c > best:
                best, pivot = c, u
        for v in bits(P & closed[pivot]):
            low = 1 << v
            rec(R | low, P & ~closed[v], X & ~closed[v])
            P &= ~low
            X |= low

    rec(0, F.all_mask & ~F.self_attacking, 0)
    return found


def subset_maximal(masks: list[int]) -> list[int]:
    kept: list[int] = []
    for S in sorted(set(masks), key=lambda m: -bin(m).count("1")):
        if not any(S & ~M == 0 for M in kept):
            kept.append(S)
    return kept


def range_maximal(F: Framework, masks: list[int]) -> list[int]:
    """Members of ``masks`` whose range is not strictly contained in another's."""
    ranges = [(F.range_mask(S), S) for S in masks]
    ranges.sort(key=lambda t: -bin(t[0]).count("1"))
    top: list[int] = []
    keep: list[int] = []
    for R, S in ranges:
        if any(R & ~T == 0 and R != T for T in top):
            continue
        top.append(R)
        keep.append(S)
    return keep


def grounded_mask(F: Framework) -> int:
    S = 0
    while True:
        nxt = F.defended_mask(S)
        if nxt == S:
            return S
        S = nxt


def extension_masks(F: Framework, sigma, bound: int | None = DEFAULT_BOUND) -> list[int]:
    """Extensions of ``F`` under ``sigma`` as masks, canonically ordered."""
    sigma = SemanticsId.parse(sigma)
    if sigma is SemanticsId.GRD:
        return [grounded_mask(F)]
    if bound is not None and len(F) > bound:
        raise CapacityError(f"framework has {len(F)} arguments, enumeration bound is {bound}")

    if sigma is SemanticsId.CF:
        res = list(conflict_free_masks(F))
    elif sigma is SemanticsId.NAIVE:
        res = naive_masks(F)
    elif sigma is SemanticsId.STB:
        full = F.all_mask
        res = [S for S in naive_masks(F) if F.range_mask(S) == full]
    elif sigma is SemanticsId.STG:
        res = range_maximal(F, naive_masks(F))
    elif sigma is SemanticsId.ADM:
        res = admissible_masks(F)
    elif sigma is SemanticsId.COM:
        res = [S for S in admissible_masks(F) if F.defended_mask(S) == S]
    elif sigma is SemanticsId.PRF:
        res = subset_maximal(admissible_masks(F))
    elif sigma is SemanticsId.SEM:
        res = range_maximal(F, subset_maximal(admissible_masks(F)))
    else:  # pragma: no cover
        raise UsageError(f"unhandled semantics {sigma}")
    return sorted(res, key=canonical_key)


def extensions(F: Framework, sigma, bound: int | None = DEFAULT_BOUND) -> ExtensionSet:
    return ExtensionSet(F, tuple(ArgSet(F, m) for m in extension_masks(F, sigma, bound)))


def grounded(F: Framework) -> ArgSet:
    return ArgSet(F, grounded_mask(F))


def credulous(F: Framework, sigma, a: str, bound: int | None = DEFAULT_BOUND) -> bool:
    bit = 1 << F.idx(a)
    return any(S & bit for S in extension_masks(F, sigma, bound))


def skeptical(F: Framework, sigma, a: str, bound: int | None = DEFAULT_BOUND) -> bool:
    bit = 1 << F.idx(a)
    return all(S & bit for S in extension_masks(F, sigma, bound))
