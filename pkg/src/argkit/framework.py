"""Argumentation frameworks and the primitive set predicates.

Arguments are indexed densely at construction time; every set of arguments
is an ``int`` bitmask over those indices. The public :class:`ArgSet` wraps a
mask together with the framework it belongs to; the hot loops in
:mod:`argkit.semantics` work on the raw masks directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from argkit.errors import UsageError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Framework:
    """An immutable abstract argumentation framework ``(A, R)``.

    >>> F = Framework(["a", "b"], [("a", "b")])
    >>> F.attackers_of("b")
    ('a',)
    """

    __slots__ = ("arguments", "attacks", "index", "out", "into", "self_attacking", "all_mask")

    def __init__(self, arguments: Sequence[str], attacks: Iterable[tuple[str, str]] = ()):
        arguments = tuple(arguments)
        index: dict[str, int] = {}
        for pos, name in enumerate(arguments):
            if not isinstance(name, str) or not name:
                raise UsageError(f"argument names must be nonempty strings, got {name!r}")
            if name in index:
                raise UsageError(f"duplicate argument {name!r}")
            index[name] = pos
        n = len(arguments)
        out = [0] * n
        into = [0] * n
        pairs = set()
        for a, b in attacks:
            try:
                i, j = index[a], index[b]
            except KeyError as exc:
                raise UsageError(f"attack ({a}, {b}) names an unknown argument {exc.args[0]!r}") from None
            pairs.add((i, j))
            out[i] |= 1 << j
            into[j] |= 1 << i
        selfs = 0
        for i in range(n):
            if out[i] >> i & 1:
                selfs |= 1 << i
        setattr_ = object.__setattr__
        setattr_(self, "arguments", arguments)
        setattr_(self, "attacks", tuple(sorted(pairs)))
        setattr_(self, "index", index)
        setattr_(self, "out", tuple(out))
        setattr_(self, "into", tuple(into))
        setattr_(self, "self_attacking", selfs)
        setattr_(self, "all_mask", (1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("Framework is immutable")

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, name) -> bool:
        return name in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Framework):
            return NotImplemented
        return self is other or (self.arguments == other.arguments and self.attacks == other.attacks)

    def __hash__(self) -> int:
        return hash((self.arguments, self.attacks))

    def __repr__(self) -> str:
        return f"Framework({len(self.arguments)} arguments, {len(self.attacks)} attacks)"

    @property
    def attack_names(self) -> list[tuple[str, str]]:
        names = self.arguments
        return [(names[i], names[j]) for i, j in self.attacks]

    def idx(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UsageError(f"unknown argument {name!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.idx(name)
        return m

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.arguments[i] for i in bits(mask))

    def argset(self, names: Iterable[str] = ()) -> "ArgSet":
        return ArgSet(self, self.mask_of(names))

    def from_mask(self, mask: int) -> "ArgSet":
        if mask & ~self.all_mask:
            raise UsageError("mask references indices outside the framework")
        return ArgSet(self, mask)

    @property
    def empty(self) -> "ArgSet":
        return ArgSet(self, 0)

    @property
    def full(self) -> "ArgSet":
        return ArgSet(self, self.all_mask)

    def attackers_of(self, name: str) -> tuple[str, ...]:
        return self.names_of(self.into[self.idx(name)])

    def attacked_by(self, name: str) -> tuple[str, ...]:
        return self.names_of(self.out[self.idx(name)])

    def has_attack(self, a: str, b: str) -> bool:
        return bool(self.out[self.idx(a)] >> self.idx(b) & 1)

    def restrict(self, keep: "ArgSet | int") -> "Framework":
        """Induced subframework on ``keep``."""
        mask = keep.mask if isinstance(keep, ArgSet) else keep
        names = self.arguments
        return Framework(
            [names[i] for i in bits(mask)],
            [(names[i], names[j]) for i, j in self.attacks if mask >> i & 1 and mask >> j & 1],
        )

    def remove(self, names: Iterable[str]) -> "Framework":
        return self.restrict(self.all_mask & ~self.mask_of(names))

    # mask-level kernels; callers guarantee masks are in range

    def attacked_mask(self, mask: int) -> int:
        """Everything attacked by some member of ``mask``."""
        out = self.out
        hit = 0
        while mask:
            low = mask & -mask
            hit |= out[low.bit_length() - 1]
            mask ^= low
        return hit

    def range_mask(self, mask: int) -> int:
        return mask | self.attacked_mask(mask)

    def cf_mask(self, mask: int) -> bool:
        out = self.out
        m = mask
        while m:
            low = m & -m
            if out[low.bit_length() - 1] & mask:
                return False
            m ^= low
        return True

    def defended_mask(self, mask: int) -> int:
        """Characteristic function on masks: all arguments defended by ``mask``."""
        hit = self.attacked_mask(mask)
        into = self.into
        res = 0
        for i in range(len(into)):
            if into[i] & ~hit == 0:
                res |= 1 << i
        return res


@dataclass(frozen=True)
class ArgSet:
    """A set of arguments of one framework, stored as a bitmask."""

    framework: Framework
    mask: int

    def _check(self, other: "ArgSet") -> None:
        if not isinstance(other, ArgSet):
            raise TypeError(f"expected ArgSet, got {type(other).__name__}")
        if other.framework is not self.framework and other.framework != self.framework:
            raise UsageError("ArgSet belongs to a different framework")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgSet):
            return NotImplemented
        return self.mask == other.mask and (
            self.framework is other.framework or self.framework == other.framework
        )

    def __hash__(self) -> int:
        return hash(self.mask)

    def __iter__(self) -> Iterator[str]:
        names = self.framework.arguments
        return (names[i] for i in bits(self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, name) -> bool:
        i = self.framework.index.get(name)
        return i is not None and bool(self.mask >> i & 1)

    def __or__(self, other: "ArgSet") -> "ArgSet":
        self._check(other)
        return ArgSet(self.framework, self.mask | other.mask)

    def __and__(self, other: "ArgSet") -> "ArgSet":
        self._check(other)
        return ArgSet(self.framework, self.mask & other.mask)

    def __sub__(self, other: "ArgSet") -> "ArgSet":
        self._check(other)
        return ArgSet(self.framework, self.mask & ~other.mask)

    def __le__(self, other: "ArgSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ArgSet") -> bool:
        return self <= other and self.mask != other.mask

    def issubset(self, other: "ArgSet") -> bool:
        return self <= other

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return "{" + ", ".join(self) + "}"


def _own(F: Framework, S: ArgSet) -> int:
    if not isinstance(S, ArgSet):
        raise TypeError(f"expected ArgSet, got {type(S).__name__}")
    if S.framework is not F and S.framework != F:
        raise UsageError("ArgSet belongs to a different framework")
    return S.mask


def range_of(F: Framework, S: ArgSet) -> ArgSet:
    """``S`` together with every argument it attacks."""
    return ArgSet(F, F.range_mask(_own(F, S)))


def is_conflict_free(F: Framework, S: ArgSet) -> bool:
    return F.cf_mask(_own(F, S))


def defends(F: Framework, S: ArgSet, a: str) -> bool:
    """True iff every attacker of ``a`` is attacked by ``S``."""
    i = F.idx(a)
    return F.into[i] & ~F.attacked_mask(_own(F, S)) == 0


def characteristic(F: Framework, S: ArgSet) -> ArgSet:
    return ArgSet(F, F.defended_mask(_own(F, S)))
