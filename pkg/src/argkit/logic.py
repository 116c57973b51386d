"""Propositional CNF and 2-QBF (forall-exists) formulas with brute-force oracles.

The oracles here enumerate assignments directly and never touch the
argumentation code, so they can serve as independent ground truth for the
reductions. Models are identified with their sets of true atoms.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from argkit.errors import CapacityError, UsageError

ORACLE_MAX_VARS = 20


@dataclass(frozen=True, order=True)
class Literal:
    variable: str
    negated: bool = False

    def __post_init__(self):
        if not isinstance(self.variable, str) or not self.variable:
            raise UsageError("literal variable must be a nonempty string")

    def __neg__(self) -> "Literal":
        return Literal(self.variable, not self.negated)

    def __str__(self) -> str:
        return ("-" if self.negated else "") + self.variable

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text[:1] in ("-", "~"):
            return cls(text[1:], True)
        return cls(text, False)


def _as_literal(lit) -> Literal:
    if isinstance(lit, Literal):
        return lit
    if isinstance(lit, str):
        return Literal.parse(lit)
    raise UsageError(f"cannot interpret {lit!r} as a literal")


@dataclass(frozen=True)
class CnfFormula:
    """A CNF over an ordered variable set.

    Clauses are tuples of literals, kept in input order (clause order is
    significant for the MINSAT reduction). Duplicate literals inside a clause
    are dropped; empty and tautological clauses are rejected.
    """

    variables: tuple[str, ...]
    clauses: tuple[tuple[Literal, ...], ...]

    def __init__(self, variables: Sequence[str], clauses: Iterable[Iterable] = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise UsageError("duplicate variable names")
        for v in variables:
            if not isinstance(v, str) or not v:
                raise UsageError(f"bad variable name {v!r}")
        known = set(variables)
        norm = []
        for raw in clauses:
            clause: list[Literal] = []
            for lit in raw:
                lit = _as_literal(lit)
                if lit.variable not in known:
                    raise UsageError(f"literal {lit} uses undeclared variable")
                if -lit in clause:
                    raise UsageError(f"tautological clause contains {lit.variable} and its negation")
                if lit not in clause:
                    clause.append(lit)
            if not clause:
                raise UsageError("empty clause")
            norm.append(tuple(clause))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "clauses", tuple(norm))

    def clause_masks(self) -> list[tuple[int, int]]:
        """Per clause, the (positive, negative) variable bitmasks."""
        pos = {v: i for i, v in enumerate(self.variables)}
        res = []
        for clause in self.clauses:
            p = n = 0
            for lit in clause:
                if lit.negated:
                    n |= 1 << pos[lit.variable]
                else:
                    p |= 1 << pos[lit.variable]
            res.append((p, n))
        return res

    def mask_of(self, M: Iterable[str]) -> int:
        pos = {v: i for i, v in enumerate(self.variables)}
        m = 0
        for v in M:
            if v not in pos:
                raise UsageError(f"unknown variable {v!r}")
            m |= 1 << pos[v]
        return m

    def names_of(self, mask: int) -> frozenset[str]:
        return frozenset(v for i, v in enumerate(self.variables) if mask >> i & 1)

    def __str__(self) -> str:
        if not self.clauses:
            return "T"
        return " & ".join("(" + " | ".join(map(str, c)) + ")" for c in self.clauses)


def _satisfies(masks: list[tuple[int, int]], M: int) -> bool:
    for p, n in masks:
        if not (M & p or n & ~M):
            return False
    return True


def is_model(phi: CnfFormula, M: Iterable[str]) -> bool:
    return _satisfies(phi.clause_masks(), phi.mask_of(M))


def is_monotone(phi: CnfFormula):
    """Return ``(ok, positive_clauses, negative_clauses)``.

    The partition is only meaningful when ``ok`` is true.
    """
    pos, neg = [], []
    for clause in phi.clauses:
        signs = {lit.negated for lit in clause}
        if signs == {False}:
            pos.append(clause)
        elif signs == {True}:
            neg.append(clause)
        else:
            return False, (), ()
    return True, tuple(pos), tuple(neg)


@dataclass(frozen=True)
class Qbf2Formula:
    """``forall universal exists existential . matrix``."""

    universal: tuple[str, ...]
    existential: tuple[str, ...]
    matrix: CnfFormula

    def __post_init__(self):
        object.__setattr__(self, "universal", tuple(self.universal))
        object.__setattr__(self, "existential", tuple(self.existential))
        if set(self.universal) & set(self.existential):
            raise UsageError("universal and existential blocks overlap")
        if len(set(self.universal)) != len(self.universal) or len(set(self.existential)) != len(self.existential):
            raise UsageError("duplicate variable in quantifier block")
        unbound = set(self.matrix.variables) - set(self.universal) - set(self.existential)
        if unbound:
            raise UsageError(f"matrix variables {sorted(unbound)} are not quantified")

    @classmethod
    def build(cls, universal: Sequence[str], existential: Sequence[str], clauses) -> "Qbf2Formula":
        return cls(tuple(universal), tuple(existential),
                   CnfFormula(tuple(universal) + tuple(existential), clauses))

    @property
    def variables(self) -> tuple[str, ...]:
        return self.universal + self.existential

    @property
    def clauses(self):
        return self.matrix.clauses

    def touches_existential(self) -> bool:
        ex = set(self.existential)
        return all(any(l.variable in ex for l in c) for c in self.matrix.clauses)

    def __str__(self) -> str:
        return f"forall {' '.join(self.universal) or '-'} exists {' '.join(self.existential) or '-'} : {self.matrix}"

    def to_dict(self) -> dict:
        return {
            "universal": list(self.universal),
            "existential": list(self.existential),
            "clauses": [[str(l) for l in c] for c in self.matrix.clauses],
        }


@dataclass(frozen=True)
class MinsatInstance:
    formula: CnfFormula
    target: str
    clause_order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.target not in self.formula.variables:
            raise UsageError(f"target {self.target!r} is not a variable of the formula")
        m = len(self.formula.clauses)
        order = tuple(self.clause_order) or tuple(range(m))
        if sorted(order) != list(range(m)):
            raise UsageError("clause_order must be a permutation of the clause indices")
        object.__setattr__(self, "clause_order", order)

    def ordered_clauses(self):
        return [self.formula.clauses[i] for i in self.clause_order]

    def __str__(self) -> str:
        return f"minsat {self.target} in {self.formula}"

    def to_dict(self) -> dict:
        return {
            "variables": list(self.formula.variables),
            "clauses": [[str(l) for l in c] for c in self.formula.clauses],
            "target": self.target,
            "clause_order": list(self.clause_order),
        }


# ------------------------------------------------------------------ oracles


def _check_size(n: int) -> None:
    if n > ORACLE_MAX_VARS:
        raise CapacityError(f"{n} variables exceed the brute-force bound of {ORACLE_MAX_VARS}")


def qbf2_valid(Phi: Qbf2Formula) -> bool:
    """Every assignment to the universals extends to a model."""
    _check_size(len(Phi.universal) + len(Phi.existential))
    idx = {v: i for i, v in enumerate(Phi.matrix.variables)}
    masks = Phi.matrix.clause_masks()
    ybits = [1 << idx[v] for v in Phi.universal]
    zbits = [1 << idx[v] for v in Phi.existential]

    def spread(sel: int, bitlist: list[int]) -> int:
        m = 0
        for k, b in enumerate(bitlist):
            if sel >> k & 1:
                m |= b
        return m

    zs = [spread(s, zbits) for s in range(1 << len(zbits))]
    for sy in range(1 << len(ybits)):
        my = spread(sy, ybits)
        if not any(_satisfies(masks, my | mz) for mz in zs):
            return False
    return True


def is_satisfiable(phi: CnfFormula) -> bool:
    _check_size(len(phi.variables))
    masks = phi.clause_masks()
    return any(_satisfies(masks, M) for M in range(1 << len(phi.variables)))


def _model_masks(phi: CnfFormula) -> list[int]:
    _check_size(len(phi.variables))
    masks = phi.clause_masks()
    return [M for M in range(1 << len(phi.variables)) if _satisfies(masks, M)]


def minimal_models(phi: CnfFormula) -> list[frozenset[str]]:
    """All subset-minimal models, ordered by size then variable order."""
    models = _model_masks(phi)
    models.sort(key=lambda m: (bin(m).count("1"), [i for i in range(len(phi.variables)) if m >> i & 1]))
    minimal: list[int] = []
    for M in models:
        if not any(N & ~M == 0 for N in minimal):
            minimal.append(M)
    return [phi.names_of(M) for M in minimal]


def minsat_member(inst: MinsatInstance) -> bool:
    return any(inst.target in M for M in minimal_models(inst.formula))


# --------------------------------------------------------------- generators


def _clause_pool(nvars: int, max_width: int, monotone: bool, must_touch: int) -> list[tuple[tuple[int, bool], ...]]:
    pool = []
    for w in range(1, min(max_width, nvars) + 1):
        for vs in combinations(range(nvars), w):
            if must_touch and not any(must_touch >> v & 1 for v in vs):
                continue
            signs = [(False,) * w, (True,) * w] if monotone else product((False, True), repeat=w)
            for sg in signs:
                pool.append(tuple(zip(vs, sg)))
    return pool


def _canonical(clauses, perms) -> tuple:
    best = None
    for p in perms:
        key = tuple(sorted(tuple(sorted((p[v], s) for v, s in c)) for c in clauses))
        if best is None or key < best:
            best = key
    return best


def _block_perms(ny: int, nz: int) -> list[tuple[int, ...]]:
    res = []
    for py in permutations(range(ny)):
        for pz in permutations(range(ny, ny + nz)):
            res.append(py + pz)
    return res


def _to_qbf(ny: int, nz: int, clauses) -> Qbf2Formula:
    names = [f"y{i + 1}" for i in range(ny)] + [f"z{i + 1}" for i in range(nz)]
    return Qbf2Formula.build(
        names[:ny], names[ny:],
        [[Literal(names[v], s) for v, s in c] for c in clauses],
    )


def enumerate_qbf2(max_y: int, max_z: int, max_clauses: int, max_width: int = 3, *,
                   monotone: bool = False, touch_z: bool = False,
                   all_vars_used: bool = True, dedupe: bool = True) -> Iterator[Qbf2Formula]:
    """Deterministic stream of every 2-QBF within the bounds.

    Universals are named ``y1..``, existentials ``z1..``. Clauses are sets
    of distinct literals, formulas are sets of distinct clauses. With
    ``dedupe`` only the representative that is lexicographically least under
    renaming inside each quantifier block is emitted; with ``all_vars_used``
    formulas leaving a declared variable unused are skipped (they repeat a
    smaller formula plus a dummy variable).
    """
    for ny in range(max_y + 1):
        for nz in range(max_z + 1):
            n = ny + nz
            zmask = ((1 << nz) - 1) << ny if touch_z else 0
            if touch_z and nz == 0:
                pool = []
            else:
                pool = _clause_pool(n, max_width, monotone, zmask)
            perms = _block_perms(ny, nz) if dedupe else None
            full = (1 << n) - 1
            for k in range(max_clauses + 1):
                for combo in combinations(pool, k):
                    if all_vars_used:
                        used = 0
                        for c in combo:
                            for v, _ in c:
                                used |= 1 << v
                        if used != full:
                            continue
                    if dedupe:
                        own = tuple(sorted(tuple(sorted(c)) for c in combo))
                        if own != _canonical(combo, perms):
                            continue
                    yield _to_qbf(ny, nz, combo)


def sample_qbf2(seed: int, count: int, max_y: int = 3, max_z: int = 3, max_clauses: int = 5,
                max_width: int = 3, *, monotone: bool = False, touch_z: bool = False) -> list[Qbf2Formula]:
    """Seeded random 2-QBFs with nonempty quantifier blocks."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        ny = rng.randint(1, max_y)
        nz = rng.randint(1, max_z)
        n = ny + nz
        clauses = []
        for _ in range(rng.randint(1, max_clauses)):
            w = rng.randint(1, min(max_width, n))
            vs = rng.sample(range(n), w)
            if touch_z and not any(v >= ny for v in vs):
                vs[rng.randrange(w)] = rng.randrange(ny, n)
                vs = list(dict.fromkeys(vs))
            if monotone:
                s = rng.random() < 0.5
                c = tuple(sorted((v, s) for v in vs))
            else:
                c = tuple(sorted((v, rng.random() < 0.5) for v in vs))
            if c not in clauses:
                clauses.append(c)
        out.append(_to_qbf(ny, nz, clauses))
    return out


def _to_minsat(n: int, clauses, target: int) -> MinsatInstance:
    names = [f"x{i + 1}" for i in range(n)]
    phi = CnfFormula(names, [[Literal(names[v], s) for v, s in c] for c in clauses])
    return MinsatInstance(phi, names[target])


def enumerate_minsat(max_vars: int, max_clauses: int, *, all_vars_used: bool = True) -> Iterator[MinsatInstance]:
    """Every (CNF, target) pair within the bounds, up to variable renaming."""
    for n in range(1, max_vars + 1):
        pool = _clause_pool(n, n, False, 0)
        perms = list(permutations(range(n)))
        full = (1 << n) - 1
        for k in range(max_clauses + 1):
            for combo in combinations(pool, k):
                if all_vars_used:
                    used = 0
                    for c in combo:
                        for v, _ in c:
                            used |= 1 << v
                    if used != full:
                        continue
                own = tuple(sorted(tuple(sorted(c)) for c in combo))
                for t in range(n):
                    best = min((p[t], _canonical(combo, [p])) for p in perms)
                    if (t, own) == best:
                        yield _to_minsat(n, combo, t)


def sample_minsat(seed: int, count: int, max_vars: int = 4, max_clauses: int = 4,
                  max_width: int = 3) -> list[MinsatInstance]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vars)
        clauses = []
        for _ in range(rng.randint(0, max_clauses)):
            w = rng.randint(1, min(max_width, n))
            c = tuple(sorted((v, rng.random() < 0.5) for v in rng.sample(range(n), w)))
            if c not in clauses:
                clauses.append(c)
        out.append(_to_minsat(n, clauses, rng.randrange(n)))
    return out
