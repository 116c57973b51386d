"""The six hardness reductions from 2-QBF / MINSAT to argumentation frameworks.

Every constructor returns a :class:`ReductionArtifact`: the framework, the
arguments a query refers to, and the deletion sets that are supposed to put
the framework into a tractable class.

Two variants exist for each construction:

``literal``
    The construction taken word for word, inconsistencies included.
``repaired`` (default)
    The word-for-word construction breaks its own claims for reductions
    1, 2, 3 and 5; this variant makes the smallest change that restores
    them (see each builder's docstring). For reductions 4 and 6 the two variants coincide.

Argument naming: ``phi``, ``phi_bar``, ``phi_p``, ``phi_n``, ``b``,
``b_bar``, ``g``, ``q``, ``u``, ``v``; clauses ``c<i>`` (negative clauses
``nc<i>`` where positive and negative clauses are separate groups); clause
guards ``E<i>``; literals ``<var>`` and ``n<var>``; primed copies
``<var>_p`` and ``n<var>_p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from argkit.errors import UsageError
from argkit.framework import ArgSet, Framework
from argkit.graph_classes import GraphClassId, verify_deletion
from argkit.logic import Literal, MinsatInstance, Qbf2Formula, is_monotone

VARIANTS = ("literal", "repaired")
ACY, NOEVEN, BIP, SYM = GraphClassId.ACY, GraphClassId.NOEVEN, GraphClassId.BIP, GraphClassId.SYM


class ReductionError(UsageError):
    """Input violates a reduction's precondition or a claimed deletion set fails."""


@dataclass(frozen=True)
class ReductionArtifact:
    framework: Framework
    reduction_id: int
    variant: str
    query_args: dict
    claims: tuple  # ((GraphClassId, ArgSet), ...)
    source: Union[Qbf2Formula, MinsatInstance]
    claim_results: tuple = field(default=())

    def __post_init__(self):
        F = self.framework
        for role, name in self.query_args.items():
            if name not in F:
                raise ReductionError(f"query argument {role}={name!r} missing from framework")
        results = tuple(verify_deletion(F, g, S) for g, S in self.claims)
        object.__setattr__(self, "claim_results", results)
        if self.variant == "repaired" and not all(results):
            failed = [g.value for (g, _), ok in zip(self.claims, results) if not ok]
            raise ReductionError(f"reduction {self.reduction_id}: claimed deletion set fails for {failed}")

    @property
    def claimed_class(self) -> GraphClassId | None:
        return self.claims[0][0] if self.claims else None

    @property
    def claimed_deletion_set(self) -> ArgSet | None:
        return self.claims[0][1] if self.claims else None

    def meta(self) -> dict:
        """JSON sidecar describing the artifact."""
        return {
            "reduction_id": self.reduction_id,
            "variant": self.variant,
            "query_args": dict(self.query_args),
            "claimed_class": self.claimed_class.value if self.claimed_class else None,
            "claimed_deletion_set": list(self.claimed_deletion_set) if self.claims else [],
            "claims": [
                {"class": g.value, "deletion_set": list(S), "holds": ok}
                for (g, S), ok in zip(self.claims, self.claim_results)
            ],
            "source": self.source.to_dict(),
        }


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise UsageError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


def lit_arg(lit: Literal) -> str:
    return ("n" + lit.variable) if lit.negated else lit.variable


def neg(var: str) -> str:
    return "n" + var


def primed(arg: str) -> str:
    return arg + "_p"


class _Builder:
    def __init__(self):
        self.args: list[str] = []
        self.atts: list[tuple[str, str]] = []

    def add(self, *names: str) -> None:
        self.args.extend(names)

    def att(self, a: str, b: str) -> None:
        self.atts.append((a, b))

    def mutual(self, a: str, b: str) -> None:
        self.atts.append((a, b))
        self.atts.append((b, a))

    def build(self) -> Framework:
        try:
            return Framework(self.args, self.atts)
        except UsageError as exc:
            raise ReductionError(f"cannot build framework: {exc}") from None


def _literals(B: _Builder, variables) -> None:
    for x in variables:
        B.add(x, neg(x))
    for x in variables:
        B.mutual(x, neg(x))


def _require_monotone(Phi: Qbf2Formula):
    ok, _, _ = is_monotone(Phi.matrix)
    if not ok:
        raise ReductionError("matrix must be a monotone CNF")
    pos, negs = [], []
    for c in Phi.clauses:
        (negs if c[0].negated else pos).append(c)
    return pos, negs


def _require_touch_z(Phi: Qbf2Formula) -> None:
    if not Phi.touches_existential():
        raise ReductionError("every clause must contain an existential literal")


def reduce1(Phi: Qbf2Formula, variant: str = "repaired") -> ReductionArtifact:
    """Skeptical preferred acceptance; distance 1 to bipartite (monotone input).

    Word for word, ``b`` / ``b_bar`` attack the literals of every
    variable. ``repaired`` restricts those attacks to existential literals,
    which is what the accompanying lemma needs: universal literals must be
    defensible without ``phi``.
    """
    _check_variant(variant)
    pos, negs = _require_monotone(Phi)
    V = Phi.variables
    guarded = V if variant == "literal" else Phi.existential
    cn = [f"c{i + 1}" for i in range(len(pos))]
    ncn = [f"nc{i + 1}" for i in range(len(negs))]
    B = _Builder()
    B.add("phi", "b", "b_bar", *cn, *ncn)
    _literals(B, V)
    for c in cn + ncn:
        B.att(c, "phi")
    B.att("phi", "b")
    B.att("phi", "b_bar")
    for name, clause in zip(cn + ncn, pos + negs):
        for lit in clause:
            B.mutual(lit_arg(lit), name)
    for c in cn:
        B.att("b", c)
    for c in ncn:
        B.att("b_bar", c)
    for x in guarded:
        B.att("b", neg(x))
        B.att("b_bar", x)
    F = B.build()
    return ReductionArtifact(F, 1, variant, {"phi": "phi"}, ((BIP, F.argset(["phi"])),), Phi)


def reduce2(Phi: Qbf2Formula, variant: str = "repaired") -> ReductionArtifact:
    """Skeptical preferred acceptance; distance 2 to symmetric.

    The original argument set lists negative clauses separately while the
    attacks range over all clauses; every clause is treated as a member of
    ``C`` and no extra arguments are created. ``repaired`` restricts the
    ``b`` attacks on literals to existential ones (as in :func:`reduce1`).
    """
    _check_variant(variant)
    V = Phi.variables
    guarded = V if variant == "literal" else Phi.existential
    cn = [f"c{i + 1}" for i in range(len(Phi.clauses))]
    B = _Builder()
    B.add("phi", "b", *cn)
    _literals(B, V)
    for c in cn:
        B.att(c, "phi")
    B.att("phi", "b")
    for name, clause in zip(cn, Phi.clauses):
        for lit in clause:
            B.mutual(lit_arg(lit), name)
    for c in cn:
        B.att("b", c)
    for x in guarded:
        B.att("b", x)
        B.att("b", neg(x))
    F = B.build()
    return ReductionArtifact(F, 2, variant, {"phi": "phi"}, ((SYM, F.argset(["phi", "b"])),), Phi)


def _primes(B: _Builder, universal) -> None:
    for y in universal:
        B.add(primed(y), primed(neg(y)))
    for y in universal:
        B.mutual(y, primed(y))
        B.mutual(neg(y), primed(neg(y)))
        B.att("g", primed(y))
        B.att("g", primed(neg(y)))


def reduce3(Phi: Qbf2Formula, variant: str = "repaired") -> ReductionArtifact:
    """Semi-stable acceptance; distance 1 to bipartite (monotone input).

    Word for word, ``phi_n`` is isolated, negative clauses attack ``phi_p``
    (which breaks bipartiteness of ``F - {g}`` whenever both clause polarities
    occur) and only positive clauses are attacked by ``g`` (so a negative
    clause defends itself). ``repaired`` lets negative clauses attack
    ``phi_n`` instead of ``phi_p`` and lets ``g`` attack every clause.
    """
    _check_variant(variant)
    pos, negs = _require_monotone(Phi)
    _require_touch_z(Phi)
    cn = [f"c{i + 1}" for i in range(len(pos))]
    ncn = [f"nc{i + 1}" for i in range(len(negs))]
    B = _Builder()
    B.add("phi_p", "phi_n", "phi_bar", "b", "g", *cn, *ncn)
    _literals(B, Phi.variables)
    _primes(B, Phi.universal)
    for c in cn:
        B.att(c, "phi_p")
    for c in ncn:
        B.att(c, "phi_p" if variant == "literal" else "phi_n")
    for name, clause in zip(cn + ncn, pos + negs):
        for lit in clause:
            B.mutual(lit_arg(lit), name)
    B.mutual("phi_p", "b")
    B.att("g", "g")
    B.att("g", "b")
    for c in (cn if variant == "literal" else cn + ncn):
        B.att("g", c)
    B.mutual("phi_p", "phi_bar")
    F = B.build()
    q = {"phi_p": "phi_p", "phi_bar": "phi_bar", "phi_n": "phi_n"}
    return ReductionArtifact(F, 3, variant, q, ((BIP, F.argset(["g"])),), Phi)


def reduce4(Phi: Qbf2Formula, variant: str = "repaired") -> ReductionArtifact:
    """Semi-stable acceptance; distance 2 to symmetric.

    Both variants build the unmodified construction. A clause is attacked only by its
    own literals and so is admissible on its own, but that does not disturb
    the acceptance equivalences.
    """
    _check_variant(variant)
    _require_touch_z(Phi)
    cn = [f"c{i + 1}" for i in range(len(Phi.clauses))]
    B = _Builder()
    B.add("phi", "phi_bar", "b", "g", *cn)
    _literals(B, Phi.variables)
    _primes(B, Phi.universal)
    for c in cn:
        B.att(c, "phi")
    for name, clause in zip(cn, Phi.clauses):
        for lit in clause:
            B.mutual(lit_arg(lit), name)
    B.mutual("phi", "b")
    B.att("g", "g")
    B.att("g", "b")
    B.mutual("phi", "phi_bar")
    F = B.build()
    q = {"phi": "phi", "phi_bar": "phi_bar"}
    return ReductionArtifact(F, 4, variant, q, ((SYM, F.argset(["phi", "g"])),), Phi)


def reduce5(inst: MinsatInstance, variant: str = "repaired") -> ReductionArtifact:
    """Stage acceptance from MINSAT; no even cycle, distance 1 to acyclic.

    Word for word, literals attack each other mutually (even 2-cycles) and each
    guard ``E<i>`` also attacks itself and ``q``. ``repaired`` keeps only
    ``n<x> -> x`` and removes ``q`` and ``E<i>`` from the targets of
    ``E<i>``. Guards are numbered along ``inst.clause_order``.
    """
    _check_variant(variant)
    phi = inst.formula
    clauses = inst.ordered_clauses()
    m = len(clauses)
    cn = [f"c{i + 1}" for i in range(m)]
    en = [f"E{i + 1}" for i in range(m)]
    B = _Builder()
    B.add("phi", "b", "q", *cn)
    for x in phi.variables:
        B.add(x, neg(x))
    B.add(*en)
    for c in cn:
        B.att(c, "phi")
    B.att("phi", "b")
    B.att("b", "b")
    B.att("q", inst.target)
    for x in phi.variables:
        if variant == "literal":
            B.mutual(x, neg(x))
        else:
            B.att(neg(x), x)
    for name, clause in zip(cn, clauses):
        for lit in clause:
            B.att(lit_arg(lit), name)
    for i in range(m):
        spared = {cn[i], "phi", "b", *en[:i]}
        if variant == "repaired":
            spared |= {"q", en[i]}
        for a in B.args:
            if a not in spared:
                B.att(en[i], a)
    F = B.build()
    q = {"x_alpha": inst.target, "q": "q", "phi": "phi"}
    claims = ((ACY, F.argset(["b"])), (NOEVEN, F.empty))
    return ReductionArtifact(F, 5, variant, q, claims, inst)


def reduce6(Phi: Qbf2Formula, variant: str = "repaired") -> ReductionArtifact:
    """Stage acceptance; distance at most 4 to symmetric, and to bipartite
    when the matrix is monotone. Both variants build the unmodified construction."""
    _check_variant(variant)
    cn = [f"c{i + 1}" for i in range(len(Phi.clauses))]
    B = _Builder()
    B.add("phi", "phi_bar", "b", "u", "v", *cn)
    for y in Phi.universal:
        B.add(y, neg(y), primed(y), primed(neg(y)))
    for z in Phi.existential:
        B.add(z, neg(z))
    for c in cn:
        B.att(c, "phi")
    B.mutual("phi", "phi_bar")
    B.att("phi", "b")
    B.att("b", "b")
    for x in Phi.variables:
        B.mutual(x, neg(x))
    for y in Phi.universal:
        B.mutual(y, primed(y))
        B.mutual(neg(y), primed(neg(y)))
    for name, clause in zip(cn, Phi.clauses):
        for lit in clause:
            B.mutual(lit_arg(lit), name)
    B.att("u", "v")
    B.att("v", "v")
    for y in Phi.universal:
        B.att(primed(y), "u")
        B.att(primed(neg(y)), "u")
    F = B.build()
    dele = F.argset(["u", "v", "b", "phi"])
    claims = [(SYM, dele)]
    if is_monotone(Phi.matrix)[0]:
        claims.append((BIP, dele))
    q = {"phi": "phi", "phi_bar": "phi_bar"}
    return ReductionArtifact(F, 6, variant, q, tuple(claims), Phi)


REDUCTIONS = {1: reduce1, 2: reduce2, 3: reduce3, 4: reduce4, 5: reduce5, 6: reduce6}


def reduce(reduction_id: int, source, variant: str = "repaired") -> ReductionArtifact:
    try:
        fn = REDUCTIONS[int(reduction_id)]
    except (KeyError, ValueError):
        raise UsageError(f"reduction id must be 1..6, got {reduction_id!r}") from None
    return fn(source, variant)
