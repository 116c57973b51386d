"""Executable checks of the structural and acceptance claims over instance families.

Each claim maps to one per-instance check returning ``(ok, solver, oracle)``
where ``solver`` holds what the argumentation side computed and ``oracle``
what the brute-force logic side (or the claim itself) demands.
:func:`run_family` aggregates a check over a deterministic family into a
:class:`VerificationReport`.
"""
from __future__ import annotations

import enum
import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Iterator

from argkit.errors import CapacityError, UsageError
from argkit.framework import Framework
from argkit.graph_classes import (
    GraphClassId, distance, is_member, simple_cycles, verify_deletion,
)
from argkit.logic import (
    MinsatInstance, Qbf2Formula, enumerate_minsat, enumerate_qbf2, is_model,
    is_monotone, minsat_member, qbf2_valid, sample_minsat, sample_qbf2,
)
from argkit.reductions import ReductionError, reduce1, reduce2, reduce3, reduce4, reduce5, reduce6
from argkit.semantics import SemanticsId, extension_masks

MAX_COUNTEREXAMPLES = 5


class ClaimId(str, enum.Enum):
    LEM1_1 = "LEM1_1"
    LEM1_2 = "LEM1_2"
    LEM1_3 = "LEM1_3"
    LEM1_4 = "LEM1_4"
    LEM1_5 = "LEM1_5"
    PROP1 = "PROP1"
    PROP2 = "PROP2"
    PROP3 = "PROP3"
    PROP4 = "PROP4"
    PROP5 = "PROP5"
    THM1_DIST = "THM1_DIST"
    THM2_DIST = "THM2_DIST"
    THM3_DIST = "THM3_DIST"
    THM4_DIST = "THM4_DIST"
    THM5_NOEVEN = "THM5_NOEVEN"
    THM6_DIST = "THM6_DIST"
    THM7_DIST = "THM7_DIST"
    THM8_DIST = "THM8_DIST"
    LATTICE = "LATTICE"
    NONEMPTY = "NONEMPTY"
    STB_COLLAPSE = "STB_COLLAPSE"

    @classmethod
    def parse(cls, value) -> "ClaimId":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise UsageError(f"unknown claim {value!r}") from None


LEMMA1_ITEMS = (ClaimId.LEM1_1, ClaimId.LEM1_2, ClaimId.LEM1_3, ClaimId.LEM1_4, ClaimId.LEM1_5)
FRAMEWORK_CLAIMS = {ClaimId.LATTICE, ClaimId.NONEMPTY, ClaimId.STB_COLLAPSE}
MINSAT_CLAIMS = {ClaimId.PROP4, ClaimId.THM5_NOEVEN, ClaimId.THM6_DIST}
# claims whose reduction needs a monotone matrix
MONOTONE_CLAIMS = {*LEMMA1_ITEMS, ClaimId.PROP1, ClaimId.PROP2, ClaimId.THM1_DIST,
                   ClaimId.THM3_DIST, ClaimId.THM7_DIST}
# claims whose reduction needs an existential literal in every clause
TOUCH_Z_CLAIMS = {ClaimId.PROP2, ClaimId.PROP3, ClaimId.THM3_DIST, ClaimId.THM4_DIST}
# defaults for the instance family; PROP5 is monotone by default as well
DEFAULT_MONOTONE = MONOTONE_CLAIMS | {ClaimId.PROP5}


@dataclass(frozen=True)
class FamilyParams:
    """Bounds of an instance family.

    The family is the exhaustive enumeration (when ``exhaustive``) followed
    by ``samples`` seeded random instances. QBF claims use the ``max_y`` /
    ``max_z`` / ``max_clauses`` / ``max_width`` bounds for both parts;
    MINSAT claims enumerate up to ``max_vars`` variables and ``max_clauses``
    clauses and sample up to ``sample_max_vars``; framework claims enumerate
    every attack relation on exactly ``max_args`` arguments and sample up to
    ``sample_max_args``.
    """

    max_y: int = 2
    max_z: int = 2
    max_clauses: int = 3
    max_width: int = 3
    max_vars: int = 3
    max_args: int = 3
    sample_max_vars: int = 4
    sample_max_args: int = 8
    samples: int = 0
    seed: int = 0
    exhaustive: bool = True
    monotone: bool | None = None
    variant: str = "repaired"
    exact_limit: int = 14

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerificationReport:
    claim: ClaimId
    params: dict
    instances_checked: int = 0
    excluded: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    failures: int = 0
    wall_time_ms: float = 0.0

    @property
    def verdict(self) -> str:
        return "fails" if self.counterexamples else "holds"

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "claim": self.claim.value,
            "params": self.params,
            "counts": {
                "checked": self.instances_checked,
                "failures": self.failures,
                "excluded": self.excluded,
                "skipped": self.skipped,
            },
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
        }
        if timing:
            d["wall_time_ms"] = round(self.wall_time_ms, 1)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def text_row(self) -> str:
        return (f"{self.claim.value:<13} {self.params.get('variant', ''):<9} {self.verdict:<6} "
                f"checked={self.instances_checked:<6} failures={self.failures:<5} "
                f"excluded={self.excluded:<5} skipped={self.skipped:<4} {self.wall_time_ms / 1000:8.2f}s")


def format_table(reports) -> str:
    header = f"{'claim':<13} {'variant':<9} {'verdict':<6}"
    return "\n".join([header] + [r.text_row() for r in reports])


# ----------------------------------------------------------------- families


def all_frameworks(n: int) -> Iterator[Framework]:
    """Every attack relation (self-attacks included) on ``n`` arguments."""
    args = [f"a{i + 1}" for i in range(n)]
    pairs = [(a, b) for a in args for b in args]
    for bitsel in range(1 << len(pairs)):
        yield Framework(args, [p for k, p in enumerate(pairs) if bitsel >> k & 1])


def random_frameworks(seed: int, count: int, max_args: int) -> list[Framework]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_args)
        args = [f"a{i + 1}" for i in range(n)]
        density = rng.uniform(0.05, 0.5)
        atts = [(a, b) for a in args for b in args
                if rng.random() < (density / 3 if a == b else density)]
        out.append(Framework(args, atts))
    return out


def family(claim, params: FamilyParams) -> Iterator:
    claim = ClaimId.parse(claim)
    p = params
    if claim in FRAMEWORK_CLAIMS:
        if p.exhaustive:
            yield from all_frameworks(p.max_args)
        if p.samples:
            yield from random_frameworks(p.seed, p.samples, p.sample_max_args)
        return
    if claim in MINSAT_CLAIMS:
        if p.exhaustive:
            yield from enumerate_minsat(p.max_vars, p.max_clauses)
        if p.samples:
            yield from sample_minsat(p.seed, p.samples, p.sample_max_vars, p.sample_max_vars)
        return
    monotone = claim in DEFAULT_MONOTONE if p.monotone is None else p.monotone
    if p.exhaustive:
        yield from enumerate_qbf2(p.max_y, p.max_z, p.max_clauses, p.max_width,
                                  monotone=monotone, all_vars_used=False)
    if p.samples:
        yield from sample_qbf2(p.seed, p.samples, max(p.max_y, 1), max(p.max_z, 1), p.max_clauses,
                               p.max_width, monotone=monotone, touch_z=claim in TOUCH_Z_CLAIMS)


# ----------------------------------------------------------- framework claims


def _subset(small, big) -> bool:
    return set(small) <= set(big)


def check_lattice(F: Framework):
    ext = {s: extension_masks(F, s) for s in
           (SemanticsId.STB, SemanticsId.SEM, SemanticsId.PRF, SemanticsId.COM, SemanticsId.ADM,
            SemanticsId.STG, SemanticsId.NAIVE)}
    chain = [SemanticsId.STB, SemanticsId.SEM, SemanticsId.PRF, SemanticsId.COM, SemanticsId.ADM]
    broken = [f"{a.value}<={b.value}" for a, b in zip(chain, chain[1:]) if not _subset(ext[a], ext[b])]
    if not _subset(ext[SemanticsId.STG], ext[SemanticsId.NAIVE]):
        broken.append("stg<=naive")
    return not broken, {"violations": broken}, {"violations": []}


def check_nonempty(F: Framework):
    sizes = {s.value: len(extension_masks(F, s)) for s in SemanticsId if s is not SemanticsId.STB}
    com = extension_masks(F, SemanticsId.COM)
    minimal_com = [S for S in com if not any(T != S and T & ~S == 0 for T in com)]
    grd = extension_masks(F, SemanticsId.GRD)
    ok = all(sizes.values()) and sizes["grd"] == 1 and minimal_com == grd
    return ok, {"sizes": sizes, "grd_is_minimal_com": minimal_com == grd}, {"sizes": "all >= 1, grd == 1"}


def check_stb_collapse(F: Framework):
    stb = extension_masks(F, SemanticsId.STB)
    if not stb:
        return True, {"stb": 0}, {}
    sem = extension_masks(F, SemanticsId.SEM)
    stg = extension_masks(F, SemanticsId.STG)
    ok = stb == sem == stg
    return ok, {"stb": len(stb), "sem": len(sem), "stg": len(stg)}, {"equal": True}


# ---------------------------------------------------------------- Lemma 1


def check_lemma1_items(Phi: Qbf2Formula, variant: str = "repaired") -> dict:
    """Per-item ``(ok, solver, oracle)`` for the five items about reduction 1."""
    F = reduce1(Phi, variant).framework
    adm = extension_masks(F, SemanticsId.ADM)
    prf = extension_masks(F, SemanticsId.PRF)
    adm_set = set(adm)
    names = F.names_of
    phi = 1 << F.idx("phi")
    Y = Phi.universal
    V = Phi.variables

    # (1) b, b_bar and clause arguments in no admissible set
    _, pos, neg = is_monotone(Phi.matrix)
    clause_args = [f"c{i + 1}" for i in range(len(pos))] + [f"nc{i + 1}" for i in range(len(neg))]
    banned = F.mask_of(["b", "b_bar"] + clause_args)
    offending = [S for S in adm if S & banned]
    res = {ClaimId.LEM1_1: (not offending, {"admissible_with_banned": [list(names(S)) for S in offending[:3]]},
                            {"admissible_with_banned": []})}

    # (2)+(3) the universal-only sets S + neg(Y - S)
    forms = set()
    for sel in product((False, True), repeat=len(Y)):
        forms.add(F.mask_of([y if on else "n" + y for y, on in zip(Y, sel)]))
    y_space = F.mask_of([y for y in Y] + ["n" + y for y in Y])
    not_adm = sorted(names(S) for S in forms if S not in adm_set)
    stray = [S for S in prf if S & ~y_space == 0 and S not in forms]
    res[ClaimId.LEM1_2] = (not not_adm and not stray,
                           {"non_admissible_forms": [list(s) for s in not_adm[:3]],
                            "preferred_in_Y_not_of_form": [list(names(S)) for S in stray[:3]]},
                           {"non_admissible_forms": [], "preferred_in_Y_not_of_form": []})
    bad3 = [S for S in prf if not S & phi and S not in forms]
    res[ClaimId.LEM1_3] = (not bad3, {"preferred_without_phi_not_of_form": [list(names(S)) for S in bad3[:3]]},
                           {"preferred_without_phi_not_of_form": []})

    # (4) preferred extensions with phi induce models
    bad4 = []
    for S in prf:
        if S & phi:
            true_atoms = [v for v in V if v in names(S)]
            if not is_model(Phi.matrix, true_atoms):
                bad4.append(S)
    res[ClaimId.LEM1_4] = (not bad4, {"preferred_with_phi_not_model": [list(names(S)) for S in bad4[:3]]},
                           {"preferred_with_phi_not_model": []})

    # (5) every model yields a preferred extension
    prf_set = set(prf)
    missing = []
    for sel in product((False, True), repeat=len(V)):
        M = [v for v, on in zip(V, sel) if on]
        if is_model(Phi.matrix, M):
            E = F.mask_of(["phi"] + [v if on else "n" + v for v, on in zip(V, sel)])
            if E not in prf_set:
                missing.append(sorted(M))
    res[ClaimId.LEM1_5] = (not missing, {"models_without_preferred": missing[:3]},
                           {"models_without_preferred": []})
    return res


# -------------------------------------------------------- acceptance claims


def _acc(F, sigma, arg, mode) -> bool:
    bit = 1 << F.idx(arg)
    exts = extension_masks(F, sigma)
    if mode == "cred":
        return any(S & bit for S in exts)
    return all(S & bit for S in exts)


def check_prop1(Phi, variant="repaired"):
    F = reduce1(Phi, variant).framework
    valid = qbf2_valid(Phi)
    skept = _acc(F, SemanticsId.PRF, "phi", "skept")
    return valid == skept, {"skept_prf_phi": skept}, {"valid": valid}


def _qbf_chain(art, sigma, pos, bar):
    F = art.framework
    valid = qbf2_valid(art.source)
    skept = _acc(F, sigma, pos, "skept")
    cred_bar = _acc(F, sigma, bar, "cred")
    ok = valid == skept == (not cred_bar)
    return ok, {f"skept_{sigma.value}_{pos}": skept, f"cred_{sigma.value}_{bar}": cred_bar}, {"valid": valid}


def check_prop2(Phi, variant="repaired"):
    return _qbf_chain(reduce3(Phi, variant), SemanticsId.SEM, "phi_p", "phi_bar")


def check_prop3(Phi, variant="repaired"):
    return _qbf_chain(reduce4(Phi, variant), SemanticsId.SEM, "phi", "phi_bar")


def check_prop5(Phi, variant="repaired"):
    return _qbf_chain(reduce6(Phi, variant), SemanticsId.STG, "phi", "phi_bar")


def check_prop4(inst: MinsatInstance, variant="repaired"):
    F = reduce5(inst, variant).framework
    member = minsat_member(inst)
    cred = _acc(F, SemanticsId.STG, inst.target, "cred")
    skept_q = _acc(F, SemanticsId.STG, "q", "skept")
    ok = member == cred == (not skept_q)
    return ok, {"cred_stg_target": cred, "skept_stg_q": skept_q}, {"minsat_member": member}


# ---------------------------------------------------------- distance claims


def _deletion_check(art, g: GraphClassId, names, limit: int, exact: str | None):
    """Upper-bound check with the named set, plus exact search on small frameworks.

    ``exact`` is ``"eq"`` (distance equals |names| unless already a member)
    or ``"le"`` (distance at most |names|).
    """
    F = art.framework
    bound = len(names)
    holds = verify_deletion(F, g, names)
    solver = {"verify_deletion": holds}
    oracle = {"verify_deletion": True}
    ok = holds
    if exact and len(F) <= limit:
        k = distance(F, g).k
        solver["exact_k"] = k
        if exact == "eq":
            want = 0 if is_member(F, g) else bound
            oracle["exact_k"] = want
            ok = ok and k == want
        else:
            oracle["exact_k_at_most"] = bound
            ok = ok and k <= bound
    return ok, solver, oracle


def check_thm5(inst, variant="repaired"):
    F = reduce5(inst, variant).framework
    strict = is_member(F, GraphClassId.NOEVEN)
    loose = is_member(F, GraphClassId.NOEVEN, count_two_cycles=False)
    return strict, {"noeven": strict, "noeven_ignoring_2_cycles": loose}, {"noeven": True}


def check_thm6(inst, variant="repaired"):
    F = reduce5(inst, variant).framework
    cycles = simple_cycles(F, cap=1000)
    deletion = verify_deletion(F, GraphClassId.ACY, ["b"])
    k = distance(F, GraphClassId.ACY).k
    ok = cycles == [["b"]] and deletion and k == 1
    shown = cycles[:5]
    return ok, {"cycles": shown, "verify_deletion": deletion, "exact_k": k}, \
        {"cycles": [["b"]], "verify_deletion": True, "exact_k": 1}


def _precondition(claim: ClaimId, instance) -> bool:
    if claim in FRAMEWORK_CLAIMS:
        return isinstance(instance, Framework)
    if claim in MINSAT_CLAIMS:
        return isinstance(instance, MinsatInstance)
    if not isinstance(instance, Qbf2Formula):
        return False
    if claim in MONOTONE_CLAIMS and not is_monotone(instance.matrix)[0]:
        return False
    if claim in TOUCH_Z_CLAIMS and not instance.touches_existential():
        return False
    return True


def _check_fn(claim: ClaimId, params: FamilyParams) -> Callable:
    v, lim = params.variant, params.exact_limit
    fns = {
        ClaimId.LATTICE: check_lattice,
        ClaimId.NONEMPTY: check_nonempty,
        ClaimId.STB_COLLAPSE: check_stb_collapse,
        ClaimId.PROP1: lambda P: check_prop1(P, v),
        ClaimId.PROP2: lambda P: check_prop2(P, v),
        ClaimId.PROP3: lambda P: check_prop3(P, v),
        ClaimId.PROP4: lambda I: check_prop4(I, v),
        ClaimId.PROP5: lambda P: check_prop5(P, v),
        ClaimId.THM1_DIST: lambda P: _deletion_check(reduce1(P, v), GraphClassId.BIP, ["phi"], lim, "eq"),
        ClaimId.THM2_DIST: lambda P: _deletion_check(reduce2(P, v), GraphClassId.SYM, ["phi", "b"], lim, "le"),
        ClaimId.THM3_DIST: lambda P: _deletion_check(reduce3(P, v), GraphClassId.BIP, ["g"], lim, "le"),
        ClaimId.THM4_DIST: lambda P: _deletion_check(reduce4(P, v), GraphClassId.SYM, ["phi", "g"], lim, "le"),
        ClaimId.THM5_NOEVEN: lambda I: check_thm5(I, v),
        ClaimId.THM6_DIST: lambda I: check_thm6(I, v),
        ClaimId.THM7_DIST: lambda P: _deletion_check(reduce6(P, v), GraphClassId.BIP, ["u", "v", "b", "phi"], lim, "le"),
        ClaimId.THM8_DIST: lambda P: _deletion_check(reduce6(P, v), GraphClassId.SYM, ["u", "v", "b", "phi"], lim, "le"),
    }
    for item in LEMMA1_ITEMS:
        fns[item] = (lambda it: lambda P: check_lemma1_items(P, v)[it])(item)
    return fns[claim]


def _describe(instance) -> dict:
    if isinstance(instance, Framework):
        return {"arguments": list(instance.arguments), "attacks": [list(p) for p in instance.attack_names]}
    return {"text": str(instance), **instance.to_dict()}


def _record(report: VerificationReport, instance, result, index: int = 0) -> None:
    ok, solver, oracle = result
    report.instances_checked += 1
    if not ok:
        report.failures += 1
        if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
            report.counterexamples.append({
                "index": index,
                "instance": _describe(instance),
                "solver": solver,
                "oracle": oracle,
            })


def check_claim(claim, instance, variant: str = "repaired", exact_limit: int = 14) -> VerificationReport:
    """Check one claim on one instance."""
    claim = ClaimId.parse(claim)
    params = FamilyParams(variant=variant, exact_limit=exact_limit)
    report = VerificationReport(claim, {"instance": _describe(instance), "variant": variant})
    start = time.perf_counter()
    if not _precondition(claim, instance):
        report.excluded += 1
    else:
        try:
            _record(report, instance, _check_fn(claim, params)(instance))
        except CapacityError:
            report.skipped += 1
    report.wall_time_ms = (time.perf_counter() - start) * 1000
    return report


def check_lemma1(Phi: Qbf2Formula, variant: str = "repaired") -> list[VerificationReport]:
    """One single-instance report per lemma item."""
    start = time.perf_counter()
    items = check_lemma1_items(Phi, variant)
    elapsed = (time.perf_counter() - start) * 1000
    reports = []
    for item in LEMMA1_ITEMS:
        r = VerificationReport(item, {"instance": _describe(Phi), "variant": variant})
        _record(r, Phi, items[item])
        r.wall_time_ms = elapsed
        reports.append(r)
    return reports


def run_family(claim, params: FamilyParams | None = None) -> VerificationReport:
    """Aggregate a claim over its instance family (deterministic in ``params``)."""
    claim = ClaimId.parse(claim)
    params = params or FamilyParams()
    report = VerificationReport(claim, params.to_dict())
    fn = _check_fn(claim, params)
    start = time.perf_counter()
    for index, instance in enumerate(family(claim, params)):
        if not _precondition(claim, instance):
            report.excluded += 1
            continue
        try:
            result = fn(instance)
        except CapacityError:
            report.skipped += 1
            continue
        except ReductionError:
            report.excluded += 1
            continue
        _record(report, instance, result, index)
    report.wall_time_ms = (time.perf_counter() - start) * 1000
    return report


def run_lemma1_family(params: FamilyParams | None = None) -> list[VerificationReport]:
    """All five lemma items in one pass over the family."""
    params = params or FamilyParams()
    reports = {item: VerificationReport(item, params.to_dict()) for item in LEMMA1_ITEMS}
    start = time.perf_counter()
    for index, Phi in enumerate(family(ClaimId.LEM1_1, params)):
        if not _precondition(ClaimId.LEM1_1, Phi):
            for r in reports.values():
                r.excluded += 1
            continue
        try:
            items = check_lemma1_items(Phi, params.variant)
        except CapacityError:
            for r in reports.values():
                r.skipped += 1
            continue
        for item, result in items.items():
            _record(reports[item], Phi, result, index)
    elapsed = (time.perf_counter() - start) * 1000
    for r in reports.values():
        r.wall_time_ms = elapsed
    return [reports[item] for item in LEMMA1_ITEMS]
