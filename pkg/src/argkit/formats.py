"""Readers and writers for APX, TGF, DIMACS CNF and two-block QDIMACS."""
from __future__ import annotations

import re

from argkit.errors import ParseError, UsageError
from argkit.framework import Framework
from argkit.logic import CnfFormula, Literal, Qbf2Formula

_STATEMENT = re.compile(r"\s*(arg|att)\s*\(\s*([^(),\s]+)\s*(?:,\s*([^(),\s]+)\s*)?\)\s*\.")


def parse_apx(text: str) -> Framework:
    """Parse ``arg(a).`` / ``att(a,b).`` statements; ``%`` starts a comment."""
    args: list[str] = []
    seen: set[str] = set()
    atts: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if not line[pos:].strip():
                break
            m = _STATEMENT.match(line, pos)
            if not m:
                raise ParseError(f"cannot parse {line[pos:].strip()!r}", lineno)
            pred, a, b = m.groups()
            if pred == "arg":
                if b is not None:
                    raise ParseError("arg/1 takes one argument", lineno)
                if a in seen:
                    raise ParseError(f"duplicate argument {a!r}", lineno)
                seen.add(a)
                args.append(a)
            else:
                if b is None:
                    raise ParseError("att/2 takes two arguments", lineno)
                atts.append((a, b, lineno))
            pos = m.end()
    for a, b, lineno in atts:
        for x in (a, b):
            if x not in seen:
                raise ParseError(f"attack references undeclared argument {x!r}", lineno)
    return Framework(args, [(a, b) for a, b, _ in atts])


def emit_apx(F: Framework) -> str:
    lines = [f"arg({a})." for a in F.arguments]
    lines += [f"att({a},{b})." for a, b in sorted(F.attack_names)]
    return "".join(line + "\n" for line in lines)


def parse_tgf(text: str) -> Framework:
    """Trivial Graph Format: node ids, a ``#`` line, then ``src dst`` edges."""
    args: list[str] = []
    seen: set[str] = set()
    atts = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        parts = line.split()
        if not in_edges:
            node = parts[0]
            if node in seen:
                raise ParseError(f"duplicate node {node!r}", lineno)
            seen.add(node)
            args.append(node)
        else:
            if len(parts) < 2:
                raise ParseError("edge line needs two node ids", lineno)
            a, b = parts[0], parts[1]
            for x in (a, b):
                if x not in seen:
                    raise ParseError(f"edge references unknown node {x!r}", lineno)
            atts.append((a, b))
    return Framework(args, atts)


def emit_tgf(F: Framework) -> str:
    lines = list(F.arguments) + ["#"] + [f"{a} {b}" for a, b in sorted(F.attack_names)]
    return "\n".join(lines) + "\n"


def _var(k: int) -> str:
    return f"x{k}"


def _ints(tokens, lineno) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _read_dimacs(text: str, allow_prefix: bool):
    nvars = None
    universal: list[int] | None = None
    existential: list[int] | None = None
    clauses: list[tuple[list[int], int]] = []
    pending: list[int] = []
    pending_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        head = line.split()
        if head[0] == "p":
            if nvars is not None:
                raise ParseError("duplicate header", lineno)
            if len(head) != 4 or head[1] != "cnf":
                raise ParseError("header must be 'p cnf <vars> <clauses>'", lineno)
            nvars = _ints(head[2:3], lineno)[0]
            continue
        if nvars is None:
            raise ParseError("missing 'p cnf' header", lineno)
        if head[0] in ("a", "e"):
            if not allow_prefix:
                raise ParseError("quantifier lines are not allowed in plain DIMACS", lineno)
            if clauses or pending:
                raise ParseError("quantifier line after clauses", lineno)
            nums = _ints(head[1:], lineno)
            if not nums or nums[-1] != 0 or 0 in nums[:-1]:
                raise ParseError("quantifier line must end with a single 0", lineno)
            block = nums[:-1]
            if head[0] == "a":
                if universal is not None or existential is not None:
                    raise ParseError("only one 'a' block, before the 'e' block, is allowed", lineno)
                universal = block
            else:
                if existential is not None:
                    raise ParseError("only one 'e' block is allowed", lineno)
                existential = block
            for v in block:
                if v <= 0 or v > nvars:
                    raise ParseError(f"variable {v} out of range", lineno)
            continue
        if not pending:
            pending_line = lineno
        for lit in _ints(head, lineno):
            if lit == 0:
                clauses.append((pending, pending_line))
                pending = []
                pending_line = lineno
            else:
                if abs(lit) > nvars:
                    raise ParseError(f"literal {lit} exceeds declared variable count", lineno)
                pending.append(lit)
    if pending:
        raise ParseError("clause not terminated by 0", pending_line)
    if nvars is None:
        raise ParseError("missing 'p cnf' header")
    return nvars, universal, existential, clauses


def _literal_clauses(clauses):
    out = []
    for lits, lineno in clauses:
        if not lits:
            raise ParseError("empty clause", lineno)
        if any(-l in lits for l in lits):
            raise ParseError("tautological clause", lineno)
        out.append([Literal(_var(abs(l)), l < 0) for l in lits])
    return out


def parse_dimacs(text: str) -> CnfFormula:
    """Plain DIMACS CNF; variable ``k`` is named ``x<k>``. Clause order is kept."""
    nvars, _, _, clauses = _read_dimacs(text, allow_prefix=False)
    return CnfFormula([_var(k) for k in range(1, nvars + 1)], _literal_clauses(clauses))


def parse_qdimacs(text: str) -> Qbf2Formula:
    """QDIMACS restricted to one ``a`` block followed by one ``e`` block."""
    nvars, universal, existential, clauses = _read_dimacs(text, allow_prefix=True)
    universal = universal or []
    existential = existential or []
    if len(set(universal) | set(existential)) != len(universal) + len(existential):
        raise ParseError("variable quantified twice")
    bound = set(universal) | set(existential)
    for lits, lineno in clauses:
        for l in lits:
            if abs(l) not in bound:
                raise ParseError(f"variable {abs(l)} is not quantified", lineno)
    lit_clauses = _literal_clauses(clauses)
    try:
        return Qbf2Formula.build([_var(v) for v in universal], [_var(v) for v in existential], lit_clauses)
    except UsageError as exc:
        raise ParseError(str(exc)) from None


def _numbering(variables) -> dict[str, int]:
    if all(re.fullmatch(r"x[1-9]\d*", v) for v in variables):
        return {v: int(v[1:]) for v in variables}
    return {v: k for k, v in enumerate(variables, 1)}


def _clause_lines(clauses, num) -> list[str]:
    return [" ".join(str(-num[l.variable] if l.negated else num[l.variable]) for l in c) + " 0"
            for c in clauses]


def emit_dimacs(phi: CnfFormula) -> str:
    num = _numbering(phi.variables)
    nv = max(num.values(), default=0)
    lines = [f"p cnf {nv} {len(phi.clauses)}"] + _clause_lines(phi.clauses, num)
    return "\n".join(lines) + "\n"


def emit_qdimacs(Phi: Qbf2Formula) -> str:
    num = _numbering(Phi.variables)
    nv = max(num.values(), default=0)
    lines = [f"p cnf {nv} {len(Phi.clauses)}"]
    if Phi.universal:
        lines.append("a " + " ".join(str(num[v]) for v in Phi.universal) + " 0")
    if Phi.existential:
        lines.append("e " + " ".join(str(num[v]) for v in Phi.existential) + " 0")
    lines += _clause_lines(Phi.clauses, num)
    return "\n".join(lines) + "\n"


FORMATS = {
    "apx": "argumentation framework: arg(NAME). and att(A,B). statements, % comments",
    "tgf": "argumentation framework: node ids, a '#' line, then 'SRC DST' edge lines",
    "qdimacs": "2-QBF: 'p cnf V C', one 'a ... 0' line, one 'e ... 0' line, 0-terminated clauses",
    "dimacs": "CNF for MINSAT: 'p cnf V C' and 0-terminated clauses; variable k is named x<k>",
}
