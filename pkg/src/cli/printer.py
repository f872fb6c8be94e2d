"""
DSL 格式化输出

format_script 输出规范形式，满足 parse(format_script(parse(t))) 与 parse(t) 的语句相同。
"""

from typing import List, Optional

from ..tower import BaseStep, ProjBundleStep, Space, ZeroLocusStep
from ..utils.errors import TowerShapeError
from .dsl_ast import (
    BaseStmt,
    BundleStmt,
    FFCheckStmt,
    Invariant,
    LineTerm,
    PresetStmt,
    ProjStmt,
    QueryStmt,
    Script,
    Statement,
    Twist,
    ZeroStmt,
)


def format_term(term: LineTerm) -> str:
    text = "O"
    if term.base is not None:
        text += "(" + ",".join(str(x) for x in term.base) + ")"
    for twist in term.twists:
        text += f"{{{twist.generator}}}({twist.degree})"
    if term.power != 1:
        text += f"^{term.power}"
    return text


def format_invariant(inv: Invariant) -> str:
    if inv.arg is None:
        return inv.name
    if inv.arg.kind == "canonical":
        return f"{inv.name}(K)"
    if inv.arg.kind == "anticanonical":
        return f"{inv.name}(-K)"
    return f"{inv.name}({format_term(inv.arg.term)})"


def format_statement(stmt: Statement) -> str:
    if isinstance(stmt, BaseStmt):
        factors = " * ".join(f"P{d}" for d in stmt.dims)
        return f"base {stmt.name} = {factors}"
    if isinstance(stmt, BundleStmt):
        return f"bundle {stmt.name} = " + " + ".join(format_term(t) for t in stmt.terms)
    if isinstance(stmt, ProjStmt):
        suffix = "dual" if stmt.dual else ""
        return f"space {stmt.name} = proj({stmt.bundle}{suffix})"
    if isinstance(stmt, ZeroStmt):
        terms = " + ".join(format_term(t) for t in stmt.terms)
        return f"space {stmt.name} = zero({stmt.space}, {terms})"
    if isinstance(stmt, PresetStmt):
        if stmt.name == stmt.preset:
            return f"preset {stmt.preset}"
        return f"preset {stmt.preset} as {stmt.name}"
    if isinstance(stmt, QueryStmt):
        return f"query {stmt.space} " + " ".join(format_invariant(i) for i in stmt.invariants)
    if isinstance(stmt, FFCheckStmt):
        parts = ["ffcheck"]
        parts += [f"{k}={v}" for k, v in stmt.params.items()]
        if stmt.instance is not None:
            parts.append(f'instance="{stmt.instance}"')
        parts += stmt.checks
        return " ".join(parts)
    raise TypeError(f"Unknown statement type: {type(stmt).__name__}")


def format_script(script: Script) -> str:
    return "".join(format_statement(s) + "\n" for s in script.statements)


def _space_term(vec, nbase: int, xi: Optional[str]) -> LineTerm:
    twists = [Twist(generator=xi, degree=c) for c in vec[nbase:] if c] if xi else []
    return LineTerm(base=list(vec[:nbase]), twists=twists)


def format_space(space: Space, name: str = "") -> str:
    """把塔结构空间写成 DSL 语句序列

    只支持射影空间之积上至多一次射影化、其后跟若干零点集步骤的塔。
    """
    name = name or space.name or "Z"
    if len(space.proj_steps) > 1:
        raise TowerShapeError("format_space supports at most one projectivization")
    nbase = space.presentation.nbase
    statements: List[Statement] = []
    current, xi = f"{name}_base", None
    for k, step in enumerate(space.steps):
        is_last = k == len(space.steps) - 1
        target = name if is_last else f"{name}_{k}"
        if isinstance(step, BaseStep):
            current = name if is_last else f"{name}_base"
            statements.append(BaseStmt(name=current, dims=list(step.dims)))
        elif isinstance(step, ProjBundleStep):
            if any(any(vec[nbase:]) for vec in step.bundle.summands):
                raise TowerShapeError("Projectivized bundle must be pulled back from the base")
            bundle = f"{name}_bundle"
            statements.append(BundleStmt(
                name=bundle,
                terms=[LineTerm(base=list(vec[:nbase])) for vec in step.bundle.summands],
            ))
            statements.append(ProjStmt(name=target, bundle=bundle))
            current, xi = target, step.generator
        elif isinstance(step, ZeroLocusStep):
            terms = [_space_term(vec, nbase, xi) for vec in step.bundle.summands]
            statements.append(ZeroStmt(name=target, space=current, terms=terms))
            current = target
    return format_script(Script(statements=statements))
