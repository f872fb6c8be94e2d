"""
DSL 语法分析

每行一条语句：
    base [NAME =] P2 * P2
    bundle F = O(2,0) + O(0,2)
    [space] P = proj(Fdual)
    [space] Y = zero(P, O{xi}(1)^3)
    preset Y [as NAME]
    query Y euler degree(-K) chi(O) chiy fano h0(O(1,1,1)) dim canonical signature
    ffcheck p=3 seed=42 blowup_identity
    ffcheck instance="phi.txt" count_Y blowup_identity

解析期维护作用域：名称必须先声明后使用且不能重复声明（空间与丛共用一个命名空间），
次数向量的元数必须等于当前生成元个数。ffcheck 的 instance 路径相对于脚本所在目录。
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..tower import PRESET_SHAPES
from ..utils.errors import DslArityError, DslNameError, DslSyntaxError
from .dsl_ast import (
    BaseStmt,
    BundleStmt,
    FFCheckStmt,
    Invariant,
    InvariantArg,
    LineTerm,
    PresetStmt,
    ProjStmt,
    QueryStmt,
    Script,
    Statement,
    Twist,
    ZeroStmt,
)
from .lexer import Token, TokenStream, tokenize_line

KEYWORDS = {"base", "bundle", "space", "preset", "query", "ffcheck", "proj", "zero", "as"}
PLAIN_INVARIANTS = {"euler", "dim", "canonical", "chiy", "fano", "signature"}
ARG_INVARIANTS = {"degree": True, "chi": False, "h0": False}  # 名称 -> 参数是否必需
FFCHECK_PARAMS = {"p", "seed", "trials"}
FFCHECK_INSTANCE = "instance"
FFCHECK_CHECKS = ("rank_profile", "count_Y", "stratified_identity", "blowup_identity", "jacobian")

_PROJECTIVE = re.compile(r"P(\d+)$")


@dataclass
class Scope:
    """解析期作用域：空间形状 = (底空间因子个数, ξ 生成元名称)"""
    spaces: Dict[str, Tuple[int, Tuple[str, ...]]] = field(default_factory=dict)
    bundles: Dict[str, Tuple[int, str]] = field(default_factory=dict)
    base: Optional[str] = None


class Parser:
    def __init__(self, source: str = "<script>"):
        self.source = source
        self.scope = Scope()

    # ==================== 入口 ====================

    def parse(self, text: str) -> Script:
        statements: List[Statement] = []
        lines: List[int] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            tokens = tokenize_line(raw, number, self.source)
            if len(tokens) == 1:
                continue
            ts = TokenStream(tokens, self.source)
            statements.append(self.statement(ts))
            ts.expect_end()
            lines.append(number)
        return Script(statements=statements, lines=lines, source=self.source)

    def statement(self, ts: TokenStream) -> Statement:
        head = ts.peek
        if head.kind != "name":
            raise ts.report(f"a statement cannot start with {head.text!r}")
        if head.text == "base":
            return self.base(ts)
        if head.text == "bundle":
            return self.bundle(ts)
        if head.text == "preset":
            return self.preset(ts)
        if head.text == "query":
            return self.query(ts)
        if head.text == "ffcheck":
            return self.ffcheck(ts)
        if head.text == "space":
            ts.next()
        return self.binding(ts)

    # ==================== 语句 ====================

    def base(self, ts: TokenStream) -> BaseStmt:
        start = ts.eat("base")
        if ts.peek_at(1).text == "=":
            name = self.new_name(ts)
            ts.eat("=")
        else:
            name = self.declare(ts, "X", start)
        dims = [self.factor(ts)]
        while ts.at("*"):
            ts.next()
            dims.append(self.factor(ts))
        self.scope.spaces[name] = (len(dims), ())
        self.scope.base = name
        return BaseStmt(name=name, dims=dims)

    def factor(self, ts: TokenStream) -> int:
        tok = ts.eat_name()
        match = _PROJECTIVE.match(tok.text)
        if not match or int(match.group(1)) < 1:
            raise ts.report(f"expected a projective space like P2, found {tok.text!r}", tok)
        return int(match.group(1))

    def bundle(self, ts: TokenStream) -> BundleStmt:
        start = ts.eat("bundle")
        if self.scope.base is None:
            raise ts.report("bundle declared before any base", start, DslNameError)
        name = self.new_name(ts)
        ts.eat("=")
        nbase = self.scope.spaces[self.scope.base][0]
        terms = self.terms(ts, nbase, (), allow_twists=False)
        self.scope.bundles[name] = (nbase, self.scope.base)
        return BundleStmt(name=name, terms=terms)

    def binding(self, ts: TokenStream) -> Statement:
        name = self.new_name(ts)
        ts.eat("=")
        head = ts.eat_name()
        ts.eat("(")
        if head.text == "proj":
            stmt = self.proj(ts, name)
        elif head.text == "zero":
            stmt = self.zero(ts, name)
        else:
            raise ts.report(f"expected proj(...) or zero(...), found {head.text!r}", head)
        ts.eat(")")
        return stmt

    def proj(self, ts: TokenStream, name: str) -> ProjStmt:
        tok = ts.eat_name()
        bundle, dual = tok.text, False
        if bundle not in self.scope.bundles:
            if bundle.endswith("dual") and bundle[:-4] in self.scope.bundles:
                bundle, dual = bundle[:-4], True
            else:
                raise ts.report(f"undeclared bundle {tok.text!r}", tok, DslNameError)
        nbase, _ = self.scope.bundles[bundle]
        self.scope.spaces[name] = (nbase, ("xi",))
        return ProjStmt(name=name, bundle=bundle, dual=dual)

    def zero(self, ts: TokenStream, name: str) -> ZeroStmt:
        space = self.space_ref(ts)
        ts.eat(",")
        nbase, xis = self.scope.spaces[space]
        terms = self.terms(ts, nbase, xis, allow_twists=True)
        self.scope.spaces[name] = (nbase, xis)
        return ZeroStmt(name=name, space=space, terms=terms)

    def preset(self, ts: TokenStream) -> PresetStmt:
        ts.eat("preset")
        tok = ts.eat_name()
        if tok.text not in PRESET_SHAPES:
            raise ts.report(f"unknown preset {tok.text!r}", tok, DslNameError)
        if ts.at("as"):
            ts.next()
            name = self.new_name(ts)
        else:
            name = self.declare(ts, tok.text, tok)
        self.scope.spaces[name] = PRESET_SHAPES[tok.text]
        return PresetStmt(name=name, preset=tok.text)

    def query(self, ts: TokenStream) -> QueryStmt:
        ts.eat("query")
        space = self.space_ref(ts)
        nbase, xis = self.scope.spaces[space]
        invariants: List[Invariant] = []
        while not ts.at_end():
            invariants.append(self.invariant(ts, nbase, xis))
        if not invariants:
            raise ts.report("query needs at least one invariant")
        return QueryStmt(space=space, invariants=invariants)

    def invariant(self, ts: TokenStream, nbase: int, xis: Tuple[str, ...]) -> Invariant:
        tok = ts.eat_name()
        if tok.text in PLAIN_INVARIANTS:
            return Invariant(name=tok.text)
        if tok.text not in ARG_INVARIANTS:
            raise ts.report(f"unknown invariant {tok.text!r}", tok, DslNameError)
        if not ts.at("("):
            if ARG_INVARIANTS[tok.text]:
                raise ts.report(f"{tok.text} needs an argument")
            return Invariant(name=tok.text)
        ts.eat("(")
        if ts.at("-"):
            ts.next()
            ts.eat("K")
            arg = InvariantArg(kind="anticanonical")
        elif ts.at("K"):
            ts.next()
            arg = InvariantArg(kind="canonical")
        else:
            arg = InvariantArg(kind="line", term=self.term(ts, nbase, xis, True, allow_power=False))
        ts.eat(")")
        return Invariant(name=tok.text, arg=arg)

    def ffcheck(self, ts: TokenStream) -> FFCheckStmt:
        ts.eat("ffcheck")
        params: Dict[str, int] = {}
        checks: List[str] = []
        instance = None
        while not ts.at_end():
            tok = ts.eat_name()
            if tok.text == FFCHECK_INSTANCE and ts.at("="):
                ts.next()
                instance = ts.eat_str()
            elif ts.at("="):
                if tok.text not in FFCHECK_PARAMS:
                    raise ts.report(f"unknown ffcheck parameter {tok.text!r}", tok, DslNameError)
                ts.next()
                params[tok.text] = ts.eat_int()
            elif tok.text in FFCHECK_CHECKS:
                checks.append(tok.text)
            else:
                raise ts.report(f"unknown ffcheck check {tok.text!r}", tok, DslNameError)
        return FFCheckStmt(params=params, checks=checks, instance=instance)

    # ==================== 线丛项 ====================

    def terms(self, ts: TokenStream, nbase: int, xis: Tuple[str, ...],
              allow_twists: bool) -> List[LineTerm]:
        terms = [self.term(ts, nbase, xis, allow_twists)]
        while ts.at("+"):
            ts.next()
            terms.append(self.term(ts, nbase, xis, allow_twists))
        return terms

    def term(self, ts: TokenStream, nbase: int, xis: Tuple[str, ...],
             allow_twists: bool, allow_power: bool = True) -> LineTerm:
        ts.eat("O")
        base = None
        if ts.at("("):
            open_tok = ts.next()
            base = [ts.eat_int()]
            while ts.at(","):
                ts.next()
                base.append(ts.eat_int())
            ts.eat(")")
            if len(base) != nbase:
                raise ts.report(
                    f"degree vector has {len(base)} entries, expected {nbase}",
                    open_tok, DslArityError,
                )
        twists: List[Twist] = []
        while ts.at("{"):
            brace = ts.next()
            if not allow_twists:
                raise ts.report("bundles over a base cannot carry xi twists", brace)
            gen = ts.eat_name()
            if gen.text not in xis:
                raise ts.report(f"unknown generator {gen.text!r}", gen, DslNameError)
            ts.eat("}")
            ts.eat("(")
            twists.append(Twist(generator=gen.text, degree=ts.eat_int()))
            ts.eat(")")
        power = 1
        if allow_power and ts.at("^"):
            ts.next()
            tok = ts.peek
            power = ts.eat_int()
            if power < 1:
                raise ts.report("a power must be positive", tok)
        return LineTerm(base=base, twists=twists, power=power)

    # ==================== 名称 ====================

    def new_name(self, ts: TokenStream) -> str:
        tok = ts.eat_name()
        if tok.text in KEYWORDS:
            raise ts.report(f"{tok.text!r} is a keyword", tok)
        return self.declare(ts, tok.text, tok)

    def declare(self, ts: TokenStream, name: str, tok: Token) -> str:
        if name in self.scope.spaces or name in self.scope.bundles:
            raise ts.report(f"{name!r} is already declared", tok, DslNameError)
        return name

    def space_ref(self, ts: TokenStream) -> str:
        tok = ts.eat_name()
        if tok.text not in self.scope.spaces:
            raise ts.report(f"undeclared space {tok.text!r}", tok, DslNameError)
        return tok.text


def parse(text: str, source: str = "<script>") -> Script:
    """解析 DSL 文本

    Raises:
        DslError: 第一个错误，带行列位置
    """
    return Parser(source).parse(text)
