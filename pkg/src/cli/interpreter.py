"""
DSL 解释执行

按顺序执行语句；构造语句更新环境，query/ffcheck 语句产生报告条目。
领域错误被包装为 ExecutionError 并带上语句序号。
"""

import time
from pathlib import Path
from typing import Dict, Optional, Tuple

from ..fforacle import (
    MorphismMatrix,
    blowup_identity,
    count_Y,
    count_y_via_fibers,
    draw_general_instance,
    instance_seed,
    jacobian_sample,
    load_instance,
    random_instance,
    rank_profile,
    stratified_count_identity,
)
from ..invariants import (
    chi,
    chi_y,
    degree,
    euler_number,
    h0_via_koszul,
    signature_from_chi_y,
)
from ..tower import (
    Space,
    SplitBundle,
    add_proj_bundle,
    anticanonical_ample,
    build_base,
    cut_zero_locus,
    preset,
)
from ..utils.engine_config import EngineConfig
from ..utils.errors import ChowkitError, ExecutionError, InvalidDegreeError, OracleInputError
from ..utils.logging_config import get_logger
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
    ZeroStmt,
)
from .parser import FFCHECK_CHECKS
from .printer import format_invariant, format_statement
from .report import MOD_P_ASSUMPTION, SMOOTHNESS_ASSUMPTION, QueryValue, Report, ReportEntry

logger = get_logger(__name__)

KOSZUL_ASSUMPTION = "uncertified h0 values are Euler characteristics of the Koszul resolution"


def _elapsed_ms(start: float) -> str:
    return f"{(time.perf_counter() - start) * 1000:.1f}"


def _flag(value: bool) -> str:
    return "true" if value else "false"


class Interpreter:
    """脚本解释器

    Attributes:
        spaces: 已构造的空间
        bundles: 名称 -> (分裂丛, 所在底空间名)
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.spaces: Dict[str, Space] = {}
        self.bundles: Dict[str, Tuple[SplitBundle, str]] = {}
        self.base: Optional[str] = None
        self.base_dir = Path(".")

    def run(self, script: Script) -> Report:
        started = time.perf_counter()
        self.base_dir = Path(script.source).parent
        report = Report(source=script.source, seed=self.config.seed)
        for index, stmt in enumerate(script.statements):
            try:
                self.execute(index, stmt, report)
            except ChowkitError as e:
                line = script.lines[index] if index < len(script.lines) else None
                logger.error("statement_failed", index=index, line=line, error=str(e))
                raise ExecutionError(index, e, format_statement(stmt)) from e
        report.runtime_ms = _elapsed_ms(started)
        logger.info("script_finished", source=script.source, statements=len(script.statements),
                    entries=len(report.entries), passed=report.passed)
        return report

    def execute(self, index: int, stmt: Statement, report: Report) -> None:
        if isinstance(stmt, BaseStmt):
            self.spaces[stmt.name] = build_base(stmt.dims).named(stmt.name)
            self.base = stmt.name
        elif isinstance(stmt, BundleStmt):
            base = self.spaces[self.base]
            vectors = [self.term_vector(base, t) for t in stmt.terms for _ in range(t.power)]
            self.bundles[stmt.name] = (SplitBundle.of(*vectors), self.base)
        elif isinstance(stmt, ProjStmt):
            bundle, base_name = self.bundles[stmt.bundle]
            if stmt.dual:
                bundle = bundle.dual()
            self.spaces[stmt.name] = add_proj_bundle(self.spaces[base_name], bundle).named(stmt.name)
        elif isinstance(stmt, ZeroStmt):
            space = self.spaces[stmt.space]
            vectors = [self.term_vector(space, t) for t in stmt.terms for _ in range(t.power)]
            self.spaces[stmt.name] = cut_zero_locus(space, SplitBundle.of(*vectors)).named(stmt.name)
        elif isinstance(stmt, PresetStmt):
            self.spaces[stmt.name] = preset(stmt.preset).named(stmt.name)
        elif isinstance(stmt, QueryStmt):
            report.entries.append(self.query(index, stmt, report))
        elif isinstance(stmt, FFCheckStmt):
            report.entries.append(self.ffcheck(index, stmt, report))

    # ==================== 线丛参数 ====================

    @staticmethod
    def term_vector(space: Space, term: LineTerm) -> Tuple[int, ...]:
        pres = space.presentation
        vec = list(term.base or [0] * pres.nbase) + [0] * (pres.ngens - pres.nbase)
        for twist in term.twists:
            if twist.generator not in pres.names:
                raise InvalidDegreeError(
                    f"Space '{space.name}' has no generator '{twist.generator}'"
                )
            vec[pres.names.index(twist.generator)] += twist.degree
        return tuple(vec)

    def argument(self, space: Space, inv: Invariant):
        if inv.arg is None:
            return 0
        if inv.arg.kind == "canonical":
            return space.canonical
        if inv.arg.kind == "anticanonical":
            return space.anticanonical
        return self.term_vector(space, inv.arg.term)

    # ==================== query ====================

    def query(self, index: int, stmt: QueryStmt, report: Report) -> ReportEntry:
        started = time.perf_counter()
        space = self.spaces[stmt.space]
        symbolic = ["certified"]
        if space.zero_steps:
            symbolic = ["certified", "assumed"]
            report.assume(SMOOTHNESS_ASSUMPTION)

        entry = ReportEntry(index=index, statement=format_statement(stmt), kind="query",
                            space=stmt.space)
        for inv in stmt.invariants:
            key = format_invariant(inv)
            if inv.name == "dim":
                entry.values.append(QueryValue(invariant=key, value=str(space.dim),
                                               provenance=["certified"]))
            elif inv.name == "canonical":
                entry.values.append(QueryValue(invariant=key, value=str(list(space.canonical)),
                                               provenance=["certified"]))
            elif inv.name == "euler":
                entry.values.append(QueryValue(invariant=key, value=str(euler_number(space)),
                                               provenance=symbolic))
            elif inv.name == "degree":
                value = degree(space, self.argument(space, inv))
                entry.values.append(QueryValue(invariant=key, value=str(value), provenance=symbolic))
            elif inv.name == "chi":
                value = chi(space, self.argument(space, inv))
                entry.values.append(QueryValue(invariant=key, value=str(value), provenance=symbolic))
            elif inv.name == "chiy":
                profile = chi_y(space)
                entry.values.append(QueryValue(invariant=key, value=str(profile.chi_p),
                                               provenance=symbolic))
            elif inv.name == "signature":
                value = signature_from_chi_y(chi_y(space))
                entry.values.append(QueryValue(invariant=key, value=str(value), provenance=symbolic))
            elif inv.name == "fano":
                ample = anticanonical_ample(space)
                note = "" if ample else "-K is not positive on every invariant curve of the ambient tower"
                entry.values.append(QueryValue(invariant=key, value=_flag(ample),
                                               provenance=symbolic, note=note))
            elif inv.name == "h0":
                result = h0_via_koszul(space, self.argument(space, inv))
                if result.certified:
                    value = QueryValue(invariant=key, value=str(result.value), provenance=symbolic)
                else:
                    report.assume(KOSZUL_ASSUMPTION)
                    value = QueryValue(
                        invariant=key, value=str(result.value), provenance=["assumed"],
                        note="Koszul spectral sequence not certified; value is the Euler characteristic",
                    )
                    if self.config.strict:
                        entry.passed = False
                entry.values.append(value)
        entry.runtime_ms = _elapsed_ms(started)
        return entry

    # ==================== ffcheck ====================

    def instance_file(self, name: str) -> MorphismMatrix:
        """读取实例文件；相对路径按脚本所在目录解析"""
        path = Path(name)
        if not path.is_absolute():
            path = self.base_dir / path
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise OracleInputError(f"cannot read instance file {path}: {e}") from e
        return load_instance(text)

    def ffcheck(self, index: int, stmt: FFCheckStmt, report: Report) -> ReportEntry:
        started = time.perf_counter()
        seed = stmt.params.get("seed", self.config.seed)
        config = self.config.with_overrides(jacobian_trials=stmt.params.get("trials"))
        checks = stmt.checks or list(FFCHECK_CHECKS)

        if stmt.instance is None:
            report.assume(MOD_P_ASSUMPTION)
            p = stmt.params.get("p", self.config.primes[0])
            drawn = draw_general_instance(p, seed, config)
            m = random_instance(p, instance_seed(seed, drawn.attempt))
            profile, jacobians = drawn.profile, drawn.jacobians
            generic, origin = drawn.generic, f"attempts={drawn.attempt + 1}"
            counted = "stochastic"
        else:
            m = self.instance_file(stmt.instance)
            p = m.p
            if stmt.params.get("p", p) != p:
                raise OracleInputError(
                    f"Instance {stmt.instance} is defined over F_{p}, not F_{stmt.params['p']}"
                )
            profile = rank_profile(m, p, config.chunk_size, config.point_budget)
            jacobians = []
            if "jacobian" in checks:
                jacobians = [
                    jacobian_sample(m, p, which, config.jacobian_trials, seed=seed,
                                    budget=config.point_budget)
                    for which in ("D1", "Y")
                ]
            generic = (profile.count_at_most(m.f - 2) == 0
                       and not any(j.singular_hits for j in jacobians))
            origin = f"instance file {stmt.instance}"
            counted = "certified"

        # 随机实例必须通过一般性检查；给定实例只核对恒等式
        entry = ReportEntry(index=index, statement=format_statement(stmt), kind="ffcheck",
                            seed=seed, passed=generic or stmt.instance is not None)

        def add(name: str, value: str, note: str = "", provenance: str = counted) -> None:
            entry.values.append(QueryValue(invariant=name, value=value,
                                           provenance=[provenance], note=note))

        add("generic", _flag(generic), note=origin)
        y_count = None
        for check in checks:
            if check == "rank_profile":
                add(check, str(profile.counts), note=f"|X(F_{p})|={profile.total}")
            elif check == "count_Y":
                y_count = count_Y(m, p, config.chunk_size, config.point_budget)
                fibers = count_y_via_fibers(profile, m.e)
                entry.passed &= y_count == fibers
                add(check, str(y_count), note=f"via fibers: {fibers}")
            elif check == "stratified_identity":
                holds = stratified_count_identity(m, p, y_count, profile)
                entry.passed &= holds
                add(check, _flag(holds))
            elif check == "blowup_identity":
                result = blowup_identity(m, p, profile, y_count)
                entry.passed &= result.holds
                note = f"|Y|={result.y_count} |X|={result.x_count} |D1|={result.d1_count}"
                if not result.applicable:
                    note += f"; not applicable, N0={result.n0}"
                add(check, _flag(result.holds), note=note)
            elif check == "jacobian":
                for jac in jacobians:
                    add(f"jacobian({jac.which})", f"{jac.singular_hits}/{jac.sampled}",
                        note=jac.note or f"locus size {jac.locus_size}", provenance="stochastic")
        entry.runtime_ms = _elapsed_ms(started)
        if not entry.passed:
            logger.warning("ffcheck_failed", p=p, seed=seed, instance=stmt.instance)
        return entry


def run(script: Script, config: Optional[EngineConfig] = None) -> Report:
    """执行脚本并返回报告

    Raises:
        ExecutionError: 某条语句执行失败，带语句序号
    """
    return Interpreter(config).run(script)
