"""
chowkit 命令行入口

    chowkit check-paper [选项]      运行全部验收项
    chowkit eval FILE [选项]        执行 DSL 脚本
    chowkit fmt FILE [--check]      规范化输出 DSL 脚本

退出码：0 全部通过，1 验证失败，2 用法或解析错误。
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from ..utils.engine_config import (
    ENGINE_PROFILES,
    EngineConfig,
    get_engine_config_from_env,
    get_profile,
    validate_engine_config,
)
from ..utils.errors import ConfigError, DslError, ExecutionError
from ..utils.logging_config import configure_logging
from ..verification_workflow import PaperVerificationWorkflow, state_to_report
from .interpreter import run
from .parser import parse
from .printer import format_script
from .report import Report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _primes(raw: str) -> List[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid prime list: {raw!r}") from e


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="随机种子")
    parser.add_argument("--p", dest="primes", type=_primes, help="素数列表，如 2,3,5")
    parser.add_argument("--budget", type=int, help="有限域点数预算")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="输出格式")
    parser.add_argument("--strict", action="store_true", default=None,
                        help="未认证的 h0 视为失败")
    parser.add_argument("--tables", help="Fano 三维簇数据表路径")
    parser.add_argument("--profile", choices=sorted(ENGINE_PROFILES), help="命名配置预设")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chowkit", description="相交理论引擎与验收工具")
    parser.add_argument("--log-level", default=None, help="日志级别")
    parser.add_argument("--log-format", choices=["console", "json"], default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    check_paper = sub.add_parser("check-paper", help="运行全部验收项")
    _add_engine_flags(check_paper)

    evaluate = sub.add_parser("eval", help="执行 DSL 脚本")
    evaluate.add_argument("file", help=".chow 脚本")
    _add_engine_flags(evaluate)

    fmt = sub.add_parser("fmt", help="规范化输出 DSL 脚本")
    fmt.add_argument("file", help=".chow 脚本")
    fmt.add_argument("--check", action="store_true", help="只检查是否已是规范形式")
    return parser


def build_config(args: argparse.Namespace) -> EngineConfig:
    """环境变量（或命名预设）之上叠加命令行参数"""
    profile = getattr(args, "profile", None)
    base = get_profile(profile) if profile else get_engine_config_from_env()
    config = base.with_overrides(
        seed=getattr(args, "seed", None),
        primes=tuple(args.primes) if getattr(args, "primes", None) else None,
        point_budget=getattr(args, "budget", None),
        strict=getattr(args, "strict", None),
        tables_path=getattr(args, "tables", None),
        log_level=args.log_level,
        log_format=args.log_format,
    )
    problems = validate_engine_config(config)
    if problems:
        raise ConfigError("; ".join(problems))
    return config


# ==================== 输出 ====================

def render_text(report: Report) -> str:
    lines = [f"📄 {report.source} (seed {report.seed})"]
    for entry in report.entries:
        mark = "✅" if entry.passed else "❌"
        lines.append(f"{mark} [{entry.index}] {entry.statement}")
        for v in entry.values:
            flags = ", ".join(v.provenance)
            note = f"  # {v.note}" if v.note else ""
            lines.append(f"    {v.invariant} = {v.value}  ({flags}){note}")
    for c in report.checks:
        mark = "✅" if c.passed else "❌"
        lines.append(f"{mark} {c.id:>2}. {c.name}: {c.actual}")
        if not c.passed:
            lines.append(f"       expected: {c.expected}")
        for note in c.notes:
            lines.append(f"       - {note}")
    if report.assumptions:
        lines.append("⚠️ 假设:")
        lines.extend(f"   - {a}" for a in report.assumptions)
    status = "✅ 全部通过" if report.passed else "❌ 验证失败"
    lines.append(f"{status} ({report.runtime_ms} ms)")
    return "\n".join(lines)


def emit(report: Report, fmt: str) -> int:
    print(report.to_json() if fmt == "json" else render_text(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e


# ==================== 命令 ====================

def cmd_check_paper(args: argparse.Namespace, config: EngineConfig) -> int:
    state = PaperVerificationWorkflow().run(config)
    return emit(state_to_report(state), args.format)


def cmd_eval(args: argparse.Namespace, config: EngineConfig) -> int:
    script = parse(_read(args.file), source=args.file)
    try:
        report = run(script, config)
    except ExecutionError as e:
        line = script.lines[e.index] if e.index < len(script.lines) else "?"
        print(f"❌ {args.file} line {line}: {e}", file=sys.stderr)
        return EXIT_FAILED
    return emit(report, args.format)


def cmd_fmt(args: argparse.Namespace, config: EngineConfig) -> int:
    text = _read(args.file)
    formatted = format_script(parse(text, source=args.file))
    if args.check:
        if formatted != text:
            print(f"⚠️ {args.file} is not in canonical form", file=sys.stderr)
            return EXIT_FAILED
        return EXIT_OK
    sys.stdout.write(formatted)
    return EXIT_OK


COMMANDS = {"check-paper": cmd_check_paper, "eval": cmd_eval, "fmt": cmd_fmt}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = build_config(args)
    except ConfigError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(config.log_level, config.log_format)
    try:
        return COMMANDS[args.command](args, config)
    except (DslError, ConfigError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
