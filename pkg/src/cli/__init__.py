from .dsl_ast import Script
from .interpreter import Interpreter, run
from .parser import parse
from .printer import format_script, format_space
from .report import CheckResult, Report

__all__ = [
    "Script",
    "parse",
    "run",
    "Interpreter",
    "format_script",
    "format_space",
    "Report",
    "CheckResult",
]
