"""
机器可读报告

数值一律以字符串保存（整数、有理数、列表），JSON 中不会丢失精度。
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

Provenance = Literal["certified", "assumed", "stochastic"]

SMOOTHNESS_ASSUMPTION = (
    "zero loci are cut by general sections: smoothness and transversality are assumed "
    "and checked only stochastically over finite fields"
)
MOD_P_ASSUMPTION = "reduction mod p of a random instance is a heuristic proxy for a general instance"


class QueryValue(BaseModel):
    invariant: str
    value: str
    provenance: List[Provenance]
    note: str = ""


class ReportEntry(BaseModel):
    """一条 query 或 ffcheck 语句的执行结果"""
    index: int
    statement: str
    kind: Literal["query", "ffcheck"]
    space: Optional[str] = None
    values: List[QueryValue] = Field(default_factory=list)
    seed: Optional[int] = None
    runtime_ms: str = "0"
    passed: bool = True


class CheckResult(BaseModel):
    """验收项：期望值与实际值（字符串形式）"""
    id: int
    name: str
    expected: str
    actual: str
    passed: bool
    provenance: List[Provenance] = Field(default_factory=lambda: ["certified"])
    seed: Optional[int] = None
    notes: List[str] = Field(default_factory=list)
    assumptions: List[str] = Field(default_factory=list)


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    source: str = "<script>"
    seed: Optional[int] = None
    entries: List[ReportEntry] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    assumptions: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    runtime_ms: str = "0"

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries) and all(c.passed for c in self.checks)

    def assume(self, text: str) -> None:
        if text not in self.assumptions:
            self.assumptions.append(text)

    def values(self) -> Dict[str, str]:
        """所有 query 结果的扁平视图，键为 "空间.不变量"；同名后者覆盖前者"""
        out: Dict[str, str] = {}
        for entry in self.entries:
            prefix = f"{entry.space}." if entry.space else ""
            for v in entry.values:
                out[prefix + v.invariant] = v.value
        return out

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.model_validate_json(text)
