"""
DSL 抽象语法树

每条语句一行；语句模型不记录位置，位置单独保存在 Script.lines 中，
因此 parse∘print∘parse 比较 statements 时只比较语义。
"""

from typing import Annotated, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field


class Twist(BaseModel):
    """相对超平面类的扭转 {xi}(c)"""
    generator: str
    degree: int


class LineTerm(BaseModel):
    """线丛项 O(a_1,..,a_k){xi}(c)^m；base 为空表示底空间次数全为零"""
    base: Optional[List[int]] = None
    twists: List[Twist] = Field(default_factory=list)
    power: int = 1


class InvariantArg(BaseModel):
    kind: Literal["canonical", "anticanonical", "line"]
    term: Optional[LineTerm] = None


class Invariant(BaseModel):
    name: str
    arg: Optional[InvariantArg] = None


class BaseStmt(BaseModel):
    kind: Literal["base"] = "base"
    name: str = "X"
    dims: List[int]


class BundleStmt(BaseModel):
    kind: Literal["bundle"] = "bundle"
    name: str
    terms: List[LineTerm]


class ProjStmt(BaseModel):
    kind: Literal["proj"] = "proj"
    name: str
    bundle: str
    dual: bool = False


class ZeroStmt(BaseModel):
    kind: Literal["zero"] = "zero"
    name: str
    space: str
    terms: List[LineTerm]


class PresetStmt(BaseModel):
    kind: Literal["preset"] = "preset"
    name: str
    preset: str


class QueryStmt(BaseModel):
    kind: Literal["query"] = "query"
    space: str
    invariants: List[Invariant]


class FFCheckStmt(BaseModel):
    kind: Literal["ffcheck"] = "ffcheck"
    params: Dict[str, int] = Field(default_factory=dict)
    checks: List[str] = Field(default_factory=list)
    instance: Optional[str] = Field(default=None, description="实例文件路径；为空时随机抽取")


Statement = Annotated[
    Union[BaseStmt, BundleStmt, ProjStmt, ZeroStmt, PresetStmt, QueryStmt, FFCheckStmt],
    Field(discriminator="kind"),
]


class Script(BaseModel):
    statements: List[Statement] = Field(default_factory=list)
    lines: List[int] = Field(default_factory=list)
    source: str = "<script>"
