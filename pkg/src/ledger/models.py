"""
账本数据模型
"""

from typing import Dict, List

from pydantic import BaseModel, Field, model_validator


class LatticeLabel(BaseModel):
    label: str
    rank: int


class DegreeEntry(BaseModel):
    """单个次数 k 的整上同调：自由秩 + 具名挠部分 + 格标签"""
    free_rank: int = Field(ge=0)
    torsion: List[str] = Field(default_factory=list)
    lattices: List[LatticeLabel] = Field(default_factory=list)

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(self.torsion)
        return " + ".join(parts) if parts else "0"


class CohomologyLedger(BaseModel):
    """整上同调账本 H^0 .. H^{2n}"""
    name: str = ""
    degrees: List[DegreeEntry] = Field(default_factory=list)
    smooth_proper: bool = False
    assumptions: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _poincare_symmetry(self):
        if self.smooth_proper:
            ranks = self.free_ranks
            if ranks != ranks[::-1]:
                raise ValueError(f"Free ranks {ranks} violate Poincare duality")
        return self

    @property
    def free_ranks(self) -> List[int]:
        return [entry.free_rank for entry in self.degrees]

    @property
    def euler(self) -> int:
        return sum((-1) ** k * r for k, r in enumerate(self.free_ranks))

    @property
    def torsion(self) -> Dict[int, List[str]]:
        return {k: entry.torsion for k, entry in enumerate(self.degrees) if entry.torsion}


class K0Summary(BaseModel):
    """K_0 的自由秩与挠部分（多重集，按名称排序保存）"""
    free_rank: int = Field(ge=0)
    torsion: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _sort_torsion(self):
        self.torsion = sorted(self.torsion)
        return self


class FanoFamily(BaseModel):
    id: str
    rho: int
    fec: bool


class ExclusionReport(BaseModel):
    """三维 Fano 排除论证的结果"""
    hh0_required: int
    min_rho: int
    table_min_rho: int
    families: List[FanoFamily]
    table_covers: bool
    all_admit_fec: bool
    k0_torsion_free: bool
    excluded: bool
    chain: Dict[str, bool]
    notes: List[str] = Field(default_factory=list)
