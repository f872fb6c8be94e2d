"""
不变量结果数据模型
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class ChiYProfile(BaseModel):
    """χ_y 系数 χ^p = χ(Ω^p)，p = 0..dim"""
    dim: int
    chi_p: List[int]

    @property
    def euler(self) -> int:
        return sum((-1) ** p * c for p, c in enumerate(self.chi_p))

    @property
    def signature_sum(self) -> int:
        """χ_y 在 y = 1 处的值"""
        return sum(self.chi_p)

    def as_polynomial(self) -> str:
        parts = [f"{c}*y^{p}" for p, c in enumerate(self.chi_p) if c]
        return " + ".join(parts) if parts else "0"


class KoszulTerm(BaseModel):
    """Koszul 复形中的一项 L ⊗ Λ^j N^∨"""
    homological_degree: int
    twist: List[int]
    cohomology: List[int]


class KoszulResult(BaseModel):
    """Koszul 分解计算 h^0 的结果

    certified 为 True 时 value 是 h^0 的精确值；否则 value 只是 Euler 示性数。
    """
    value: int
    certified: bool
    euler_characteristic: int
    total_degree_dims: Dict[int, int] = Field(default_factory=dict)
    terms: List[KoszulTerm] = Field(default_factory=list)


class DegeneracyQuery(BaseModel):
    """退化轨迹 D_r(φ) = {rank φ ≤ r}，φ: E → F"""
    dim_x: int
    e: int
    f: int
    r: int

    @model_validator(mode="after")
    def _check_range(self):
        if not 0 <= self.r <= min(self.e, self.f):
            raise ValueError(f"r must satisfy 0 <= r <= min(e, f), got r={self.r}")
        return self


class DegeneracyRow(BaseModel):
    r: int
    expected_dim: int
    expected_empty: bool


StratumCase = Literal["grass_birational", "proj_bundle", "z_side"]


class StratumRow(BaseModel):
    """第 i 层 X_i = D_{f-i} \\ D_{f-i-1}"""
    i: int
    stratum_dim: int
    fiber_dim: Optional[int]
    preimage_dim: Optional[int]
    expected_empty: bool


class StratumTable(BaseModel):
    dim_x: int
    e: int
    f: int
    case: StratumCase
    rows: List[StratumRow]
    notes: List[str] = Field(default_factory=list)

    def preimage_dims(self) -> List[Optional[int]]:
        """各层原像维数（按公式计算，层为空时仍给出公式值）"""
        return [row.preimage_dim for row in self.rows]


SectionModel = Literal["hom_bundle", "proj_E_side", "product_side", "proj_Fdual_side"]


class SectionSpaceReport(BaseModel):
    values: Dict[str, int]

    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) <= 1


class FanoHostResult(BaseModel):
    """Fano 宿主判别 (a) D_{f-2} 为空 (b) Y 的反典范丛丰富"""
    cond_a: bool
    cond_b: bool
    mode: Literal["product", "index"]
    expected_dims: Dict[int, int] = Field(default_factory=dict)
    anticanonical_twist: List[int] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def fano_host(self) -> bool:
        return self.cond_a and self.cond_b
