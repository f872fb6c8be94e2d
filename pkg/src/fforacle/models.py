"""
有限域验证报告
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class RankProfile(BaseModel):
    """X(F_p) 上各秩 ρ 的点数 N_ρ"""
    p: int
    counts: Dict[int, int]
    total: int

    def count_at_most(self, r: int) -> int:
        """|D_r(F_p)| = Σ_{ρ ≤ r} N_ρ"""
        return sum(n for rho, n in self.counts.items() if rho <= r)

    def n(self, rho: int) -> int:
        return self.counts.get(rho, 0)


class CountReport(BaseModel):
    p: int
    direct: int
    via_fibers: int

    @property
    def agree(self) -> bool:
        return self.direct == self.via_fibers


class BlowupIdentityReport(BaseModel):
    """N_0 = 0 时 |Y| = |X| + p·|D_1|"""
    p: int
    x_count: int
    d1_count: int
    y_count: int
    n0: int
    applicable: bool
    holds: bool
    quotient: Optional[int] = None


class JacobianReport(BaseModel):
    p: int
    which: Literal["Y", "D1"]
    locus_size: int
    sampled: int
    smooth_hits: int
    singular_hits: int
    seed: int
    note: str = ""


class GeneralInstance(BaseModel):
    """一般性检查通过（或达到重抽上限）的实例"""
    p: int
    seed: int
    attempt: int
    generic: bool
    profile: RankProfile
    jacobians: List[JacobianReport] = Field(default_factory=list)
    instance_text: str


class SeedResult(BaseModel):
    p: int
    seed: int
    attempts: int
    generic: bool
    first_draw_generic: bool
    counts_agree: bool
    stratified_identity: bool
    blowup: BlowupIdentityReport


class CampaignReport(BaseModel):
    primes: List[int]
    seeds_per_prime: int
    results: List[SeedResult]
    generic_fraction: Dict[int, float]
    first_draw_generic_fraction: Dict[int, float]
    identities_hold: bool
    passed: bool
