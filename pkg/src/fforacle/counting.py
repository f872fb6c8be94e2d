"""
点数计数与计数恒等式

Y = {(w, x) ∈ P^{e-1} × X : φ_x(w) = 0}，每个 x 上的纤维是 P(ker φ_x)。
"""

from typing import Dict, Optional

import numpy as np

from ..utils.errors import OracleInputError
from .forms import MorphismMatrix
from .linalg import batch_rank
from .models import BlowupIdentityReport, CountReport, RankProfile
from .points import check_budget, iter_point_chunks, product_count, projective_count, projective_points

DEFAULT_BUDGET = 2_000_000
DEFAULT_CHUNK = 4096


def rank_profile(m: MorphismMatrix, p: Optional[int] = None,
                 chunk_size: int = DEFAULT_CHUNK, budget: int = DEFAULT_BUDGET) -> RankProfile:
    """按秩统计 X(F_p) 的点；各块计数相加"""
    p = p or m.p
    _check_field(m, p)
    counts: Dict[int, int] = {}
    for chunk in iter_point_chunks(m.dims, p, chunk_size, budget):
        ranks = batch_rank(m.evaluate(chunk), p)
        values, freq = np.unique(ranks, return_counts=True)
        for rho, n in zip(values.tolist(), freq.tolist()):
            counts[rho] = counts.get(rho, 0) + n
    total = sum(counts.values())
    return RankProfile(p=p, counts=dict(sorted(counts.items())), total=total)


def count_y_via_fibers(profile: RankProfile, e: int) -> int:
    """|Y| = Σ_ρ N_ρ · |P^{e-1-ρ}|"""
    return sum(n * projective_count(e - 1 - rho, profile.p) for rho, n in profile.counts.items())


def count_Y(m: MorphismMatrix, p: Optional[int] = None,
            chunk_size: int = DEFAULT_CHUNK, budget: int = DEFAULT_BUDGET) -> int:
    """直接枚举 (w, x) 并检验全部 f 个方程"""
    p = p or m.p
    _check_field(m, p)
    w_points = projective_points(m.e - 1, p)
    check_budget(product_count(m.dims, p) * len(w_points), budget)
    total = 0
    for chunk in iter_point_chunks(m.dims, p, chunk_size, budget):
        values = m.evaluate(chunk)
        # (N, f, e) × (W, e) -> (N, W, f)
        products = np.einsum("nfe,we->nwf", values, w_points) % p
        total += int(np.all(products == 0, axis=2).sum())
    return total


def count_y_report(m: MorphismMatrix, p: Optional[int] = None,
                   profile: Optional[RankProfile] = None) -> CountReport:
    p = p or m.p
    profile = profile or rank_profile(m, p)
    return CountReport(p=p, direct=count_Y(m, p), via_fibers=count_y_via_fibers(profile, m.e))


def count_D1(m: MorphismMatrix, p: Optional[int] = None,
             profile: Optional[RankProfile] = None) -> int:
    """|D_{f-1}(F_p)|：秩不满的点"""
    profile = profile or rank_profile(m, p)
    return profile.count_at_most(m.f - 1)


def stratified_sum(profile: RankProfile, e: int, f: int) -> int:
    """Σ_i N_{f-i} · |P^{e-f+i-1}|"""
    return sum(
        profile.n(f - i) * projective_count(e - f + i - 1, profile.p) for i in range(f + 1)
    )


def stratified_count_identity(m: MorphismMatrix, p: Optional[int] = None,
                              y_count: Optional[int] = None,
                              profile: Optional[RankProfile] = None) -> bool:
    """直接计数与按层求和一致"""
    p = p or m.p
    profile = profile or rank_profile(m, p)
    if y_count is None:
        y_count = count_Y(m, p)
    return y_count == stratified_sum(profile, m.e, m.f)


def blowup_identity(m: MorphismMatrix, p: Optional[int] = None,
                    profile: Optional[RankProfile] = None,
                    y_count: Optional[int] = None) -> BlowupIdentityReport:
    """e = f + 1 且 D_{f-2} 为空时 |Y| = |X| + p·|D_{f-1}|"""
    p = p or m.p
    if m.e != m.f + 1:
        raise OracleInputError(f"The blow-up identity needs e = f + 1, got shape {m.shape}")
    profile = profile or rank_profile(m, p)
    if y_count is None:
        y_count = count_Y(m, p)
    n0 = profile.count_at_most(m.f - 2)
    d1 = profile.count_at_most(m.f - 1)
    applicable = n0 == 0
    diff = y_count - profile.total
    holds = (not applicable) or diff == p * d1
    return BlowupIdentityReport(
        p=p,
        x_count=profile.total,
        d1_count=d1,
        y_count=y_count,
        n0=n0,
        applicable=applicable,
        holds=holds,
        quotient=diff // p if diff % p == 0 else None,
    )


def _check_field(m: MorphismMatrix, p: int) -> None:
    if p != m.p:
        raise OracleInputError(f"Instance is defined over F_{m.p}, not F_{p}")
