"""
一般实例抽取与验证批次

小素数域上的随机 φ 未必"一般"（D_0 非空或轨迹有奇点），失败时记录日志并以新种子重抽，
直到通过或达到 retry_cap。
"""

from typing import Dict, List, Optional

import numpy as np

from ..utils.engine_config import EngineConfig
from ..utils.logging_config import get_logger
from .counting import blowup_identity, count_Y, count_y_via_fibers, rank_profile, stratified_count_identity
from .forms import MorphismMatrix, random_instance
from .instance_file import dump_instance
from .jacobian import jacobian_sample
from .models import CampaignReport, GeneralInstance, JacobianReport, SeedResult

logger = get_logger(__name__)

GENERIC_FRACTION_THRESHOLD = 0.9


def instance_seed(seed: int, attempt: int) -> List[int]:
    """第 attempt 次抽取的种子序列"""
    return [seed, attempt]


def _genericity(m: MorphismMatrix, seed: int, config: EngineConfig):
    profile = rank_profile(m, m.p, config.chunk_size, config.point_budget)
    if profile.count_at_most(m.f - 2):
        return False, profile, [], "D_(f-2) has F_p-points"
    reports: List[JacobianReport] = []
    for which in ("D1", "Y"):
        report = jacobian_sample(
            m, m.p, which, config.jacobian_trials, seed=seed, budget=config.point_budget
        )
        reports.append(report)
        if report.singular_hits:
            return False, profile, reports, f"{which} has singular F_p-points"
    return True, profile, reports, ""


def draw_general_instance(p: int, seed: int,
                          config: Optional[EngineConfig] = None) -> GeneralInstance:
    """抽取通过一般性检查的实例

    Args:
        p: 素数
        seed: 基础种子，第 k 次抽取使用种子序列 [seed, k]
        config: 引擎配置（retry_cap、jacobian_trials、预算）

    Returns:
        GeneralInstance: generic=False 表示 retry_cap 次重抽后仍未通过
    """
    config = config or EngineConfig()
    attempt = 0
    while True:
        m = random_instance(p, instance_seed(seed, attempt))
        generic, profile, reports, reason = _genericity(m, seed, config)
        if generic or attempt >= config.retry_cap:
            if not generic:
                logger.warning("retry_cap_reached", p=p, seed=seed, attempts=attempt + 1)
            return GeneralInstance(
                p=p,
                seed=seed,
                attempt=attempt,
                generic=generic,
                profile=profile,
                jacobians=reports,
                instance_text=dump_instance(m),
            )
        logger.info("instance_redrawn", p=p, seed=seed, attempt=attempt, reason=reason)
        attempt += 1


def run_seed(p: int, seed: int, config: EngineConfig) -> SeedResult:
    drawn = draw_general_instance(p, seed, config)
    m = random_instance(p, instance_seed(seed, drawn.attempt))
    y_count = count_Y(m, p, config.chunk_size, config.point_budget)
    fibers = count_y_via_fibers(drawn.profile, m.e)
    return SeedResult(
        p=p,
        seed=seed,
        attempts=drawn.attempt + 1,
        generic=drawn.generic,
        first_draw_generic=drawn.generic and drawn.attempt == 0,
        counts_agree=y_count == fibers,
        stratified_identity=stratified_count_identity(m, p, y_count, drawn.profile),
        blowup=blowup_identity(m, p, drawn.profile, y_count),
    )


def run_oracle_campaign(config: Optional[EngineConfig] = None) -> CampaignReport:
    """对每个素数与种子抽取实例并核对全部计数恒等式"""
    config = config or EngineConfig()
    results: List[SeedResult] = []
    for p in config.primes:
        for offset in range(config.seeds_per_prime):
            result = run_seed(p, config.seed + offset, config)
            results.append(result)
            if not (result.counts_agree and result.stratified_identity and result.blowup.holds):
                logger.error("oracle_identity_failed", p=p, seed=result.seed)

    generic: Dict[int, float] = {}
    first_draw: Dict[int, float] = {}
    for p in config.primes:
        rows = [r for r in results if r.p == p]
        generic[p] = float(np.mean([r.generic for r in rows])) if rows else 0.0
        first_draw[p] = float(np.mean([r.first_draw_generic for r in rows])) if rows else 0.0

    identities = all(
        r.counts_agree and r.stratified_identity and r.blowup.holds for r in results
    )
    passed = identities and all(v >= GENERIC_FRACTION_THRESHOLD for v in generic.values())
    logger.info(
        "oracle_campaign_finished",
        primes=list(config.primes),
        seeds=config.seeds_per_prime,
        identities_hold=identities,
        generic_fraction=generic,
    )
    return CampaignReport(
        primes=list(config.primes),
        seeds_per_prime=config.seeds_per_prime,
        results=results,
        generic_fraction=generic,
        first_draw_generic_fraction=first_draw,
        identities_hold=identities,
        passed=passed,
    )
