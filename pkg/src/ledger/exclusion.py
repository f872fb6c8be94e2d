"""
三维 Fano 簇排除论证

若 Y 的导出范畴中的某个容许子范畴等价于三维 Fano 簇 V 的导出范畴，则
dim HH_0(V) ≥ hh0_required。三维 Fano 簇有 h^{1,1} = h^{2,2} = ρ，于是 HH_0 = 2 + 2ρ，
得到 ρ ≥ ceil((hh0 - 2) / 2)。表中 ρ 足够大的族都有完全例外序列，K_0 无挠，与挠矛盾。
"""

from math import ceil
from typing import Optional

from ..utils.errors import PreconditionError
from ..utils.logging_config import get_logger
from .data_loader import FanoThreefoldTable, load_fano_threefolds
from .models import ExclusionReport

logger = get_logger(__name__)

RHO_FORMULA_NOTE = (
    "dim HH_0 = 2 + rho for Fano threefolds is inconsistent with concluding rho >= 5 "
    "from HH_0 >= 12; this report uses sum_p h^(p,p) = 2 + 2 rho. "
    "With 2 + rho the bound would read rho >= {alt}."
)


def min_picard_rank(hh0_required: int) -> int:
    """满足 2 + 2ρ ≥ hh0 的最小 ρ"""
    return max(0, ceil((hh0_required - 2) / 2))


def threefold_exclusion(hh0_required: int,
                        table: Optional[FanoThreefoldTable] = None) -> ExclusionReport:
    """HH_0 下界 → Picard 数下界 → 候选族 → 全部有完全例外序列 → 与 K_0 挠矛盾

    Args:
        hh0_required: 嵌入的导出范畴需要的 HH_0 维数下界（Enriques 曲面为 12）
        table: Fano 三维簇表，默认读取随包数据

    Returns:
        ExclusionReport: excluded 为 True 表示所有候选族都被排除
    """
    if hh0_required < 2:
        raise PreconditionError(f"hh0_required must be >= 2, got {hh0_required}")
    table = table or load_fano_threefolds()
    rho = min_picard_rank(hh0_required)
    families = table.families(min_rho=rho)
    table_covers = rho >= table.min_rho
    all_fec = bool(families) and all(f.fec for f in families)
    excluded = table_covers and all_fec

    chain = {
        "hh0_bound_gives_rho": True,
        "table_covers_rho": table_covers,
        "all_families_admit_fec": all_fec,
        "k0_torsion_free": all_fec,
        "contradicts_torsion": excluded,
    }
    notes = [RHO_FORMULA_NOTE.format(alt=max(0, hh0_required - 2))]
    if not table_covers:
        notes.append(
            f"table only lists rho >= {table.min_rho}; families with rho = {rho} are not covered"
        )
    logger.info(
        "threefold_exclusion",
        hh0_required=hh0_required,
        min_rho=rho,
        families=len(families),
        excluded=excluded,
    )
    return ExclusionReport(
        hh0_required=hh0_required,
        min_rho=rho,
        table_min_rho=table.min_rho,
        families=families,
        table_covers=table_covers,
        all_admit_fec=all_fec,
        k0_torsion_free=all_fec,
        excluded=excluded,
        chain=chain,
        notes=notes,
    )
