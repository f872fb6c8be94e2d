"""
Koszul 分解与截面空间维数

Z ⊂ A 为分裂丛 N 的零点集，O_Z 有 Koszul 分解
    0 → Λ^c N^∨ → ... → N^∨ → O_A → O_Z → 0
L⊗Λ^j N^∨ 放在同调次数 j，其 H^i 贡献到总次数 i - j。
总次数 ±1 处全为零时，谱序列在总次数 0 处不再有非零微分，h^0(Z, L) 等于总次数 0 的维数之和。
"""

from itertools import combinations
from typing import Dict, List, Sequence, Union, get_args

from ..tower import (
    Space,
    SplitBundle,
    add_proj_bundle,
    build_base,
    line_bundle_cohomology,
)
from ..utils.errors import InvalidDegreeError
from ..utils.logging_config import get_logger
from .models import KoszulResult, KoszulTerm, SectionModel, SectionSpaceReport

logger = get_logger(__name__)


def h0_via_koszul(s: Space, L: Union[int, Sequence[int]] = 0) -> KoszulResult:
    """用 Koszul 复形计算零点集上的 h^0(L)

    Args:
        s: 外围为射影空间之积（至多一次射影化）的零点集
        L: 线丛次数向量

    Returns:
        KoszulResult: certified=False 时 value 为 Euler 示性数
    """
    ambient, normal = s.split_ambient()
    vec = ambient.vector(L)
    totals: Dict[int, int] = {}
    terms: List[KoszulTerm] = []

    for j in range(len(normal) + 1):
        for subset in combinations(range(len(normal)), j):
            twist = tuple(
                x - sum(normal[idx][i] for idx in subset) for i, x in enumerate(vec)
            )
            cohomology = line_bundle_cohomology(ambient, twist)
            terms.append(KoszulTerm(homological_degree=j, twist=list(twist), cohomology=cohomology))
            for i, dim in enumerate(cohomology):
                if dim:
                    totals[i - j] = totals.get(i - j, 0) + dim

    euler = sum((-1) ** (t % 2) * d for t, d in totals.items())
    certified = not totals.get(-1) and not totals.get(1)
    value = totals.get(0, 0) if certified else euler
    if not certified:
        logger.warning(
            "koszul_not_certified",
            space=s.name,
            twist=list(vec),
            totals={str(k): v for k, v in sorted(totals.items())},
        )
    return KoszulResult(
        value=value,
        certified=certified,
        euler_characteristic=euler,
        total_degree_dims=dict(sorted(totals.items())),
        terms=terms,
    )


def _h0(space: Space, vec: Sequence[int]) -> int:
    return line_bundle_cohomology(space, vec)[0]


def section_space_report(f_summands: Sequence[Sequence[int]] = ((2, 0), (0, 2)),
                         e: int = 3,
                         base_dims: Sequence[int] = (2, 2)) -> SectionSpaceReport:
    """四种模型下 H^0(E^∨ ⊗ F) 的维数（E 平凡，秩 e）"""
    base_dims = tuple(base_dims)
    f_summands = [tuple(v) for v in f_summands]
    if e < 1:
        raise InvalidDegreeError(f"Rank of E must be >= 1, got {e}")
    if any(len(v) != len(base_dims) for v in f_summands):
        raise InvalidDegreeError("Summands of F must have one entry per base factor")
    if not f_summands:
        return SectionSpaceReport(values={m: 0 for m in get_args(SectionModel)})

    x = build_base(base_dims)
    values: Dict[str, int] = {}
    values["hom_bundle"] = e * sum(_h0(x, v) for v in f_summands)

    pe = add_proj_bundle(x, SplitBundle.trivial(e, len(base_dims)))
    values["proj_E_side"] = sum(_h0(pe, v + (1,)) for v in f_summands)

    w_x = build_base((e - 1,) + base_dims) if e > 1 else None
    if w_x is not None:
        values["product_side"] = sum(_h0(w_x, (1,) + v) for v in f_summands)
    else:
        values["product_side"] = values["hom_bundle"]

    pf = add_proj_bundle(x, SplitBundle.of(*f_summands).dual())
    values["proj_Fdual_side"] = e * _h0(pf, (0,) * len(base_dims) + (1,))
    return SectionSpaceReport(values=values)


def section_space_dim(model: SectionModel = "hom_bundle",
                      f_summands: Sequence[Sequence[int]] = ((2, 0), (0, 2)),
                      e: int = 3,
                      base_dims: Sequence[int] = (2, 2)) -> int:
    """单一模型下的截面空间维数"""
    report = section_space_report(f_summands, e, base_dims)
    if model not in report.values:
        raise InvalidDegreeError(f"Unknown section model '{model}'")
    return report.values[model]

