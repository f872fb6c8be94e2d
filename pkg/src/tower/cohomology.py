"""
外围塔上的线丛上同调与正性

支持的形状：射影空间之积，其上至多一次分裂丛射影化（无零点集步骤）。
    - 射影空间之积：Künneth 公式 + Bott 公式
    - P(B) → 底空间：R^0 p_* O(c) = Sym^c(B^∨)，R^{r-1} p_* O(c) = Sym^{-c-r}(B) ⊗ det B，其余为零
正性判别使用环面不变曲线：纤维直线与各截面 σ_s 中的坐标直线。
"""

from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Sequence, Tuple, Union

from ..utils.errors import TowerShapeError
from .space import ProjBundleStep, Space, ZeroLocusStep

Vector = Tuple[int, ...]


def _check_supported(space: Space) -> None:
    if any(isinstance(s, ZeroLocusStep) for s in space.steps):
        raise TowerShapeError("Cohomology is computed on ambient towers without zero-locus steps")
    if len(space.proj_steps) > 1:
        raise TowerShapeError("At most one projectivization over the base is supported")


def base_cohomology(dims: Sequence[int], degrees: Sequence[int]) -> Dict[int, int]:
    """P^{n_1}×...×P^{n_k} 上 O(d_1,...,d_k) 的上同调 {次数: 维数}"""
    total_degree, total_dim = 0, 1
    for n, d in zip(dims, degrees):
        if d >= 0:
            total_dim *= comb(d + n, n)
        elif d <= -n - 1:
            total_degree += n
            total_dim *= comb(-d - 1, n)
        else:
            return {}
    return {total_degree: total_dim}


def _accumulate(target: Dict[int, int], source: Dict[int, int], shift: int = 0) -> None:
    for deg, dim in source.items():
        target[deg + shift] = target.get(deg + shift, 0) + dim


def line_bundle_cohomology(space: Space, L: Union[int, Sequence[int]]) -> List[int]:
    """线丛上同调 [h^0, ..., h^dim]

    Args:
        space: 外围塔（射影空间之积，至多一次射影化）
        L: 次数向量

    Returns:
        List[int]: 各次上同调维数
    """
    _check_supported(space)
    vec = space.vector(L)
    dims = space.presentation.base_dims
    k = len(dims)
    table: Dict[int, int] = {}

    if not space.proj_steps:
        _accumulate(table, base_cohomology(dims, vec))
    else:
        step: ProjBundleStep = space.proj_steps[0]
        summands = step.bundle.summands
        r = len(summands)
        a, c = vec[:k], vec[k]
        if c >= 0:
            # Sym^c(B^∨)：每个多重集贡献 O(a - Σ b_s)
            for multiset in combinations_with_replacement(range(r), c):
                twist = tuple(
                    a[i] - sum(summands[s][i] for s in multiset) for i in range(k)
                )
                _accumulate(table, base_cohomology(dims, twist))
        elif c <= -r:
            det = step.bundle.det()
            for multiset in combinations_with_replacement(range(r), -c - r):
                twist = tuple(
                    a[i] + det[i] + sum(summands[s][i] for s in multiset) for i in range(k)
                )
                _accumulate(table, base_cohomology(dims, twist), shift=r - 1)

    return [table.get(i, 0) for i in range(space.dim + 1)]


def curve_pairings(space: Space, L: Union[int, Sequence[int]]) -> Dict[str, int]:
    """线丛与环面不变曲线的相交数

    零点集步骤被忽略：在外围塔上为正即限制到子簇上为丰富。
    """
    if len(space.proj_steps) > 1:
        raise TowerShapeError("At most one projectivization over the base is supported")
    vec = space.vector(L)
    names = space.presentation.names
    k = space.presentation.nbase
    pairings: Dict[str, int] = {}
    if not space.proj_steps:
        for i in range(k):
            pairings[f"line({names[i]})"] = vec[i]
        return pairings

    step = space.proj_steps[0]
    c = vec[k]
    pairings["fiber"] = c
    for s, summand in enumerate(step.bundle.summands):
        # O_ξ(1) 在截面 σ_s 上限制为 O(-b_s)
        for i in range(k):
            pairings[f"section{s + 1}.line({names[i]})"] = vec[i] - c * summand[i]
    return pairings


def is_ample(space: Space, L: Union[int, Sequence[int]]) -> bool:
    return all(v > 0 for v in curve_pairings(space, L).values())


def anticanonical_ample(space: Space) -> bool:
    """-K 在外围塔的全部不变曲线上为正（Fano 判别的充分条件）"""
    return is_ample(space, space.anticanonical)
