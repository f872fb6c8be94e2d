"""
预设空间

实例的基本数据：X = P² × P²，E = O^3，F = O(2,0) ⊕ O(0,2)。
"""

from functools import lru_cache
from typing import Dict, List, Tuple

from ..utils.errors import UnknownPresetError
from .space import Space, SplitBundle, add_proj_bundle, build_base, cut_zero_locus

BASE_DIMS: Tuple[int, ...] = (2, 2)
E_RANK = 3
F_SUMMANDS: Tuple[Tuple[int, ...], ...] = ((2, 0), (0, 2))

# 预设名 -> (底空间因子个数, ξ 生成元名称)；DSL 解析期的元数检查使用
PRESET_SHAPES: Dict[str, Tuple[int, Tuple[str, ...]]] = {
    "X": (2, ()),
    "PE": (2, ("xi",)),
    "PFdual": (2, ("xi",)),
    "Y": (3, ()),
    "YPE": (2, ("xi",)),
    "S": (2, ("xi",)),
    "T": (3, ("xi",)),
}

PRESET_DESCRIPTIONS: Dict[str, str] = {
    "X": "P2 x P2",
    "PE": "P_X(E) = X x P2",
    "PFdual": "P_X(F^dual), F = O(2,0)+O(0,2)",
    "Y": "zero locus of O(1,2,0)+O(1,0,2) in P2 x P2 x P2 (W factor first)",
    "YPE": "zero locus of p*F(1) in P_X(E)",
    "S": "zero locus of q*E^dual(1) = 3 O_xi(1) in P_X(F^dual)",
    "T": "P2-bundle over P2 x P2 x P2 cut by O(0,0,1){xi}(1)",
}


def preset_names() -> List[str]:
    return list(PRESET_SHAPES)


def _x() -> Space:
    return build_base(BASE_DIMS)


def _pf_dual() -> Space:
    return add_proj_bundle(_x(), SplitBundle.of(*F_SUMMANDS).dual())


@lru_cache(maxsize=None)
def preset(name: str) -> Space:
    """按名称构造预设空间

    Args:
        name: X / PE / PFdual / Y / YPE / S / T

    Returns:
        Space: 构造好的空间（带名称）

    Raises:
        UnknownPresetError: 名称未知
    """
    if name == "X":
        space = _x()
    elif name == "PE":
        space = add_proj_bundle(_x(), SplitBundle.trivial(E_RANK, 2))
    elif name == "PFdual":
        space = _pf_dual()
    elif name == "Y":
        # W 因子在前：Y ⊂ P(W) × X 为 O(1) ⊠ F 的零点集
        ambient = build_base((E_RANK - 1,) + BASE_DIMS)
        twisted = SplitBundle.of(*((1,) + vec for vec in F_SUMMANDS))
        space = cut_zero_locus(ambient, twisted)
    elif name == "YPE":
        pe = add_proj_bundle(_x(), SplitBundle.trivial(E_RANK, 2))
        twisted = SplitBundle.of(*(vec + (1,) for vec in F_SUMMANDS))
        space = cut_zero_locus(pe, twisted)
    elif name == "S":
        space = cut_zero_locus(_pf_dual(), SplitBundle.trivial(E_RANK, 3).twist((0, 0, 1)))
    elif name == "T":
        ambient = add_proj_bundle(build_base((2, 2, 2)), SplitBundle.of((-2, 0, 0), (0, -2, 0)))
        space = cut_zero_locus(ambient, SplitBundle.of((0, 0, 1, 1)))
    else:
        raise UnknownPresetError(
            f"Unknown preset '{name}', expected one of {', '.join(PRESET_SHAPES)}"
        )
    return space.named(name)
