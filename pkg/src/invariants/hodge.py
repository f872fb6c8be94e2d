"""
Hodge 菱形工具

菱形以 (n+1)×(n+1) 的嵌套列表 h[p][q] 表示。
"""

from typing import List, Sequence, Union

from ..utils.errors import DiamondError
from .models import ChiYProfile

Diamond = List[List[int]]


def validate_diamond(diamond: Sequence[Sequence[int]]) -> Diamond:
    """检查形状、非负整数、复共轭对称 h^{p,q} = h^{q,p} 与 Serre 对称 h^{p,q} = h^{n-p,n-q}"""
    rows = [list(row) for row in diamond]
    size = len(rows)
    if size == 0 or any(len(row) != size for row in rows):
        raise DiamondError("A Hodge diamond must be a non-empty square table")
    for p, row in enumerate(rows):
        for q, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise DiamondError(f"h^({p},{q}) = {value!r} is not a non-negative integer")
    n = size - 1
    for p in range(size):
        for q in range(size):
            if rows[p][q] != rows[q][p]:
                raise DiamondError(f"h^({p},{q}) != h^({q},{p})")
            if rows[p][q] != rows[n - p][n - q]:
                raise DiamondError(f"h^({p},{q}) != h^({n - p},{n - q})")
    return rows


def hh0_from_diamond(diamond: Sequence[Sequence[int]]) -> int:
    """dim HH_0 = Σ_p h^{p,p}"""
    rows = validate_diamond(diamond)
    return sum(rows[p][p] for p in range(len(rows)))


def hodge_euler(diamond: Sequence[Sequence[int]]) -> int:
    rows = validate_diamond(diamond)
    return sum((-1) ** (p + q) * v for p, row in enumerate(rows) for q, v in enumerate(row))


def betti_numbers(diamond: Sequence[Sequence[int]]) -> List[int]:
    """b_k = Σ_{p+q=k} h^{p,q}"""
    rows = validate_diamond(diamond)
    n = len(rows) - 1
    betti = [0] * (2 * n + 1)
    for p, row in enumerate(rows):
        for q, v in enumerate(row):
            betti[p + q] += v
    return betti


def chi_y_from_diamond(diamond: Sequence[Sequence[int]]) -> ChiYProfile:
    """χ^p = Σ_q (-1)^q h^{p,q}"""
    rows = validate_diamond(diamond)
    chi_p = [sum((-1) ** q * v for q, v in enumerate(row)) for row in rows]
    return ChiYProfile(dim=len(rows) - 1, chi_p=chi_p)


def signature_from_chi_y(profile: Union[ChiYProfile, Sequence[int]]) -> int:
    """Hirzebruch 符号差 χ_{y=1}"""
    chi_p = profile.chi_p if isinstance(profile, ChiYProfile) else list(profile)
    return sum(chi_p)
