"""
退化轨迹的期望维数、分层纤维维数与 Fano 宿主判别
"""

from typing import List, Optional, Sequence

from ..tower import Space, anticanonical_ample
from ..utils.errors import PreconditionError, TowerShapeError
from .models import (
    DegeneracyQuery,
    DegeneracyRow,
    FanoHostResult,
    StratumCase,
    StratumRow,
    StratumTable,
)


def expected_degeneracy_dim(q: DegeneracyQuery) -> int:
    """dim D_r = dim X - (e - r)(f - r)，负值表示一般情形下为空"""
    return q.dim_x - (q.e - q.r) * (q.f - q.r)


def degeneracy_table(dim_x: int, e: int, f: int) -> List[DegeneracyRow]:
    rows = []
    for r in range(min(e, f) + 1):
        d = expected_degeneracy_dim(DegeneracyQuery(dim_x=dim_x, e=e, f=f, r=r))
        rows.append(DegeneracyRow(r=r, expected_dim=d, expected_empty=d < 0))
    return rows


def _check_shape(e: int, f: int) -> None:
    if f < 1 or e <= f:
        raise PreconditionError(f"Expected e > f >= 1, got e={e}, f={f}")


def stratum_dimensions(dim_x: int, e: int, f: int, case: StratumCase) -> StratumTable:
    """按层 X_i = D_{f-i} \\ D_{f-i-1} 给出层维数、纤维维数与原像维数

    Args:
        case: grass_birational（Grassmann 丛，纤维 Gr(e-f, e-f+i)）
              proj_bundle（纤维 P^{e-f+i-1}）
              z_side（纤维 P^{i-1}，i = 0 时为空）
    """
    _check_shape(e, f)
    k = e - f
    rows = []
    notes: List[str] = []
    for i in range(f + 1):
        stratum = dim_x - i * (k + i)
        empty = stratum < 0
        if case == "grass_birational":
            fiber: Optional[int] = k * i
        elif case == "proj_bundle":
            fiber = k + i - 1
        else:
            fiber = i - 1 if i >= 1 else None
        preimage = stratum + fiber if fiber is not None else None
        rows.append(StratumRow(
            i=i,
            stratum_dim=stratum,
            fiber_dim=fiber,
            preimage_dim=preimage,
            expected_empty=empty,
        ))

    if case == "proj_bundle":
        notes.append(
            f"open stratum preimage has dimension dim(X)+(e-f-1) = {dim_x + k - 1}; "
            f"the looser bound dim(X)+(e-f+1) = {dim_x + k + 1} is never attained and is "
            "treated as a typo"
        )
    if case == "z_side":
        notes.append(
            f"preimage of X_i has dimension dim(D_(f-1)) + (1-i)(e-f+i) with "
            f"dim(D_(f-1)) = {dim_x - (k + 1)}"
        )
    return StratumTable(dim_x=dim_x, e=e, f=f, case=case, rows=rows, notes=notes)


def fano_host_check(dim_x: int, e: int, f: int,
                    canonical_x: Sequence[int],
                    det_e: Sequence[int],
                    det_f: Sequence[int],
                    index_mode: bool = False) -> FanoHostResult:
    """判断 (X, E, F) 是否给出 Fano 的 Y = {(x, w) : φ_x(w) = 0}

    (a) D_{f-2} 一般情形下为空，使 Y → X 为 D_{f-1} 处的爆破
    (b) -K_Y = (-K_X - det E - det F) ⊠ O(e - f) 丰富

    index_mode=True 时，canonical_x / det_e / det_f 取 Picard 群 Z·H 中的单个系数：
    -K_X = ι H, det E = α H, det F = β H，(b) 化为 ι - α - β > 0。
    否则 X 为射影空间之积，E 必须平凡。
    """
    _check_shape(e, f)
    table = degeneracy_table(dim_x, e, f)
    expected = {row.r: row.expected_dim for row in table}
    r = f - 2
    cond_a = r < 0 or expected[r] < 0
    notes: List[str] = []

    if index_mode:
        iota = -canonical_x[0]
        alpha, beta = det_e[0], det_f[0]
        twist = [iota - alpha - beta]
        cond_b = twist[0] > 0 and e - f >= 1
        mode = "index"
    else:
        if not (len(canonical_x) == len(det_e) == len(det_f)):
            raise TowerShapeError("canonical_x, det_e and det_f must have the same length")
        if any(det_e):
            raise TowerShapeError(
                "Only a trivial E is supported over a product of projective spaces"
            )
        twist = [-(k + a + b) for k, a, b in zip(canonical_x, det_e, det_f)]
        cond_b = all(t > 0 for t in twist) and e - f >= 1
        mode = "product"

    if not cond_a:
        notes.append(f"D_{r} has expected dimension {expected[r]} >= 0")
    if not cond_b:
        notes.append(f"anticanonical twist {twist} is not positive")
    return FanoHostResult(
        cond_a=cond_a,
        cond_b=cond_b,
        mode=mode,
        expected_dims=expected,
        anticanonical_twist=twist,
        notes=notes,
    )


def fano_dimension_bound(host: Space, check: FanoHostResult) -> Optional[int]:
    """宿主判别与反典范正性同时成立时返回 Y 的维数"""
    if check.fano_host and anticanonical_ample(host):
        return host.dim
    return None


