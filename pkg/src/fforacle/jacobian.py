"""
Jacobian 光滑性抽样

Y：方程 g_i(w, x) = Σ_j w_j φ_ij(x)，i = 1..f；光滑点处 Jacobian 秩为 f。
D1：方程为 φ 的全部 f×f 子式；在秩恰为 f-1 的点处 Jacobian 秩应为 e-f+1。
这是对一般性的随机支持，不是证明。
"""

from itertools import combinations
from typing import Literal, Optional

import numpy as np

from ..utils.errors import OracleInputError
from ..utils.logging_config import get_logger
from .forms import MorphismMatrix
from .linalg import batch_det, batch_rank
from .models import JacobianReport
from .points import check_budget, iter_point_chunks, product_count, projective_points

logger = get_logger(__name__)

Locus = Literal["Y", "D1"]


def _y_points(m: MorphismMatrix, p: int, budget: int):
    """Y(F_p) 的全部点：返回 (w, x) 两个数组"""
    w_points = projective_points(m.e - 1, p)
    check_budget(product_count(m.dims, p) * len(w_points), budget)
    ws, xs = [], []
    for chunk in iter_point_chunks(m.dims, p, budget=budget):
        values = m.evaluate(chunk)
        mask = np.all(np.einsum("nfe,we->nwf", values, w_points) % p == 0, axis=2)
        x_idx, w_idx = np.nonzero(mask)
        xs.append(chunk[x_idx])
        ws.append(w_points[w_idx])
    return np.concatenate(ws), np.concatenate(xs)


def _d1_points(m: MorphismMatrix, p: int, budget: int) -> np.ndarray:
    out = []
    for chunk in iter_point_chunks(m.dims, p, budget=budget):
        ranks = batch_rank(m.evaluate(chunk), p)
        out.append(chunk[ranks <= m.f - 1])
    return np.concatenate(out)


def _y_jacobian(m: MorphismMatrix, w: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    """(S, f, e + ncoords)：对 w 的偏导为 φ(x)，对 x 的偏导为 Σ_j w_j ∂φ_ij"""
    values = m.evaluate(x)
    grads = m.gradients(x)
    dx = np.einsum("sfek,se->sfk", grads, w) % p
    return np.concatenate([values % p, dx], axis=2)


def _cofactor(values: np.ndarray, rows, cols, a: int, b: int, p: int) -> np.ndarray:
    sub_rows = [r for idx, r in enumerate(rows) if idx != a]
    sub_cols = [c for idx, c in enumerate(cols) if idx != b]
    sub = values[:, sub_rows][:, :, sub_cols]
    sign = -1 if (a + b) % 2 else 1
    return sign * batch_det(sub, p) % p


def _d1_jacobian(m: MorphismMatrix, x: np.ndarray, p: int) -> np.ndarray:
    """(S, #子式, ncoords)：每个 f×f 子式的梯度 = Σ 余子式 · ∇φ"""
    values = m.evaluate(x)
    grads = m.gradients(x)
    rows = list(range(m.f))
    out = []
    for cols in combinations(range(m.e), m.f):
        grad = np.zeros((x.shape[0], m.ncoords), dtype=np.int64)
        for a, r in enumerate(rows):
            for b, c in enumerate(cols):
                cof = _cofactor(values, rows, cols, a, b, p)
                grad = (grad + cof[:, None] * grads[:, r, c, :]) % p
        out.append(grad)
    return np.stack(out, axis=1)


def jacobian_sample(m: MorphismMatrix, p: Optional[int] = None, which: Locus = "Y",
                    trials: int = 100, seed: int = 0,
                    budget: int = 2_000_000) -> JacobianReport:
    """在轨迹的 F_p 点中随机抽取至多 trials 个，检查 Jacobian 秩

    Args:
        which: "Y" 或 "D1"
        trials: 抽样个数，至少为 1

    Returns:
        JacobianReport: 轨迹为空时 sampled = 0 并附注说明
    """
    p = p or m.p
    if trials < 1:
        raise OracleInputError(f"trials must be >= 1, got {trials}")
    if which not in ("Y", "D1"):
        raise OracleInputError(f"Unknown locus '{which}'")

    if which == "Y":
        w, x = _y_points(m, p, budget)
        size = len(x)
        expected = m.f
    else:
        x = _d1_points(m, p, budget)
        w = None
        size = len(x)
        expected = m.e - m.f + 1

    if size == 0:
        return JacobianReport(
            p=p, which=which, locus_size=0, sampled=0, smooth_hits=0, singular_hits=0,
            seed=seed, note="locus has no F_p-points",
        )

    rng = np.random.default_rng(seed)
    picks = rng.choice(size, size=min(trials, size), replace=False)
    if which == "Y":
        jac = _y_jacobian(m, w[picks], x[picks], p)
    else:
        jac = _d1_jacobian(m, x[picks], p)
    ranks = batch_rank(jac, p)
    smooth = int((ranks == expected).sum())
    singular = len(picks) - smooth
    if singular:
        logger.debug("jacobian_singular_points", which=which, p=p, singular=singular)
    return JacobianReport(
        p=p, which=which, locus_size=size, sampled=len(picks),
        smooth_hits=smooth, singular_hits=singular, seed=seed,
    )

