"""
批量小矩阵的模 p 行列式与秩

矩阵都很小（不超过 4×4 左右），直接按 Leibniz 展开并在批维度上向量化。
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Tuple

import numpy as np


@lru_cache(maxsize=None)
def _signed_permutations(k: int) -> List[Tuple[Tuple[int, ...], int]]:
    out = []
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return out


def batch_det(mats: np.ndarray, p: int) -> np.ndarray:
    """mats 形状 (N, k, k)，返回 (N,) 的模 p 行列式"""
    n, k = mats.shape[0], mats.shape[1]
    if k == 0:
        return np.ones(n, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    for perm, sign in _signed_permutations(k):
        term = np.ones(n, dtype=np.int64)
        for i, j in enumerate(perm):
            term = term * mats[:, i, j] % p
        out = (out + sign * term) % p
    return out


def minors(mats: np.ndarray, k: int, p: int) -> np.ndarray:
    """全部 k×k 子式，形状 (N, C(rows,k)·C(cols,k))"""
    rows, cols = mats.shape[1], mats.shape[2]
    values = [
        batch_det(mats[:, list(r)][:, :, list(c)], p)
        for r in combinations(range(rows), k)
        for c in combinations(range(cols), k)
    ]
    return np.stack(values, axis=1)


def batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """mats 形状 (N, r, c)，返回 (N,) 的秩"""
    n = mats.shape[0]
    ranks = np.zeros(n, dtype=np.int64)
    mats = np.asarray(mats, dtype=np.int64) % p
    for k in range(1, min(mats.shape[1], mats.shape[2]) + 1):
        has_minor = np.any(minors(mats, k, p) != 0, axis=1)
        if not has_minor.any():
            break
        ranks[has_minor] = k
    return ranks
