"""
射影空间之积的 F_p 点枚举

每个因子的点取首个非零坐标为 1 的代表元；积空间的点按下标分块生成，块之间互不相交。
"""

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence, Tuple

import numpy as np
from sympy import isprime

from ..utils.errors import BudgetExceededError, OracleInputError


def projective_count(n: int, p: int) -> int:
    """|P^n(F_p)| = (p^{n+1} - 1) / (p - 1)，n < 0 时为 0"""
    if n < 0:
        return 0
    return (p ** (n + 1) - 1) // (p - 1)


def product_count(dims: Sequence[int], p: int) -> int:
    total = 1
    for n in dims:
        total *= projective_count(n, p)
    return total


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise OracleInputError(f"p must be prime, got {p}")


@lru_cache(maxsize=None)
def _projective_points(n: int, p: int) -> np.ndarray:
    rows = []
    for lead in range(n + 1):
        # 前 lead 个坐标为 0，第 lead 个为 1，其余任意
        for tail in product(range(p), repeat=n - lead):
            rows.append((0,) * lead + (1,) + tail)
    points = np.array(rows, dtype=np.int64).reshape(-1, n + 1)
    points.setflags(write=False)
    return points


def projective_points(n: int, p: int) -> np.ndarray:
    """P^n(F_p) 的全部规范化点，形状 (count, n+1)"""
    _check_prime(p)
    return _projective_points(n, p)


def check_budget(count: int, budget: int) -> None:
    if count > budget:
        raise BudgetExceededError(f"{count} points exceed the budget of {budget}")


def iter_point_chunks(dims: Sequence[int], p: int, chunk_size: int = 4096,
                      budget: int = 2_000_000) -> Iterator[np.ndarray]:
    """按块产出积空间的点，每块形状 (<= chunk_size, Σ(n_i+1))"""
    _check_prime(p)
    dims = tuple(dims)
    check_budget(product_count(dims, p), budget)
    factors = [projective_points(n, p) for n in dims]
    shape = tuple(len(f) for f in factors)
    total = int(np.prod(shape))
    for start in range(0, total, chunk_size):
        flat = np.arange(start, min(start + chunk_size, total))
        indices = np.unravel_index(flat, shape)
        yield np.concatenate([f[idx] for f, idx in zip(factors, indices)], axis=1)


def enumerate_points(dims: Sequence[int], p: int,
                     budget: int = 2_000_000) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """逐点产出 ((x_0..x_{n_1}), (y_0..), ...)"""
    dims = tuple(dims)
    for chunk in iter_point_chunks(dims, p, budget=budget):
        for row in chunk.tolist():
            point, start = [], 0
            for n in dims:
                point.append(tuple(row[start:start + n + 1]))
                start += n + 1
            yield tuple(point)
