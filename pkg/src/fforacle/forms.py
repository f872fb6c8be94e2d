"""
F_p 上的多重齐次形式与形式矩阵

坐标按因子依次排列：P^{n_1} 的 n_1+1 个坐标，然后 P^{n_2} 的坐标，依此类推。
单项式用展平的指数元组表示，每个因子块内指数之和等于该因子的次数。
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from ..utils.errors import OracleInputError

Exponents = Tuple[int, ...]


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def multidegree_monomials(dims: Sequence[int], degree: Sequence[int]) -> List[Exponents]:
    """给定多重次数的全部单项式"""
    blocks = [list(_compositions(d, n + 1)) for n, d in zip(dims, degree)]
    return [sum(choice, ()) for choice in product(*blocks)]


def _block_slices(dims: Sequence[int]) -> List[slice]:
    slices, start = [], 0
    for n in dims:
        slices.append(slice(start, start + n + 1))
        start += n + 1
    return slices


@dataclass(frozen=True)
class MultiForm:
    """多重齐次形式

    Attributes:
        dims: 因子维数
        degree: 多重次数（零形式允许出现负分量）
        coeffs: (指数, 系数) 对，系数在 [1, p) 中
        p: 素数
    """
    dims: Tuple[int, ...]
    degree: Tuple[int, ...]
    coeffs: Tuple[Tuple[Exponents, int], ...]
    p: int

    def __post_init__(self):
        ncoords = sum(n + 1 for n in self.dims)
        slices = _block_slices(self.dims)
        for exps, coeff in self.coeffs:
            if len(exps) != ncoords:
                raise OracleInputError(f"Monomial {exps} needs {ncoords} exponents")
            if not 0 < coeff < self.p:
                raise OracleInputError(f"Coefficient {coeff} is not a nonzero element of F_{self.p}")
            for block, d in zip(slices, self.degree):
                if sum(exps[block]) != d:
                    raise OracleInputError(
                        f"Monomial {exps} does not have multidegree {self.degree}"
                    )

    @classmethod
    def from_dict(cls, dims: Sequence[int], degree: Sequence[int],
                  data: Dict[Exponents, int], p: int) -> "MultiForm":
        cleaned = tuple(sorted(
            (tuple(e), int(c) % p) for e, c in data.items() if int(c) % p
        ))
        return cls(tuple(dims), tuple(degree), cleaned, p)

    @property
    def ncoords(self) -> int:
        return sum(n + 1 for n in self.dims)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """在点集 (N, ncoords) 上取值，结果模 p"""
        points = np.asarray(points, dtype=np.int64)
        out = np.zeros(points.shape[0], dtype=np.int64)
        for exps, coeff in self.coeffs:
            term = np.full(points.shape[0], coeff, dtype=np.int64)
            for k, e in enumerate(exps):
                if e:
                    term = term * np.power(points[:, k], e) % self.p
            out = (out + term) % self.p
        return out

    def derivative(self, k: int) -> "MultiForm":
        """对第 k 个坐标求偏导"""
        slices = _block_slices(self.dims)
        block = next(i for i, s in enumerate(slices) if s.start <= k < s.stop)
        degree = tuple(d - 1 if i == block else d for i, d in enumerate(self.degree))
        data: Dict[Exponents, int] = {}
        for exps, coeff in self.coeffs:
            if exps[k]:
                lowered = exps[:k] + (exps[k] - 1,) + exps[k + 1:]
                data[lowered] = (data.get(lowered, 0) + coeff * exps[k]) % self.p
        return MultiForm.from_dict(self.dims, degree, data, self.p)


@dataclass(frozen=True)
class MorphismMatrix:
    """f×e 形式矩阵 φ: O^e → ⊕ O(d_i)，第 i 行的次数为 row_degrees[i]"""
    entries: Tuple[Tuple[MultiForm, ...], ...]
    row_degrees: Tuple[Tuple[int, ...], ...]
    dims: Tuple[int, ...]
    p: int

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise OracleInputError("A morphism matrix needs at least one row and one column")
        width = len(self.entries[0])
        if len(self.entries) != len(self.row_degrees):
            raise OracleInputError("One degree per row is required")
        for i, row in enumerate(self.entries):
            if len(row) != width:
                raise OracleInputError("Rows of a morphism matrix must have equal length")
            for form in row:
                if form.p != self.p or form.dims != self.dims:
                    raise OracleInputError("All entries must share the field and the base")
                if not form.is_zero() and form.degree != self.row_degrees[i]:
                    raise OracleInputError(
                        f"Entry in row {i} has degree {form.degree}, "
                        f"expected {self.row_degrees[i]}"
                    )

    @property
    def f(self) -> int:
        return len(self.entries)

    @property
    def e(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.f, self.e

    @property
    def ncoords(self) -> int:
        return sum(n + 1 for n in self.dims)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """逐点求值，形状 (N, f, e)"""
        points = np.asarray(points, dtype=np.int64)
        out = np.zeros((points.shape[0], self.f, self.e), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, form in enumerate(row):
                out[:, i, j] = form.evaluate(points)
        return out

    def gradients(self, points: np.ndarray) -> np.ndarray:
        """各元素对 X 坐标的偏导，形状 (N, f, e, ncoords)"""
        points = np.asarray(points, dtype=np.int64)
        out = np.zeros((points.shape[0], self.f, self.e, self.ncoords), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, form in enumerate(row):
                for k in range(self.ncoords):
                    out[:, i, j, k] = form.derivative(k).evaluate(points)
        return out


def zero_form(dims: Sequence[int], degree: Sequence[int], p: int) -> MultiForm:
    return MultiForm(tuple(dims), tuple(degree), (), p)


def random_form(dims: Sequence[int], degree: Sequence[int], p: int,
                rng: np.random.Generator) -> MultiForm:
    """系数在 F_p 上均匀分布的随机形式"""
    monomials = multidegree_monomials(dims, degree)
    values = rng.integers(0, p, size=len(monomials))
    return MultiForm.from_dict(dims, degree, dict(zip(monomials, values.tolist())), p)


def random_instance(p: int, seed, dims: Sequence[int] = (2, 2),
                    row_degrees: Sequence[Sequence[int]] = ((2, 0), (0, 2)),
                    cols: int = 3) -> MorphismMatrix:
    """随机的 φ: O^cols → ⊕ O(row_degrees)，相同种子给出相同实例"""
    if p < 2:
        raise OracleInputError(f"p must be a prime >= 2, got {p}")
    rng = np.random.default_rng(seed)
    dims = tuple(dims)
    rows = tuple(
        tuple(random_form(dims, deg, p, rng) for _ in range(cols)) for deg in row_degrees
    )
    return MorphismMatrix(rows, tuple(tuple(d) for d in row_degrees), dims, p)


def constant_matrix(values: Sequence[Sequence[int]], dims: Sequence[int],
                    row_degrees: Sequence[Sequence[int]], p: int) -> MorphismMatrix:
    """每个元素为 c·(各因子首坐标的对应次幂) 的矩阵，用于构造退化的对照实例"""
    dims = tuple(dims)
    rows = []
    for i, row in enumerate(values):
        deg = tuple(row_degrees[i])
        exps: List[int] = []
        for n, d in zip(dims, deg):
            exps.extend([d] + [0] * n)
        rows.append(tuple(
            MultiForm.from_dict(dims, deg, {tuple(exps): v}, p) for v in row
        ))
    return MorphismMatrix(tuple(rows), tuple(tuple(d) for d in row_degrees), dims, p)
