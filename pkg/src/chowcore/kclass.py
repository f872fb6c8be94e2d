"""
由线丛生成的 K 理论类

KClass 是线丛符号（生成元上的次数向量）的整系数形式组合，允许负系数（虚拟类）。
λ 运算按 λ_t([L]) = 1 + t[L] 与 λ_t(x - y) = λ_t(x)·λ_t(y)^{-1} 展开，
σ 运算按 σ_t([L]) = (1 - t[L])^{-1} 展开。
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..utils.errors import InvalidDegreeError, RingMismatchError
from .presentation import ChowPresentation, Vector


def _general_binomial(m: int, k: int) -> int:
    """广义二项式系数 C(m, k)，m 可以为负"""
    if m >= 0:
        return comb(m, k)
    return (-1) ** k * comb(-m + k - 1, k)


@dataclass(frozen=True)
class KClass:
    """K 理论类：线丛符号 -> 重数"""
    presentation: ChowPresentation
    terms: Tuple[Tuple[Vector, int], ...] = ()

    # ==================== 构造 ====================

    @classmethod
    def from_dict(cls, pres: ChowPresentation, data: Mapping[Sequence[int], int]) -> "KClass":
        cleaned: Dict[Vector, int] = {}
        for vec, mult in data.items():
            vec = tuple(int(x) for x in vec)
            if len(vec) != pres.ngens:
                raise InvalidDegreeError(
                    f"Line bundle symbol {vec} has {len(vec)} entries, expected {pres.ngens}"
                )
            cleaned[vec] = cleaned.get(vec, 0) + int(mult)
        return cls(pres, tuple(sorted((v, m) for v, m in cleaned.items() if m)))

    @classmethod
    def line(cls, pres: ChowPresentation, vec: Sequence[int], mult: int = 1) -> "KClass":
        return cls.from_dict(pres, {tuple(vec): mult})

    @classmethod
    def trivial(cls, pres: ChowPresentation, rank: int = 1) -> "KClass":
        return cls.from_dict(pres, {(0,) * pres.ngens: rank})

    @classmethod
    def zero(cls, pres: ChowPresentation) -> "KClass":
        return cls(pres, ())

    @classmethod
    def from_summands(cls, pres: ChowPresentation, summands: Iterable[Sequence[int]]) -> "KClass":
        data: Dict[Vector, int] = {}
        for vec in summands:
            key = tuple(vec)
            data[key] = data.get(key, 0) + 1
        return cls.from_dict(pres, data)

    # ==================== 基本性质 ====================

    def as_dict(self) -> Dict[Vector, int]:
        return dict(self.terms)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.terms)

    def det(self) -> Vector:
        """行列式线丛的次数向量 Σ m·v"""
        total = [0] * self.presentation.ngens
        for vec, mult in self.terms:
            for i, x in enumerate(vec):
                total[i] += mult * x
        return tuple(total)

    def is_effective(self) -> bool:
        """是否为真实（非虚拟）的线丛直和"""
        return all(m > 0 for _, m in self.terms)

    def summands(self) -> List[Vector]:
        """按重数展开的直和项列表（仅对非虚拟类有意义）"""
        if not self.is_effective():
            raise InvalidDegreeError("A virtual class has no list of summands")
        return [vec for vec, mult in self.terms for _ in range(mult)]

    # ==================== 运算 ====================

    def _check(self, other: "KClass") -> None:
        if self.presentation != other.presentation:
            raise RingMismatchError("K-classes live in different presentations")

    def __add__(self, other: "KClass") -> "KClass":
        self._check(other)
        data = self.as_dict()
        for vec, mult in other.terms:
            data[vec] = data.get(vec, 0) + mult
        return KClass.from_dict(self.presentation, data)

    def __neg__(self) -> "KClass":
        return KClass(self.presentation, tuple((v, -m) for v, m in self.terms))

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def __mul__(self, other) -> "KClass":
        if isinstance(other, KClass):
            return k_tensor(self, other)
        return KClass.from_dict(self.presentation, {v: m * int(other) for v, m in self.terms})

    __rmul__ = __mul__

    def dual(self) -> "KClass":
        return k_dual(self)

    def twist(self, vec: Sequence[int]) -> "KClass":
        """与线丛 O(vec) 作张量积"""
        return k_tensor(self, KClass.line(self.presentation, vec))

    def pullback(self, target: ChowPresentation) -> "KClass":
        """沿塔投影拉回：次数向量补零"""
        if not self.presentation.embeds_into(target):
            raise RingMismatchError("Target presentation does not extend this one")
        pad = (0,) * (target.ngens - self.presentation.ngens)
        return KClass.from_dict(target, {v + pad: m for v, m in self.terms})

    def power(self, k: int) -> "KClass":
        """单个线丛的 k 次张量幂"""
        if len(self.terms) != 1 or self.terms[0][1] != 1:
            raise InvalidDegreeError("power() is defined for a single line bundle")
        vec = self.terms[0][0]
        return KClass.line(self.presentation, tuple(k * x for x in vec))

    def exterior_power(self, p: int) -> "KClass":
        return exterior_power(self, p)

    def __repr__(self) -> str:
        parts = [f"{m}*O{vec}" for vec, m in self.terms]
        return "KClass(" + (" + ".join(parts) if parts else "0") + ")"


def k_tensor(a: KClass, b: KClass) -> KClass:
    """张量积：符号的次数向量相加"""
    a._check(b)
    data: Dict[Vector, int] = {}
    for va, ma in a.terms:
        for vb, mb in b.terms:
            vec = tuple(x + y for x, y in zip(va, vb))
            data[vec] = data.get(vec, 0) + ma * mb
    return KClass.from_dict(a.presentation, data)


def k_dual(a: KClass) -> KClass:
    """对偶：次数向量取负"""
    return KClass.from_dict(a.presentation, {tuple(-x for x in v): m for v, m in a.terms})


def _series_product(left: List[KClass], right: List[KClass], order: int) -> List[KClass]:
    pres = left[0].presentation
    out = [KClass.zero(pres) for _ in range(order + 1)]
    for i, x in enumerate(left):
        if not x.terms:
            continue
        for j, y in enumerate(right[: order + 1 - i]):
            if y.terms:
                out[i + j] = out[i + j] + k_tensor(x, y)
    return out


def _operation_series(a: KClass, order: int, sign: int) -> List[KClass]:
    """λ_t (sign=+1) 或 σ_t (sign=-1) 的截断级数

    每个符号 L（重数 m）贡献 (1 + sign·t·L)^{sign·m}。
    """
    pres = a.presentation
    series = [KClass.trivial(pres)] + [KClass.zero(pres) for _ in range(order)]
    for vec, mult in a.terms:
        exponent = sign * mult
        factor = [
            KClass.line(pres, tuple(k * x for x in vec), _general_binomial(exponent, k) * sign ** k)
            for k in range(order + 1)
        ]
        series = _series_product(series, factor, order)
    return series


def lambda_series(a: KClass, order: int) -> List[KClass]:
    """λ_t(a) 的系数 [λ^0, ..., λ^order]"""
    return _operation_series(a, order, +1)


def exterior_power(a: KClass, p: int) -> KClass:
    """λ^p(a)"""
    if p < 0:
        raise InvalidDegreeError(f"Exterior power index must be >= 0, got {p}")
    return lambda_series(a, p)[p]


def symmetric_power(a: KClass, p: int) -> KClass:
    """σ^p(a) = Sym^p(a)"""
    if p < 0:
        raise InvalidDegreeError(f"Symmetric power index must be >= 0, got {p}")
    return _operation_series(a, p, -1)[p]
