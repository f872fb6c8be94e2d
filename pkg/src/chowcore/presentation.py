"""
多重分次商 Chow 环

环由塔结构给出：底空间为射影空间之积（每个超平面类 h_i 满足 h_i^{n_i+1} = 0），
每一步分裂丛射影化引入相对超平面类 ξ_j，满足 Grothendieck 关系
    Π_s (ξ_j + ℓ_s) = 0,
其中 ℓ_s 是丛的各个线丛直和项的第一陈类。P(B) 参数化 B 纤维中的直线，
O(-1) ⊂ p*B 为重言子丛，ξ = c₁(O(1))，从而 ∫ ξ^{r-1}·(底空间点类) = 1。

系数使用 sympy 的 QQ 域（精确有理数），多项式使用 sympy 稀疏 PolyElement。
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, ring

from ..utils.errors import InvalidDegreeError, RingMismatchError, TowerShapeError

Monomial = Tuple[int, ...]
Vector = Tuple[int, ...]
Scalar = Union[int, Rational]


def to_qq(value) -> "QQ.dtype":
    """把 int / sympy Rational / QQ 元素统一转换为 QQ 元素"""
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return QQ.from_sympy(value)
    return QQ.convert(value)


@dataclass(frozen=True)
class ChowPresentation:
    """Chow 环表示

    Attributes:
        names: 生成元名称，先是底空间的 h_1..h_k，再是各射影化步骤的 ξ_j
        base_dims: 底空间各射影空间因子的维数 n_i
        bundles: 每个射影化步骤的分裂丛，直和项为定义在此前全部生成元上的次数向量
    """
    names: Tuple[str, ...]
    base_dims: Tuple[int, ...]
    bundles: Tuple[Tuple[Vector, ...], ...] = ()

    def __post_init__(self):
        k = len(self.base_dims)
        if not self.base_dims:
            raise TowerShapeError("A presentation needs at least one base factor")
        if any(n < 1 for n in self.base_dims):
            raise TowerShapeError(f"Base dimensions must be >= 1: {self.base_dims}")
        if len(self.names) != k + len(self.bundles):
            raise TowerShapeError("One name per generator is required")
        if len(set(self.names)) != len(self.names):
            raise TowerShapeError(f"Duplicate generator names: {self.names}")
        for j, summands in enumerate(self.bundles):
            if not summands:
                raise TowerShapeError("Cannot projectivize a rank-0 bundle")
            for vec in summands:
                if len(vec) != k + j:
                    raise InvalidDegreeError(
                        f"Bundle {j} summand {vec} has {len(vec)} entries, expected {k + j}"
                    )

    # ==================== 构造 ====================

    @classmethod
    def for_base(cls, dims: Sequence[int]) -> "ChowPresentation":
        """射影空间之积 P^{n_1} × ... × P^{n_k}"""
        dims = tuple(int(d) for d in dims)
        names = tuple(f"h{i + 1}" for i in range(len(dims)))
        return cls(names=names, base_dims=dims)

    @classmethod
    def for_tower(cls, base_dims: Sequence[int],
                  bundles: Sequence[Sequence[Sequence[int]]]) -> "ChowPresentation":
        """底空间加上若干分裂丛射影化步骤"""
        pres = cls.for_base(base_dims)
        for summands in bundles:
            pres = pres.extend(summands)
        return pres

    def extend(self, summands: Sequence[Sequence[int]],
               name: str = "") -> "ChowPresentation":
        """射影化一个分裂丛，返回多一个生成元 ξ 的新表示"""
        if not name:
            count = len(self.bundles) + 1
            name = "xi" if count == 1 else f"xi{count}"
        vecs = tuple(tuple(int(x) for x in vec) for vec in summands)
        return ChowPresentation(
            names=self.names + (name,),
            base_dims=self.base_dims,
            bundles=self.bundles + (vecs,),
        )

    # ==================== 派生数据 ====================

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def nbase(self) -> int:
        return len(self.base_dims)

    @cached_property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.bundles)

    @cached_property
    def total_dimension(self) -> int:
        return sum(self.base_dims) + sum(r - 1 for r in self.ranks)

    @cached_property
    def fundamental_monomial(self) -> Monomial:
        return self.base_dims + tuple(r - 1 for r in self.ranks)

    @cached_property
    def _ring_and_gens(self):
        poly_ring, *gens = ring(list(self.names), QQ, lex)
        return poly_ring, tuple(gens)

    @property
    def ring(self):
        return self._ring_and_gens[0]

    @property
    def gens(self) -> Tuple[PolyElement, ...]:
        return self._ring_and_gens[1]

    @cached_property
    def relation_tails(self) -> Tuple[PolyElement, ...]:
        """每个 ξ_j 的归约规则 ξ_j^{r_j} -> tail_j"""
        tails = []
        k = self.nbase
        for j, summands in enumerate(self.bundles):
            xi = self.gens[k + j]
            product = self.ring.one
            for vec in summands:
                product *= xi + self._linear_poly(vec)
            tails.append(xi ** len(summands) - product)
        return tuple(tails)

    def _linear_poly(self, vec: Sequence[int]) -> PolyElement:
        poly = self.ring.zero
        for coeff, gen in zip(vec, self.gens):
            if coeff:
                poly += gen * coeff
        return poly

    # ==================== 正规形 ====================

    def reduce(self, poly: Union[PolyElement, Mapping[Monomial, object]]) -> PolyElement:
        """计算多项式模关系理想的正规形（同时截断超过总维数的项）"""
        acc: Dict[Monomial, "QQ.dtype"] = {}
        for monom, coeff in poly.items():
            if len(monom) != self.ngens:
                raise InvalidDegreeError(
                    f"Monomial {monom} has {len(monom)} exponents, expected {self.ngens}"
                )
            coeff = to_qq(coeff)
            if not coeff:
                continue
            for nf_monom, nf_coeff in _monomial_normal_form(self, tuple(monom)):
                acc[nf_monom] = acc.get(nf_monom, QQ.zero) + coeff * nf_coeff
        return self.ring.from_dict({m: c for m, c in acc.items() if c})

    def is_normal_monomial(self, monom: Monomial) -> bool:
        if sum(monom) > self.total_dimension:
            return False
        if any(e > n for e, n in zip(monom, self.base_dims)):
            return False
        return all(monom[self.nbase + j] < r for j, r in enumerate(self.ranks))

    # ==================== 元素 ====================

    def element(self, data: Union[PolyElement, Mapping[Monomial, object], int] = 0) -> "ChowClass":
        """由多项式、字典或标量构造（已约化的）Chow 类"""
        if isinstance(data, PolyElement):
            if data.ring != self.ring:
                raise RingMismatchError("Polynomial belongs to a different ring")
            return ChowClass(self, self.reduce(data))
        if isinstance(data, Mapping):
            return ChowClass(self, self.reduce(data))
        return ChowClass(self, self.reduce({(0,) * self.ngens: data}))

    def zero(self) -> "ChowClass":
        return ChowClass(self, self.ring.zero)

    def one(self) -> "ChowClass":
        return self.element(1)

    def gen(self, key: Union[int, str]) -> "ChowClass":
        idx = self.names.index(key) if isinstance(key, str) else int(key)
        return self.element(self.gens[idx])

    def linear(self, vec: Sequence[int]) -> "ChowClass":
        """次数向量对应的除子类 Σ d_i g_i"""
        if len(vec) != self.ngens:
            raise InvalidDegreeError(
                f"Degree vector {tuple(vec)} has {len(vec)} entries, expected {self.ngens}"
            )
        return self.element(self._linear_poly(vec))

    def point_class(self) -> "ChowClass":
        """基本单项式对应的点类"""
        return self.element({self.fundamental_monomial: 1})

    def evaluate_series(self, coeffs: Sequence["QQ.dtype"], x: "ChowClass") -> "ChowClass":
        """计算 Σ coeffs[k]·x^k，x 为正次数类时截断自然发生"""
        if x.presentation != self:
            raise RingMismatchError("Series argument lives in another presentation")
        n = min(len(coeffs) - 1, self.total_dimension)
        result = self.element(to_qq(coeffs[n]))
        for k in range(n - 1, -1, -1):
            result = result * x + self.element(to_qq(coeffs[k]))
        return result

    def embeds_into(self, other: "ChowPresentation") -> bool:
        """self 是否为 other 的前缀塔"""
        n = self.ngens
        return (
            other.base_dims == self.base_dims
            and other.names[:n] == self.names
            and other.bundles[: len(self.bundles)] == self.bundles
        )

    def lift(self, c: "ChowClass", target: "ChowPresentation") -> "ChowClass":
        """把前缀塔上的类拉回到更高的塔上"""
        if not self.embeds_into(target):
            raise RingMismatchError("Target presentation does not extend this one")
        pad = (0,) * (target.ngens - self.ngens)
        return target.element({m + pad: coeff for m, coeff in c.poly.items()})

    def __repr__(self) -> str:
        return (
            f"ChowPresentation(names={self.names}, base_dims={self.base_dims}, "
            f"bundles={self.bundles})"
        )


@dataclass(frozen=True, eq=False)
class ChowClass:
    """Chow 环中的元素，poly 始终为正规形"""
    presentation: ChowPresentation
    poly: PolyElement

    def _check(self, other: "ChowClass") -> None:
        if self.presentation != other.presentation:
            raise RingMismatchError("Chow classes live in different presentations")

    def _coerce(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            self._check(other)
            return other
        return self.presentation.element(to_qq(other))

    def __add__(self, other) -> "ChowClass":
        other = self._coerce(other)
        return ChowClass(self.presentation, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other) -> "ChowClass":
        other = self._coerce(other)
        return ChowClass(self.presentation, self.poly - other.poly)

    def __rsub__(self, other) -> "ChowClass":
        return self._coerce(other) - self

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.presentation, -self.poly)

    def __mul__(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            self._check(other)
            return ChowClass(self.presentation, self.presentation.reduce(self.poly * other.poly))
        return ChowClass(self.presentation, self.poly * to_qq(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ChowClass":
        if exponent < 0:
            raise ValueError("Negative powers are not defined in a Chow ring")
        result = self.presentation.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, ChowClass):
            return self.presentation == other.presentation and self.poly == other.poly
        if isinstance(other, (int, Rational)):
            return self == self.presentation.element(to_qq(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.presentation, tuple(sorted(self.poly.items()))))

    @property
    def terms(self) -> Dict[Monomial, Rational]:
        return {m: QQ.to_sympy(c) for m, c in self.poly.items()}

    def coefficient(self, monom: Sequence[int]) -> Rational:
        return QQ.to_sympy(self.poly.get(tuple(monom), QQ.zero))

    def degree_part(self, degree: int) -> "ChowClass":
        """取出总次数为 degree 的齐次部分"""
        return ChowClass(
            self.presentation,
            self.presentation.ring.from_dict(
                {m: c for m, c in self.poly.items() if sum(m) == degree}
            ),
        )

    def is_zero(self) -> bool:
        return not self.poly

    def integrate(self) -> Rational:
        return integrate(self)

    def __repr__(self) -> str:
        return f"ChowClass({self.poly.as_expr()})"


@lru_cache(maxsize=None)
def _monomial_normal_form(pres: ChowPresentation,
                          monom: Monomial) -> Tuple[Tuple[Monomial, "QQ.dtype"], ...]:
    """单项式的正规形，按 (表示, 单项式) 缓存；结果为不可变的 (单项式, 系数) 元组"""
    if sum(monom) > pres.total_dimension or any(e > n for e, n in zip(monom, pres.base_dims)):
        return ()
    k = pres.nbase
    # 从最后一个 ξ 开始归约：只会抬高更靠前的生成元的指数
    for j in reversed(range(len(pres.bundles))):
        idx = k + j
        r = pres.ranks[j]
        if monom[idx] < r:
            continue
        rest = list(monom)
        rest[idx] -= r
        acc: Dict[Monomial, "QQ.dtype"] = {}
        for tail_monom, tail_coeff in pres.relation_tails[j].items():
            shifted = tuple(a + b for a, b in zip(rest, tail_monom))
            for nf_monom, nf_coeff in _monomial_normal_form(pres, shifted):
                acc[nf_monom] = acc.get(nf_monom, QQ.zero) + tail_coeff * nf_coeff
        return tuple((m, c) for m, c in acc.items() if c)
    return ((monom, QQ.one),)


def normal_form(c: ChowClass) -> ChowClass:
    """正规形（幂等）"""
    return ChowClass(c.presentation, c.presentation.reduce(c.poly))


def integrate(c: ChowClass) -> Rational:
    """度映射：正规形中基本单项式的系数"""
    pres = c.presentation
    return QQ.to_sympy(normal_form(c).poly.get(pres.fundamental_monomial, QQ.zero))


def monomials_up_to(pres: ChowPresentation, degree: int) -> List[Monomial]:
    """列出总次数不超过 degree 的正规单项式"""
    out: List[Monomial] = []

    def walk(prefix: Tuple[int, ...], remaining: int) -> None:
        idx = len(prefix)
        if idx == pres.ngens:
            out.append(prefix)
            return
        if idx < pres.nbase:
            bound = pres.base_dims[idx]
        else:
            bound = pres.ranks[idx - pres.nbase] - 1
        for e in range(min(bound, remaining) + 1):
            walk(prefix + (e,), remaining - e)

    walk((), min(degree, pres.total_dimension))
    return out


def sum_classes(classes: Iterable[ChowClass], pres: ChowPresentation) -> ChowClass:
    total = pres.zero()
    for c in classes:
        total = total + c
    return total
