"""
塔结构空间

空间由以下步骤依次构造：
    Base(射影空间之积) -> ProjBundle(分裂丛射影化) -> ZeroLocus(分裂丛一般截面的零点集)
每一步更新 Chow 环表示、切丛 K 类（虚拟）、法丛 K 类与维数。
零点集上的积分 = 外围空间上乘以 c_top(N) 后积分；光滑性与横截性默认成立（由有限域抽样辅助验证）。
"""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from ..chowcore import ChowClass, ChowPresentation, KClass, integrate, top_chern
from ..utils.errors import InvalidDegreeError, TowerShapeError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class SplitBundle:
    """线丛直和，每个直和项为当前生成元上的次数向量"""
    summands: Tuple[Vector, ...]

    @classmethod
    def of(cls, *summands: Sequence[int]) -> "SplitBundle":
        return cls(tuple(tuple(int(x) for x in vec) for vec in summands))

    @classmethod
    def trivial(cls, rank: int, ngens: int) -> "SplitBundle":
        return cls(tuple((0,) * ngens for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def ngens(self) -> int:
        return len(self.summands[0]) if self.summands else 0

    def det(self) -> Vector:
        if not self.summands:
            return ()
        return tuple(sum(col) for col in zip(*self.summands))

    def dual(self) -> "SplitBundle":
        return SplitBundle(tuple(tuple(-x for x in vec) for vec in self.summands))

    def twist(self, vec: Sequence[int]) -> "SplitBundle":
        return SplitBundle(tuple(tuple(a + b for a, b in zip(s, vec)) for s in self.summands))

    def pullback(self, ngens: int) -> "SplitBundle":
        """补零到 ngens 个生成元（沿塔投影拉回）"""
        out = []
        for vec in self.summands:
            if len(vec) > ngens:
                raise InvalidDegreeError(
                    f"Summand {vec} has more entries than the target's {ngens} generators"
                )
            out.append(vec + (0,) * (ngens - len(vec)))
        return SplitBundle(tuple(out))

    def is_trivial(self) -> bool:
        return all(not any(vec) for vec in self.summands)

    def as_kclass(self, pres: ChowPresentation) -> KClass:
        return KClass.from_summands(pres, self.pullback(pres.ngens).summands)


@dataclass(frozen=True)
class BaseStep:
    dims: Tuple[int, ...]


@dataclass(frozen=True)
class ProjBundleStep:
    bundle: SplitBundle
    generator: str


@dataclass(frozen=True)
class ZeroLocusStep:
    bundle: SplitBundle


Step = Union[BaseStep, ProjBundleStep, ZeroLocusStep]


@dataclass(frozen=True)
class Space:
    """塔结构空间

    Attributes:
        steps: 构造步骤
        presentation: 外围塔（不含零点集条件）的 Chow 环表示
        tangent: 虚拟切丛 K 类 T_amb - N
        normal: 零点集步骤累积的法丛 K 类 N
        dim: 维数
    """
    steps: Tuple[Step, ...]
    presentation: ChowPresentation
    tangent: KClass
    normal: KClass
    dim: int
    name: str = ""

    @property
    def ngens(self) -> int:
        return self.presentation.ngens

    @property
    def ambient_dim(self) -> int:
        return self.presentation.total_dimension

    @property
    def canonical(self) -> Vector:
        """典范类的次数向量 = -(切丛行列式)"""
        return tuple(-x for x in self.tangent.det())

    @property
    def anticanonical(self) -> Vector:
        return self.tangent.det()

    def named(self, name: str) -> "Space":
        return Space(self.steps, self.presentation, self.tangent, self.normal, self.dim, name)

    def vector(self, L: Union[int, Sequence[int]]) -> Vector:
        """把线丛参数规范为完整次数向量：0 表示平凡丛，短向量按底空间次数补零"""
        if isinstance(L, int):
            if L != 0:
                raise InvalidDegreeError("A scalar line bundle argument must be 0")
            return (0,) * self.ngens
        vec = tuple(int(x) for x in L)
        if len(vec) > self.ngens:
            raise InvalidDegreeError(
                f"Degree vector {vec} has {len(vec)} entries, expected at most {self.ngens}"
            )
        return vec + (0,) * (self.ngens - len(vec))

    def line(self, L: Union[int, Sequence[int]]) -> ChowClass:
        return self.presentation.linear(self.vector(L))

    def kline(self, L: Union[int, Sequence[int]]) -> KClass:
        return KClass.line(self.presentation, self.vector(L))

    def fundamental_class(self) -> ChowClass:
        """空间在外围塔中的类 c_top(N)"""
        if not self.normal.terms:
            return self.presentation.one()
        return top_chern(self.normal)

    def integrate(self, c: ChowClass):
        """在空间上积分：外围积分 ∫ c·c_top(N)"""
        return integrate(c * self.fundamental_class())

    @property
    def proj_steps(self) -> Tuple[ProjBundleStep, ...]:
        return tuple(s for s in self.steps if isinstance(s, ProjBundleStep))

    @property
    def zero_steps(self) -> Tuple[ZeroLocusStep, ...]:
        return tuple(s for s in self.steps if isinstance(s, ZeroLocusStep))

    def split_ambient(self) -> Tuple["Space", Tuple[Vector, ...]]:
        """拆分为外围塔与法丛直和项；要求全部零点集步骤位于塔的末尾"""
        steps = list(self.steps)
        tail = []
        while steps and isinstance(steps[-1], ZeroLocusStep):
            tail.insert(0, steps.pop())
        if any(isinstance(s, ZeroLocusStep) for s in steps):
            raise TowerShapeError("Zero-locus steps must come after all projectivizations")
        ambient = _replay(steps)
        normal = tuple(
            vec for step in tail for vec in step.bundle.pullback(ambient.ngens).summands
        )
        return ambient, normal

    def describe(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "ambient_dim": self.ambient_dim,
            "generators": list(self.presentation.names),
            "canonical": list(self.canonical),
            "steps": [type(s).__name__ for s in self.steps],
        }


def build_base(dims: Sequence[int]) -> Space:
    """射影空间之积 P^{n_1} × ... × P^{n_k}"""
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise TowerShapeError("build_base needs at least one factor")
    if any(d < 1 for d in dims):
        raise TowerShapeError(f"Projective space dimensions must be >= 1: {dims}")
    pres = ChowPresentation.for_base(dims)
    tangent = KClass.zero(pres)
    for i, n in enumerate(dims):
        unit = tuple(1 if j == i else 0 for j in range(len(dims)))
        # Euler 序列：T_{P^n} = (n+1)·O(1) - O
        tangent = tangent + KClass.line(pres, unit, n + 1) - KClass.trivial(pres)
    return Space(
        steps=(BaseStep(dims),),
        presentation=pres,
        tangent=tangent,
        normal=KClass.zero(pres),
        dim=sum(dims),
    )


def add_proj_bundle(s: Space, b: SplitBundle, generator: str = "") -> Space:
    """分裂丛射影化 P(b)（纤维中的直线），引入相对超平面类 ξ"""
    if b.rank == 0:
        raise TowerShapeError("Cannot projectivize a rank-0 bundle")
    b = b.pullback(s.ngens)
    pres = s.presentation.extend(b.summands, generator)
    xi = tuple(1 if i == pres.ngens - 1 else 0 for i in range(pres.ngens))
    lifted = b.pullback(pres.ngens)

    # 相对 Euler 序列：T_rel = p*b ⊗ O(1) - O
    relative = KClass.from_summands(pres, lifted.twist(xi).summands) - KClass.trivial(pres)
    tangent = s.tangent.pullback(pres) + relative

    return Space(
        steps=s.steps + (ProjBundleStep(b, pres.names[-1]),),
        presentation=pres,
        tangent=tangent,
        normal=s.normal.pullback(pres),
        dim=s.dim + b.rank - 1,
    )


def cut_zero_locus(s: Space, b: SplitBundle) -> Space:
    """分裂丛一般截面的零点集"""
    if b.rank == 0:
        return s
    if b.rank > s.dim:
        raise TowerShapeError(f"Bundle rank {b.rank} exceeds space dimension {s.dim}")
    b = b.pullback(s.ngens)
    if any(x < 0 for vec in b.summands for x in vec):
        logger.warning("zero_locus_negative_degree", summands=[list(v) for v in b.summands])
    bundle_class = b.as_kclass(s.presentation)
    return Space(
        steps=s.steps + (ZeroLocusStep(b),),
        presentation=s.presentation,
        tangent=s.tangent - bundle_class,
        normal=s.normal + bundle_class,
        dim=s.dim - b.rank,
        name=s.name,
    )


def _replay(steps: Sequence[Step]) -> Space:
    space = None
    for step in steps:
        if isinstance(step, BaseStep):
            space = build_base(step.dims)
        elif isinstance(step, ProjBundleStep):
            space = add_proj_bundle(space, step.bundle, step.generator)
        else:
            space = cut_zero_locus(space, step.bundle)
    if space is None:
        raise TowerShapeError("Empty tower")
    return space
