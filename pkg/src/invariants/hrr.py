"""
Hirzebruch–Riemann–Roch 型不变量

所有积分都在外围塔上进行并乘以 c_top(N)；结果应为整数，出现分母即报错。
"""

from typing import Dict, Sequence, Tuple, Union

import numpy as np
from sympy import Rational
from sympy.ntheory.multinomial import multinomial_coefficients

from ..chowcore import chern_character, chern_class, lambda_series, todd
from ..chowcore.properties import PropertyReport, random_kclass
from ..tower import Space
from ..utils.errors import ConsistencyError, NonIntegralResultError, TowerShapeError
from ..utils.logging_config import get_logger
from .models import ChiYProfile

logger = get_logger(__name__)

LineArg = Union[int, Sequence[int]]


def as_integer(value: Rational, what: str) -> int:
    """断言积分结果为整数"""
    value = Rational(value)
    if value.q != 1:
        raise NonIntegralResultError(f"{what} = {value} is not an integer")
    return int(value.p)


def euler_number(s: Space) -> int:
    """拓扑 Euler 数 ∫ c_dim(T)"""
    value = s.integrate(chern_class(s.tangent, s.dim))
    return as_integer(value, f"euler({s.name or 'space'})")


def chi(s: Space, L: LineArg = 0) -> int:
    """χ(s, L) = ∫ ch(L)·td(T)"""
    value = s.integrate(chern_character(s.kline(L)) * todd(s.tangent))
    return as_integer(value, f"chi({s.name or 'space'}, {s.vector(L)})")


def degree(s: Space, L: LineArg) -> int:
    """∫ c_1(L)^dim"""
    value = s.integrate(s.line(L) ** s.dim)
    return as_integer(value, f"degree({s.name or 'space'}, {s.vector(L)})")


def chi_y(s: Space) -> ChiYProfile:
    """χ_y 亏格的全部系数 χ^p = χ(s, Ω^p)，并核对 Serre 对偶 χ^p = (-1)^n χ^{n-p}"""
    n = s.dim
    td = todd(s.tangent)
    cotangent = s.tangent.dual()
    powers = lambda_series(cotangent, n)
    values = []
    for p in range(n + 1):
        value = s.integrate(chern_character(powers[p]) * td)
        values.append(as_integer(value, f"chi(Omega^{p})"))

    for p in range(n + 1):
        if values[p] != (-1) ** n * values[n - p]:
            raise ConsistencyError(
                f"Serre duality fails: chi^{p} = {values[p]}, chi^{n - p} = {values[n - p]}"
            )
    profile = ChiYProfile(dim=n, chi_p=values)
    logger.debug("chi_y_computed", space=s.name, chi_p=values)
    return profile


def degree_by_multinomial(dims: Sequence[int], L: Sequence[int],
                          normal: Sequence[Sequence[int]] = ()) -> int:
    """射影空间之积中完全交的次数，直接展开多项式系数，不经过 Chow 环

    ∫ (Σ a_i h_i)^d · Π_j (Σ n_{ji} h_i)，d = Σ dims - len(normal)
    """
    k = len(dims)
    d = sum(dims) - len(normal)
    if d < 0:
        raise TowerShapeError("More equations than the ambient dimension")
    poly: Dict[Tuple[int, ...], int] = {}
    for exps, coeff in multinomial_coefficients(k, d).items():
        term = coeff
        for a, e in zip(L, exps):
            term *= a ** e
        if term:
            poly[tuple(exps)] = term
    for form in normal:
        nxt: Dict[Tuple[int, ...], int] = {}
        for exps, coeff in poly.items():
            for i, c in enumerate(form):
                if not c:
                    continue
                shifted = tuple(e + (1 if j == i else 0) for j, e in enumerate(exps))
                nxt[shifted] = nxt.get(shifted, 0) + coeff * c
        poly = nxt
    return poly.get(tuple(dims), 0)


def hrr_integrality(s: Space, cases: int, seed: int) -> PropertyReport:
    """随机整 K 类（外围线丛之和的限制）的 ∫ ch·td 必须是整数"""
    rng = np.random.default_rng(seed)
    td = todd(s.tangent)
    report = PropertyReport(name=f"hrr_integrality({s.name or 'space'})", cases=cases)
    for case in range(cases):
        value = Rational(s.integrate(chern_character(random_kclass(s.presentation, rng)) * td))
        if value.q != 1:
            report.failures.append(f"case {case}: chi = {value}")
    return report
