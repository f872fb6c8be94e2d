"""
示性类级数：Chern 特征、Todd 类、全 Chern 类

对线丛 L（第一陈类 ℓ）：
    ch(L) = exp(ℓ),  td(L) = ℓ / (1 - e^{-ℓ}),  c(L) = 1 + ℓ
三者对直和分别是加性、乘性、乘性；虚拟类的负重数项贡献逆级数。
"""

from functools import lru_cache
from math import factorial
from typing import Tuple

from sympy.polys.domains import QQ

from .kclass import KClass
from .presentation import ChowClass, ChowPresentation, Vector


@lru_cache(maxsize=None)
def exp_coefficients(order: int) -> Tuple:
    return tuple(QQ(1, factorial(k)) for k in range(order + 1))


@lru_cache(maxsize=None)
def todd_inverse_coefficients(order: int) -> Tuple:
    """(1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!"""
    return tuple(QQ((-1) ** k, factorial(k + 1)) for k in range(order + 1))


@lru_cache(maxsize=None)
def todd_coefficients(order: int) -> Tuple:
    """x / (1 - e^{-x})，由逆级数逐项求得"""
    g = todd_inverse_coefficients(order)
    f = [QQ.one]
    for k in range(1, order + 1):
        f.append(-sum((g[j] * f[k - j] for j in range(1, k + 1)), QQ.zero))
    return tuple(f)


@lru_cache(maxsize=None)
def _exp_class(pres: ChowPresentation, vec: Vector) -> ChowClass:
    return pres.evaluate_series(exp_coefficients(pres.total_dimension), pres.linear(vec))


def chern_character(a: KClass) -> ChowClass:
    """ch(a) = Σ m·exp(ℓ)"""
    pres = a.presentation
    total = pres.zero()
    for vec, mult in a.terms:
        total = total + _exp_class(pres, vec) * mult
    return total


def _multiplicative(a: KClass, positive: Tuple, negative: Tuple) -> ChowClass:
    pres = a.presentation
    result = pres.one()
    for vec, mult in a.terms:
        if not any(vec):
            continue
        ell = pres.linear(vec)
        factor = pres.evaluate_series(positive if mult > 0 else negative, ell)
        result = result * factor ** abs(mult)
    return result


def todd(a: KClass) -> ChowClass:
    """td(a) = Π td(ℓ)^m"""
    n = a.presentation.total_dimension
    return _multiplicative(a, todd_coefficients(n), todd_inverse_coefficients(n))


def total_chern(a: KClass) -> ChowClass:
    """c(a) = Π (1 + ℓ)^m"""
    n = a.presentation.total_dimension
    plus = (QQ.one, QQ.one) + (QQ.zero,) * max(n - 1, 0)
    minus = tuple(QQ((-1) ** k) for k in range(n + 1))
    return _multiplicative(a, plus, minus)


def chern_class(a: KClass, k: int) -> ChowClass:
    """第 k 个 Chern 类"""
    return total_chern(a).degree_part(k)


def top_chern(a: KClass) -> ChowClass:
    """c_top(a)，top = rank(a)"""
    return chern_class(a, a.rank)
