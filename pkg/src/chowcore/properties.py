"""
随机化代数性质检查

在给定表示上抽取随机类，核对环公理、λ 运算与示性类的恒等式。
check-paper 与测试共用；返回失败描述而不是直接断言。
"""

from dataclasses import dataclass, field
from math import comb
from typing import Callable, List

import numpy as np

from .characteristic import chern_character, todd, total_chern
from .kclass import KClass, k_dual, k_tensor, lambda_series
from .presentation import ChowClass, ChowPresentation, monomials_up_to, normal_form


@dataclass
class PropertyReport:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def random_class(pres: ChowPresentation, rng: np.random.Generator,
                 max_terms: int = 4, coeff_range: int = 5) -> ChowClass:
    """随机 Chow 类：若干正规单项式的整系数组合"""
    monomials = monomials_up_to(pres, pres.total_dimension)
    count = int(rng.integers(1, max_terms + 1))
    picks = rng.choice(len(monomials), size=count)
    data = {}
    for idx in picks:
        data[monomials[int(idx)]] = int(rng.integers(-coeff_range, coeff_range + 1))
    return pres.element(data)


def random_kclass(pres: ChowPresentation, rng: np.random.Generator,
                  max_rank: int = 3, degree_range: int = 2) -> KClass:
    """随机的线丛直和（非虚拟）"""
    rank = int(rng.integers(1, max_rank + 1))
    summands = [
        tuple(int(x) for x in rng.integers(-degree_range, degree_range + 1, size=pres.ngens))
        for _ in range(rank)
    ]
    return KClass.from_summands(pres, summands)


def _run(name: str, cases: int, check: Callable[[int], str]) -> PropertyReport:
    report = PropertyReport(name=name, cases=cases)
    for case in range(cases):
        problem = check(case)
        if problem:
            report.failures.append(f"case {case}: {problem}")
    return report


def check_ring_axioms(pres: ChowPresentation, cases: int, seed: int) -> PropertyReport:
    rng = np.random.default_rng(seed)

    def check(_case: int) -> str:
        x, y, z = (random_class(pres, rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            return "associativity"
        if x * y != y * x:
            return "commutativity"
        if x * (y + z) != x * y + x * z:
            return "distributivity"
        if normal_form(normal_form(x)) != normal_form(x):
            return "normal form not idempotent"
        if (x + y).integrate() != x.integrate() + y.integrate():
            return "integration not linear"
        return ""

    return _run("ring_axioms", cases, check)


def check_lambda_identities(pres: ChowPresentation, cases: int, seed: int) -> PropertyReport:
    rng = np.random.default_rng(seed)

    def check(_case: int) -> str:
        a = random_kclass(pres, rng)
        b = random_kclass(pres, rng)
        order = a.rank + b.rank
        la, lb, lab = lambda_series(a, order), lambda_series(b, order), lambda_series(a + b, order)
        if la[0] != KClass.trivial(pres) or la[1] != a:
            return "lambda^0 / lambda^1"
        for p in range(order + 1):
            if la[p].rank != comb(a.rank, p):
                return f"rank of lambda^{p}"
            expected = KClass.zero(pres)
            for i in range(p + 1):
                expected = expected + k_tensor(la[i], lb[p - i])
            if lab[p] != expected:
                return f"lambda^{p} of a sum"
        if la[a.rank].terms != ((a.det(), 1),):
            return "top exterior power is not the determinant"
        return ""

    return _run("lambda_identities", cases, check)


def check_characteristic_identities(pres: ChowPresentation, cases: int,
                                    seed: int) -> PropertyReport:
    rng = np.random.default_rng(seed)

    def check(_case: int) -> str:
        a = random_kclass(pres, rng)
        b = random_kclass(pres, rng)
        if chern_character(a + b) != chern_character(a) + chern_character(b):
            return "ch not additive"
        if chern_character(k_tensor(a, b)) != chern_character(a) * chern_character(b):
            return "ch not multiplicative"
        if total_chern(a + b) != total_chern(a) * total_chern(b):
            return "Whitney formula"
        if todd(a + b) != todd(a) * todd(b):
            return "td not multiplicative"
        if todd(a - a) != pres.one():
            return "td of a virtual zero"
        return ""

    return _run("characteristic_identities", cases, check)


def check_dual_identities(pres: ChowPresentation, cases: int, seed: int) -> PropertyReport:
    """对偶是对合，且 ch(x^∨) 的 k 次部分等于 (-1)^k ch_k(x)"""
    rng = np.random.default_rng(seed)

    def check(_case: int) -> str:
        x = random_kclass(pres, rng) - random_kclass(pres, rng)
        if k_dual(k_dual(x)) != x:
            return "dual is not an involution"
        if k_dual(x).rank != x.rank:
            return "dual changes the rank"
        ch, ch_dual = chern_character(x), chern_character(k_dual(x))
        for k in range(pres.total_dimension + 1):
            if ch_dual.degree_part(k) != (-1) ** k * ch.degree_part(k):
                return f"ch_{k} of the dual"
        return ""

    return _run("dual_identities", cases, check)


def run_property_suite(pres: ChowPresentation, cases: int, seed: int) -> List[PropertyReport]:
    return [
        check_ring_axioms(pres, cases, seed),
        check_lambda_identities(pres, cases, seed + 1),
        check_characteristic_identities(pres, cases, seed + 2),
        check_dual_identities(pres, cases, seed + 3),
    ]
