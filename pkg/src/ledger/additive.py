"""
加性不变量的组合公式

    爆破：H^k(Bl_S X) = H^k(X) ⊕ ⊕_{i=1}^{c-1} H^{k-2i}(S)，c 为 S 的余维数
    Hodge：h^{p,q}(Bl) = h^{p,q}(X) + Σ_{i=1}^{c-1} h^{p-i,q-i}(S)
    半正交分解：K_0 的自由秩相加，挠部分取多重集并
"""

from typing import List, Sequence, Union

from ..invariants.hodge import betti_numbers, validate_diamond
from ..utils.errors import DiamondError, PreconditionError
from .models import CohomologyLedger, DegreeEntry, K0Summary

EXCEPTIONAL = "exceptional"


def blowup_cohomology(x: CohomologyLedger, s: CohomologyLedger, codim: int) -> CohomologyLedger:
    """沿余维数 codim 的中心 S 爆破 X 后的整上同调账本"""
    if codim < 2:
        raise PreconditionError(f"Blow-up centre must have codimension >= 2, got {codim}")
    out: List[DegreeEntry] = []
    for k, entry in enumerate(x.degrees):
        free_rank = entry.free_rank
        torsion = list(entry.torsion)
        lattices = list(entry.lattices)
        for i in range(1, codim):
            j = k - 2 * i
            if 0 <= j < len(s.degrees):
                shifted = s.degrees[j]
                free_rank += shifted.free_rank
                torsion.extend(shifted.torsion)
                lattices.extend(shifted.lattices)
        out.append(DegreeEntry(free_rank=free_rank, torsion=torsion, lattices=lattices))

    assumptions = list(x.assumptions) + [a for a in s.assumptions if a not in x.assumptions]
    return CohomologyLedger(
        name=f"Bl_{s.name or 'S'}({x.name or 'X'})",
        degrees=out,
        smooth_proper=x.smooth_proper and (s.smooth_proper or not s.degrees),
        assumptions=assumptions,
    )


def blowup_hodge(x_diamond: Sequence[Sequence[int]], s_diamond: Sequence[Sequence[int]],
                 codim: int) -> List[List[int]]:
    """爆破的 Hodge 菱形"""
    x = validate_diamond(x_diamond)
    s = validate_diamond(s_diamond)
    n, m = len(x) - 1, len(s) - 1
    if codim < 2:
        raise PreconditionError(f"Blow-up centre must have codimension >= 2, got {codim}")
    if m != n - codim:
        raise DiamondError(
            f"Centre of dimension {m} does not have codimension {codim} in dimension {n}"
        )
    out = [row[:] for row in x]
    for p in range(n + 1):
        for q in range(n + 1):
            for i in range(1, codim):
                if 0 <= p - i <= m and 0 <= q - i <= m:
                    out[p][q] += s[p - i][q - i]
    return out


def ledger_euler(ledger: CohomologyLedger) -> int:
    return ledger.euler


def ledger_from_diamond(diamond: Sequence[Sequence[int]], name: str = "") -> CohomologyLedger:
    """由 Hodge 菱形得到无挠账本 b_k = Σ_{p+q=k} h^{p,q}"""
    return CohomologyLedger(
        name=name,
        degrees=[DegreeEntry(free_rank=b) for b in betti_numbers(diamond)],
        smooth_proper=True,
    )


def exceptionals(n: int) -> List[str]:
    return [EXCEPTIONAL] * n


def sod_compose(parts: Sequence[Union[K0Summary, str]]) -> K0Summary:
    """半正交分解各部分的 K_0 合成；字符串 "exceptional" 表示一个例外对象"""
    free_rank = 0
    torsion: List[str] = []
    for part in parts:
        if isinstance(part, str):
            if part != EXCEPTIONAL:
                raise PreconditionError(f"Unknown SOD component '{part}'")
            free_rank += 1
        else:
            free_rank += part.free_rank
            torsion.extend(part.torsion)
    return K0Summary(free_rank=free_rank, torsion=torsion)


def fec_obstruction(k: K0Summary) -> bool:
    """K_0 有挠则不存在完全例外序列"""
    return bool(k.torsion)
