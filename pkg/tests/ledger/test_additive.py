import pytest

from src.invariants import chi_y, hodge_euler
from src.ledger import (
    CohomologyLedger,
    K0Summary,
    blowup_cohomology,
    blowup_hodge,
    exceptionals,
    fec_obstruction,
    ledger_euler,
    ledger_from_diamond,
    load_diamond,
    load_k0,
    load_ledger,
    sod_compose,
)
from src.utils.errors import DiamondError, LedgerError, PreconditionError


@pytest.fixture(scope="module")
def y_ledger():
    return blowup_cohomology(load_ledger("P2xP2"), load_ledger("enriques"), 2)


def test_fourfold_cohomology(y_ledger):
    assert y_ledger.free_ranks == [1, 0, 3, 0, 13, 0, 3, 0, 1]
    assert y_ledger.degrees[4].torsion == ["Z/2"]
    assert [lat.label for lat in y_ledger.degrees[4].lattices] == ["Λ"]
    assert ledger_euler(y_ledger) == 21
    assert y_ledger.assumptions


def test_ledger_matches_chi_y(y_ledger, space_y):
    assert chi_y(space_y).chi_p[2] == y_ledger.free_ranks[4]


def test_blowup_along_empty_centre():
    x = load_ledger("P2xP2")
    out = blowup_cohomology(x, CohomologyLedger(), 2)
    assert out.free_ranks == x.free_ranks


def test_blowup_euler_additivity():
    x, s = load_ledger("P2xP2"), load_ledger("enriques")
    assert blowup_cohomology(x, s, 2).euler == x.euler + s.euler


def test_blowup_codim_precondition():
    with pytest.raises(PreconditionError):
        blowup_cohomology(load_ledger("P2xP2"), load_ledger("point"), 1)


def test_blowup_hodge_diamond():
    out = blowup_hodge(load_diamond("P2xP2"), load_diamond("enriques"), 2)
    assert out[1][1] == 3
    assert out[2][2] == 13
    assert all(out[p][q] == 0 for p in range(5) for q in range(5) if p != q)
    assert hodge_euler(out) == 21


def test_blowup_hodge_point_centre():
    out = blowup_hodge(load_diamond("P2"), load_diamond("point"), 2)
    assert out[1][1] == 2


def test_blowup_hodge_shape_mismatch():
    with pytest.raises(DiamondError):
        blowup_hodge(load_diamond("P2xP2"), load_diamond("point"), 2)


def test_ledger_from_diamond_commutes_with_euler():
    diamond = blowup_hodge(load_diamond("P2xP2"), load_diamond("enriques"), 2)
    assert ledger_from_diamond(diamond).euler == hodge_euler(diamond)


def test_poincare_symmetry_enforced():
    with pytest.raises(ValueError):
        CohomologyLedger(degrees=[{"free_rank": 1}, {"free_rank": 2}], smooth_proper=True)


def test_unknown_ledger():
    with pytest.raises(LedgerError):
        load_ledger("quintic")


def test_sod_of_fourfold():
    k0 = sod_compose([load_k0("enriques")] + exceptionals(9))
    assert k0 == K0Summary(free_rank=21, torsion=["Z/2"])
    assert fec_obstruction(k0)


def test_sod_of_sixfold():
    pf = K0Summary(free_rank=18)
    k0 = sod_compose([load_k0("enriques"), pf, pf])
    assert k0.free_rank == 48
    assert k0.torsion == ["Z/2"]


def test_sod_empty_and_associative():
    assert sod_compose([]) == K0Summary(free_rank=0)
    a, b, c = K0Summary(free_rank=2, torsion=["Z/3"]), K0Summary(free_rank=1), load_k0("enriques")
    assert sod_compose([sod_compose([a, b]), c]) == sod_compose([a, sod_compose([b, c])])
    assert fec_obstruction(sod_compose([a, b])) == (fec_obstruction(a) or fec_obstruction(b))


def test_fec_without_torsion():
    assert not fec_obstruction(K0Summary(free_rank=9))
