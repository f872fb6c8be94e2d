import pytest

from src.ledger import load_fano_threefolds, min_picard_rank, threefold_exclusion
from src.utils.errors import LedgerError, PreconditionError


def test_table_contents():
    table = load_fano_threefolds()
    assert table.version == 1
    assert table.min_rho == 5
    assert len(table.frame) == 8
    assert all(f.fec for f in table.families())


def test_enriques_bound_excludes_threefolds():
    report = threefold_exclusion(12)
    assert report.min_rho == 5
    assert len(report.families) == 8
    assert report.excluded
    assert report.chain["contradicts_torsion"]
    assert any("rho >= 10" in note for note in report.notes)


def test_trivial_bound_not_excluded():
    report = threefold_exclusion(2)
    assert report.min_rho == 0
    assert not report.excluded
    assert not report.table_covers


def test_higher_bound():
    assert min_picard_rank(14) == 6
    assert threefold_exclusion(14).min_rho == 6


def test_precondition():
    with pytest.raises(PreconditionError):
        threefold_exclusion(1)


def test_malformed_table(tmp_path):
    path = tmp_path / "table.txt"
    path.write_text("# version: 1\nid,rho,fec_flag\n5-1,5,maybe\n", encoding="utf-8")
    with pytest.raises(LedgerError):
        load_fano_threefolds(path)


def test_missing_table(tmp_path):
    with pytest.raises(LedgerError):
        load_fano_threefolds(tmp_path / "absent.txt")
