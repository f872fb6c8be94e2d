from .degeneracy import (
    degeneracy_table,
    expected_degeneracy_dim,
    fano_dimension_bound,
    fano_host_check,
    stratum_dimensions,
)
from .hodge import (
    betti_numbers,
    chi_y_from_diamond,
    hh0_from_diamond,
    hodge_euler,
    signature_from_chi_y,
    validate_diamond,
)
from .hrr import (
    as_integer,
    chi,
    chi_y,
    degree,
    degree_by_multinomial,
    euler_number,
    hrr_integrality,
)
from .koszul import h0_via_koszul, section_space_dim, section_space_report
from .models import (
    ChiYProfile,
    DegeneracyQuery,
    DegeneracyRow,
    FanoHostResult,
    KoszulResult,
    KoszulTerm,
    SectionSpaceReport,
    StratumRow,
    StratumTable,
)

__all__ = [
    "euler_number",
    "hrr_integrality",
    "chi",
    "degree",
    "chi_y",
    "as_integer",
    "degree_by_multinomial",
    "h0_via_koszul",
    "section_space_dim",
    "section_space_report",
    "expected_degeneracy_dim",
    "degeneracy_table",
    "stratum_dimensions",
    "fano_host_check",
    "fano_dimension_bound",
    "hh0_from_diamond",
    "hodge_euler",
    "betti_numbers",
    "chi_y_from_diamond",
    "signature_from_chi_y",
    "validate_diamond",
    "ChiYProfile",
    "DegeneracyQuery",
    "DegeneracyRow",
    "FanoHostResult",
    "KoszulResult",
    "KoszulTerm",
    "SectionSpaceReport",
    "StratumRow",
    "StratumTable",
]
