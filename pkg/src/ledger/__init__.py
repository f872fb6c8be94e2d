from .additive import (
    EXCEPTIONAL,
    blowup_cohomology,
    blowup_hodge,
    exceptionals,
    fec_obstruction,
    ledger_euler,
    ledger_from_diamond,
    sod_compose,
)
from .data_loader import (
    FanoThreefoldTable,
    load_diamond,
    load_fano_threefolds,
    load_k0,
    load_ledger,
)
from .exclusion import min_picard_rank, threefold_exclusion
from .models import (
    CohomologyLedger,
    DegreeEntry,
    ExclusionReport,
    FanoFamily,
    K0Summary,
    LatticeLabel,
)

__all__ = [
    "CohomologyLedger",
    "DegreeEntry",
    "LatticeLabel",
    "K0Summary",
    "FanoFamily",
    "ExclusionReport",
    "FanoThreefoldTable",
    "blowup_cohomology",
    "blowup_hodge",
    "ledger_euler",
    "ledger_from_diamond",
    "sod_compose",
    "exceptionals",
    "EXCEPTIONAL",
    "fec_obstruction",
    "threefold_exclusion",
    "min_picard_rank",
    "load_ledger",
    "load_diamond",
    "load_k0",
    "load_fano_threefolds",
]
