from .cohomology import (
    anticanonical_ample,
    base_cohomology,
    curve_pairings,
    is_ample,
    line_bundle_cohomology,
)
from .presets import PRESET_DESCRIPTIONS, PRESET_SHAPES, preset, preset_names
from .space import (
    BaseStep,
    ProjBundleStep,
    Space,
    SplitBundle,
    ZeroLocusStep,
    add_proj_bundle,
    build_base,
    cut_zero_locus,
)

__all__ = [
    "Space",
    "SplitBundle",
    "BaseStep",
    "ProjBundleStep",
    "ZeroLocusStep",
    "build_base",
    "add_proj_bundle",
    "cut_zero_locus",
    "preset",
    "preset_names",
    "PRESET_SHAPES",
    "PRESET_DESCRIPTIONS",
    "line_bundle_cohomology",
    "base_cohomology",
    "curve_pairings",
    "is_ample",
    "anticanonical_ample",
]
