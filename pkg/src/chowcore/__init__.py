from .characteristic import chern_character, chern_class, todd, top_chern, total_chern
from .kclass import KClass, exterior_power, k_dual, k_tensor, lambda_series, symmetric_power
from .presentation import (
    ChowClass,
    ChowPresentation,
    integrate,
    monomials_up_to,
    normal_form,
    to_qq,
)

__all__ = [
    "ChowPresentation",
    "ChowClass",
    "KClass",
    "normal_form",
    "integrate",
    "monomials_up_to",
    "to_qq",
    "k_tensor",
    "k_dual",
    "exterior_power",
    "symmetric_power",
    "lambda_series",
    "chern_character",
    "todd",
    "total_chern",
    "chern_class",
    "top_chern",
]
