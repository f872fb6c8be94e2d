from .campaign import draw_general_instance, instance_seed, run_oracle_campaign, run_seed
from .counting import (
    blowup_identity,
    count_D1,
    count_Y,
    count_y_report,
    count_y_via_fibers,
    rank_profile,
    stratified_count_identity,
    stratified_sum,
)
from .forms import MorphismMatrix, MultiForm, constant_matrix, random_instance, zero_form
from .instance_file import dump_instance, load_instance
from .jacobian import jacobian_sample
from .models import (
    BlowupIdentityReport,
    CampaignReport,
    CountReport,
    GeneralInstance,
    JacobianReport,
    RankProfile,
    SeedResult,
)
from .points import enumerate_points, iter_point_chunks, projective_count, projective_points

__all__ = [
    "MultiForm",
    "MorphismMatrix",
    "random_instance",
    "constant_matrix",
    "zero_form",
    "load_instance",
    "dump_instance",
    "enumerate_points",
    "iter_point_chunks",
    "projective_points",
    "projective_count",
    "rank_profile",
    "count_Y",
    "count_y_report",
    "count_y_via_fibers",
    "count_D1",
    "stratified_sum",
    "stratified_count_identity",
    "blowup_identity",
    "jacobian_sample",
    "draw_general_instance",
    "instance_seed",
    "run_seed",
    "run_oracle_campaign",
    "RankProfile",
    "CountReport",
    "BlowupIdentityReport",
    "JacobianReport",
    "GeneralInstance",
    "SeedResult",
    "CampaignReport",
]
