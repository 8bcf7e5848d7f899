"""Levi subgroup calculus on based root data and inner-form transfer bookkeeping."""

from .errors import (
    DatumError,
    EnumerationLimitError,
    GroupParseError,
    GroupSpecError,
    InnerFormsError,
    TransferError,
)
from .rootdata import (
    BasedRootDatum,
    DynkinType,
    FiniteAbelianGroup,
    build_catalog_group,
    classify,
    fundamental_group,
    smith_normal_form,
)
from .levi import LeviDescriptor, LeviReport, analyze_levi, is_maximal, levi_datum
from .weyl import (
    RestrictedRoot,
    WeylWord,
    find_w_theta,
    rank_one_decomposition,
    reduced_roots,
    weyl_group_order,
)
from .satake import (
    InnerFormShape,
    SatakeDiagram,
    parse_ascii,
    render_ascii,
    transfer_levi,
    type_a_satake,
)
from .appendix import appendix_catalog, catalog_json, catalog_markdown, verify_catalog
from .kottwitz import ad_quotient_order, inner_form_classes_gl, kottwitz_group
from .globalize import (
    GlobalizationPlan,
    HasseVector,
    PlaceLabel,
    build_cocycle,
    global_division_algebra,
    plan_places,
    split_primes,
)
from .grothendieck import (
    BasisElement,
    VirtualElement,
    character_sign,
    global_d_compatibility,
    is_d_compatible,
    levi_transfers,
    lj_map,
    parse_virtual,
)

__version__ = "0.1.0"
