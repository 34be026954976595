"""Exact tools for r-wise s-union families of sequences in N^n."""
from .census import (
    BalancedOptimum,
    SizeBreakdown,
    best_balanced_size,
    binom,
    closed_form_K_size,
    elementary_symmetric,
    reference_size,
)
from .construct import Params, balanced_partition, build_K, reference_family, sphere
from .extremal import SearchLimitExceeded, SearchReport, check_conjecture, max_family_search
from .polytope import PolytopeSpec, contains, enumerate_L
from .seqcore import (
    Antichain,
    DimensionError,
    Family,
    downset_of,
    join,
    leq,
    maximal_elements,
    setminus,
    weight,
)
from .verify import (
    Profile,
    ProfileUndefined,
    derive_profile,
    is_downset,
    is_r_wise_s_union,
    subset_max,
)

__version__ = "0.1.0"
