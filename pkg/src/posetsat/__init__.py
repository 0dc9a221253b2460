"""Induced K_{s,t}-saturated families: lantern construction, exhaustive checks, small exact cases."""
from .chains import Chain, Lantern, disjoint_chains, increment_sets, lower_lantern, upper_lantern
from .construction import Construction, build_f5, build_parts, build_saturated_family, coefficient
from .errors import (
    CertificateInvalid,
    DefectError,
    InfeasibleError,
    InvalidPosetError,
    UnsupportedError,
    UsageError,
)
from .kst import InducedKstCopy, find_induced_kst
from .oracle import ExactResult, enumerate_saturated, exact_sat_star
from .poset import (
    Embedding,
    LegsKind,
    LegsProfile,
    Poset,
    antichain,
    chain,
    classify_legs,
    complete_bipartite,
    find_induced_copy,
    poset_from_covers,
)
from .sets import Family, Relation, complement, family_insert, missing_sets, relation
from .verify import (
    LegsCertificate,
    SaturationReport,
    check_layer_bounds,
    check_saturated,
    legs_certificate,
    witness_for_missing,
)

__version__ = "0.1.0"
