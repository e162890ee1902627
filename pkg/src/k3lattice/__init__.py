"""Exact lattice arithmetic for K3 Picard lattices and Hilbert schemes of points."""

__version__ = "0.1.0"

from .lattice import (
    IntegralLattice,
    LatticeInputError,
    SignatureProfile,
    discriminant,
    hodge_index_valid,
    is_primitive,
    orthogonal_sum,
    pair,
    signature,
    sublattice_gram,
)
from .quadrep import (
    SearchStatus,
    SearchVerdict,
    beauville_zero_iff_2m2,
    gauss_reduce_binary,
    isotropic_search,
    minus_two_classes,
    represent,
)
from .hilbert import (
    BeauvilleLattice,
    HilbertClass,
    beauville_extend,
    debarre_involution,
    quadruple_intersection,
    sigma_pairing,
    star_square_pairing,
)
from .k3 import (
    KodairaDim,
    Partition,
    ampleness_obstruction_scan,
    degree2_case_analysis,
    genus_of_class,
    kodaira_dim_sym,
    kummer_intersection_count,
    multisection_degree,
    picard_lefschetz_reflect,
    stratum_dim_bound,
)
from .density import K3Input, check_density_hypotheses
from .report import Claim, ClaimReport
from .suite import verify_paper_claims
