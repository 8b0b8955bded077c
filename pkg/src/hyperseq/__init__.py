"""Digital nets and sequences over small finite fields via duality.

The package constructs point sets whose generating matrices come from
polynomial data over F_q — a modulus f and a vector of polynomials or
formal-series prefixes — computes their quality parameters exactly, and
verifies the claimed equidistribution combinatorially.  All arithmetic is
exact: field elements are integer labels, coordinates are digit vectors,
and discrepancies are rationals.
"""

from __future__ import annotations

from .duality import (
    DualSpaceBasis,
    MeritReport,
    dual_kernel_matrix,
    figure_of_merit,
    kernel_space,
    min_nrt_distance,
    nrt_weight,
)
from .errors import CapacityError, PrecisionError
from .fields import Field, field
from .lnseq import (
    LNSpec,
    RankWitness,
    hankel_matrix,
    is_nut,
    ln_generator_matrices,
    nut_equivalence,
    parse_ln_spec,
    rank_condition,
)
from .nets import (
    GeneratorFamily,
    NetSpec,
    OrderedBasis,
    companion_psi,
    generate_net_points,
    net_generator_matrices,
    theta_decode,
    theta_encode,
)
from .points import PointSet, parse_points, write_points
from .poly import Poly, SeriesPrefix
from .search import (
    ExtendReport,
    SearchConfig,
    SearchReport,
    delta_bound,
    exhaustive_search,
    greedy_extend,
    random_search,
    reference_quality_curve,
    rho_threshold,
)
from .sequences import (
    BasisChain,
    DualChainReport,
    QualityProfile,
    SeqSpec,
    UdCertificate,
    dual_chain_report,
    generate_sequence_points,
    parse_seq_spec,
    quality_function_T,
    seq_generator_prefix,
    ud_certificate,
    write_seq_spec,
)
from .verify import (
    BlockFailure,
    DiscrepancyReport,
    NetCheckReport,
    SequenceCheckReport,
    check_T_sequence,
    check_tms_net,
    star_discrepancy_exact,
    star_discrepancy_lower_bound,
    star_discrepancy_oracle,
    strict_t,
)

__version__ = "0.1.0"

__all__ = [
    "BasisChain",
    "BlockFailure",
    "CapacityError",
    "DiscrepancyReport",
    "DualChainReport",
    "DualSpaceBasis",
    "ExtendReport",
    "Field",
    "GeneratorFamily",
    "LNSpec",
    "MeritReport",
    "NetCheckReport",
    "NetSpec",
    "OrderedBasis",
    "PointSet",
    "Poly",
    "PrecisionError",
    "QualityProfile",
    "RankWitness",
    "SearchConfig",
    "SearchReport",
    "SequenceCheckReport",
    "SeqSpec",
    "SeriesPrefix",
    "UdCertificate",
    "check_T_sequence",
    "check_tms_net",
    "companion_psi",
    "delta_bound",
    "dual_chain_report",
    "dual_kernel_matrix",
    "exhaustive_search",
    "field",
    "figure_of_merit",
    "generate_net_points",
    "generate_sequence_points",
    "greedy_extend",
    "hankel_matrix",
    "is_nut",
    "kernel_space",
    "ln_generator_matrices",
    "min_nrt_distance",
    "net_generator_matrices",
    "nrt_weight",
    "nut_equivalence",
    "parse_ln_spec",
    "parse_points",
    "parse_seq_spec",
    "quality_function_T",
    "random_search",
    "rank_condition",
    "reference_quality_curve",
    "rho_threshold",
    "seq_generator_prefix",
    "star_discrepancy_exact",
    "star_discrepancy_lower_bound",
    "star_discrepancy_oracle",
    "strict_t",
    "theta_decode",
    "theta_encode",
    "ud_certificate",
    "write_points",
    "write_seq_spec",
]
