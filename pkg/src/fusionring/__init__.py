"""fusionring: exact-arithmetic workbench for based rings of symmetric
fusion categories in positive characteristic.

Green rings of C_p via a Jordan-type rank oracle, the universal Verlinde
ring Ver_p, Frobenius-Perron and mod-p dimensions, the p-th power
Frobenius and its lift candidates, subring lattices, gradings, and
based-homomorphism search.
"""

from fusionring.based import (
    BasedRing,
    RingElement,
    Violation,
    box_product,
    group_ring,
    multiply,
    permute,
    power,
    restrict,
    validate,
    yang_lee_ring,
)
from fusionring.charp import (
    DimHom,
    FrobeniusTable,
    FrobeniusType,
    ModpMatrix,
    apply_dim_hom,
    canonical_dim_hom,
    dim_hom,
    frobenius_candidates,
    frobenius_type,
    global_dimension,
    is_semisimple_mod_p,
    pth_power,
    regular_dual_element,
    trace_form_gram,
    verlinde_frobenius_table,
)
from fusionring.green import (
    JordanType,
    green_ring,
    is_prime,
    nilpotent_jordan_tensor,
    unipotent_jordan_tensor,
)
from fusionring.kernels import BACKEND as KERNEL_BACKEND
from fusionring.numerics import (
    FpDimVector,
    NonConvergenceError,
    fp_dim_category,
    fp_dim_element,
    fp_dims,
)
from fusionring.ringfile import (
    ParsedRingFile,
    RingFileError,
    parse_ring_file,
    write_ring_file,
)
from fusionring.structure import (
    GradingMap,
    Subring,
    enumerate_subrings,
    find_based_homs,
    find_isomorphism,
    graded_dimension_identity,
    subring_closure,
    universal_grading,
)
from fusionring.verlinde import (
    frobenius_on_verlinde,
    parity_twist,
    plus_subring,
    quotient_green,
    svec_subring,
    verlinde_ring,
)

__version__ = "0.1.0"

__all__ = [
    "BasedRing",
    "RingElement",
    "Violation",
    "box_product",
    "group_ring",
    "multiply",
    "permute",
    "power",
    "restrict",
    "validate",
    "yang_lee_ring",
    "DimHom",
    "FrobeniusTable",
    "FrobeniusType",
    "ModpMatrix",
    "apply_dim_hom",
    "canonical_dim_hom",
    "dim_hom",
    "frobenius_candidates",
    "frobenius_type",
    "global_dimension",
    "is_semisimple_mod_p",
    "pth_power",
    "regular_dual_element",
    "trace_form_gram",
    "verlinde_frobenius_table",
    "JordanType",
    "green_ring",
    "is_prime",
    "nilpotent_jordan_tensor",
    "unipotent_jordan_tensor",
    "KERNEL_BACKEND",
    "FpDimVector",
    "NonConvergenceError",
    "fp_dim_category",
    "fp_dim_element",
    "fp_dims",
    "ParsedRingFile",
    "RingFileError",
    "parse_ring_file",
    "write_ring_file",
    "GradingMap",
    "Subring",
    "enumerate_subrings",
    "find_based_homs",
    "find_isomorphism",
    "graded_dimension_identity",
    "subring_closure",
    "universal_grading",
    "frobenius_on_verlinde",
    "parity_twist",
    "plus_subring",
    "quotient_green",
    "svec_subring",
    "verlinde_ring",
]
