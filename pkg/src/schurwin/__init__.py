"""Exact combinatorics of Grassmannian grade-restriction windows.

Staircase complexes, window generator sets, window-shift actions with their
K-class matrices, and independent verification oracles (Littlewood-Richardson
calculus, Borel-Weil-Bott cohomology, torus fixed-point localization). All
arithmetic is exact: integers and rationals only.
"""

from .bott import (
    CohomologyTable,
    HomogeneousWeight,
    bwb,
    euler_character,
    hom_bundle_cohomology,
    schur_bundle_weight,
    serre_dual,
)
from .partitions import (
    Context,
    GeneratorLabel,
    Partition,
    ShapeError,
    box_partitions,
    canonicalize,
    check_weight,
    dual_weight,
    parse_int_tuple,
)
from .shifts import (
    KMatrix,
    Term,
    TermComplex,
    cotwist_shift_amount,
    general_shift,
    int_determinant,
    k_class,
    k_matrix,
    shift_down_generator,
    shift_up_generator,
)
from .staircase import (
    SequenceTerm,
    StaircaseData,
    StaircaseStep,
    admissible_bases,
    base_from_top,
    resolution_sequence,
    staircase_diagrams,
    window_bases,
)
from .symfunc import (
    SchurExpansion,
    dimension_gl,
    elementary_as_schur,
    elementary_at,
    evaluate,
    lr_multiply,
    schur_at,
    tensor_gl,
)
from .verify import (
    VerificationReport,
    localization_holds,
    localization_mutation_sweep,
    mutate_steps,
    verify_regression,
    sample_point,
    verify_euler,
    verify_localization,
    verify_relations,
    verify_tilting,
)
from .windows import enumerate_window, in_window

__version__ = "0.1.0"
