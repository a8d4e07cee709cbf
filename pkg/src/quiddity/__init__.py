"""Exact-arithmetic toolkit for the word equations M(a_1..a_n) = Id,
-Id, and trace zero in SL(2,Z), their 3d-dissections, rotation
indices, friezes, and reduced decompositions in the modular group."""

from .matrices import (
    IDENTITY,
    Mat2,
    MatrixClass,
    NEG_IDENTITY,
    Word,
    canonical_rotation,
    classify_matrix,
    continuant,
    elementary,
    product_from_continuants,
    rotate,
    rotundus,
    word_product,
)
from .surgery import (
    NotASolutionError,
    ReductionCertificate,
    SolutionClass,
    StepKind,
    SurgeryStep,
    apply_type1,
    apply_type2,
    classify,
    inverse_type1,
    inverse_type2,
    is_reduced,
    reduce_word,
    solution_class,
)
from .search import (
    SolutionSet,
    brute_force_enumerate,
    count_table,
    entry_bound,
    generative_enumerate,
    orbit_count,
    sum_bound,
)
from .dissection import (
    Dissection,
    dihedral_classes,
    dissections_with_quiddity,
    enumerate_dissections,
    even_face_parity,
    faces,
    from_certificate,
    half_quiddity,
    is_3d_dissection,
    is_centrally_symmetric,
    iter_dissections,
    make_dissection,
    quiddity,
    symmetric_dissection,
)
from .sturm import BrokenLine, SLSequence, broken_line, iterate, rotation_index, wronskian
from .frieze import (
    Frieze,
    check_diamond,
    check_glide,
    check_tame,
    farey_quiddity,
    frieze,
    is_totally_positive,
    render_text,
)
from .psl2 import (
    ElementQuiddity,
    GroupElement,
    conjecture_probe,
    element_dissection,
    element_index,
    element_quiddity,
    reduced_decomposition,
    uniqueness_spot_check,
)
from .limits import BudgetExceededError

__version__ = "0.1.0"
