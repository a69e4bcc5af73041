"""Exact computations in the rational group algebras of symmetric groups."""

from ._limits import DegreeLimitError, max_degree
from .algebra import (
    GroupAlgebraElement,
    add,
    embed,
    in_left_ideal,
    is_idempotent,
    left_ideal_dimension,
    multiply,
    scale,
    star,
)
from .branching import (
    BranchingDecomposition,
    antisymmetrizer_e_a,
    decompose,
    full_symmetrizer_f,
    h_component,
    exclusion_idempotent,
    symmetrizer_e_s,
)
from .characters import CharacterTable, central_idempotent, character
from .classify import (
    TableauVerdict,
    admissibility_check,
    classify_frame,
    hs_negative_check,
    standard_tableau_theorem_check,
)
from .dft import FourierImage, dft, extract_component, inverse_dft, natural_representation
from .permutation import (
    Permutation,
    all_permutations,
    compose,
    cycle_type,
    identity,
    inverse,
    sign,
    transposition,
)
from .tensors import (
    DenseTensor,
    antisymmetrize,
    apply,
    build_cdc_candidate,
    group_element_of,
    nabla_surrogate,
    symmetrize,
    tensor_product,
    verify_cdc_identities,
)
from .young import (
    Tableau,
    add_one_box,
    all_tableaux,
    dimension,
    horizontal_group,
    lex_compare,
    normalized_idempotent,
    partitions_of,
    standard_tableaux,
    vertical_group,
    young_symmetrizer,
)

__version__ = "0.1.0"
