"""Exact weight combinatorics for blocks and characters of GL(m|n).

The library decides and certifies block membership for dominant weights
of the general linear supergroup in odd characteristic, and computes the
formal characters of the induced supermodule families, all in exact
integer arithmetic.
"""

from .characters import (
    CharacterPoly,
    bracket_weight,
    even_factor,
    integral_char_chi,
    odd_factor,
    shift,
    zhat_char,
)
from .linkage import (
    Box,
    Defect,
    EvenLink,
    Fingerprint,
    FingerprintMismatch,
    INFINITE,
    InconclusiveWithinBox,
    InfiniteDefectError,
    InvalidMoveError,
    Linked,
    LinkageChain,
    OddLink,
    apply_move,
    check_move,
    companion,
    defect,
    dominant_weights_in,
    enumerate_block_classes,
    even_coset_witness,
    even_linked,
    even_neighbors,
    fingerprint,
    lower_reflection,
    minimal_companion_level,
    odd_neighbors,
    p_adic_valuation,
    same_block,
    simply_odd_linked,
)
from .roots import (
    AdjacencyChain,
    Permutation,
    PositiveSystem,
    Root,
    adjacency_chain,
    all_permutations,
    block_permutations,
    dmn_representatives,
    dot_action,
    even_positive_roots,
    is_minimal_coset_rep,
    leq_w,
    longest_dmn,
    longest_element,
    odd_positive_roots,
    positive_system,
    reflect,
    regular_decomposition,
    rho0_of,
    rho1_of,
    s_alpha,
    simple_roots,
    standard_positive_roots,
    value_transposition,
    verify_adjacency_chain,
)
from .weights import (
    Degree,
    HalfWeight,
    Shape,
    ShapeMismatchError,
    Weight,
    degree,
    in_restricted_region,
    is_dominant,
    odd_shifted_pairing,
    pairing_coroot,
    pairing_form,
    parse_literal,
    rho,
    rho0,
    rho1,
    to_literal,
)

__version__ = "0.1.0"
