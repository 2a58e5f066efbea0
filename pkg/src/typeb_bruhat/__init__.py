"""Bruhat order covering relations on maximal parabolic quotients of type B."""

__version__ = "0.1.0"

from .covering import CoverType, CoveringEdge, classify, covered_by, covers_of
from .errors import (
    ContractError,
    InvariantError,
    ParseError,
    ResourceGuardError,
    TypeBError,
    ValidationError,
)
from .grassmannian import (
    GrassmannPerm,
    PartitionPair,
    dual,
    enumerate_grassmannian,
    from_blocks,
    from_signed,
    is_grassmannian,
    length_grass,
    longest_element,
    minimal_coset_representative,
    partition_pair,
    to_signed,
)
from .maya import MayaDiagram, from_maya, maya_covered_by, maya_dual, maya_length, to_maya
from .signed_perm import (
    SignChange,
    SignedPermutation,
    Transposition,
    apply_reflection,
    apply_simple,
    compose,
    format_oneline,
    inversions,
    length_full,
    parse_oneline,
)
