"""스펙트럴 공간 𝕊 모듈 - patch grammar, trace solver, pcfb structure"""

from .patch import (
    DivisorClosure,
    Empty,
    FgOpen,
    Full,
    Intersection,
    MultiplesOf,
    NotAbove,
    PatchExpr,
    PowerSetPrimes,
    SpecZ,
    Union,
    completely_infinite_part,
    finite_set,
    max_exponent,
    member,
    relevant_primes,
    singleton,
)
from .patch_io import format_patch, parse_patch, patch_from_document, patch_to_document
from .pcfb import (
    ClosureSet,
    GeometricTail,
    PcfbBasic,
    SequenceSpec,
    basic_intersect,
    cofinal_chain,
    cofinal_sequence,
    field_tower,
    is_pcfb_limit,
    pcfb_closure,
    pcfb_limit,
)
from .solver import find_member, is_empty, trace_nonempty_witness

__all__ = [
    "DivisorClosure",
    "Empty",
    "FgOpen",
    "Full",
    "Intersection",
    "MultiplesOf",
    "NotAbove",
    "PatchExpr",
    "PowerSetPrimes",
    "SpecZ",
    "Union",
    "completely_infinite_part",
    "finite_set",
    "max_exponent",
    "member",
    "relevant_primes",
    "singleton",
    "format_patch",
    "parse_patch",
    "patch_from_document",
    "patch_to_document",
    "ClosureSet",
    "GeometricTail",
    "PcfbBasic",
    "SequenceSpec",
    "basic_intersect",
    "cofinal_chain",
    "cofinal_sequence",
    "field_tower",
    "is_pcfb_limit",
    "pcfb_closure",
    "pcfb_limit",
    "find_member",
    "is_empty",
    "trace_nonempty_witness",
]
