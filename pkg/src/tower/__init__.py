"""Matrix tower 모듈 - slot layouts, standard embeddings, PGL stages"""

from .algebra import (
    AlgebraPresentation,
    Component,
    ComponentAlgebra,
    check_representation,
    evaluate,
    format_presentation,
    parse_presentation,
    push_assignment,
    truncate,
)
from .layout import SlotLayout, compose_assignments, slot_assignment
from .matrices import (
    TowerMatrix,
    format_matrix,
    identity,
    matrix_unit,
    matrix_units,
    normalized_trace,
    parse_matrix,
    standard_embedding,
    tower_layouts,
    trace_axioms_hold,
    uhf_class,
    zero_matrix,
)
from .pgl import (
    AlgebraEmbedding,
    PglElement,
    is_fixed_by,
    permutation_matrix,
    pgl_equiv_n,
    skolem_noether_conjugator,
)

__all__ = [
    "AlgebraPresentation",
    "Component",
    "ComponentAlgebra",
    "check_representation",
    "evaluate",
    "format_presentation",
    "parse_presentation",
    "push_assignment",
    "truncate",
    "SlotLayout",
    "compose_assignments",
    "slot_assignment",
    "TowerMatrix",
    "format_matrix",
    "identity",
    "matrix_unit",
    "matrix_units",
    "normalized_trace",
    "parse_matrix",
    "standard_embedding",
    "tower_layouts",
    "trace_axioms_hold",
    "uhf_class",
    "zero_matrix",
    "AlgebraEmbedding",
    "PglElement",
    "is_fixed_by",
    "permutation_matrix",
    "pgl_equiv_n",
    "skolem_noether_conjugator",
]
