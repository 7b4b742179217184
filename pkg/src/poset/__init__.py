"""Poset 모듈 - finite posets and their divisibility embeddings"""

from .poset_io import embedding_to_document, format_embedding, format_poset, parse_poset, poset_to_document
from .posetlab import (
    DivEmbedding,
    FinitePoset,
    all_posets,
    default_labels,
    embed_poset,
    random_poset,
    verify_embedding,
)

__all__ = [
    "embedding_to_document",
    "format_embedding",
    "format_poset",
    "parse_poset",
    "poset_to_document",
    "DivEmbedding",
    "FinitePoset",
    "all_posets",
    "default_labels",
    "embed_poset",
    "random_poset",
    "verify_embedding",
]
