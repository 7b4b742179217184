"""Oracle 모듈 - brute-force reference implementations"""

from .corpus import Corpus, generate_corpus, random_sieve
from .universe import (
    BoundedUniverse,
    PredicateSet,
    enumerate_universe,
    naive_cover,
    naive_is_empty,
    naive_members,
    naive_trace_witness,
    universe_from_settings,
)

__all__ = [
    "Corpus",
    "generate_corpus",
    "random_sieve",
    "BoundedUniverse",
    "PredicateSet",
    "enumerate_universe",
    "naive_cover",
    "naive_is_empty",
    "naive_members",
    "naive_trace_witness",
    "universe_from_settings",
]
