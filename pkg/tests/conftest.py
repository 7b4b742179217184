"""Shared fixtures: bounded universes and generated corpora"""

import pytest

from src.oracle import BoundedUniverse, enumerate_universe, generate_corpus


@pytest.fixture(scope="session")
def universe() -> BoundedUniverse:
    """primes {2,3,5}, E = 2 (64 elements)"""
    return BoundedUniverse((2, 3, 5), 2)


@pytest.fixture(scope="session")
def small_universe() -> BoundedUniverse:
    return BoundedUniverse((2, 3), 1)


@pytest.fixture(scope="session")
def widened_universe() -> BoundedUniverse:
    """{2,3,5}, E = 2 plus the stand-in 7 and default ∞ (512 elements)"""
    return BoundedUniverse((2, 3, 5), 2, widened=True)


@pytest.fixture(scope="session")
def elements(universe):
    return enumerate_universe(universe)


@pytest.fixture(scope="session")
def small_corpus(universe):
    """Quick corpus for the default run"""
    return generate_corpus(seed=11, patches=40, sieves=80, universe=universe)


@pytest.fixture(scope="session")
def corpus(universe):
    """Acceptance-size corpus, seed and sizes from settings (200 patches, 500 sieves)"""
    return generate_corpus(universe=universe)


@pytest.fixture(scope="session")
def widened_corpus(widened_universe):
    """Acceptance-size corpus with SpecZ and default ∞ parameters"""
    return generate_corpus(universe=widened_universe)
