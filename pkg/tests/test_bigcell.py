"""Sieves, K_S covers, subcovers, point certificates and the trivializing criterion"""

from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config.settings import settings as app_settings
from src.bigcell import (
    CertificateKind,
    PointCertificate,
    Sieve,
    cover_witness,
    empty_sieve,
    finite_subcover,
    format_sieve,
    is_cover,
    is_trivializing_zariski,
    maximal_sieve,
    parse_sieve,
    point_certificate,
    pullback,
    sigma_cover_law,
    tower_supernatural,
    verify_certificate,
)
from src.core.errors import DomainError, ParseError, PreconditionError, SolverLimitError
from src.core.supernat import SupernaturalNumber, natural_divides, parse_supernatural
from src.oracle import enumerate_universe, naive_cover, naive_members
from src.spectral import (
    DivisorClosure,
    Empty,
    FgOpen,
    Full,
    Intersection,
    MultiplesOf,
    NotAbove,
    PowerSetPrimes,
    SpecZ,
    Union,
)
from tests.strategies import patches, sieves, universe_naturals, universe_supernaturals

S = parse_supernatural


# =============================================================================
# SIEVES
# =============================================================================


def test_sieve_membership():
    L = Sieve(2, (6, 10))
    assert L.contains(30) and L.contains(12)
    assert not L.contains(4) and not L.contains(3)
    assert L.covers_point(S("2^inf*3"))
    assert not L.covers_point(S("2^inf*7"))
    assert maximal_sieve(4).is_maximal() and empty_sieve(4).is_empty()
    with pytest.raises(DomainError):
        Sieve(2, (9,))


def test_pullback_examples():
    assert pullback(Sieve(2, (6, 10)), 4) == Sieve(4, (12, 20))
    assert pullback(maximal_sieve(3), 12) == maximal_sieve(12)
    assert pullback(empty_sieve(2), 8) == empty_sieve(8)
    assert pullback(Sieve(2, (4, 8)), 8) == Sieve(8, (8,))
    with pytest.raises(DomainError):
        pullback(Sieve(2, (6,)), 9)


def test_sieve_text():
    assert parse_sieve("base:2 gens:6,10") == Sieve(2, (6, 10))
    assert parse_sieve("base:5 gens:") == empty_sieve(5)
    assert format_sieve(Sieve(2, (6, 10))) == "base:2 gens:6,10"
    assert parse_sieve(format_sieve(Sieve(3, (3, 9)))) == Sieve(3, (3, 9))
    for bad in ["base:0 gens:", "gens:2", "base:2 gens:6,x", "base:2 gens:6,²", "base:² gens:"]:
        with pytest.raises(ParseError):
            parse_sieve(bad)
    with pytest.raises(DomainError):
        parse_sieve("base:2 gens:7")


# =============================================================================
# COVERS
# =============================================================================


def test_cover_examples():
    assert is_cover(Sieve(2, (12,)), MultiplesOf(S("2^inf*3^inf")))
    assert is_cover(empty_sieve(5), DivisorClosure(S("8")))
    assert not is_cover(Sieve(1, (6,)), SpecZ())
    assert cover_witness(Sieve(1, (6,)), SpecZ()) == SupernaturalNumber.s_p(2)
    assert is_cover(Sieve(1, (2, 3)), SpecZ())
    assert not is_cover(Sieve(1, (2,)), SpecZ())


def test_finite_subcover_examples():
    assert finite_subcover(Sieve(1, (2, 3, 5, 7, 11)), SpecZ()) == [2, 3]
    assert finite_subcover(Sieve(2, (4, 2)), MultiplesOf(S("2^inf"))) == [4]
    assert finite_subcover(Sieve(6, (12,)), MultiplesOf(S("2^inf*3^inf"))) == [12]
    assert finite_subcover(empty_sieve(5), DivisorClosure(S("8"))) == []
    with pytest.raises(PreconditionError):
        finite_subcover(Sieve(1, (6,)), SpecZ())


@pytest.mark.oracle
def test_sigma_cover_law(universe):
    naturals = universe.naturals()
    subsets = chain.from_iterable(combinations((2, 3, 5), k) for k in range(4))
    for sigma in subsets:
        S_sigma = MultiplesOf(SupernaturalNumber.s_sigma(sigma))
        for n in naturals:
            for m in naturals:
                if m % n == 0:
                    assert is_cover(Sieve(n, (m,)), S_sigma) == sigma_cover_law(n, m, sigma), (n, m, sigma)


@pytest.mark.oracle
@pytest.mark.property_based
@given(st.one_of(patches(), patches(widened=True)), sieves())
@settings(max_examples=150, deadline=None)
def test_covers_match_widened_oracle(widened_universe, S_, L):
    expected = naive_cover(L.base, L.generators, S_, widened_universe)
    assert is_cover(L, S_) == expected
    witness = cover_witness(L, S_)
    assert (witness is None) == expected


@pytest.mark.property_based
@given(patches(), sieves(), universe_naturals())
@settings(max_examples=100, deadline=None)
def test_grothendieck_axioms(S_, L, k):
    assert is_cover(maximal_sieve(L.base), S_)
    m = L.base * k
    if is_cover(L, S_):
        assert is_cover(pullback(L, m), S_)


@pytest.mark.property_based
@given(patches(), sieves(), st.lists(universe_naturals(), max_size=4))
@settings(max_examples=100, deadline=None)
def test_transitivity(S_, L, extra):
    R = Sieve(L.base, tuple(dict.fromkeys(L.base * k for k in extra)))
    if is_cover(L, S_) and all(is_cover(pullback(R, g), S_) for g in L.generators):
        assert is_cover(R, S_)


@pytest.mark.property_based
@given(patches(), sieves())
@settings(max_examples=100, deadline=None)
def test_subcover_covers_and_is_irredundant(S_, L):
    if not is_cover(L, S_):
        with pytest.raises(PreconditionError):
            finite_subcover(L, S_)
        return
    kept = finite_subcover(L, S_)
    assert set(kept) <= set(L.generators)
    assert is_cover(L.with_generators(kept), S_)
    for i in range(len(kept)):
        assert not is_cover(L.with_generators(kept[:i] + kept[i + 1:]), S_)


# =============================================================================
# POINTS
# =============================================================================


def test_point_examples():
    assert point_certificate(SupernaturalNumber.s_p(5), SpecZ()) == PointCertificate.member()
    certificate = point_certificate(S("2^inf"), SpecZ())
    assert certificate == PointCertificate.non_point(1, [3, 5])
    assert certificate.kind is CertificateKind.NON_POINT
    assert verify_certificate(S("2^inf"), SpecZ(), certificate)
    assert not verify_certificate(S("2^inf"), SpecZ(), PointCertificate.non_point(1, [3]))
    assert not verify_certificate(S("2^inf"), SpecZ(), PointCertificate.non_point(1, [2, 3, 5]))


def test_point_certificate_for_finite_sets():
    S_ = Union((DivisorClosure(S("4")), FgOpen((9,))))
    certificate = point_certificate(S("8"), S_)
    assert not certificate.is_member
    assert verify_certificate(S("8"), S_, certificate)
    assert point_certificate(S("2"), S_).is_member


def test_point_certificate_iteration_cap(monkeypatch):
    monkeypatch.setattr(app_settings, "POINT_ITERATION_CAP", 1)
    with pytest.raises(SolverLimitError):
        point_certificate(S("2^inf"), SpecZ())


@pytest.mark.property_based
@given(universe_supernaturals())
@settings(max_examples=50, deadline=None)
def test_full_has_every_point(s):
    assert point_certificate(s, Full()).is_member


@pytest.mark.property_based
@given(universe_supernaturals(), patches())
@settings(max_examples=150, deadline=None)
def test_point_certificates_verify(s, S_):
    certificate = point_certificate(s, S_)
    assert certificate.is_member == S_.contains(s)
    assert verify_certificate(s, S_, certificate)
    if not certificate.is_member:
        assert natural_divides(certificate.n, s)
        assert not any(natural_divides(m, s) for m in certificate.family)


# =============================================================================
# TRIVIALIZING CRITERION
# =============================================================================


@pytest.mark.parametrize(
    "S_, expected",
    [
        (PowerSetPrimes(), True),
        (DivisorClosure(S("12")), False),
        (Intersection((Full(), PowerSetPrimes())), True),
        (Intersection((DivisorClosure(S("12")), PowerSetPrimes())), True),
        (SpecZ(), True),
        (Empty(), True),
        (Full(), False),
        (MultiplesOf(S("2^inf*3^inf*5^inf")), False),
        (Intersection((MultiplesOf(S("2^inf")), DivisorClosure(S("2^inf")))), True),
        (Intersection((MultiplesOf(S("2^inf")), DivisorClosure(S("2^inf*3^inf")))), False),
        (Union((SpecZ(), NotAbove(2))), False),
    ],
)
def test_trivializing_examples(S_, expected):
    assert is_trivializing_zariski(S_) == expected


@pytest.mark.oracle
@pytest.mark.property_based
@given(st.one_of(patches(), patches(widened=True)))
@settings(max_examples=150, deadline=None)
def test_trivializing_matches_oracle(widened_universe, S_):
    expected = all(s.is_completely_infinite() for s in naive_members(S_, widened_universe))
    assert is_trivializing_zariski(S_) == expected


# =============================================================================
# TOWERS
# =============================================================================


def test_tower_supernatural():
    assert tower_supernatural([2, 12, 24], ratio=2) == S("2^inf*3")
    assert tower_supernatural([6]) == S("6")
    assert tower_supernatural([2, 6, 30]) == S("30")
    with pytest.raises(DomainError):
        tower_supernatural([2, 3])
    with pytest.raises(DomainError):
        tower_supernatural([])


# =============================================================================
# CORPUS SWEEPS
# =============================================================================


@pytest.mark.oracle
def test_corpus_covers_match_oracle(small_corpus):
    for L, S_ in small_corpus.pairs(per_sieve=2):
        assert is_cover(L, S_) == naive_cover(L.base, L.generators, S_, small_corpus.universe), (L, S_)


@pytest.mark.oracle
def test_corpus_points(small_corpus):
    elements = enumerate_universe(small_corpus.universe)
    for S_ in small_corpus.patches[:10]:
        for s in elements:
            certificate = point_certificate(s, S_)
            assert certificate.is_member == S_.contains(s)
            assert verify_certificate(s, S_, certificate)


@pytest.mark.slow
@pytest.mark.oracle
def test_full_corpus_covers_match_oracle(corpus):
    assert len(corpus.patches) >= 200 and len(corpus.sieves) >= 500
    for L, S_ in corpus.pairs(per_sieve=1):
        assert is_cover(L, S_) == naive_cover(L.base, L.generators, S_, corpus.universe), (L, S_)
