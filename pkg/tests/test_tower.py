"""Slot layouts, standard embeddings, normalized trace and the M_s tower"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Rational

from src.core.errors import DomainError, ParseError
from src.core.supernat import parse_supernatural
from src.oracle import enumerate_universe
from src.spectral import cofinal_sequence
from src.bigcell import tower_supernatural
from src.tower import (
    SlotLayout,
    TowerMatrix,
    compose_assignments,
    format_matrix,
    identity,
    matrix_unit,
    matrix_units,
    normalized_trace,
    parse_matrix,
    slot_assignment,
    standard_embedding,
    tower_layouts,
    trace_axioms_hold,
    uhf_class,
    zero_matrix,
)
from tests.strategies import matrices, row_map

S = parse_supernatural


def divisor_triples(limit: int):
    for n in range(1, limit + 1):
        for m in range(n, limit + 1, n):
            for k in range(m, limit + 1, m):
                yield n, m, k


# =============================================================================
# LAYOUTS
# =============================================================================


def test_layouts():
    layout = SlotLayout.of(12)
    assert layout.slots == (2, 2, 3)
    assert layout.strides() == (6, 3, 1)
    assert layout.linearize((1, 0, 2)) == 8
    assert layout.delinearize(8) == (1, 0, 2)
    assert list(SlotLayout.of(4).indices()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert str(layout) == "12[2,2,3]"
    assert SlotLayout.of(1).slots == ()
    with pytest.raises(DomainError):
        SlotLayout(6, (3, 2))
    with pytest.raises(DomainError):
        layout.linearize((2, 0, 0))


def test_slot_assignment_examples():
    assert slot_assignment(6, 12) == {0: 0, 1: 2}
    assert slot_assignment(12, 12) == {0: 0, 1: 1, 2: 2}
    assert slot_assignment(1, 30) == {}
    with pytest.raises(DomainError):
        slot_assignment(4, 6)


def test_slot_assignments_compose():
    for n, m, k in divisor_triples(144):
        composed = compose_assignments(slot_assignment(n, m), slot_assignment(m, k))
        assert composed == slot_assignment(n, k), (n, m, k)


# =============================================================================
# STANDARD EMBEDDINGS
# =============================================================================


def test_standard_embedding_example():
    image = standard_embedding(matrix_unit(2, 0, 1), 4)
    ones = {(i, j) for i in range(4) for j in range(4) if image.entries[i, j] == 1}
    assert ones == {(0, 2), (1, 3)}
    assert sum(image.entries) == 2


def test_standard_embedding_of_identity_and_scalars():
    for n, m in [(1, 6), (2, 12), (3, 12), (6, 30)]:
        assert standard_embedding(identity(n), m) == identity(m)
        assert standard_embedding(identity(n) * 5, m) == identity(m) * 5


def test_functoriality_on_matrix_units():
    for n, m, k in divisor_triples(24):
        for u in matrix_units(n):
            assert standard_embedding(standard_embedding(u, m), k) == standard_embedding(u, k), (n, m, k)



def unit_support(n: int, a: int, b: int, m: int):
    rows = row_map(n, m)
    return {
        (R, C)
        for R, (source_r, free_r) in enumerate(rows)
        for C, (source_c, free_c) in enumerate(rows)
        if source_r == a and source_c == b and free_r == free_c
    }


def test_row_maps_describe_unit_images():
    for n, m in sorted({(n, m) for n, m, _ in divisor_triples(12)}):
        for a in range(n):
            for b in range(n):
                image = standard_embedding(matrix_unit(n, a, b), m)
                support = {(R, C) for R in range(m) for C in range(m) if image.entries[R, C] != 0}
                assert support == unit_support(n, a, b, m), (n, m, a, b)
                assert all(image.entries[R, C] == 1 for R, C in support)


@pytest.mark.slow
def test_functoriality_on_every_matrix_unit_up_to_144():
    # every e_ab agrees iff the source rows agree and the free parts split rows alike
    for n, m, k in divisor_triples(144):
        inner, outer, direct = row_map(n, m), row_map(m, k), row_map(n, k)
        composed = [(inner[r][0], (inner[r][1], free)) for r, free in outer]
        assert [c[0] for c in composed] == [d[0] for d in direct], (n, m, k)
        keys = [c[1] for c in composed]
        frees = [d[1] for d in direct]
        assert len(set(zip(keys, frees))) == len(set(keys)) == len(set(frees)), (n, m, k)


def test_units_stay_units_and_multiply():
    for n, m in [(2, 4), (2, 6), (3, 6), (4, 8), (6, 12)]:
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    lhs = standard_embedding(matrix_unit(n, i, j), m) * standard_embedding(matrix_unit(n, j, l), m)
                    assert lhs == standard_embedding(matrix_unit(n, i, l), m)


@pytest.mark.property_based
@given(st.sampled_from([(2, 4), (2, 6), (3, 6), (2, 12), (4, 12)]), st.data())
@settings(max_examples=40, deadline=None)
def test_standard_embedding_is_a_unital_homomorphism(pair, data):
    n, m = pair
    x = data.draw(matrices(n))
    y = data.draw(matrices(n))
    assert standard_embedding(x * y, m) == standard_embedding(x, m) * standard_embedding(y, m)
    assert standard_embedding(x + y, m) == standard_embedding(x, m) + standard_embedding(y, m)


def test_stage_checks():
    with pytest.raises(DomainError):
        identity(2) + identity(3)
    with pytest.raises(DomainError):
        standard_embedding(identity(4), 6)
    with pytest.raises(DomainError):
        matrix_unit(2, 2, 0)
    with pytest.raises(DomainError):
        TowerMatrix.from_rows([[1, 2, 3], [4, 5, 6]])


# =============================================================================
# TRACE
# =============================================================================


def test_normalized_trace():
    assert normalized_trace(identity(6)) == 1
    assert normalized_trace(matrix_unit(4, 1, 1)) == Rational(1, 4)
    assert normalized_trace(matrix_unit(4, 0, 1)) == 0
    assert normalized_trace(zero_matrix(3)) == 0


@pytest.mark.property_based
@given(st.sampled_from([1, 2, 3, 4]), st.data())
@settings(max_examples=40, deadline=None)
def test_trace_axioms(n, data):
    x = data.draw(matrices(n))
    y = data.draw(matrices(n))
    assert trace_axioms_hold(x, y)
    assert trace_axioms_hold(x, y, m=6 * n)


# =============================================================================
# TOWERS
# =============================================================================


def test_tower_layouts_and_class():
    layouts = tower_layouts("2^inf*3", 3)
    assert [str(layout) for layout in layouts] == ["2[2]", "12[2,2,3]", "24[2,2,2,3]"]
    assert uhf_class(layouts, ratio=2) == S("2^inf*3")
    assert uhf_class([6]) == S("6")


def test_cofinal_tower_round_trip(universe):
    for s in enumerate_universe(universe):
        sequence = cofinal_sequence(s, 6)
        ratio = sequence.tail.ratio if sequence.tail else None
        assert tower_supernatural(list(sequence.prefix), ratio) == s, s


# =============================================================================
# TEXT FORM
# =============================================================================


def test_matrix_text():
    x = parse_matrix("1/2,0;0,-1")
    assert x.rows() == [[Rational(1, 2), 0], [0, -1]]
    assert format_matrix(x) == "1/2,0;0,-1"
    assert parse_matrix("7") == identity(1) * 7
    for bad in ["1,2;3", "1,x;0,1", "1/0", "1,2", "²,0;0,1", "1/٣"]:
        with pytest.raises(ParseError):
            parse_matrix(bad)


@pytest.mark.property_based
@given(st.sampled_from([1, 2, 3]), st.data())
@settings(max_examples=30)
def test_matrix_text_round_trip(n, data):
    x = data.draw(matrices(n))
    assert parse_matrix(format_matrix(x)) == x
