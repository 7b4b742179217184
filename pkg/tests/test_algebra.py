"""Component algebras, truncation and representation checks"""

import pytest

from src.core.errors import DomainError, ParseError
from src.core.supernat import parse_supernatural
from src.tower import (
    AlgebraPresentation,
    ComponentAlgebra,
    TowerMatrix,
    check_representation,
    format_presentation,
    identity,
    matrix_unit,
    parse_presentation,
    push_assignment,
    truncate,
)

S = parse_supernatural


def test_truncation():
    A = ComponentAlgebra.of_degrees([2, 3])
    assert truncate(A, S("2^inf")).degrees == (2,)
    assert truncate(A, S("5")).is_zero()
    assert truncate(A, S("6")).degrees == (2, 3)
    assert truncate(A, S("1;default=inf")) == A
    with pytest.raises(DomainError):
        ComponentAlgebra.of_degrees([2, 2])


def test_involution_representation():
    R = parse_presentation("generators: x\nrelation: x^2 - 1")
    x = TowerMatrix.from_rows([[1, 0], [0, -1]])
    assert check_representation(R, {"x": x})
    assert not check_representation(R, {"x": identity(2) * 2})


def test_weyl_relation_has_no_matrix_representation():
    R = parse_presentation("generators: x, y\nrelation: x*y - y*x - 1")
    assert not check_representation(R, {"x": matrix_unit(2, 0, 1), "y": matrix_unit(2, 1, 0)})


def test_equation_form():
    R = parse_presentation("generators: x, y\nrelation: x*y = y*x\nrelation: x^2 = x")
    e = matrix_unit(2, 0, 0)
    assert check_representation(R, {"x": e, "y": identity(2) * 3})
    assert not check_representation(R, {"x": e, "y": matrix_unit(2, 0, 1)})


def test_push_keeps_representations():
    R = parse_presentation("generators: x\nrelation: x^2 - 1")
    pushed = push_assignment({"x": TowerMatrix.from_rows([[0, 1], [1, 0]])}, 4)
    assert pushed["x"].n == 4
    assert check_representation(R, pushed)


def test_presentation_errors():
    with pytest.raises(ParseError):
        parse_presentation("relation: x")
    with pytest.raises(ParseError):
        parse_presentation("generators: x\nrelation: x +* 1")
    with pytest.raises(ParseError):
        parse_presentation("generators: x\nrule: x")
    with pytest.raises(ParseError):
        parse_presentation("generators: x\ngenerators: y")
    with pytest.raises(DomainError):
        parse_presentation("generators: x\nrelation: x*y")
    with pytest.raises(DomainError):
        parse_presentation("generators: 1x")


def test_assignment_errors():
    R = parse_presentation("generators: x\nrelation: x^2 - 1")
    with pytest.raises(DomainError):
        check_representation(R, {})
    with pytest.raises(DomainError):
        check_representation(R, {"x": identity(2), "y": identity(2)})
    R2 = parse_presentation("generators: x, y")
    with pytest.raises(DomainError):
        check_representation(R2, {"x": identity(2), "y": identity(3)})


def test_presentation_text():
    text = "generators: x, y\n# comment\nrelation: x*y - y*x\n\nrelation: x^2 = 1"
    R = parse_presentation(text)
    assert R == AlgebraPresentation(("x", "y"), ("x*y - y*x", "x^2 = 1"))
    assert parse_presentation(format_presentation(R)) == R


# =============================================================================
# RELATION TEXT
# =============================================================================


@pytest.mark.parametrize(
    "relation, position",
    [
        ("x.subs.__func__.__globals__['__builtins__']['__import__']('os').system('true') + x", 1),
        ("x.foo", 1),
        ("'x'", 0),
        ("x[0]", 1),
        ("x^2, x", 3),
        ("x = x = x", 6),
        ("x^²", 2),
    ],
)
def test_relation_text_outside_the_grammar(relation, position):
    with pytest.raises(ParseError) as info:
        AlgebraPresentation(("x",), (relation,))
    assert info.value.position == position


def test_rejected_relations_never_reach_sympy(monkeypatch):
    def refuse(*args, **kwargs):
        raise AssertionError("parse_expr called")

    monkeypatch.setattr("src.tower.algebra.parse_expr", refuse)
    for relation in ["x.__class__", "x('os')", "x; y"]:
        with pytest.raises(ParseError):
            AlgebraPresentation(("x",), (relation,))


def test_reserved_names_and_zero_division():
    for name in ["__import__", "lambda", "Integer", "x.y"]:
        with pytest.raises(DomainError):
            AlgebraPresentation((name,))
    with pytest.raises(DomainError):
        AlgebraPresentation(("x",), ("Integer(2)*x",))
    with pytest.raises(DomainError):
        AlgebraPresentation(("x",), ("x/0",))
    R = AlgebraPresentation(("x",), ("x/2 - 1",))
    assert check_representation(R, {"x": identity(1) * 2})
