from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobilie.linalg import (
    Matrix,
    SingularMatrixError,
    Vector,
    as_fraction,
    format_fraction,
    rational_sqrt,
    solve_affine,
)

fractions = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)


def test_as_fraction_accepts_strings_and_rejects_floats():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(-2) == Fraction(-2)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_format_fraction():
    assert format_fraction(Fraction(4, 2)) == "2"
    assert format_fraction(Fraction(-3, 6)) == "-1/2"


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_vector_ops():
    v = Vector([1, "1/2", -2])
    w = Vector([0, 2, 1])
    assert (v + w).entries == (Fraction(1), Fraction(5, 2), Fraction(-1))
    assert (v - w).entries == (Fraction(1), Fraction(-3, 2), Fraction(-3))
    assert v.dot(w) == Fraction(-1)
    assert (-v) == v.scale(-1)
    assert Vector.unit(3, 1)[1] == 1
    assert Vector.zero(2).is_zero()


def test_matrix_requires_square():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3, 4], [5, 6]])


def test_matrix_product_and_inverse():
    A = Matrix([[1, 2], [3, "7/2"]])
    I = Matrix.identity(2)
    Ainv = A.inverse()
    assert A * Ainv == I
    assert Ainv * A == I
    assert A.det() == Fraction(7, 2) - 6
    assert (A * Vector([1, 0])) == Vector([1, 3])


def test_singular_inverse_raises():
    A = Matrix([[1, 2], [2, 4]])
    assert A.det() == 0
    with pytest.raises(SingularMatrixError):
        A.inverse()


def test_transpose_and_trace():
    A = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert A.transpose().rows[0] == (1, 4, 7)
    assert A.trace() == 16
    assert A.det() == -3


@settings(max_examples=60, deadline=None)
@given(st.lists(fractions, min_size=9, max_size=9))
def test_inverse_roundtrip_3x3(entries):
    A = Matrix([entries[0:3], entries[3:6], entries[6:9]])
    if A.det() == 0:
        with pytest.raises(SingularMatrixError):
            A.inverse()
    else:
        assert A * A.inverse() == Matrix.identity(3)
        assert A.inverse().det() * A.det() == 1


def test_solve_affine_unique():
    sol = solve_affine([[1, 1], [1, -1]], [3, 1])
    assert sol is not None
    particular, basis = sol
    assert particular == [Fraction(2), Fraction(1)]
    assert basis == []


def test_solve_affine_underdetermined():
    sol = solve_affine([[1, 1, 0]], [2])
    assert sol is not None
    particular, basis = sol
    assert len(basis) == 2
    assert particular[0] + particular[1] == 2


def test_solve_affine_inconsistent():
    assert solve_affine([[1, 1], [2, 2]], [1, 3]) is None


def test_values_are_immutable():
    A = Matrix([[1, 2], [3, 4]])
    v = Vector([1, 2])
    with pytest.raises(AttributeError):
        A.rows = ()
    with pytest.raises(AttributeError):
        v.entries = ()
    with pytest.raises(TypeError):
        A.rows[0][0] = 7
