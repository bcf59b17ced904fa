import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from perfectnt import reference
from perfectnt.gf import ModulusMismatchError, PrimeField
from perfectnt.matrix import (
    FieldMatrix,
    SingularMatrixError,
    as_vector,
    char_poly,
    circulant_from_first_row,
    determinant,
    format_matrix_json,
    format_matrix_text,
    hstack,
    inverse,
    kernel_basis,
    multiplicative_order,
    parse_matrix,
    rank,
    rref,
    vstack,
)
from perfectnt.poly import FieldPoly, poly_gcd

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)


@st.composite
def square_matrices(draw, max_n=5):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, max_n))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    return FieldMatrix(PrimeField(p), rows)


@st.composite
def rect_matrices(draw, max_dim=6):
    p = draw(st.sampled_from([2, 3, 5]))
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
    return FieldMatrix(PrimeField(p), rows)


@st.composite
def square_pairs(draw, max_n=4):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, max_n))
    mk = lambda: draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    field = PrimeField(p)
    return FieldMatrix(field, mk()), FieldMatrix(field, mk())


def test_constructor_normalizes_and_freezes():
    m = FieldMatrix(GF3, [[-1, 4], [3, 5]])
    assert m.tolist() == [[2, 1], [0, 2]]
    with pytest.raises(ValueError):
        m.data[0, 0] = 1  # read-only array
    with pytest.raises(AttributeError):
        m.field = GF2
    with pytest.raises(ValueError):
        FieldMatrix(GF3, [1, 2, 3])  # 1-D


def test_shape_helpers():
    m = FieldMatrix(GF2, [[1, 0, 1], [0, 1, 1]])
    assert (m.rows, m.cols) == (2, 3)
    assert m.shape == (2, 3)
    assert m.row(1).tolist() == [0, 1, 1]
    assert m.column(2).tolist() == [1, 1]
    assert m.transpose().shape == (3, 2)
    assert m[1, 2] == 1


def test_arithmetic_and_equality():
    a = FieldMatrix(GF3, [[1, 2], [0, 1]])
    b = FieldMatrix(GF3, [[2, 2], [1, 0]])
    assert (a + b).tolist() == [[0, 1], [1, 1]]
    assert (a - b).tolist() == [[2, 0], [2, 1]]
    assert (a @ b).tolist() == [[1, 2], [1, 0]]
    assert a.scaled(2).tolist() == [[2, 4 % 3], [0, 2]]
    assert a == FieldMatrix(GF3, [[1, 2], [0, 1]])
    assert a != b
    with pytest.raises(ModulusMismatchError):
        _ = a + FieldMatrix(GF2, [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        _ = a + FieldMatrix(GF3, [[1, 2, 0]])
    with pytest.raises(ValueError):
        _ = a @ FieldMatrix(GF3, [[1, 2, 0]])


def test_mat_vec():
    m = FieldMatrix(GF2, reference.CYCLIC_HAMMING7_TRANSFORM)
    ones = m.mat_vec([1] * 7)
    assert ones.tolist() == [1] * 7
    with pytest.raises(ValueError):
        m.mat_vec([1, 0])
    with pytest.raises(ValueError):
        as_vector(GF2, [[1, 0]])


def test_stacking():
    a = FieldMatrix(GF2, [[1, 0]])
    b = FieldMatrix(GF2, [[0, 1]])
    assert vstack(a, b).tolist() == [[1, 0], [0, 1]]
    assert hstack(a, b).tolist() == [[1, 0, 0, 1]]
    with pytest.raises(ValueError):
        vstack(a, FieldMatrix(GF2, [[1]]))
    with pytest.raises(ValueError):
        hstack(a, FieldMatrix(GF2, [[1, 0], [0, 1]]))


def test_rref_known_case():
    m = FieldMatrix(GF3, [[1, 0, 2], [1, 1, 0], [2, 1, 1]])
    reduced, rk, pivots = rref(m)
    assert rk == 3
    assert pivots == (0, 1, 2)
    assert reduced == FieldMatrix.identity(GF3, 3)
    singular = FieldMatrix(GF3, [[1, 2], [2, 4]])
    reduced, rk, pivots = rref(singular)
    assert rk == 1
    assert pivots == (0,)
    assert reduced.tolist() == [[1, 2], [0, 0]]


def test_rref_is_idempotent_on_kernel():
    m = FieldMatrix(GF2, reference.CYCLIC_HAMMING7_PARITY)
    kb = kernel_basis(m)
    assert rref(kb)[0] == kb  # canonical form is a fixed point


def test_kernel_basis_annihilates():
    m = FieldMatrix(GF3, reference.TERNARY_HAMMING13_PARITY)
    kb = kernel_basis(m)
    assert kb.rows == 10
    assert np.count_nonzero((m.data @ kb.data.T) % 3) == 0
    full = FieldMatrix.identity(GF3, 4)
    assert kernel_basis(full).rows == 0


def test_kernel_invariant_under_row_operations():
    m = FieldMatrix(GF3, [[1, 2, 0, 1], [0, 1, 1, 1]])
    # replace row 1 by 2*row0 + row1: same row space, same kernel
    m2 = FieldMatrix(GF3, [[1, 2, 0, 1], [2, 2, 1, 0]])
    assert kernel_basis(m) == kernel_basis(m2)


def test_determinant_examples():
    assert determinant(FieldMatrix.identity(GF5, 4)) == 1
    assert determinant(FieldMatrix(GF3, [[1, 2], [2, 4]])) == 0
    assert determinant(FieldMatrix(GF3, [[0, 1], [1, 0]])) == 2  # swap sign
    with pytest.raises(ValueError):
        determinant(FieldMatrix(GF3, [[1, 2, 0]]))


def test_inverse_roundtrip_and_singular():
    m = FieldMatrix(GF5, [[1, 2], [3, 4]])
    inv = inverse(m)
    assert (m @ inv) == FieldMatrix.identity(GF5, 2)
    assert (inv @ m) == FieldMatrix.identity(GF5, 2)
    with pytest.raises(SingularMatrixError) as exc:
        inverse(FieldMatrix(GF3, [[1, 2], [2, 4]]))
    assert exc.value.det == 0


def test_char_poly_small_cases():
    # companion-style check: char poly of [[0,1],[1,0]] is x^2 - 1
    m = FieldMatrix(GF3, [[0, 1], [1, 0]])
    assert char_poly(m).coeffs == (2, 0, 1)
    ident = FieldMatrix.identity(GF2, 3)
    assert char_poly(ident).coeffs == (1, 1, 1, 1)  # (x-1)^3 = (x+1)^3 over GF(2)
    with pytest.raises(ValueError):
        char_poly(FieldMatrix(GF3, [[1, 2, 0]]))


def test_char_poly_constant_term_is_signed_det():
    m = FieldMatrix(GF5, [[1, 2, 0], [3, 4, 1], [0, 2, 2]])
    cp = char_poly(m)
    n = m.rows
    # det(xI - A) at x = 0 is (-1)^n det(A)
    assert cp.coeffs[0] == (pow(-1, n, 5) * determinant(m)) % 5


@settings(deadline=None)
@given(square_matrices())
def test_char_poly_matches_sympy(m):
    p = m.field.p
    x = sympy.Symbol("x")
    sym = sympy.Matrix(m.tolist()).charpoly(x).all_coeffs()  # descending
    expected = tuple(int(c) % p for c in reversed(sym))
    assert char_poly(m).coeffs == FieldPoly(expected, m.field).coeffs


@settings(deadline=None)
@given(square_pairs())
def test_determinant_is_multiplicative(pair):
    a, b = pair
    p = a.field.p
    assert determinant(a @ b) == (determinant(a) * determinant(b)) % p


@given(rect_matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).rows == m.cols


@settings(deadline=None)
@given(square_matrices(max_n=4))
def test_inverse_when_nonsingular(m):
    if determinant(m) == 0:
        with pytest.raises(SingularMatrixError):
            inverse(m)
        return
    assert (m @ inverse(m)) == FieldMatrix.identity(m.field, m.rows)


def test_cayley_hamilton_on_golden_transforms(golden):
    for t in golden.values():
        cp = char_poly(t.matrix)
        p = t.field.p
        n = t.n
        acc = np.zeros((n, n), dtype=np.int64)
        power = np.eye(n, dtype=np.int64)
        for c in cp.coeffs:
            acc = (acc + c * power) % p
            power = (power @ t.matrix.data) % p
        assert np.count_nonzero(acc) == 0, t.code.label


def test_multiplicative_order():
    assert multiplicative_order(FieldMatrix.identity(GF3, 4)) == 1
    assert multiplicative_order(FieldMatrix(GF3, [[0, 1], [1, 0]])) == 2
    assert multiplicative_order(FieldMatrix(GF3, [[2, 0], [0, 1]])) == 2
    with pytest.raises(SingularMatrixError):
        multiplicative_order(FieldMatrix(GF3, [[0, 0], [0, 0]]))
    # cap reached -> None
    m = FieldMatrix(GF5, [[2, 0], [0, 1]])  # order 4
    assert multiplicative_order(m, cap=3) is None
    assert multiplicative_order(m, cap=4) == 4


def test_circulant_construction():
    got = circulant_from_first_row(GF2, (1, 0, 1, 1, 1, 0, 0))
    assert got == FieldMatrix(GF2, reference.CYCLIC_HAMMING7_INFLATED)
    # entry law: (i, j) -> row0[(j - i) mod n]
    row0 = (0, 1, 2, 0, 1)
    c = circulant_from_first_row(GF3, row0)
    for i in range(5):
        for j in range(5):
            assert c[i, j] == row0[(j - i) % 5]


@given(
    st.sampled_from([2, 3]),
    st.integers(2, 11),
    st.data(),
)
def test_circulant_singular_iff_common_factor(p, n, data):
    field = PrimeField(p)
    row = data.draw(
        st.lists(st.integers(0, p - 1), min_size=n, max_size=n).map(tuple)
    )
    c = circulant_from_first_row(field, row)
    # the circulant of first row r is invertible exactly when the polynomial
    # r_0 + r_{n-1} x + ... (the first *column*) is a unit mod x^n - 1
    col_poly = FieldPoly(tuple(c.data[:, 0].tolist()), field)
    modulus = FieldPoly.monomial(field, n) - FieldPoly.one(field)
    g = poly_gcd(col_poly, modulus) if not col_poly.is_zero() else modulus
    assert (determinant(c) == 0) == (g.degree > 0)


def test_text_serialization_roundtrip():
    m = FieldMatrix(GF3, reference.TERNARY_HAMMING13_PARITY)
    text = format_matrix_text(m)
    assert text.splitlines()[0] == "3 3 13"
    assert parse_matrix(text) == m
    with_header = format_matrix_text(m, header="transform form=cyclic lambda=1 code=x")
    assert parse_matrix(with_header) == m


def test_json_serialization_roundtrip():
    m = FieldMatrix(GF2, reference.HAMMING74_TRANSFORM)
    assert parse_matrix(format_matrix_json(m)) == m


def test_parse_matrix_errors():
    with pytest.raises(ValueError):
        parse_matrix("")
    with pytest.raises(ValueError):
        parse_matrix("2 2 2\n1 0\n")  # missing row
    with pytest.raises(ValueError):
        parse_matrix("2 1 3\n1 0\n")  # short row
    with pytest.raises(ValueError):
        parse_matrix("2 2\n1 0\n0 1\n")  # bad dimension line
    with pytest.raises(ValueError):
        parse_matrix('{"rows": [[1]]}')  # missing p
    with pytest.raises(ValueError):
        parse_matrix("header only\n")
