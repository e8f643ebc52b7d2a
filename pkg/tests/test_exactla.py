from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from comodcalc.exactla import (
    GF, QQ, ExactField, Mat, Quotient, Subspace, DimensionError,
    coequalizer_quotient, equalizer, image, intertwiners, invariant_closure, kernel, solve,
    stacked_kernel, swap_matrix, unvec, vec,
)
from oracles import all_subspaces, all_vectors

FIELDS = [GF(2), GF(3), GF(5), QQ]


def mats(F, max_rows=4, max_cols=4):
    if F.p is None:
        elem = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    else:
        elem = st.integers(0, F.p - 1)

    @st.composite
    def build(draw):
        r = draw(st.integers(0, max_rows))
        c = draw(st.integers(0, max_cols))
        rows = [[draw(elem) for _ in range(c)] for _ in range(r)]
        return Mat(F, r, c, [[F(x) for x in row] for row in rows])
    return build()


field_st = st.sampled_from(FIELDS)


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        ExactField(4)


def test_gf_arithmetic_reduces():
    F = GF(7)
    assert F(-1) == 6 and F(Fraction(1, 2)) == 4 and F.inv(3) * 3 % 7 == 1


def test_rational_codec_exact():
    assert QQ.decode(QQ.encode(Fraction(3, 7))) == Fraction(3, 7)
    assert QQ.encode(Fraction(-6, 4)) == "-3/2"
    with pytest.raises(ValueError):
        GF(3).decode("1/2")


@given(st.data())
def test_rank_nullity(data):
    F = data.draw(field_st)
    A = data.draw(mats(F))
    assert A.rank + kernel(A).dim == A.cols
    assert image(A).dim == A.rank
    for v in kernel(A).basis.columns():
        assert (A @ v).is_zero()


@given(st.data())
def test_solve_finds_preimages(data):
    F = data.draw(field_st)
    A = data.draw(mats(F))
    x = Mat(F, A.cols, 1, [[F(data.draw(st.integers(-2, 2)))] for _ in range(A.cols)])
    b = A @ x
    y = solve(A, b)
    assert y is not None and A @ y == b


@given(st.data())
def test_inverse(data):
    F = data.draw(field_st)
    A = data.draw(mats(F, 3, 3))
    if A.rows == A.cols and A.rank == A.rows:
        assert A @ A.inverse() == Mat.identity(F, A.rows)


@given(st.data())
def test_transpose_and_kron_mixed_product(data):
    F = data.draw(field_st)
    A, B = data.draw(mats(F, 2, 2)), data.draw(mats(F, 2, 2))
    C = data.draw(mats(F, 2, 2))
    D = data.draw(mats(F, 2, 2))
    if A.cols == C.rows and B.cols == D.rows:
        assert A.kron(B) @ C.kron(D) == (A @ C).kron(B @ D)
    assert A.T.T == A


@pytest.mark.parametrize("F", [GF(2), GF(3)])
def test_subspace_lattice_against_enumeration(F):
    n = 3 if F.p == 2 else 2
    subs = all_subspaces(F, n)
    # number of subspaces of F_2^3 is 16, of F_3^2 is 6
    assert len(subs) == (16 if F.p == 2 else 6)
    for a, b in itertools.product(subs[:8], repeat=2):
        inter = {tuple(v.flat()) for v in all_vectors(F, n) if a.contains(v) and b.contains(v)}
        assert {tuple(v.flat()) for v in all_vectors(F, n) if (a & b).contains(v)} == inter
        assert (a + b).dim == a.dim + b.dim - (a & b).dim


def test_kernel_against_enumeration():
    F = GF(2)
    A = Mat.from_rows(F, [[1, 1, 0, 1], [0, 1, 1, 1]])
    brute = {tuple(v.flat()) for v in all_vectors(F, 4) if (A @ v).is_zero()}
    K = kernel(A)
    assert len(brute) == 2 ** K.dim
    assert all(K.contains(Mat.column(F, list(v))) for v in brute)


def test_quotient_section_projection():
    F = QQ
    S = Subspace.span(F, 3, Mat.column(F, [1, 1, 0]))
    q = Quotient.of(S)
    assert q.dim == 2
    assert q.proj @ q.section == Mat.identity(F, 2)
    assert (q.proj @ S.basis).is_zero()


def test_equalizer_and_coequalizer():
    F = GF(3)
    f = Mat.from_rows(F, [[1, 0], [0, 1]])
    g = Mat.from_rows(F, [[1, 0], [0, 2]])
    assert equalizer(f, g).dim == 1
    assert coequalizer_quotient(f, g).dim == 1


def test_stacked_kernel_is_common_kernel():
    F = GF(5)
    A = Mat.from_rows(F, [[1, 2, 0]])
    B = Mat.from_rows(F, [[0, 1, 1]])
    K = stacked_kernel(F, 3, [A, B])
    assert K.cols == 1 and (A @ K).is_zero() and (B @ K).is_zero()


def test_swap_vec_unvec():
    F = QQ
    X = Mat.from_rows(F, [[1, 2, 3], [4, 5, 6]])
    assert unvec(vec(X), 2, 3, F) == X
    S = swap_matrix(F, 2, 3)
    a, b = Mat.column(F, [1, 2]), Mat.column(F, [3, 4, 5])
    assert S @ a.kron(b) == b.kron(a)


def test_invariant_closure_and_intertwiners():
    F = GF(2)
    J = Mat.from_rows(F, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    W = invariant_closure(F, 3, [J], Mat.column(F, [0, 0, 1]))
    assert W.dim == 3
    # commutant of a regular nilpotent is the polynomials in it
    assert len(intertwiners(F, [J], [J], 3, 3)) == 3


def test_shape_errors():
    F = GF(2)
    with pytest.raises(DimensionError):
        Mat.identity(F, 2) @ Mat.identity(F, 3)
    with pytest.raises(DimensionError):
        Mat(F, 2, 2, [[1]])
