from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lie_breadth import catalog, models
from lie_breadth.errors import DimensionMismatch, IndexOutOfRange, JacobiViolation, NotNilpotent
from lie_breadth.exact_linalg import Matrix, basis_vector, zero_vector
from lie_breadth.lie import (
    Cochain2,
    LieAlgebra,
    Subspace,
    ad_matrix,
    ascending_series,
    bracket,
    center,
    derived_subalgebra,
    is_filiform,
    is_nilpotent,
    jacobi_check,
    lower_central_series,
    nilpotency_class,
)

from oracles import apply_vec, jacobi_residuals

e = basis_vector


def span(n, *idx):
    return Subspace.span(n, [e(n, i) for i in idx])


# ------------------------------------------------------------ construction


def test_cochain_normalises_pair_order():
    phi = Cochain2.from_dict(4, {(3, 1): {2: 1}, (1, 3): {4: 2}})
    assert phi.as_dict() == {(1, 3): {2: Fraction(-1), 4: Fraction(2)}}
    assert phi.on_basis(3, 1) == {2: Fraction(1), 4: Fraction(-2)}


@pytest.mark.parametrize("table", [{(2, 2): {1: 1}}, {(0, 1): {1: 1}}, {(1, 5): {1: 1}}, {(1, 2): {7: 1}}])
def test_cochain_rejects_bad_indices(table):
    with pytest.raises(IndexOutOfRange):
        Cochain2.from_dict(4, table)


def test_strict_mode_rejects_non_jacobi():
    table = {(1, 2): {3: 1}, (2, 3): {2: 1}}
    with pytest.raises(JacobiViolation):
        LieAlgebra.from_brackets("bad", 3, table)
    g = LieAlgebra.from_brackets("bad", 3, table, strict=False)
    assert jacobi_check(g)


# ----------------------------------------------------------------- bracket


def test_bracket_examples():
    g = models.g_1_0_k(5)
    assert bracket(g, e(5, 1), e(5, 2)) == e(5, 3)
    n120 = catalog.build("n7_120")
    assert bracket(n120, e(7, 2), e(7, 4)) == e(7, 7)
    with pytest.raises(DimensionMismatch):
        bracket(g, e(4, 1), e(5, 2))


vec5 = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=5, max_size=5)


@given(vec5, vec5, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_bracket_skew_bilinear(x, y, t):
    g = catalog.build("g_1_0_k_a", 5, {"a": 2})
    assert bracket(g, x, x) == zero_vector(5)
    assert bracket(g, x, y) == tuple(-v for v in bracket(g, y, x))
    sx = [t * a for a in x]
    assert bracket(g, sx, y) == tuple(t * v for v in bracket(g, x, y))
    assert list(bracket(g, x, y)) == apply_vec(g.brackets, 5, x, y)


# ------------------------------------------------------------------ jacobi


def test_jacobi_examples():
    assert jacobi_check(models.abelian(4)) == []
    assert jacobi_check(catalog.build("n7_96")) == []
    assert jacobi_residuals(catalog.build("n7_96").brackets, 7) == []


def test_cross_product_tables_always_satisfy_jacobi():
    # every cyclic term [[Xa,Xb],Xc] of a "cross product" table is a bracket of a vector with itself
    for signs in [(1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)]:
        table = {(2, 3): {1: signs[0]}, (1, 2): {3: signs[1]}, (1, 3): {2: signs[2]}}
        g = LieAlgebra.from_brackets("so3_like", 3, table, strict=False)
        assert jacobi_check(g) == [] == jacobi_residuals(table, 3)


def test_jacobi_single_violation():
    table = {(1, 2): {3: 1}, (2, 3): {2: 1}}
    g = LieAlgebra.from_brackets("bad", 3, table, strict=False)
    got = jacobi_check(g)
    assert [(i, j, k) for i, j, k, _ in got] == [(1, 2, 3)]
    assert got == jacobi_residuals(table, 3)


@st.composite
def sparse_tables(draw, lo=3, hi=6):
    n = draw(st.integers(lo, hi))
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if draw(st.booleans()) and draw(st.booleans()):
                k = draw(st.integers(1, n))
                table[(i, j)] = {k: draw(st.sampled_from([-2, -1, 1, 2]))}
    return n, table


@given(sparse_tables())
def test_jacobi_matches_dense_oracle(case):
    n, table = case
    g = LieAlgebra.from_brackets("rand", n, table, strict=False)
    assert jacobi_check(g) == jacobi_residuals(table, n)


# -------------------------------------------------------------- ad matrix


def test_ad_matrix_examples():
    g = models.g_1_0_k(5)
    assert ad_matrix(g, zero_vector(5)).is_zero()
    m = ad_matrix(g, e(5, 1))
    assert m.column(1) == e(5, 3) and m.column(2) == e(5, 4)
    assert sum(1 for j in range(5) if any(m.column(j))) == 2
    h = models.g_2_k(5)
    m = ad_matrix(h, e(5, 1))
    assert m.column(1) == e(5, 3) and m.column(3) == e(5, 5)
    with pytest.raises(DimensionMismatch):
        ad_matrix(g, e(4, 1))


@given(vec5, vec5)
def test_ad_matrix_linear(x, y):
    g = models.g_1_0_0_k(5)
    s = [a + b for a, b in zip(x, y)]
    lhs = ad_matrix(g, s)
    ax, ay = ad_matrix(g, x), ad_matrix(g, y)
    assert lhs.to_rows() == [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(ax.to_rows(), ay.to_rows())]


# ------------------------------------------------------ subspaces, series


def test_derived_subalgebra_examples():
    assert derived_subalgebra(models.abelian(4)).dim == 0
    for n in (4, 6, 8):
        assert derived_subalgebra(models.g_1_0_k(n)) == span(n, 3, 4)
    assert derived_subalgebra(models.heisenberg(7)).dim == 1


def test_center_examples():
    assert center(models.abelian(4)) == Subspace.whole(4)
    for n in (4, 5, 7):
        assert center(models.filiform_model(n)).dim == 1
    assert center(models.g_1_0_k(5)) == span(5, 4, 5)


def test_lower_central_series_examples():
    assert [s.dim for s in lower_central_series(models.abelian(3))] == [3, 0]
    for n in (5, 7, 9):
        assert [s.dim for s in lower_central_series(models.g_1_0_0_k(n))] == [n, 3, 2, 1, 0]
        assert [s.dim for s in lower_central_series(models.g_2_k(n))] == [n, 2, 0]


def test_ascending_series_examples():
    assert [s.dim for s in ascending_series(models.abelian(3))] == [0, 3]
    for n in (4, 6, 8):
        assert [s.dim for s in ascending_series(models.filiform_model(n))] == list(range(n - 1)) + [n]
    assert [s.dim for s in ascending_series(models.g_1_0_k(5))] == [0, 2, 3, 5]


def test_nilpotency_class_examples():
    assert nilpotency_class(models.abelian(4)) == 1
    for n in (4, 6, 9):
        assert nilpotency_class(models.g_1_0_k(n)) == 3
    for n in (5, 8):
        assert nilpotency_class(models.g_1_0_0_k(n)) == 4


def test_non_nilpotent_detected():
    sl2 = LieAlgebra.from_brackets("sl2", 3, {(1, 2): {3: 1}, (3, 1): {1: 2}, (3, 2): {2: -2}})
    assert not is_nilpotent(sl2)
    with pytest.raises(NotNilpotent):
        nilpotency_class(sl2)
    with pytest.raises(NotNilpotent):
        is_filiform(sl2)


def test_is_filiform_examples():
    assert is_filiform(models.filiform_model(4))
    assert not is_filiform(models.abelian(4))
    assert not is_filiform(models.g_2_k(5))


@pytest.mark.parametrize("key, n", [
    ("g_1_0_k", 6), ("g_2_k", 7), ("g_1_0_0_k", 8), ("g_3_k", 9), ("g_1_1_k", 7),
    ("n6_14", 6), ("n7_118", 7), ("n7_123", 7), ("rigid_g1", 9), ("filiform", 6),
])
def test_series_relations(key, n):
    g = catalog.build(key, n)
    lower = lower_central_series(g)
    upper = ascending_series(g)
    assert nilpotency_class(g) == len(lower) - 1 == len(upper) - 1
    z = center(g)
    assert z == upper[1]
    for s in upper[1:]:
        assert z.issubset(s)
    if len(lower) > 2:
        assert lower[2].issubset(derived_subalgebra(g))
    assert derived_subalgebra(g) == lower[1]


def test_subspace_contains():
    s = Subspace.span(3, [(1, 1, 0), (0, 2, 2)])
    assert s.dim == 2
    assert s.contains((1, 3, 2)) and not s.contains((0, 0, 1))
    assert Subspace(3).contains((0, 0, 0))
    assert Matrix.from_rows(list(s.basis)).rows == 2
