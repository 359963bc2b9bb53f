from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lie_breadth.errors import InvalidProfile, NotNilpotentOperator, ParseError
from lie_breadth.exact_linalg import (
    Matrix,
    format_rational,
    integer_rank_profile,
    jordan_type_from_profile,
    kernel_basis,
    parse_rational,
    rank,
    rank_profile,
    rref,
)

from oracles import jordan_type_oracle, sympy_rank


def ad_x1_g104():
    # ad X1 on g_{1,0,4}: e2 -> e3, e3 -> e4
    m = [[0] * 5 for _ in range(5)]
    m[2][1] = 1
    m[3][2] = 1
    return Matrix.from_rows(m)


def jordan_block(p):
    return [[int(j == i + 1) for j in range(p)] for i in range(p)]


# ---------------------------------------------------------------- rationals


@pytest.mark.parametrize("text, value", [
    ("0", Fraction(0)), ("7", Fraction(7)), ("-3", Fraction(-3)),
    ("1/2", Fraction(1, 2)), ("-22/7", Fraction(-22, 7)),
])
def test_parse_rational_canonical(text, value):
    assert parse_rational(text) == value
    assert format_rational(value) == text


@pytest.mark.parametrize("text", ["2/4", "-0", "3/1", "1/0", "01", "+1", "1.5", "", " 1", "a/b", "1/-2"])
def test_parse_rational_rejects_noncanonical(text):
    with pytest.raises(ParseError):
        parse_rational(text)


@given(st.fractions(max_denominator=10 ** 6))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# --------------------------------------------------------------------- rank


def test_rank_examples():
    assert rank(Matrix.zeros(3)) == 0
    assert rank(Matrix.identity(3)) == 3
    assert rank(ad_x1_g104()) == 2


small_ints = st.integers(-5, 5)


@st.composite
def int_matrices(draw, max_dim=6):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return [[draw(small_ints) for _ in range(c)] for _ in range(r)]


@st.composite
def rational_matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    q = st.fractions(min_value=-4, max_value=4, max_denominator=5)
    return [[draw(q) for _ in range(c)] for _ in range(r)]


@given(int_matrices())
def test_rank_matches_sympy_integer(rows):
    assert rank(Matrix.from_rows(rows)) == sympy_rank(rows)


@given(rational_matrices())
def test_rank_matches_sympy_rational(rows):
    assert rank(Matrix.from_rows(rows)) == sympy_rank(rows)


@given(rational_matrices())
def test_rank_nullity(rows):
    m = Matrix.from_rows(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert not any(m.apply(v))
    assert len(rref(ker, m.cols)[0]) == len(ker)


def test_rank_large_entries_exact():
    # rows nearly dependent with huge entries: floating point would misjudge this
    big = 10 ** 30
    rows = [[big, big + 1], [big + 1, big + 2]]
    assert rank(Matrix.from_rows(rows)) == 2
    rows = [[big, 2 * big], [3 * big, 6 * big]]
    assert rank(Matrix.from_rows(rows)) == 1


# ------------------------------------------------------------ rank profiles


def test_rank_profile_examples():
    assert rank_profile(Matrix.zeros(4)) == [4, 0]
    assert rank_profile(Matrix.from_rows(jordan_block(3))) == [3, 2, 1, 0]
    assert rank_profile(ad_x1_g104()) == [5, 2, 1, 0]


def test_rank_profile_not_nilpotent():
    with pytest.raises(NotNilpotentOperator):
        rank_profile(Matrix.identity(3))
    with pytest.raises(NotNilpotentOperator):
        integer_rank_profile([[0, 1], [1, 0]])


def test_jordan_type_examples():
    assert jordan_type_from_profile([4, 0]) == (1, 1, 1, 1)
    assert jordan_type_from_profile([5, 2, 1, 0]) == (3, 1, 1)
    assert jordan_type_from_profile([4, 2, 0]) == (2, 2)


@pytest.mark.parametrize("profile", [[4, 3, 0], [3, 1], [5, 2, 2, 0], [3, 3, 0]])
def test_jordan_type_invalid_profiles(profile):
    with pytest.raises(InvalidProfile):
        jordan_type_from_profile(profile)


@st.composite
def strictly_upper(draw, lo=3, hi=10):
    n = draw(st.integers(lo, hi))
    density = draw(st.sampled_from([0.15, 0.35, 0.7]))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.floats(0, 1)) < density:
                rows[i][j] = draw(st.integers(-3, 3))
    return rows


@given(strictly_upper())
def test_jordan_type_matches_conjugate_oracle(rows):
    profile = rank_profile(Matrix.from_rows(rows))
    parts = jordan_type_from_profile(profile)
    assert parts == jordan_type_oracle(rows)
    assert sum(parts) == len(rows)
    assert list(parts) == sorted(parts, reverse=True)
    diffs = [a - b for a, b in zip(profile, profile[1:])]
    assert all(a >= b for a, b in zip(diffs, diffs[1:])), "rank profile must be convex"


@st.composite
def conjugated_jordan(draw):
    parts = draw(st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda p: sorted(p, reverse=True)))
    n = sum(parts)
    j = [[0] * n for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p - 1):
            j[off + i][off + i + 1] = 1
        off += p
    # unit lower times unit upper is invertible over the integers
    low = [[1 if i == k else (draw(st.integers(-2, 2)) if k < i else 0) for k in range(n)] for i in range(n)]
    up = [[1 if i == k else (draw(st.integers(-2, 2)) if k > i else 0) for k in range(n)] for i in range(n)]
    p = Matrix.from_rows(low) @ Matrix.from_rows(up)
    return tuple(parts), p, Matrix.from_rows(j)


@given(conjugated_jordan())
def test_jordan_type_invariant_under_conjugation(case):
    parts, p, j = case
    # P^-1 by row reducing [P | I]
    n = p.rows
    aug = [list(p.row(i)) + [Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    reduced, _ = rref(aug, 2 * n)
    p_inv = Matrix.from_rows([row[n:] for row in reduced])
    m = p @ j @ p_inv
    assert jordan_type_from_profile(rank_profile(m)) == parts
