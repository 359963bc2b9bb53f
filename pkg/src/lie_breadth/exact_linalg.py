"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`. Ranks are computed by integer
elimination after clearing denominators, which keeps every quantity exact
and avoids the cost of rational arithmetic in the inner loops.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidProfile, NotNilpotentOperator, ParseError

Rational = Fraction
Vector = tuple  # tuple of Fraction, 0-based

_RATIONAL_RE = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical ``"p/q"`` / ``"p"`` form. Non-reduced input is rejected."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    sign, num, den = m.groups()
    if den is None:
        if sign and num == "0":
            raise ParseError(f"non-canonical rational {text!r}")
        return Fraction(int(sign + num))
    value = Fraction(int(sign + num), int(den))
    if value.denominator != int(den) or den == "1":
        raise ParseError(f"non-canonical rational {text!r}")
    return value


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    """The 1-based basis vector ``e_i`` of length ``n``."""
    if not 1 <= i <= n:
        raise DimensionMismatch(f"basis index {i} outside 1..{n}")
    return tuple(Fraction(1 if k == i - 1 else 0) for k in range(n))


def format_vector(v: Sequence) -> str:
    return "(" + ",".join(format_rational(x) for x in v) + ")"


def _lcm_denominators(values: Iterable[Fraction]) -> int:
    d = 1
    for x in values:
        d = math.lcm(d, Fraction(x).denominator)
    return d


def integer_scaled(v: Sequence) -> list[int]:
    """Positive multiple of ``v`` with integer entries (same span)."""
    d = _lcm_denominators(v)
    return [int(Fraction(x) * d) for x in v]


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        if not columns:
            return cls(nrows or 0, 0, ())
        nrows = len(columns[0])
        return cls.from_rows([[c[i] for c in columns] for i in range(nrows)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([list(self.column(j)) for j in range(self.cols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return tuple(sum((a * Fraction(b) for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def integer_rows(self) -> list[list[int]]:
        """Rows scaled by one common positive integer so that all entries are integers."""
        d = _lcm_denominators(self.entries)
        return [[int(x * d) for x in self.row(i)] for i in range(self.rows)]

    def __str__(self):
        return "\n".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))


def integer_echelon(vectors: Iterable[Sequence[int]]) -> list[list[int]]:
    """Row-echelon basis of the span of integer vectors.

    Fraction-free elimination; every stored row is divided by the gcd of its
    entries so coefficient growth stays moderate. Each row is zero at the
    pivot columns of the rows stored before it.
    """
    basis: list[list[int]] = []
    pivots: list[int] = []
    for v in vectors:
        r = list(v)
        for piv_col, b in zip(pivots, basis):
            c = r[piv_col]
            if c:
                p = b[piv_col]
                r = [p * x - c * y for x, y in zip(r, b)]
        lead = next((k for k, x in enumerate(r) if x), None)
        if lead is None:
            continue
        g = 0
        for x in r:
            if x:
                g = math.gcd(g, x)
        if r[lead] < 0:
            g = -g
        r = [x // g for x in r]
        basis.append(r)
        pivots.append(lead)
    return basis


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    return len(integer_echelon(rows))


def rank(m: Matrix) -> int:
    """Exact rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return integer_rank(integer_scaled(m.row(i)) for i in range(m.rows))


def _int_apply(rows: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(r, v) if a and b) for r in rows]


def integer_rank_profile(rows: Sequence[Sequence[int]]) -> list[int]:
    """Rank profile of a square integer matrix given by rows; see :func:`rank_profile`."""
    n = len(rows)
    profile = [n]
    # columns spanning the image of m^k, kept in echelon form
    image = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(n):
        image = integer_echelon(_int_apply(rows, v) for v in image)
        profile.append(len(image))
        if not image:
            return profile
    raise NotNilpotentOperator(f"matrix power never vanished after {n} steps")


def rank_profile(m: Matrix) -> list[int]:
    """Ranks of ``m^0, m^1, ...`` down to the first zero.

    Raises :class:`NotNilpotentOperator` if ``m^n`` is nonzero.
    """
    if m.rows != m.cols:
        raise DimensionMismatch("rank profile needs a square matrix")
    return integer_rank_profile(m.integer_rows())


def jordan_type_from_profile(profile: Sequence[int]) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent operator from its rank profile.

    The number of blocks of size exactly ``p`` is
    ``r[p-1] - 2 r[p] + r[p+1]`` (with ``r`` padded by zeros).
    """
    r = list(profile)
    if not r or r[-1] != 0:
        raise InvalidProfile(f"profile {tuple(profile)} does not end in 0")
    r += [0, 0]
    parts: list[int] = []
    for p in range(len(profile) - 1, 0, -1):
        count = r[p - 1] - 2 * r[p] + r[p + 1]
        if count < 0:
            raise InvalidProfile(f"profile {tuple(profile)} gives {count} blocks of size {p}")
        parts.extend([p] * count)
    if sum(parts) != profile[0]:
        raise InvalidProfile(f"profile {tuple(profile)} is not a nilpotent rank profile")
    return tuple(parts)


def rref(vectors: Iterable[Sequence], ncols: int | None = None) -> tuple[list[Vector], list[int]]:
    """Reduced row-echelon basis (over the rationals) and its pivot columns."""
    rows = [list(map(Fraction, v)) for v in vectors]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space ``{v : m v = 0}``."""
    reduced, pivots = rref([m.row(i) for i in range(m.rows)], m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis
