"""Skew-symmetric bracket tables, Lie algebras and their standard subspaces.

Structure constants are indexed 1-based, exactly as ``[X_i, X_j] = sum c X_k``
is written by hand; vectors are 0-based tuples of :class:`Fraction`, so
``X_i`` is ``basis_vector(n, i)`` with a 1 at position ``i - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, JacobiViolation, NotNilpotent
from .exact_linalg import (
    Matrix,
    Vector,
    basis_vector,
    format_rational,
    kernel_basis,
    rref,
)

Terms = Mapping[int, Fraction]


def _clean_terms(terms: Mapping[int, object], n: int, where: str) -> dict[int, Fraction]:
    out = {}
    for k, c in terms.items():
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"target index {k} outside 1..{n}", where)
        c = Fraction(c)
        if c:
            out[k] = out.get(k, Fraction(0)) + c
    return {k: c for k, c in sorted(out.items()) if c}


@dataclass(frozen=True)
class Cochain2:
    """A skew-symmetric bilinear map ``phi`` on ``K^n`` stored by its values on ``X_i, X_j``, ``i < j``."""

    dim: int
    values: tuple = ()  # sorted ((i, j), ((k, c), ...)) with i < j, c != 0

    @classmethod
    def from_dict(cls, dim: int, table: Mapping[tuple[int, int], Mapping[int, object]]) -> "Cochain2":
        """Build from ``{(i, j): {k: c}}``; pairs with ``i > j`` are negated into ``(j, i)``."""
        acc: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in table.items():
            where = f"[{i},{j}]"
            if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
                raise IndexOutOfRange(f"bracket indices must be distinct and in 1..{dim}", where)
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            slot = acc.setdefault((i, j), {})
            for k, c in _clean_terms(terms, dim, where).items():
                slot[k] = slot.get(k, Fraction(0)) + sign * c
        items = []
        for key in sorted(acc):
            terms = tuple((k, c) for k, c in sorted(acc[key].items()) if c)
            if terms:
                items.append((key, terms))
        return cls(dim, tuple(items))

    @classmethod
    def zero(cls, dim: int) -> "Cochain2":
        return cls(dim)

    def as_dict(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {key: dict(terms) for key, terms in self.values}

    @cached_property
    def _lookup(self) -> dict:
        return self.as_dict()

    def on_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """``phi(X_i, X_j)`` as sparse 1-based terms."""
        if i == j:
            return {}
        if i < j:
            return dict(self._lookup.get((i, j), {}))
        return {k: -c for k, c in self._lookup.get((j, i), {}).items()}

    def __call__(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"vectors must have length {n}")
        out = [Fraction(0)] * n
        for (i, j), terms in self.values:
            coeff = Fraction(x[i - 1]) * Fraction(y[j - 1]) - Fraction(x[j - 1]) * Fraction(y[i - 1])
            if coeff:
                for k, c in terms:
                    out[k - 1] += coeff * c
        return tuple(out)

    def __add__(self, other: "Cochain2") -> "Cochain2":
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")
        table: dict = self.as_dict()
        for key, terms in other.values:
            slot = table.setdefault(key, {})
            for k, c in terms:
                slot[k] = slot.get(k, Fraction(0)) + c
        return Cochain2.from_dict(self.dim, table)

    def scale(self, t) -> "Cochain2":
        t = Fraction(t)
        return Cochain2.from_dict(self.dim, {key: {k: t * c for k, c in terms} for key, terms in self.values})

    def __neg__(self) -> "Cochain2":
        return self.scale(-1)

    def __sub__(self, other: "Cochain2") -> "Cochain2":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.values

    def denominator(self) -> int:
        d = 1
        for _, terms in self.values:
            for _, c in terms:
                d = math.lcm(d, c.denominator)
        return d

    def max_abs_numerator(self) -> int:
        d = self.denominator()
        return max((abs(int(c * d)) for _, terms in self.values for _, c in terms), default=0)

    def kills_first_basis_vector(self) -> bool:
        return all(i != 1 for (i, _), _ in self.values)

    def describe(self) -> str:
        parts = []
        for (i, j), terms in self.values:
            rhs = " + ".join(f"{format_rational(c)}*X{k}" for k, c in terms)
            parts.append(f"[X{i},X{j}] = {rhs}")
        return "; ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of ``K^n`` carried by its reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = []
        for v in vectors:
            if len(v) != n:
                raise DimensionMismatch(f"vectors must have length {n}")
            if any(v):
                vecs.append(tuple(Fraction(x) for x in v))
        reduced, _ = rref(vecs, n)
        return cls(n, tuple(reduced))

    @cached_property
    def _pivots(self) -> tuple:
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls.span(n, [basis_vector(n, i) for i in range(1, n + 1)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vectors must have length {self.ambient_dim}")
        rest = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self._pivots):
            f = rest[p]
            if f:
                rest = [a - f * b for a, b in zip(rest, row)]
        return not any(rest)

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __len__(self):
        return self.dim


class LieAlgebra:
    """A finite-dimensional Lie algebra given by rational structure constants.

    In ``strict`` mode (the default) the Jacobi identity is verified at
    construction and :class:`JacobiViolation` is raised on failure. Lenient
    mode exists for studying near-miss tables.
    """

    def __init__(self, name: str, mu: Cochain2, strict: bool = True):
        self.name = name
        self.mu = mu
        self._memo: dict = {}  # derived data of the immutable table
        if strict:
            bad = jacobi_check(self)
            if bad:
                i, j, k, res = bad[0]
                raise JacobiViolation(
                    f"{name}: Jacobi identity fails at (X{i},X{j},X{k}) "
                    f"({len(bad)} violating triple(s))")

    @classmethod
    def from_brackets(cls, name: str, dim: int, table: Mapping, strict: bool = True) -> "LieAlgebra":
        return cls(name, Cochain2.from_dict(dim, table), strict=strict)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(f"abelian_{dim}", Cochain2.zero(dim))

    @property
    def dim(self) -> int:
        return self.mu.dim

    @property
    def brackets(self) -> dict:
        return self.mu.as_dict()

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.name == other.name and self.mu == other.mu

    def __hash__(self):
        return hash((self.name, self.mu))

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, {self.mu.describe()})"

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    @cached_property
    def _int_structure(self) -> tuple[int, list[list[tuple[int, int, int]]]]:
        # per first index i: sparse entries (row k, column j, value) of D * ad(X_i)
        d = self.mu.denominator()
        n = self.dim
        per_i: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        for (i, j), terms in self.mu.values:
            for k, c in terms:
                v = int(c * d)
                per_i[i - 1].append((k - 1, j - 1, v))
                per_i[j - 1].append((k - 1, i - 1, -v))
        return d, per_i

    def integer_ad(self, x: Sequence[int]) -> list[list[int]]:
        """Rows of ``D * ad(x)`` for an integer vector ``x``, ``D`` the common denominator."""
        n = self.dim
        rows = [[0] * n for _ in range(n)]
        _, per_i = self._int_structure
        for i, xi in enumerate(x):
            if xi:
                for k, j, v in per_i[i]:
                    rows[k][j] += xi * v
        return rows


def _check_dim(g: LieAlgebra, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != g.dim:
            raise DimensionMismatch(f"{g.name}: expected a vector of length {g.dim}, got {len(v)}")


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    _check_dim(g, x, y)
    return g.mu(x, y)


def _add_terms(acc: dict[int, Fraction], terms: Mapping[int, Fraction], scale: Fraction) -> None:
    for k, c in terms.items():
        acc[k] = acc.get(k, Fraction(0)) + scale * c


def _bracket_terms(mu: Cochain2, left: Mapping[int, Fraction], j: int) -> dict[int, Fraction]:
    """``mu(sum_k left[k] X_k, X_j)`` in sparse form."""
    out: dict[int, Fraction] = {}
    for k, c in left.items():
        _add_terms(out, mu.on_basis(k, j), c)
    return out


def jacobi_check(g: LieAlgebra) -> list[tuple[int, int, int, Vector]]:
    """Basis triples ``i < j < k`` whose cyclic Jacobi sum is nonzero, with that sum."""
    mu = g.mu
    n = g.dim
    violations = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                total: dict[int, Fraction] = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    _add_terms(total, _bracket_terms(mu, mu.on_basis(a, b), c), Fraction(1))
                if any(total.values()):
                    residual = [Fraction(0)] * n
                    for t, c in total.items():
                        residual[t - 1] = c
                    violations.append((i, j, k, tuple(residual)))
    return violations


def ad_matrix(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]``; column ``j`` is ``[x, X_j]``."""
    _check_dim(g, x)
    n = g.dim
    cols = [g.mu(x, basis_vector(n, j)) for j in range(1, n + 1)]
    return Matrix.from_columns(cols)


def _memoised(fn):
    def wrapper(g: LieAlgebra):
        if fn.__name__ not in g._memo:
            g._memo[fn.__name__] = fn(g)
        return g._memo[fn.__name__]
    wrapper.__name__, wrapper.__doc__ = fn.__name__, fn.__doc__
    return wrapper


def _brackets_with_basis(g: LieAlgebra, vectors: Iterable[Sequence]) -> list[Vector]:
    """``[X_i, v]`` for every basis index ``i`` and every ``v``, from the sparse table."""
    n = g.dim
    out = []
    for v in vectors:
        nz = [(j, c) for j, c in enumerate(v, start=1) if c]
        for i in range(1, n + 1):
            w = [Fraction(0)] * n
            for j, c in nz:
                for k, a in g.mu.on_basis(i, j).items():
                    w[k - 1] += c * a
            out.append(tuple(w))
    return out


@_memoised
def derived_subalgebra(g: LieAlgebra) -> Subspace:
    n = g.dim
    vecs = []
    for (i, j), terms in g.mu.values:
        v = [Fraction(0)] * n
        for k, c in terms:
            v[k - 1] = c
        vecs.append(v)
    return Subspace.span(n, vecs)


def _preimage_into(g: LieAlgebra, target: Subspace) -> Subspace:
    """``{x : [x, X_j] in target for all j}``."""
    n = g.dim
    # a complement test: x works iff every [x, X_j] is killed by the annihilator of target
    annihilator = kernel_basis(Matrix.from_rows(list(target.basis))) if target.dim else [
        basis_vector(n, i) for i in range(1, n + 1)]
    if not annihilator:
        return Subspace.whole(n)
    # row (j, w) holds the functional x -> w([X_j, x]); entries come straight from the table
    rows = {(j, t): [Fraction(0)] * n for j in range(1, n + 1) for t in range(len(annihilator))}
    for (a, b), terms in g.mu.values:
        for t, w in enumerate(annihilator):
            s = sum((w[k - 1] * c for k, c in terms), Fraction(0))
            if s:
                rows[(a, t)][b - 1] += s
                rows[(b, t)][a - 1] -= s
    return Subspace.span(n, kernel_basis(Matrix.from_rows(list(rows.values()))))


@_memoised
def center(g: LieAlgebra) -> Subspace:
    return _preimage_into(g, Subspace(g.dim))


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """``g = C^0 ⊇ C^1 ⊇ ...`` with ``C^{i+1} = [g, C^i]``, stopped when stationary."""
    return list(_lower_central_series(g))


@_memoised
def _lower_central_series(g: LieAlgebra) -> tuple:
    n = g.dim
    series = [Subspace.whole(n)]
    while True:
        nxt = Subspace.span(n, _brackets_with_basis(g, series[-1].basis))
        if nxt.dim == series[-1].dim:
            return tuple(series)
        series.append(nxt)
        if nxt.dim == 0:
            return tuple(series)


def ascending_series(g: LieAlgebra) -> list[Subspace]:
    """Upper central series ``0 = C_0 ⊆ C_1 = Z(g) ⊆ ...``, stopped when stationary."""
    return list(_ascending_series(g))


@_memoised
def _ascending_series(g: LieAlgebra) -> tuple:
    series = [Subspace(g.dim)]
    while True:
        nxt = _preimage_into(g, series[-1])
        if nxt.dim == series[-1].dim:
            return tuple(series)
        series.append(nxt)
        if nxt.dim == g.dim:
            return tuple(series)


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def nilpotency_class(g: LieAlgebra) -> int:
    """Smallest ``k`` with ``C^k = 0``; an abelian algebra has class 1."""
    series = lower_central_series(g)
    if series[-1].dim != 0:
        raise NotNilpotent(f"{g.name}: lower central series stabilises at dimension {series[-1].dim}")
    return max(len(series) - 1, 1)


def is_filiform(g: LieAlgebra) -> bool:
    if not is_nilpotent(g):
        raise NotNilpotent(f"{g.name} is not nilpotent")
    n = g.dim
    dims = [s.dim for s in ascending_series(g)]
    return n >= 2 and all(i < len(dims) and dims[i] == i for i in range(n - 1))


def is_ideal(g: LieAlgebra, sub: Subspace) -> bool:
    n = g.dim
    return all(sub.contains(g.mu(basis_vector(n, j), v))
               for j in range(1, n + 1) for v in sub.basis)


def series_dimensions(g: LieAlgebra) -> dict[str, list[int]]:
    return {
        "lower_central": [s.dim for s in lower_central_series(g)],
        "ascending": [s.dim for s in ascending_series(g)],
    }
