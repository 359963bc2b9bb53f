"""Cochain calculus for linear deformations ``mu_0 + t phi``.

Multilinear maps are held as dense integer tensors ``T[x_1, ..., x_p, out]``
over basis indices together with a positive common denominator. Contractions
run in int64 when a bound on the result magnitude shows it is safe and fall
back to Python integers otherwise, so every zero test is exact.

Composition on the first slot chains left-normed: ``a ∘₁ b ∘₁ c`` evaluates
as ``a(b(c(x1, x2), x3), x4)``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import ConstraintViolated, DimensionMismatch, InvalidDimension, InvalidParam
from .exact_linalg import Vector, format_rational
from .lie import Cochain2, LieAlgebra, jacobi_check
from .models import g_1_0_0_k, g_1_1_k, g_3_k

_INT64_SAFE = 2 ** 62


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.max(np.abs(arr)))


def _to_object(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return arr
    return np.array(arr.tolist(), dtype=object).reshape(arr.shape)


def _shrink(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object and _maxabs(arr) < _INT64_SAFE:
        return arr.astype(np.int64)
    return arr


class MultiMap:
    """A ``p``-linear map ``(K^n)^p -> K^n`` with exact rational values."""

    __slots__ = ("arity", "dim", "array", "denom")

    def __init__(self, array: np.ndarray, denom: int = 1):
        if array.ndim < 2 or len(set(array.shape)) != 1:
            raise DimensionMismatch(f"bad multimap tensor shape {array.shape}")
        self.array = array
        self.denom = int(denom)
        self.arity = array.ndim - 1
        self.dim = array.shape[0]

    @classmethod
    def zero(cls, dim: int, arity: int) -> "MultiMap":
        return cls(np.zeros((dim,) * (arity + 1), dtype=np.int64))

    @classmethod
    def from_cochain(cls, phi: Cochain2) -> "MultiMap":
        n = phi.dim
        d = phi.denominator()
        arr = np.zeros((n, n, n), dtype=np.int64 if phi.max_abs_numerator() < _INT64_SAFE else object)
        for (i, j), terms in phi.values:
            for k, c in terms:
                v = int(c * d)
                arr[i - 1, j - 1, k - 1] = v
                arr[j - 1, i - 1, k - 1] = -v
        return cls(arr, d)

    def is_zero(self) -> bool:
        return not np.any(self.array)

    def at(self, *indices: int) -> Vector:
        """Value on the basis tuple ``(X_{i1}, ..., X_{ip})``, indices 1-based."""
        if len(indices) != self.arity:
            raise DimensionMismatch(f"expected {self.arity} indices")
        row = self.array[tuple(i - 1 for i in indices)]
        return tuple(Fraction(int(v), self.denom) for v in row)

    def evaluate(self, *vectors: Sequence) -> Vector:
        if len(vectors) != self.arity or any(len(v) != self.dim for v in vectors):
            raise DimensionMismatch("argument count or length does not match")
        t = _to_object(self.array)
        for v in vectors:
            t = np.tensordot(np.array([Fraction(x) for x in v], dtype=object), t, axes=([0], [0]))
        return tuple(Fraction(x) / self.denom for x in t)

    def nonzero(self, limit: int | None = None) -> list[tuple[tuple[int, ...], Vector]]:
        """Basis tuples (1-based) with a nonzero value, and that value."""
        inputs = np.any(self.array != 0, axis=-1)
        out = []
        for idx in zip(*np.nonzero(inputs)):
            key = tuple(int(i) + 1 for i in idx)
            out.append((key, self.at(*key)))
            if limit is not None and len(out) >= limit:
                break
        return out

    def _combine(self, other: "MultiMap", sign: int) -> "MultiMap":
        if self.dim != other.dim or self.arity != other.arity:
            raise DimensionMismatch("multimaps of different shape")
        d = math.lcm(self.denom, other.denom)
        s1, s2 = d // self.denom, d // other.denom
        a, b = self.array, other.array
        if _maxabs(a) * s1 + _maxabs(b) * s2 >= _INT64_SAFE:
            a, b = _to_object(a), _to_object(b)
        return MultiMap(_shrink(a * s1 + sign * (b * s2)), d)

    def __add__(self, other: "MultiMap") -> "MultiMap":
        return self._combine(other, 1)

    def __sub__(self, other: "MultiMap") -> "MultiMap":
        return self._combine(other, -1)

    def __neg__(self) -> "MultiMap":
        return MultiMap(-self.array, self.denom)

    def scale(self, t) -> "MultiMap":
        t = Fraction(t)
        if t == 0:
            return MultiMap.zero(self.dim, self.arity)
        a = self.array
        if _maxabs(a) * abs(t.numerator) >= _INT64_SAFE:
            a = _to_object(a)
        return MultiMap(_shrink(a * t.numerator), self.denom * t.denominator)

    def permute_inputs(self, perm: Sequence[int]) -> "MultiMap":
        """``M'(x_0, ..., x_{p-1}) = M(x_{perm[0]}, ..., x_{perm[p-1]})``."""
        axes = list(np.argsort(perm)) + [self.arity]
        return MultiMap(np.transpose(self.array, axes), self.denom)

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (self.dim, self.arity) == (other.dim, other.arity) and (self - other).is_zero()

    def __repr__(self):
        return f"MultiMap(arity={self.arity}, dim={self.dim}, nonzero={len(self.nonzero(limit=1000))})"


def _mm(x) -> MultiMap:
    if isinstance(x, MultiMap):
        return x
    if isinstance(x, LieAlgebra):
        return MultiMap.from_cochain(x.mu)
    if isinstance(x, Cochain2):
        return MultiMap.from_cochain(x)
    raise TypeError(f"cannot use {type(x).__name__} as a multilinear map")


def _cochain(x) -> Cochain2:
    return x.mu if isinstance(x, LieAlgebra) else x


def comp1(a, b) -> MultiMap:
    """``(a ∘₁ b)(x_1, ..., x_{p+q-1}) = a(b(x_1, ..., x_q), x_{q+1}, ...)``."""
    a, b = _mm(a), _mm(b)
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim} differ")
    x, y = a.array, b.array
    if _maxabs(x) * _maxabs(y) * a.dim >= _INT64_SAFE:
        x, y = _to_object(x), _to_object(y)
    out = np.tensordot(y, x, axes=([b.arity], [0]))
    return MultiMap(_shrink(out), a.denom * b.denom)


def chain(*maps) -> MultiMap:
    """Left-normed composition ``m_1 ∘₁ m_2 ∘₁ ... ∘₁ m_r``."""
    if not maps:
        raise ValueError("empty chain")
    out = _mm(maps[0])
    for m in maps[1:]:
        out = comp1(out, m)
    return out


def power(m, k: int) -> MultiMap:
    """``m^k = m ∘₁ ... ∘₁ m`` (``k`` copies, arity ``k + 1``)."""
    if k < 1:
        raise ValueError("power needs k >= 1")
    return chain(*([m] * k))


def bullet(a, b) -> MultiMap:
    """``(a • b)(X,Y,Z) = a(b(X,Y),Z) + a(b(Y,Z),X) + a(b(Z,X),Y)``."""
    c = comp1(a, b)
    if c.arity != 3:
        raise DimensionMismatch("bullet needs two bilinear maps")
    return c + c.permute_inputs((1, 2, 0)) + c.permute_inputs((2, 0, 1))


def delta_C(mu0, phi) -> MultiMap:
    """Chevalley-Eilenberg coboundary of a 2-cochain: ``mu0 • phi + phi • mu0``."""
    return bullet(mu0, phi) + bullet(phi, mu0)


def delta_R(mu0, phi, k: int) -> MultiMap:
    """``sum_{a+b=k-1} mu0^a ∘₁ phi ∘₁ mu0^b``, a ``(k+1)``-linear map."""
    if k < 2:
        raise ValueError("delta_R needs k >= 2")
    mu0, phi = _mm(mu0), _mm(phi)
    total = None
    for a in range(k):
        b = k - 1 - a
        term = chain(*([mu0] * a + [phi] + [mu0] * b))
        total = term if total is None else total + term
    return total


def degree_components(mu0, phi, k: int) -> list[MultiMap]:
    """Split ``(mu0 + phi)^k`` by the number of ``phi`` factors.

    Entry ``d`` is the sum of all left-normed words of length ``k`` in
    ``mu0`` and ``phi`` that contain exactly ``d`` copies of ``phi``.
    """
    mu0, phi = _mm(mu0), _mm(phi)
    layer = [mu0, phi]
    for _ in range(k - 1):
        nxt = []
        for d in range(len(layer) + 1):
            parts = []
            if d < len(layer):
                parts.append(comp1(mu0, layer[d]))
            if d >= 1:
                parts.append(comp1(phi, layer[d - 1]))
            total = parts[0]
            for p in parts[1:]:
                total = total + p
            nxt.append(total)
        layer = nxt
    return layer


def is_Z2_CH(mu0, phi) -> bool:
    """``phi ∘₁ mu0 + mu0 ∘₁ phi = 0``: the 2-step cocycle condition."""
    _same_dim(mu0, phi)
    return (comp1(phi, mu0) + comp1(mu0, phi)).is_zero()


def _same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim} differ")


def linear_deform(base: LieAlgebra, phi: Cochain2, t=1, name: str | None = None) -> LieAlgebra:
    """The bracket ``mu0 + t phi``, loaded leniently (Jacobi is the caller's business)."""
    if base.dim != phi.dim:
        raise DimensionMismatch(f"dimensions {base.dim} and {phi.dim} differ")
    t = Fraction(t)
    mu = base.mu + phi.scale(t)
    if name is None:
        name = base.name if t == 0 or phi.is_zero() else f"{base.name}+{format_rational(t)}phi"
    return LieAlgebra(name, mu, strict=False)


# ---------------------------------------------------------------- reports


@dataclass
class ConditionResult:
    name: str
    passed: bool
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "violations": [
                {"tuple": list(t), "residual": [format_rational(c) for c in r]}
                for t, r in self.violations
            ],
        }


@dataclass
class SystemReport:
    system: str
    conditions: list
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, name: str) -> ConditionResult:
        return next(c for c in self.conditions if c.name == name)

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "pass": self.passed,
            "conditions": [c.to_dict() for c in self.conditions],
            **self.extra,
        }


def _condition(name: str, m: MultiMap, limit: int | None) -> ConditionResult:
    if m.is_zero():
        return ConditionResult(name, True)
    return ConditionResult(name, False, m.nonzero(limit))


def check_line_system(mu0, phi, limit: int | None = None) -> SystemReport:
    """Jacobi for every ``mu0 + t phi``: ``delta_C phi = 0`` and ``phi • phi = 0``."""
    _same_dim(mu0, phi)
    report = SystemReport("line", [
        _condition("delta_C", delta_C(mu0, phi), limit),
        _condition("bullet", bullet(phi, phi), limit),
    ])
    if report.passed and isinstance(mu0, LieAlgebra):
        report.extra["jacobi_cross_check"] = {
            format_rational(t): not jacobi_check(linear_deform(mu0, _cochain(phi), t))
            for t in (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3))
        }
    return report


def check_2step_system(mu0, phi, limit: int | None = None) -> SystemReport:
    """``phi`` in ``Z^2_CH`` and ``phi ∘₁ phi = 0``."""
    _same_dim(mu0, phi)
    return SystemReport("2step", [
        _condition("Z2_CH", comp1(phi, mu0) + comp1(mu0, phi), limit),
        _condition("phi_comp_phi", comp1(phi, phi), limit),
    ])


def _step_system(name: str, k: int, mu0, phi, limit: int | None) -> SystemReport:
    _same_dim(mu0, phi)
    comps = degree_components(mu0, phi, k)
    conditions = [
        _condition("delta_C", delta_C(mu0, phi), limit),
        _condition("bullet", bullet(phi, phi), limit),
        _condition("delta_R", delta_R(mu0, phi, k), limit),
    ]
    for d in range(2, k):
        conditions.append(_condition(f"degree_{d}", comps[d], limit))
    conditions.append(_condition(f"phi_power_{k}", comps[k], limit))
    return SystemReport(name, conditions, {"base_power_vanishes": comps[0].is_zero()})


def check_3step_system(mu0, phi, limit: int | None = None) -> SystemReport:
    """Linear deformation staying 3-step nilpotent: Jacobi plus every ``phi``-degree of ``(mu0+phi)^3``."""
    return _step_system("3step", 3, mu0, phi, limit)


def check_4step_system(mu0, phi, limit: int | None = None) -> SystemReport:
    return _step_system("4step", 4, mu0, phi, limit)


SYSTEMS = {
    "line": check_line_system,
    "2step": check_2step_system,
    "3step": check_3step_system,
    "4step": check_4step_system,
}


# ------------------------------------------------------ parameter families


def _params(params: Mapping | None, allowed, family: str) -> dict[str, Fraction]:
    params = dict(params or {})
    bad = [k for k in params if k not in allowed]
    if bad:
        raise InvalidParam(f"{family}: unknown parameter(s) {', '.join(sorted(bad))}")
    return {k: Fraction(v) for k, v in params.items()}


def _put(table: dict, i: int, j: int, k: int, c) -> None:
    c = Fraction(c)
    if c:
        slot = table.setdefault((i, j), {})
        slot[k] = slot.get(k, Fraction(0)) + c


class Prop8Family(enum.Enum):
    One = 1
    Two = 2


def prop8_param_names(n: int, which: Prop8Family) -> list[str]:
    ks = range(6, n + 1)
    names = ["a"]
    if which is Prop8Family.One:
        names += [f"a{k}" for k in ks] + [f"b{k}" for k in ks]
    else:
        names += [f"d{k}" for k in ks] + [f"b{k}" for k in ks]
    names += [f"c{i}_{j}" for i, j in itertools.combinations(ks, 2)]
    return names


def prop8_cochain(n: int, which: Prop8Family, params: Mapping | None = None) -> Cochain2:
    """The perturbation ``phi`` of ``g_1_0_0_k`` for one of the two breadth-3 families.

    Family One: ``[X2,X3]=aX5``, ``[X2,Xk]=a_k X4 + b_k X5``, ``[X3,Xk]=a_k X5``,
    ``[Xi,Xj]=c_ij X5`` (``6 <= i < j``). Family Two replaces the ``a_k`` terms by
    ``[X2,X3] = aX5 + sum d_k X_k``.
    Parameters are named ``a``, ``a6``, ``b6``, ``d6``, ``c6_7`` and so on.
    """
    if n < 5:
        raise InvalidDimension(f"breadth-3 families need n >= 5, got {n}")
    which = Prop8Family(which) if not isinstance(which, Prop8Family) else which
    p = _params(params, prop8_param_names(n, which), f"breadth-3 family {which.name}")
    get = lambda name: p.get(name, Fraction(0))  # noqa: E731
    table: dict = {}
    _put(table, 2, 3, 5, get("a"))
    for k in range(6, n + 1):
        if which is Prop8Family.One:
            _put(table, 2, k, 4, get(f"a{k}"))
            _put(table, 3, k, 5, get(f"a{k}"))
        else:
            _put(table, 2, 3, k, get(f"d{k}"))
        _put(table, 2, k, 5, get(f"b{k}"))
    for i, j in itertools.combinations(range(6, n + 1), 2):
        _put(table, i, j, 5, get(f"c{i}_{j}"))
    return Cochain2.from_dict(n, table)


def prop8_constraint(n: int, params: Mapping | None = None) -> dict[int, Fraction]:
    """``sum_{i=6}^{j-1} c_ij d_i - sum_{i=j+1}^{n} c_ji d_i`` for each ``6 <= j <= n``."""
    p = _params(params, prop8_param_names(n, Prop8Family.Two), "breadth-3 family Two")
    c = lambda i, j: p.get(f"c{i}_{j}", Fraction(0))  # noqa: E731
    d = lambda i: p.get(f"d{i}", Fraction(0))  # noqa: E731
    return {
        j: sum((c(i, j) * d(i) for i in range(6, j)), Fraction(0))
        - sum((c(j, i) * d(i) for i in range(j + 1, n + 1)), Fraction(0))
        for j in range(6, n + 1)
    }


def prop8_family(n: int, which, params: Mapping | None = None, enforce: bool = True, cfg=None):
    """Build a breadth-3 family member and report Jacobi, the constraint and its invariants.

    Returns ``(algebra, report_dict)``. With ``enforce`` set, a family-Two
    parameter choice violating the constraint raises :class:`ConstraintViolated`.
    """
    from .invariants import breadth, characteristic_sequence, is_shape

    which = Prop8Family(which) if not isinstance(which, Prop8Family) else which
    phi = prop8_cochain(n, which, params)
    report: dict = {"family": which.name, "dim": n}
    if which is Prop8Family.Two:
        values = prop8_constraint(n, params)
        report["constraint"] = {str(j): format_rational(v) for j, v in values.items()}
        report["constraint_ok"] = not any(values.values())
        if enforce and not report["constraint_ok"]:
            bad = [j for j, v in values.items() if v]
            raise ConstraintViolated(f"family Two constraint nonzero for j = {bad}")
    g = linear_deform(g_1_0_0_k(n), phi, name=f"g_1_0_0_{n - 4}_fam{which.value}")
    violations = jacobi_check(g)
    report["jacobi_ok"] = not violations
    if not violations:
        seq = characteristic_sequence(g, cfg)
        b = breadth(g, cfg).breadth
        report["sequence"] = list(seq.parts.parts)
        report["breadth"] = b
        report["invariants_ok"] = is_shape(seq.parts.parts, (4,)) and b == 3
    return g, report


class Sec32Family(enum.Enum):
    Phi1 = 1
    Phi2 = 2
    Phi3 = 3


_SEC32_MIN_DIM = {Sec32Family.Phi1: 9, Sec32Family.Phi2: 8, Sec32Family.Phi3: 8}
_ODD_TARGETS = (3, 5, 7)


def _sec32_pairs(which: Sec32Family) -> list[tuple[int, int]]:
    if which is Sec32Family.Phi2:
        return [(2, 4), (4, 6)]
    return [(2, 4), (2, 6), (4, 6)]


def _phi2_start(printed: bool) -> int:
    # X8 = phi(X2,X4), so a nonzero phi(X8,Xl) breaks Jacobi; the printed range starts at 8
    return 8 if printed else 9


def sec32_param_names(n: int, which: Sec32Family, printed: bool = False) -> list[str]:
    which = Sec32Family(which) if not isinstance(which, Sec32Family) else which
    names = [f"a{t}_{i}_{j}" for i, j in _sec32_pairs(which) for t in _ODD_TARGETS]
    tail = list(itertools.combinations(range(8, n + 1), 2))
    if which is Sec32Family.Phi2:
        names += [f"s{s}_{l}" for s, l in tail if s >= _phi2_start(printed)]
    elif which is Sec32Family.Phi3:
        names += [f"b{t}_{s}_{l}" for s, l in tail for t in _ODD_TARGETS]
    return names


def sec32_cocycle(n: int, which, params: Mapping | None = None, printed: bool = False) -> Cochain2:
    """Cocycle ``phi_1``, ``phi_2`` or ``phi_3`` deforming ``g_3_k`` (base ``[X1,X_{2i}]=X_{2i+1}``).

    ``a{t}_{i}_{j}`` is the coefficient of ``X_t`` (``t`` in 3, 5, 7) in
    ``phi(X_i, X_j)``. Phi2 takes ``s{s}_{l}`` for ``phi(X_s, X_l) = a_sl X5``;
    Phi3 takes ``b{t}_{s}_{l}`` for the ``X_t`` coefficient of ``phi(X_s, X_l)``,
    both with ``8 <= s < l``. The fixed terms ``+X8`` (and ``+X9`` for Phi1)
    are always present. Phi2 accepts ``s8_l`` only with ``printed`` set;
    those terms fail the Jacobi identity.
    """
    which = Sec32Family(which) if not isinstance(which, Sec32Family) else which
    if n < _SEC32_MIN_DIM[which]:
        raise InvalidDimension(f"{which.name} needs n >= {_SEC32_MIN_DIM[which]}, got {n}")
    p = _params(params, sec32_param_names(n, which, printed), which.name)
    table: dict = {}
    for i, j in _sec32_pairs(which):
        for t in _ODD_TARGETS:
            _put(table, i, j, t, p.get(f"a{t}_{i}_{j}", 0))
    if which in (Sec32Family.Phi1, Sec32Family.Phi2):
        _put(table, 2, 4, 8, 1)
    if which is Sec32Family.Phi1:
        _put(table, 2, 6, 9, 1)
    for s, l in itertools.combinations(range(8, n + 1), 2):
        if which is Sec32Family.Phi2:
            _put(table, s, l, 5, p.get(f"s{s}_{l}", 0))
        elif which is Sec32Family.Phi3:
            for t in _ODD_TARGETS:
                _put(table, s, l, t, p.get(f"b{t}_{s}_{l}", 0))
    return Cochain2.from_dict(n, table)


def sec32_algebra(n: int, which, params: Mapping | None = None, printed: bool = False) -> LieAlgebra:
    which = Sec32Family(which) if not isinstance(which, Sec32Family) else which
    phi = sec32_cocycle(n, which, params, printed)
    return linear_deform(g_3_k(n), phi, name=f"g_3_{n - 6}+{which.name.lower()}")


_THREE_STEP_SCALARS = ("c1", "e1", "f23", "c2", "e2", "f25", "c3", "e3", "f26",
                       "b2", "d2", "c4", "f56")


def three_step_param_names(n: int) -> list[str]:
    names = list(_THREE_STEP_SCALARS)
    for i in range(7, n + 1):
        names += [f"c2_{i}", f"e2_{i}", f"b5_{i}", f"c5_{i}", f"e5_{i}"]
    return names


def three_step_cocycle(n: int, params: Mapping | None = None) -> Cochain2:
    """Reduced cocycle shape deforming ``g_1_1_k`` towards sequence ``(3,2,1,...,1)``.

    Provisional: the printed ``phi(X3,X5)`` line is malformed and is read as
    ``(b2 - c3) X4 + (d2 - e3) X6 + f26 X7``.
    """
    if n < 7:
        raise InvalidDimension(f"three-step cocycle shape needs n >= 7, got {n}")
    p = _params(params, three_step_param_names(n), "three-step cocycle")
    v = lambda name: p.get(name, Fraction(0))  # noqa: E731
    table: dict = {}
    rows = [
        (2, 3, {4: v("c1"), 6: v("e1"), 7: v("f23")}),
        (2, 5, {4: v("c2"), 6: v("e2"), 7: v("f25")}),
        (2, 6, {4: v("c3"), 6: v("e3"), 7: v("f26")}),
        (3, 5, {4: v("b2") - v("c3"), 6: v("d2") - v("e3"), 7: v("f26")}),
        (5, 6, {4: v("c4"), 7: v("f56")}),
    ]
    for i in range(7, n + 1):
        rows.append((2, i, {4: v(f"c2_{i}"), 6: v(f"e2_{i}")}))
        rows.append((5, i, {3: v(f"b5_{i}"), 4: v(f"c5_{i}"), 6: v(f"e5_{i}")}))
        rows.append((6, i, {4: v(f"b5_{i}")}))
    for i, j, terms in rows:
        for k, c in terms.items():
            _put(table, i, j, k, c)
    return Cochain2.from_dict(n, table)


def three_step_algebra(n: int, params: Mapping | None = None) -> LieAlgebra:
    return linear_deform(g_1_1_k(n), three_step_cocycle(n, params), name=f"g_1_1_{n - 5}+phi")
