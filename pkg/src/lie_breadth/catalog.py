"""Named algebras with their expected invariants, and the catalogue verifier.

Tables are transcribed as printed. When a printed table fails the Jacobi
identity the entry carries a ``typo`` note and, where a correction is
evident, a sibling entry with the ``_fixed`` suffix.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import deformation as dfm
from . import models
from .errors import InvalidDimension, MissingParam, UnknownKey
from .exact_linalg import format_rational
from .invariants import (
    SamplingConfig,
    breadth_from_sequence,
    breadth,
    characteristic_sequence,
)
from .lie import LieAlgebra, center, jacobi_check, lower_central_series

Table = dict


def _base(sources, extra: Mapping) -> Table:
    table = {(1, i): {i + 1: 1} for i in sources}
    for key, terms in extra.items():
        table[key] = dict(terms)
    return table


@dataclass(frozen=True)
class Expected:
    """Expected invariants as functions of the dimension."""

    head: tuple  # characteristic sequence is head + (1,)*rest
    breadth: int | None
    nilpotency_class: int | None

    def sequence(self, n: int) -> tuple:
        return self.head + (1,) * (n - sum(self.head))


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    constraint: str
    dim_ok: Callable[[int], bool]
    builder: Callable[..., LieAlgebra]
    expected: Callable[[int], Expected]
    source: str
    params: tuple = ()  # required parameter names
    test_params: tuple = ({},)  # parameter sets used by verify_all, or a function of n
    typo: str | None = None
    fixed_dim: int | None = None

    def build(self, n: int, params: Mapping | None = None, strict: bool = False) -> LieAlgebra:
        params = dict(params or {})
        if not self.dim_ok(n):
            raise InvalidDimension(f"{self.key}: dimension {n} violates {self.constraint}")
        missing = [p for p in self.params if p not in params]
        if missing:
            raise MissingParam(f"{self.key}: missing parameter(s) {', '.join(missing)}")
        g = self.builder(n, {k: Fraction(v) for k, v in params.items()})
        if strict and jacobi_check(g):
            g = LieAlgebra(g.name, g.mu, strict=True)  # raises with details
        return g


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    CATALOG[entry.key] = entry


def _lenient(name: str, n: int, table: Table) -> LieAlgebra:
    return LieAlgebra.from_brackets(name, n, table, strict=False)


def _no_params(fn):
    def builder(n, params):
        if params:
            from .errors import InvalidParam
            raise InvalidParam(f"unexpected parameter(s) {', '.join(sorted(params))}")
        return fn(n)
    return builder


def _fixed(n0: int, name: str, table: Table):
    def builder(n, params):
        if params:
            from .errors import InvalidParam
            raise InvalidParam(f"unexpected parameter(s) {', '.join(sorted(params))}")
        return _lenient(name, n0, table)
    return builder


def _const(head, b, cls):
    e = Expected(tuple(head), b, cls)
    return lambda n: e


# ---------------------------------------------------------------- models

_register(CatalogEntry(
    "abelian", "n >= 1", lambda n: n >= 1, _no_params(models.abelian),
    lambda n: Expected((1,), 0, 1), "abelian algebra"))
_register(CatalogEntry(
    "heisenberg", "n odd, n >= 3", lambda n: n >= 3 and n % 2 == 1, _no_params(models.heisenberg),
    _const((2,), 1, 2), "Heisenberg algebra, breadth 1"))
_register(CatalogEntry(
    "filiform", "n >= 3", lambda n: n >= 3, _no_params(models.filiform_model),
    lambda n: Expected((n - 1,), n - 2, n - 1), "model filiform algebra"))

# ------------------------------------------------- sequence (3,1,...,1)

_register(CatalogEntry(
    "g_1_0_k", "n >= 4", lambda n: n >= 4, _no_params(models.g_1_0_k),
    _const((3,), 2, 3), "g_{1,0,n-1}"))
_register(CatalogEntry(
    "g_1_0_k_a", "n >= 5", lambda n: n >= 5,
    lambda n, p: _lenient(f"g_1_0_{n - 1}_a", n, _base((2, 3), {(2, 3): {5: p.get("a", 1)}})),
    _const((3,), 2, 3), "deformation phi(X2,X3)=aX5 of g_{1,0,n-1}",
    test_params=({"a": 1},)))
_register(CatalogEntry(
    "g_1_0_k_b", "n >= 5", lambda n: n >= 5,
    lambda n, p: _lenient(f"g_1_0_{n - 1}_b", n, _base((2, 3), {(2, 5): {4: p.get("b", 1)}})),
    _const((3,), 2, 3), "deformation phi(X2,X5)=bX4 of g_{1,0,n-1}",
    test_params=({"b": 1},)))


def _case4_family(n, p):
    extra = {}
    for k in range(5, n + 1):
        extra[(2, k)] = {4: p.get(f"a2_{k}", 0)}
    for l, k in itertools.combinations(range(5, n + 1), 2):
        extra[(l, k)] = {4: p.get(f"a{l}_{k}", 0)}
    return _lenient(f"g_1_0_{n - 1}_family", n, _base((2, 3), extra))


_register(CatalogEntry(
    "g_1_0_k_family", "n >= 5", lambda n: n >= 5, _case4_family,
    _const((3,), 2, 3), "indecomposable family [X2,Xk]=a_2k X4, [Xl,Xk]=a_lk X4",
    test_params=lambda n: ({}, {"a2_5": 1}) + (({"a2_5": 1, "a5_6": 2},) if n >= 6 else ())))
def _even_pairs(n, start):
    p = n // 2
    pairs = {(2 * i + 1, 2 * i + 2): {4: 1} for i in range(start, p)}
    return _lenient(f"g_1_0_{n - 1}_even_pairs", n, _base((2, 3), pairs))


def _odd_pairs(n, start):
    p = (n - 1) // 2
    pairs = {(2 * i + 1, 2 * i + 2): {4: 1} for i in range(start, p)}
    pairs[(2, n)] = {4: 1}
    return _lenient(f"g_1_0_{n - 1}_odd_pairs", n, _base((2, 3), pairs))


_PAIRS_TYPO = ("printed range i = 1..p-1 gives [X3,X4]=X4, so ad X3 is not nilpotent "
               "and Jacobi fails; see the _fixed variants (i = 2..p-1)")

_register(CatalogEntry(
    "g_1_0_k_even_pairs", "n = 2p, p >= 2", lambda n: n >= 4 and n % 2 == 0,
    _no_params(lambda n: _even_pairs(n, 1)), _const((3,), 2, 3), "even n, pairs [X_{2i+1},X_{2i+2}]=X4 as printed", typo=_PAIRS_TYPO))
_register(CatalogEntry(
    "g_1_0_k_even_pairs_fixed", "n = 2p, p >= 2", lambda n: n >= 4 and n % 2 == 0,
    _no_params(lambda n: _even_pairs(n, 2)), _const((3,), 2, 3), "even n, pairs starting at X5"))
_register(CatalogEntry(
    "g_1_0_k_odd_pairs", "n = 2p+1, p >= 2", lambda n: n >= 5 and n % 2 == 1,
    _no_params(lambda n: _odd_pairs(n, 1)), _const((3,), 2, 3), "odd n, pairs [X_{2i+1},X_{2i+2}]=X4 and [X2,Xn]=X4 as printed", typo=_PAIRS_TYPO))
_register(CatalogEntry(
    "g_1_0_k_odd_pairs_fixed", "n = 2p+1, p >= 2", lambda n: n >= 5 and n % 2 == 1,
    _no_params(lambda n: _odd_pairs(n, 2)), _const((3,), 2, 3), "odd n, pairs starting at X5"))

# ------------------------------------------------- sequence (2,2,1,...,1)

_register(CatalogEntry(
    "g_2_k", "n >= 5", lambda n: n >= 5, _no_params(models.g_2_k),
    _const((2, 2), 2, 2), "g_{2,n-2}"))


def _c1_indices(n):
    return [i for i in range(2, n + 1) if i not in (3, 5)]


def c1_param_names(n: int) -> list[str]:
    return [f"a{t}_{i}_{j}" for i, j in itertools.combinations(_c1_indices(n), 2) for t in (3, 5)]


def c2_param_names(n: int) -> list[str]:
    idx = [i for i in _c1_indices(n) if i <= n - 1]
    return [f"a{t}_{i}_{j}" for i, j in itertools.combinations(idx, 2) if (i, j) != (2, 4) for t in (3, 5)]


def component_cochain(n: int, component: int, params: Mapping | None = None):
    """Cocycle of component C1 or C2 of the ``(2,2,1,...,1)`` family, deforming ``g_2_k``."""
    from .lie import Cochain2
    names = c1_param_names(n) if component == 1 else c2_param_names(n)
    p = dfm._params(params, names, f"component C{component}")
    table: dict = {}
    for name, v in p.items():
        t, i, j = (int(s) for s in name[1:].split("_"))
        dfm._put(table, i, j, t, v)
    if component == 2:
        if n < 6:
            raise InvalidDimension(f"component C2 needs n >= 6, got {n}")
        dfm._put(table, 2, 4, n, 1)
    return Cochain2.from_dict(n, table)


_register(CatalogEntry(
    "g_2_k_C1", "n >= 5", lambda n: n >= 5,
    lambda n, p: dfm.linear_deform(models.g_2_k(n), component_cochain(n, 1, p), name=f"g_2_{n - 2}_C1"),
    _const((2, 2), 2, 2), "component C1 cocycles",
    test_params=({}, {"a3_2_4": 1, "a5_2_4": 2})))
_register(CatalogEntry(
    "g_2_k_C2", "n >= 6", lambda n: n >= 6,
    lambda n, p: dfm.linear_deform(models.g_2_k(n), component_cochain(n, 2, p), name=f"g_2_{n - 2}_C2"),
    _const((2, 2), 2, 2), "component C2 cocycles, phi(X2,X4)=Xn"))

# ----------------------------------------------- sequence (4,1,...,1)

_register(CatalogEntry(
    "g_1_0_0_k", "n >= 5", lambda n: n >= 5, _no_params(models.g_1_0_0_k),
    _const((4,), 3, 4), "g_{1,0,0,n-4}"))
def _four_step(n, which, params):
    phi = dfm.prop8_cochain(n, which, params)
    return dfm.linear_deform(models.g_1_0_0_k(n), phi, name=f"g_1_0_0_{n - 4}_fam{which.value}")


_register(CatalogEntry(
    "g_1_0_0_k_fam1", "n >= 5", lambda n: n >= 5,
    lambda n, p: _four_step(n, dfm.Prop8Family.One, p),
    _const((4,), 3, 4), "breadth-3 family One",
    test_params=lambda n: ({}, {"a": 1}) + (({"a": 1, "a6": 1, "b6": 2},) if n >= 6 else ())))
_register(CatalogEntry(
    "g_1_0_0_k_fam2", "n >= 5", lambda n: n >= 5,
    lambda n, p: _four_step(n, dfm.Prop8Family.Two, p),
    _const((4,), 3, 4), "breadth-3 family Two",
    test_params=lambda n: ({}, {"a": 1}) + (({"a": 1, "d6": 1, "b6": 1},) if n >= 6 else ())))


def _rigid_g1(n, params):
    table = _base((2, 3, 4), {(2, 3): {5: 1}, (2, n - 1): {5: 1}, (2, n): {4: 1}, (3, n): {5: 1}})
    for k in range(3, (n - 1) // 2 + 1):
        table[(2 * k, 2 * k + 1)] = {5: 1}
    return _lenient(f"rigid_g1_{n}", n, table)


def _rigid_g2(n, last):
    table = _base((2, 3, 4), {(2, 3): {n: 1}, (2, n): {5: 1}})
    for k in range(3, last + 1):
        table[(2 * k, 2 * k + 1)] = {5: 1}
    return _lenient(f"rigid_g2_{n}", n, table)


_register(CatalogEntry(
    "rigid_g1", "n >= 7", lambda n: n >= 7, _no_params(lambda n: _rigid_g1(n, {})),
    _const((4,), 3, 4), "rigid algebra g1 of the first (4,1,...,1) component"))
_register(CatalogEntry(
    "rigid_g2", "n >= 7", lambda n: n >= 7, _no_params(lambda n: _rigid_g2(n, (n - 1) // 2)),
    _const((4,), 3, 4), "rigid algebra g2 of the second (4,1,...,1) component",
    typo="for odd n the pair [X_{n-1},X_n]=X5 meets [X2,X3]=X_n and breaks Jacobi; "
         "see rigid_g2_fixed (pairs stop before X_n)"))
_register(CatalogEntry(
    "rigid_g2_fixed", "n >= 7", lambda n: n >= 7, _no_params(lambda n: _rigid_g2(n, (n - 2) // 2)),
    _const((4,), 3, 4), "rigid g2 with the tail pairs kept away from X_n"))

# ----------------------------------------------- sequence (2,2,2,1,...,1)

_register(CatalogEntry(
    "g_3_k", "n >= 7", lambda n: n >= 7, _no_params(models.g_3_k),
    _const((2, 2, 2), 3, 2), "g_{3,n-6}"))
_SEC32_TEST = {
    dfm.Sec32Family.Phi1: lambda n: ({}, {"a3_2_4": 1, "a5_4_6": -1, "a7_2_6": 2}),
    dfm.Sec32Family.Phi2: lambda n: ({}, {"a7_2_4": 1}, {"a5_4_6": 1, "a3_2_4": 2}),
    dfm.Sec32Family.Phi3: lambda n: ({}, {"b5_8_9": 1, "a3_4_6": 1}) if n >= 9 else ({}, {"a3_4_6": 1}),
}
for _fam, _lo in ((dfm.Sec32Family.Phi1, 9), (dfm.Sec32Family.Phi2, 8), (dfm.Sec32Family.Phi3, 8)):
    _register(CatalogEntry(
        f"g_3_k_{_fam.name.lower()}", f"n >= {_lo}", (lambda lo: lambda n: n >= lo)(_lo),
        (lambda fam: lambda n, p: dfm.sec32_algebra(n, fam, p))(_fam),
        _const((2, 2, 2), 3, 2), f"g_{{3,n-6}} deformed by {_fam.name}",
        test_params=_SEC32_TEST[_fam]))

_N7_2221 = {
    "n7_120": {(2, 4): {7: 1}},
    "n7_121": {},
    "n7_122": {(4, 6): {7: 1}},
    "n7_123": {(2, 4): {5: 1}, (4, 6): {3: 1}},
}
for _key, _extra in _N7_2221.items():
    _register(CatalogEntry(
        _key, "n = 7", lambda n: n == 7, _fixed(7, _key, _base((2, 4, 6), _extra)),
        _const((2, 2, 2), 3, 2), "seven-dimensional, sequence (2,2,2,1)", fixed_dim=7))

# ----------------------------------------------- sequence (3,2,1,...,1)

_register(CatalogEntry(
    "g_1_1_k", "n >= 6", lambda n: n >= 6, _no_params(models.g_1_1_k),
    _const((3, 2), 3, 3), "g_{1,1,n-5}"))

_N6 = {
    "n6_11": {(5, 6): {4: 1}},
    "n6_12": {(2, 5): {4: 1}},
    "n6_13": {(2, 3): {6: 1}, (2, 5): {6: 1}},
    "n6_14": {(2, 3): {4: 1, 6: -1}, (2, 5): {6: 1}},
    "n6_15": {(2, 5): {6: 1}, (5, 6): {4: 1}},
    "n6_16": {(2, 3): {4: 1}},
    "n6_17": {},
}
for _key, _extra in _N6.items():
    _register(CatalogEntry(
        _key, "n = 6", lambda n: n == 6, _fixed(6, _key, _base((2, 3, 5), _extra)),
        _const((3, 2), 3, 3), "six-dimensional, sequence (3,2,1)", fixed_dim=6))

_N7_321 = {
    "n7_93": {(2, 5): {7: 1}},
    "n7_94": {(2, 5): {4: 1}, (2, 3): {7: 1}},
    "n7_95": {(2, 3): {7: 1}},
    "n7_96": {(3, 5): {4: -1}, (2, 6): {4: 1}},
    "n7_97": {(2, 6): {4: 1}, (3, 5): {4: -1}, (2, 5): {7: 1}},
    "n7_98": {(2, 6): {4: 1}, (3, 5): {4: -1}, (2, 5): {7: 1}, (5, 6): {4: 1}},
    "n7_99": {(2, 7): {6: 1}, (2, 3): {4: 1}},
    "n7_100": {(2, 7): {4: 1}, (5, 7): {6: 1}},
    "n7_101": {(2, 7): {6: 1}, (5, 7): {4: 1}},
    "n7_102": {(5, 7): {4: 1}},
    "n7_103": {(2, 7): {4: 1}},
    "n7_104": {(5, 7): {4: 1}, (2, 3): {4: 1}},
    "n7_105": {(2, 7): {4: 1}, (2, 3): {4: 1}},
    "n7_106": {(2, 7): {4: 1}, (5, 6): {4: 1}},
    "n7_107": {(5, 7): {3: 1}, (6, 7): {4: 1}},
    "n7_108": {(2, 7): {6: 1}, (2, 3): {6: 1}},
    "n7_109": {(5, 7): {6: 1}, (2, 3): {6: 1}},
    "n7_110": {(2, 3): {6: 1}, (5, 7): {4: 1}},
    "n7_111": {(2, 7): {6: 1}, (2, 5): {4: 1}},
    "n7_112": {(2, 3): {6: 1}, (2, 7): {4: 1}},
    "n7_113": {(5, 7): {6: 1}, (5, 6): {4: 1}},
    "n7_114": {(2, 7): {4: 1}, (5, 6): {4: 1}, (5, 7): {6: 1}},
    "n7_115": {(2, 5): {4: 1}, (5, 7): {3: 1}, (6, 7): {4: 1}},
    "n7_116": {(3, 5): {4: -1}, (2, 6): {4: 1}, (5, 7): {4: -1}},
    "n7_118": {(2, 5): {7: 1}, (2, 6): {4: 1}, (3, 5): {4: -1}, (5, 7): {4: Fraction(-1, 4)}},
}
for _key, _extra in _N7_321.items():
    _register(CatalogEntry(
        _key, "n = 7", lambda n: n == 7, _fixed(7, _key, _base((2, 3, 5), _extra)),
        _const((3, 2), 3, 3), "seven-dimensional, sequence (3,2,1,1)", fixed_dim=7))


def _n7_117(n, p):
    alpha = p["alpha"]
    extra = {(2, 5): {7: 1}, (2, 7): {4: 1}, (5, 6): {4: 1}, (5, 7): {4: alpha}}
    return _lenient(f"n7_117({format_rational(alpha)})", 7, _base((2, 3, 5), extra))


_register(CatalogEntry(
    "n7_117", "n = 7", lambda n: n == 7, _n7_117,
    _const((3, 2), 3, 3), "seven-dimensional family with parameter alpha", params=("alpha",),
    test_params=({"alpha": 0}, {"alpha": 1}, {"alpha": -1}, {"alpha": 2}), fixed_dim=7))


# ---------------------------------------------------------------- access


def get(key: str) -> CatalogEntry:
    try:
        return CATALOG[key]
    except KeyError:
        raise UnknownKey(f"no catalog entry {key!r}") from None


def build(key: str, n: int | None = None, params: Mapping | None = None, strict: bool = False) -> LieAlgebra:
    entry = get(key)
    if n is None:
        if entry.fixed_dim is None:
            raise InvalidDimension(f"{key}: a dimension is required ({entry.constraint})")
        n = entry.fixed_dim
    return entry.build(n, params, strict=strict)


def list_entries() -> list[tuple[str, str, str]]:
    return [(e.key, e.constraint, e.source) for e in CATALOG.values()]


# ---------------------------------------------------------------- verify


@dataclass
class VerifyRow:
    key: str
    dim: int
    params: dict
    status: str  # "ok" | "mismatch" | "suspected-typo"
    jacobi_ok: bool
    expected: dict
    computed: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "dim": self.dim,
            "params": {k: format_rational(v) for k, v in sorted(self.params.items())},
            "status": self.status,
            "jacobi_ok": self.jacobi_ok,
            "expected": self.expected,
            "computed": self.computed,
            "problems": self.problems,
            "note": self.note,
        }


@dataclass
class VerifyReport:
    rows: list
    dims: list
    seeds: list

    @property
    def mismatches(self) -> list:
        return [r for r in self.rows if r.status == "mismatch"]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "dims": self.dims,
            "seeds": self.seeds,
            "rows": [r.to_dict() for r in self.rows],
            "mismatches": len(self.mismatches),
            "suspected_typos": sum(r.status == "suspected-typo" for r in self.rows),
            "pass": self.passed,
        }


def verify_entry(entry: CatalogEntry, n: int, params: Mapping, cfgs: Sequence[SamplingConfig]) -> VerifyRow:
    g = entry.build(n, params)
    exp = entry.expected(n)
    expected = {"sequence": list(exp.sequence(n)), "breadth": exp.breadth, "class": exp.nilpotency_class}
    row = VerifyRow(entry.key, n, dict(params), "ok", True, expected)
    violations = jacobi_check(g)
    if violations:
        row.jacobi_ok = False
        i, j, k, _ = violations[0]
        row.problems.append(f"Jacobi fails at (X{i},X{j},X{k}) and {len(violations) - 1} more triple(s)")
        row.status = "suspected-typo" if entry.typo else "mismatch"
        row.note = entry.typo
        return row
    series = lower_central_series(g)
    if series[-1].dim:
        row.problems.append("not nilpotent")
        row.status = "mismatch"
        return row
    cls = max(len(series) - 1, 1)
    row.computed["class"] = cls
    seqs = []
    for cfg in cfgs:
        seq = characteristic_sequence(g, cfg)
        cert = breadth(g, cfg)
        seqs.append(seq.parts.parts)
        if cert.breadth != breadth_from_sequence(seq):
            row.problems.append(
                f"seed {cfg.seed}: breadth {cert.breadth} != sum(c_i - 1) = {breadth_from_sequence(seq)}")
        row.computed.setdefault("breadth", cert.breadth)
        row.computed.setdefault("breadth_witness", [format_rational(x) for x in cert.witness])
        if cert.breadth != row.computed["breadth"]:
            row.problems.append(f"seed {cfg.seed}: breadth {cert.breadth} differs across seeds")
    row.computed["sequence"] = list(seqs[0])
    if any(s != seqs[0] for s in seqs):
        row.problems.append(f"sequence differs across seeds: {sorted(set(seqs))}")
    zdim = center(g).dim
    row.computed["center_dim"] = zdim
    if zdim < n and row.computed["breadth"] > n - zdim - 1:
        row.problems.append(f"breadth exceeds dim g - dim Z - 1 = {n - zdim - 1}")
    if tuple(seqs[0]) != exp.sequence(n):
        row.problems.append(f"sequence {tuple(seqs[0])} != expected {exp.sequence(n)}")
    if exp.breadth is not None and row.computed["breadth"] != exp.breadth:
        row.problems.append(f"breadth {row.computed['breadth']} != expected {exp.breadth}")
    if exp.nilpotency_class is not None and cls != exp.nilpotency_class:
        row.problems.append(f"class {cls} != expected {exp.nilpotency_class}")
    if row.problems:
        row.status = "mismatch"
    return row


def instances(dims: Sequence[int]):
    """Every ``(entry, n, params)`` instantiable for the given dimensions."""
    for entry in CATALOG.values():
        for n in dims:
            if entry.dim_ok(n):
                sets = entry.test_params(n) if callable(entry.test_params) else entry.test_params
                for params in sets:
                    yield entry, n, params


def verify_all(dims: Sequence[int], cfg: SamplingConfig | None = None,
               seeds: Sequence[int] | None = None, workers: int = 1) -> VerifyReport:
    """Check every instantiable entry against its expected invariants.

    With several ``seeds`` the characteristic sequence must agree across all
    of them.
    """
    cfg = cfg or SamplingConfig()
    seeds = list(seeds) if seeds else [cfg.seed]
    cfgs = [SamplingConfig(samples=cfg.samples, seed=s, bound=cfg.bound) for s in seeds]
    jobs = list(instances(sorted(set(dims))))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(lambda job: verify_entry(*job, cfgs), jobs))
    else:
        rows = [verify_entry(*job, cfgs) for job in jobs]
    return VerifyReport(rows, sorted(set(dims)), seeds)
