"""Breadth and characteristic sequence of nilpotent Lie algebras.

Both invariants are maxima over the whole algebra that are attained on a
Zariski-open set, so they are computed from a deterministic sample set: every
basis vector, every sum of two basis vectors, and ``samples`` seeded random
integer vectors. Each sample is evaluated exactly; only the maximality is
probabilistic, which is why results come back as certificates with a witness.
"""

from __future__ import annotations

import enum
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import EmptySampleSpace, EmptySequence, NotAnIdeal, NotNilpotent, TheoremViolation
from .exact_linalg import (
    format_vector,
    integer_rank,
    integer_rank_profile,
    integer_scaled,
    jordan_type_from_profile,
)
from .lie import (
    LieAlgebra,
    Subspace,
    center,
    derived_subalgebra,
    is_ideal,
    is_nilpotent,
    nilpotency_class,
)

SEED_ENV = "LIE_BREADTH_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


@dataclass(frozen=True)
class SamplingConfig:
    samples: int = 25
    seed: int = field(default_factory=default_seed)
    bound: int = 10


@dataclass(frozen=True, order=False)
class JordanType:
    parts: tuple

    def __post_init__(self):
        if any(b > a for a, b in zip(self.parts, self.parts[1:])) or any(p <= 0 for p in self.parts):
            raise ValueError(f"not a partition: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def _key(self, other: "JordanType"):
        assert self.size == other.size, "Jordan types of different sizes are not comparable"
        width = max(len(self.parts), len(other.parts))
        return (self.parts + (0,) * (width - len(self.parts)),
                other.parts + (0,) * (width - len(other.parts)))

    def __lt__(self, other: "JordanType") -> bool:
        a, b = self._key(other)
        return a < b

    def __le__(self, other: "JordanType") -> bool:
        a, b = self._key(other)
        return a <= b

    def __gt__(self, other: "JordanType") -> bool:
        return other < self

    def __ge__(self, other: "JordanType") -> bool:
        return other <= self

    def count(self, part: int) -> int:
        return self.parts.count(part)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class CharacteristicSequence:
    parts: JordanType
    witness: tuple
    samples_tried: int = 0
    seed: int = 0

    def __str__(self):
        return str(self.parts)


@dataclass(frozen=True)
class BreadthCertificate:
    breadth: int
    witness: tuple
    samples_tried: int
    seed: int


def _structured_samples(n: int) -> Iterator[list[int]]:
    for i in range(n):
        yield [int(k == i) for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            yield [int(k == i or k == j) for k in range(n)]


def _random_samples(n: int, cfg: SamplingConfig, rng: random.Random) -> Iterator[list[int]]:
    while True:
        yield [rng.randint(-cfg.bound, cfg.bound) for _ in range(n)]


def sample_set(n: int, cfg: SamplingConfig) -> list[list[int]]:
    """The full deterministic sample list used by :func:`breadth`."""
    rng = random.Random(cfg.seed)
    randoms = _random_samples(n, cfg, rng)
    return list(_structured_samples(n)) + [next(randoms) for _ in range(cfg.samples)]


def _as_integer(x: Sequence) -> list[int]:
    return integer_scaled(x)


def _require_nilpotent(g: LieAlgebra) -> None:
    if not is_nilpotent(g):
        raise NotNilpotent(f"{g.name} is not nilpotent")


def jordan_type_of(g: LieAlgebra, x: Sequence) -> JordanType:
    """Jordan block sizes of ``ad x``, largest first."""
    profile = integer_rank_profile(g.integer_ad(_as_integer(x)))
    return JordanType(jordan_type_from_profile(profile))


def _vec(x: Sequence[int]) -> tuple:
    return tuple(Fraction(v) for v in x)


def breadth(g: LieAlgebra, cfg: SamplingConfig | None = None, strict: bool = True) -> BreadthCertificate:
    """Maximum rank of ``ad x`` over the sample set."""
    cfg = cfg or SamplingConfig()
    if strict:
        _require_nilpotent(g)
    best, witness, tried = -1, None, 0
    for x in sample_set(g.dim, cfg):
        tried += 1
        r = integer_rank(g.integer_ad(x))
        if r > best:
            best, witness = r, x
    if witness is None:
        return BreadthCertificate(0, (), 0, cfg.seed)
    return BreadthCertificate(best, _vec(witness), tried, cfg.seed)


def breadth_on_ideal(g: LieAlgebra, ideal: Subspace, cfg: SamplingConfig | None = None) -> BreadthCertificate:
    """Maximum rank of ``ad x`` restricted to ``ideal``."""
    cfg = cfg or SamplingConfig()
    if not is_ideal(g, ideal):
        raise NotAnIdeal(f"subspace of dimension {ideal.dim} is not an ideal of {g.name}")
    basis = [_as_integer(v) for v in ideal.basis]
    best, witness, tried = 0, None, 0
    for x in sample_set(g.dim, cfg):
        tried += 1
        rows = g.integer_ad(x)
        # images of the ideal basis vectors
        images = [[sum(r[c] * v[c] for c in range(g.dim)) for r in rows] for v in basis]
        rk = integer_rank(images)
        if witness is None or rk > best:
            best, witness = rk, x
    return BreadthCertificate(best, _vec(witness) if witness else (), tried, cfg.seed)


def _outside(sub: Subspace, x: Sequence[int]) -> bool:
    return not sub.contains(_vec(x))


def characteristic_samples(g: LieAlgebra, cfg: SamplingConfig, derived: Subspace | None = None) -> list[list[int]]:
    """Sample vectors outside the derived subalgebra; random draws landing inside are redrawn."""
    n = g.dim
    derived = derived_subalgebra(g) if derived is None else derived
    if derived.dim == n:
        raise EmptySampleSpace(f"{g.name}: derived subalgebra is the whole algebra")
    out = [x for x in _structured_samples(n) if _outside(derived, x)]
    rng = random.Random(cfg.seed)
    randoms = _random_samples(n, cfg, rng)
    kept, attempts = 0, 0
    while kept < cfg.samples:
        attempts += 1
        if attempts > 1000 * max(cfg.samples, 1):
            raise EmptySampleSpace(f"{g.name}: could not draw samples outside the derived subalgebra")
        x = next(randoms)
        if _outside(derived, x):
            out.append(x)
            kept += 1
    return out


def characteristic_sequence(g: LieAlgebra, cfg: SamplingConfig | None = None) -> CharacteristicSequence:
    """Lexicographic maximum of the Jordan type of ``ad x`` over samples ``x`` outside ``C^1(g)``."""
    cfg = cfg or SamplingConfig()
    if g.dim == 0:
        raise EmptySampleSpace("zero-dimensional algebra")
    _require_nilpotent(g)
    best, witness, tried = None, None, 0
    for x in characteristic_samples(g, cfg):
        tried += 1
        jt = JordanType(jordan_type_from_profile(integer_rank_profile(g.integer_ad(x))))
        if best is None or jt > best:
            best, witness = jt, x
    return CharacteristicSequence(best, _vec(witness), tried, cfg.seed)


def breadth_from_sequence(c) -> int:
    """``sum(c_i) - k`` for ``c = (c_1, ..., c_k, 1)``, computed as ``sum(p - 1)`` over all parts."""
    parts = _parts(c)
    if not parts:
        raise EmptySequence("empty characteristic sequence")
    return sum(p - 1 for p in parts)


def _parts(c) -> tuple:
    if isinstance(c, CharacteristicSequence):
        return c.parts.parts
    if isinstance(c, JordanType):
        return c.parts
    return tuple(c)


@dataclass
class TheoremReport:
    algebra: str
    dim: int
    breadth: int
    breadth_witness: tuple
    sequence: tuple
    sequence_witness: tuple
    breadth_from_sequence: int
    center_dim: int
    center_bound: int | None
    sequence_agrees: bool
    center_bound_ok: bool | None

    @property
    def passed(self) -> bool:
        return self.sequence_agrees and self.center_bound_ok is not False

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "dim": self.dim,
            "breadth": self.breadth,
            "breadth_witness": format_vector(self.breadth_witness),
            "sequence": list(self.sequence),
            "sequence_witness": format_vector(self.sequence_witness),
            "breadth_from_sequence": self.breadth_from_sequence,
            "center_dim": self.center_dim,
            "center_bound": self.center_bound,
            "sequence_agrees": self.sequence_agrees,
            "center_bound_ok": self.center_bound_ok,
            "pass": self.passed,
        }


def verify_theorem_b(g: LieAlgebra, cfg: SamplingConfig | None = None) -> TheoremReport:
    """Compare breadth with the value predicted by the characteristic sequence, and check the center bound."""
    cfg = cfg or SamplingConfig()
    cert = breadth(g, cfg)
    seq = characteristic_sequence(g, cfg)
    predicted = breadth_from_sequence(seq)
    zdim = center(g).dim
    if zdim == g.dim:
        bound, bound_ok = None, None
    else:
        bound = g.dim - zdim - 1
        bound_ok = cert.breadth <= bound
    return TheoremReport(
        algebra=g.name, dim=g.dim, breadth=cert.breadth, breadth_witness=cert.witness,
        sequence=seq.parts.parts, sequence_witness=seq.witness,
        breadth_from_sequence=predicted, center_dim=zdim, center_bound=bound,
        sequence_agrees=cert.breadth == predicted, center_bound_ok=bound_ok,
    )


class B2Class(enum.Enum):
    TwoStep22 = "2-step"
    ThreeStep31 = "3-step"
    NotBreadth2 = "not breadth 2"


def is_shape(parts: Sequence[int], head: Sequence[int]) -> bool:
    """True if ``parts`` is ``head`` followed only by 1s."""
    parts = tuple(parts)
    head = tuple(head)
    return parts[:len(head)] == head and all(p == 1 for p in parts[len(head):])


def classify_b2(g: LieAlgebra, cfg: SamplingConfig | None = None) -> tuple[B2Class, int, CharacteristicSequence]:
    """Sort a breadth-2 algebra into the 2-step ``(2,2,1,...)`` or 3-step ``(3,1,...)`` case.

    Returns ``(class, breadth, sequence)``. A breadth-2 algebra fitting
    neither case raises :class:`TheoremViolation`.
    """
    cfg = cfg or SamplingConfig()
    b = breadth(g, cfg).breadth
    seq = characteristic_sequence(g, cfg)
    if b != 2:
        return B2Class.NotBreadth2, b, seq
    parts = seq.parts.parts
    step = nilpotency_class(g)
    if is_shape(parts, (2, 2)) and step == 2:
        return B2Class.TwoStep22, b, seq
    if is_shape(parts, (3,)) and step == 3:
        return B2Class.ThreeStep31, b, seq
    raise TheoremViolation(f"{g.name}: breadth 2 with sequence {seq} and class {step}")
