"""Independent reference implementations used as test oracles.

Everything here works on plain ``{(i, j): {k: c}}`` tables with 1-based
indices and ``Fraction`` arithmetic, sharing no code with the package.
"""

from fractions import Fraction
from itertools import product

import sympy


def skew_lookup(table, i, j):
    if i == j:
        return {}
    if (i, j) in table:
        return dict(table[(i, j)])
    if (j, i) in table:
        return {k: -c for k, c in table[(j, i)].items()}
    return {}


def apply_vec(table, n, x, y):
    """Bilinear extension on dense 0-based vectors."""
    out = [Fraction(0)] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            coeff = Fraction(x[i - 1]) * Fraction(y[j - 1])
            if coeff:
                for k, c in skew_lookup(table, i, j).items():
                    out[k - 1] += coeff * Fraction(c)
    return out


def basis(n, i):
    return [Fraction(int(k == i - 1)) for k in range(n)]


def jacobi_residuals(table, n):
    """All basis triples ``i<j<k`` with nonzero cyclic sum, by dense evaluation."""
    bad = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                total = [Fraction(0)] * n
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = apply_vec(table, n, basis(n, a), basis(n, b))
                    outer = apply_vec(table, n, inner, basis(n, c))
                    total = [s + t for s, t in zip(total, outer)]
                if any(total):
                    bad.append((i, j, k, tuple(total)))
    return bad


def chain_eval(tables, n, args):
    """Left-normed ``t1 ∘₁ t2 ∘₁ ... ∘₁ tr`` on basis indices ``args`` (1-based)."""
    *outer, innermost = tables
    vec = apply_vec(innermost, n, basis(n, args[0]), basis(n, args[1]))
    rest = list(args[2:])
    for t in reversed(outer):
        vec = apply_vec(t, n, vec, basis(n, rest.pop(0)))
    return vec


def all_tuples(n, arity):
    return product(range(1, n + 1), repeat=arity)


def sympy_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in r] for r in rows]).rank()


def conjugate(partition):
    """Conjugate of a partition given as a nonincreasing list."""
    parts = [p for p in partition if p > 0]
    if not parts:
        return []
    return [sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1)]


def jordan_type_oracle(rows):
    """Block sizes of a nilpotent matrix via sympy ranks of its powers and partition conjugation."""
    m = sympy.Matrix(rows)
    n = m.shape[0]
    ranks = [n]
    power = sympy.eye(n)
    while ranks[-1] > 0:
        power = power * m
        ranks.append(power.rank())
        if len(ranks) > n + 2:
            raise ValueError("not nilpotent")
    at_least = [ranks[p - 1] - ranks[p] for p in range(1, len(ranks))]
    return tuple(conjugate(at_least))
