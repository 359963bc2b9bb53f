"""Model algebras that the deformation families are built on."""

from __future__ import annotations

from .errors import InvalidDimension
from .lie import Cochain2, LieAlgebra


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise InvalidDimension(what)


def shift_table(n: int, sources) -> dict:
    """``[X_1, X_i] = X_{i+1}`` for each ``i`` in ``sources``."""
    return {(1, i): {i + 1: 1} for i in sources}


def g_1_0_k(n: int) -> LieAlgebra:
    """``[X1,X2]=X3, [X1,X3]=X4``: characteristic sequence ``(3,1,...,1)``."""
    _need(n >= 4, f"g_1_0_k needs n >= 4, got {n}")
    return LieAlgebra.from_brackets(f"g_1_0_{n - 1}", n, shift_table(n, (2, 3)))


def g_2_k(n: int) -> LieAlgebra:
    """``[X1,X2]=X3, [X1,X4]=X5``: characteristic sequence ``(2,2,1,...,1)``."""
    _need(n >= 5, f"g_2_k needs n >= 5, got {n}")
    return LieAlgebra.from_brackets(f"g_2_{n - 2}", n, shift_table(n, (2, 4)))


def g_3_k(n: int) -> LieAlgebra:
    _need(n >= 7, f"g_3_k needs n >= 7, got {n}")
    return LieAlgebra.from_brackets(f"g_3_{n - 6}", n, shift_table(n, (2, 4, 6)))


def g_1_0_0_k(n: int) -> LieAlgebra:
    _need(n >= 5, f"g_1_0_0_k needs n >= 5, got {n}")
    return LieAlgebra.from_brackets(f"g_1_0_0_{n - 4}", n, shift_table(n, (2, 3, 4)))


def g_1_1_k(n: int) -> LieAlgebra:
    _need(n >= 6, f"g_1_1_k needs n >= 6, got {n}")
    return LieAlgebra.from_brackets(f"g_1_1_{n - 5}", n, shift_table(n, (2, 3, 5)))


def filiform_model(n: int) -> LieAlgebra:
    """``[X1,Xi]=X_{i+1}`` for ``2 <= i <= n-1``."""
    _need(n >= 3, f"filiform model needs n >= 3, got {n}")
    return LieAlgebra.from_brackets(f"L_{n}", n, shift_table(n, range(2, n)))


def heisenberg(n: int) -> LieAlgebra:
    """``[X_{2i-1}, X_{2i}] = X_n`` for ``n = 2m + 1``."""
    _need(n >= 3 and n % 2 == 1, f"Heisenberg algebra needs odd n >= 3, got {n}")
    return LieAlgebra.from_brackets(f"h_{n}", n, {(2 * i - 1, 2 * i): {n: 1} for i in range(1, (n - 1) // 2 + 1)})


def abelian(n: int) -> LieAlgebra:
    _need(n >= 1, f"abelian algebra needs n >= 1, got {n}")
    return LieAlgebra(f"a_{n}", Cochain2.zero(n))
