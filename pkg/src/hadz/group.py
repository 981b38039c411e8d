"""Element indexing and arithmetic for G = Z_t x Z_2^2.

Elements are numbered ``k = 4q + r`` with ``r`` in ``{1, 2, 3, 4}`` and
``q`` in ``[0, t-1]``.  The Z_2^2 part follows the order
``u_1 = (0,0), u_2 = (1,0), u_3 = (0,1), u_4 = (1,1)``, so that
``r - 1 == u[0] + 2*u[1]`` and multiplying in Z_2^2 is an XOR on ``r - 1``.
Every other module relies on this numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

U = ((0, 0), (1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class GroupParams:
    t: int

    def __post_init__(self):
        check_t(self.t)

    @property
    def order(self) -> int:
        return 4 * self.t


@dataclass(frozen=True)
class GroupElement:
    q: int
    u: tuple[int, int]


def check_t(t) -> int:
    if isinstance(t, GroupParams):
        return t.t
    if not isinstance(t, (int, np.integer)) or isinstance(t, bool):
        raise TypeError(f"t must be an integer, got {t!r}")
    t = int(t)
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be an odd integer >= 3, got {t}")
    return t


def residue4(k: int) -> int:
    """``k mod 4`` taken in ``{1, 2, 3, 4}``."""
    r = k % 4
    return 4 if r == 0 else r


def element_of_index(k: int, t) -> GroupElement:
    t = check_t(t)
    if not 1 <= k <= 4 * t:
        raise ValueError(f"index {k} out of range [1, {4 * t}]")
    r = residue4(k)
    return GroupElement((k - r) // 4, U[r - 1])


def index_of_element(g: GroupElement, t) -> int:
    t = check_t(t)
    if not 0 <= g.q < t or tuple(g.u) not in U:
        raise ValueError(f"invalid element {g} for t={t}")
    return 4 * g.q + U.index(tuple(g.u)) + 1


def multiply(g: GroupElement, h: GroupElement, t) -> GroupElement:
    t = check_t(t)
    return GroupElement((g.q + h.q) % t, (g.u[0] ^ h.u[0], g.u[1] ^ h.u[1]))


def inverse(g: GroupElement, t) -> GroupElement:
    t = check_t(t)
    return GroupElement((-g.q) % t, tuple(g.u))


@lru_cache(maxsize=None)
def _mult_table(t: int) -> np.ndarray:
    # 0-based positions p = k - 1 = 4q + (r - 1)
    p = np.arange(4 * t)
    q, c = p // 4, p % 4
    table = 4 * ((q[:, None] + q[None, :]) % t) + (c[:, None] ^ c[None, :])
    table.setflags(write=False)
    return table


def multiplication_table(t) -> np.ndarray:
    """0-based table: ``table[i, j]`` is the position of ``g_{i+1} g_{j+1}``."""
    return _mult_table(check_t(t))
