"""Coboundary matrices, the representative matrix R and cocyclic assembly.

A coboundary set is stored as an integer bitmask: bit ``k - 1`` is set iff
the coboundary with index ``k`` is used.  Matrices are ``int8`` numpy arrays
with entries in ``{+1, -1}``, rows and columns in group-index order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .group import check_t, multiplication_table, residue4

# Class toggles that keep the cocyclic matrix fixed up to row signs.  Order
# follows the usual listing starting from the basis expression.
TOGGLE_PATTERNS = (
    (),
    (2, 3),
    (2, 4),
    (1, 2),
    (3, 4),
    (1, 3),
    (1, 4),
    (1, 2, 3, 4),
)

# Diagram / listing order of the residue classes.
CLASS_ORDER = (2, 3, 4, 1)


class AssemblyConvention(enum.Enum):
    RAW = "raw"
    GENERALIZED = "generalized"


@lru_cache(maxsize=None)
def full_mask(t: int) -> int:
    return (1 << (4 * t)) - 1


@lru_cache(maxsize=None)
def class_mask(t: int, r: int) -> int:
    """Bits of all indices ``k`` with ``[k]_4 == r``."""
    if r not in (1, 2, 3, 4):
        raise ValueError(f"class must be in 1..4, got {r}")
    m = 0
    for q in range(t):
        m |= 1 << (4 * q + r - 1)
    return m


@lru_cache(maxsize=None)
def _toggle_masks(t: int) -> tuple[int, ...]:
    out = []
    for pattern in TOGGLE_PATTERNS:
        m = 0
        for r in pattern:
            m |= class_mask(t, r)
        out.append(m)
    return tuple(out)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


@dataclass(frozen=True)
class CoboundarySet:
    """A set of coboundary indices in ``[1, 4t]`` for fixed ``t``."""

    t: int
    mask: int

    def __post_init__(self):
        check_t(self.t)
        if self.mask < 0 or self.mask >> (4 * self.t):
            raise ValueError(f"mask has bits outside [1, {4 * self.t}]")

    @classmethod
    def from_indices(cls, t: int, indices: Iterable[int]) -> "CoboundarySet":
        t = check_t(t)
        mask = 0
        for k in indices:
            k = int(k)
            if not 1 <= k <= 4 * t:
                raise ValueError(f"coboundary index {k} out of range [1, {4 * t}]")
            if mask >> (k - 1) & 1:
                raise ValueError(f"duplicate coboundary index {k}")
            mask |= 1 << (k - 1)
        return cls(t, mask)

    @classmethod
    def from_classes(cls, t: int, groups: Iterable[Iterable[int]]) -> "CoboundarySet":
        """Build from class-grouped lists such as ``[[14, 10, 6], [11], ...]``."""
        return cls.from_indices(t, [k for g in groups for k in g])

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def classes(self) -> dict[int, tuple[int, ...]]:
        """Indices grouped by residue class, keyed in diagram order 2, 3, 4, 1."""
        return {
            r: tuple(_bits(self.mask & class_mask(self.t, r))) for r in CLASS_ORDER
        }

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, k) -> bool:
        return 1 <= k <= 4 * self.t and bool(self.mask >> (k - 1) & 1)

    def __repr__(self) -> str:
        return f"CoboundarySet(t={self.t}, {list(self.indices)})"


def _phi(t: int, mask: int) -> np.ndarray:
    """The +-1 function that is -1 exactly on the set."""
    bits = (mask >> np.arange(4 * t, dtype=object)) & 1
    return (1 - 2 * bits.astype(np.int8)).astype(np.int8)


def coboundary_matrix(d: int, t) -> np.ndarray:
    """``M(i, j) = delta(g_i) delta(g_j) delta(g_i g_j)`` with delta = -1 only at g_d."""
    t = check_t(t)
    if not 1 <= d <= 4 * t:
        raise ValueError(f"coboundary index {d} out of range [1, {4 * t}]")
    delta = np.ones(4 * t, dtype=np.int8)
    delta[d - 1] = -1
    mul = multiplication_table(t)
    return delta[:, None] * delta[None, :] * delta[mul]


def generalized_coboundary_matrix(d: int, t) -> np.ndarray:
    M = coboundary_matrix(d, t)
    M[d - 1] *= -1
    return M


@lru_cache(maxsize=None)
def _r_tile() -> np.ndarray:
    # rows/columns in Z_2^2 order e, a, b, ab; exponent u1 v1 + u2 v2 + u2 v1
    tile = np.empty((4, 4), dtype=np.int8)
    for c in range(4):
        u1, u2 = c & 1, c >> 1
        for e in range(4):
            v1, v2 = e & 1, e >> 1
            tile[c, e] = -1 if (u1 * v1 + u2 * v2 + u2 * v1) % 2 else 1
    tile.setflags(write=False)
    return tile


def r_tile() -> np.ndarray:
    """The 4x4 block of R on the Z_2^2 part."""
    return _r_tile().copy()


def representative_matrix(t) -> np.ndarray:
    t = check_t(t)
    return np.tile(_r_tile(), (t, t))


@lru_cache(maxsize=None)
def r_negative_nibbles() -> tuple[int, ...]:
    """For each Z_2^2 code ``c`` the 4-bit pattern of columns where R's row is -1."""
    tile = _r_tile()
    return tuple(
        sum(1 << e for e in range(4) if tile[c, e] < 0) for c in range(4)
    )


def assemble(
    s: CoboundarySet, conv: AssemblyConvention = AssemblyConvention.GENERALIZED
) -> np.ndarray:
    """Pointwise product of the chosen coboundary matrices and R."""
    t = s.t
    phi = _phi(t, s.mask)
    mul = multiplication_table(t)
    M = phi[None, :] * phi[mul] * representative_matrix(t)
    if conv is AssemblyConvention.RAW:
        M = phi[:, None] * M
    elif conv is not AssemblyConvention.GENERALIZED:
        raise ValueError(f"unknown convention {conv!r}")
    return M.astype(np.int8)


def normalize_rows(M: np.ndarray) -> np.ndarray:
    """Negate every row whose first entry is -1."""
    return (M * M[:, :1]).astype(np.int8)


def _product(t: int, indices: Iterable[int]) -> np.ndarray:
    out = np.ones((4 * t, 4 * t), dtype=np.int8)
    for d in indices:
        out = out * coboundary_matrix(d, t)
    return out


def dropped_relations_check(t) -> dict[str, bool]:
    """Check the expressions of the coboundaries 1, 4t-1 and 4t in the basis."""
    t = check_t(t)
    class2 = [4 * i + 2 for i in range(t)]
    rel1 = -_product(t, [4 * i + 1 for i in range(1, t)] + class2)
    rel2 = _product(t, [4 * i + 3 for i in range(t - 1)] + class2)
    rel3 = _product(t, [4 * i for i in range(1, t)] + class2)
    return {
        "d1": bool(np.array_equal(coboundary_matrix(1, t), rel1)),
        f"d{4 * t - 1}": bool(np.array_equal(coboundary_matrix(4 * t - 1, t), rel2)),
        f"d{4 * t}": bool(np.array_equal(coboundary_matrix(4 * t, t), rel3)),
    }


def expression_masks(t: int, mask: int) -> tuple[int, ...]:
    return tuple(mask ^ m for m in _toggle_masks(t))


def eight_expressions(s: CoboundarySet) -> list[CoboundarySet]:
    return [CoboundarySet(s.t, m) for m in expression_masks(s.t, s.mask)]


def basis_expression(s: CoboundarySet) -> CoboundarySet:
    """The expression avoiding the dropped coboundaries 1, 4t-1 and 4t."""
    t = s.t
    mask = s.mask
    if mask & 1:
        mask ^= class_mask(t, 1) | class_mask(t, 2)
    if mask >> (4 * t - 2) & 1:
        mask ^= class_mask(t, 2) | class_mask(t, 3)
    if mask >> (4 * t - 1) & 1:
        mask ^= class_mask(t, 2) | class_mask(t, 4)
    return CoboundarySet(t, mask)


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def minimal_repartition(s: CoboundarySet) -> CoboundarySet:
    """The expression with fewest coboundaries; ties go to the lexicographically smallest."""
    best = min(expression_masks(s.t, s.mask), key=lambda m: (m.bit_count(), _lex_key(m)))
    return CoboundarySet(s.t, best)


def canonical_key(s: CoboundarySet) -> tuple[int, ...]:
    """Smallest sorted index list over the eight expressions of the same matrix."""
    return min(_lex_key(m) for m in expression_masks(s.t, s.mask))


def class_id(t: int, mask: int) -> int:
    """Cheap integer key, equal for exactly the expressions of one matrix."""
    return min(expression_masks(t, mask))


def residue_class(k: int) -> int:
    return residue4(k)
