"""Total orbits under complement, rotation, swapping and dilatation.

Orbit members are matrices, not sets: each member is stored by the smallest
of the row tuples of its eight expressions, so different expressions of one
matrix are never counted twice.
"""

from __future__ import annotations

import json
import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .cocycle import TOGGLE_PATTERNS, CoboundarySet, basis_expression, canonical_key
from .ops import (
    SWAP_GENERATORS,
    Rows,
    SwapSpec,
    coprimes,
    dilate_row,
    from_rows,
    rotate_row,
    row_axes,
    to_rows,
)


class NoSymmetricMember(Warning):
    pass


@lru_cache(maxsize=None)
def _toggle_rows(t: int) -> tuple[Rows, ...]:
    full = (1 << t) - 1
    return tuple(
        tuple(full if r in pattern else 0 for r in (1, 2, 3, 4)) for pattern in TOGGLE_PATTERNS
    )


def expressions_rows(rows: Rows, t: int) -> list[Rows]:
    a, b, c, d = rows
    return [(a ^ x, b ^ y, c ^ z, d ^ w) for x, y, z, w in _toggle_rows(t)]


def canon_rows(rows: Rows, t: int) -> Rows:
    return min(expressions_rows(rows, t))


def _generators(t: int, families: str):
    full = (1 << t) - 1
    gens = []
    if "C" in families:
        gens.append(lambda r: (r[0], r[1] ^ full, r[2], r[3]))
    if "T" in families:
        # T_1 generates every rotation
        gens.append(lambda r: tuple(rotate_row(x, t, 1) for x in r))
    if "S" in families:
        for name in SWAP_GENERATORS:
            gens.append(SwapSpec.generator(name).apply_rows)
    if "V" in families:
        for ratio in coprimes(t):
            if ratio != 1:
                gens.append(lambda r, ratio=ratio: tuple(dilate_row(x, t, ratio) for x in r))
    return gens


def closure(rows: Rows, t: int, families: str = "CTSV") -> set[Rows]:
    """Breadth-first closure of one matrix under the chosen operation families."""
    gens = _generators(t, families)
    start = canon_rows(rows, t)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = canon_rows(g(cur), t)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


@dataclass(frozen=True)
class OrbitFactors:
    complement: int
    rotation: int
    swap: int
    dilate: int
    is_product: bool

    @property
    def product(self) -> int:
        return self.complement * self.rotation * self.swap * self.dilate

    def __str__(self) -> str:
        text = f"{self.complement} x {self.rotation} x {self.swap} x {self.dilate} = {self.product}"
        return text if self.is_product else text + " (NON-PRODUCT)"

    def to_dict(self) -> dict:
        return {
            "complement": self.complement,
            "rotation": self.rotation,
            "swap": self.swap,
            "dilate": self.dilate,
            "is_product": self.is_product,
        }


@dataclass
class OrbitRecord:
    t: int
    representative: CoboundarySet
    members: frozenset  # canonical row tuples
    factors: OrbitFactors | None = None
    symmetric: bool = True
    _seed: Rows | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def member_sets(self) -> list[CoboundarySet]:
        """Basis expression of every member, sorted by index list."""
        sets = [basis_expression(from_rows(self.t, m)) for m in self.members]
        return sorted(sets, key=lambda s: s.indices)

    def member_keys(self) -> list[tuple[int, ...]]:
        return sorted(canonical_key(from_rows(self.t, m)) for m in self.members)

    def to_dict(self, members: bool = False) -> dict:
        out = {
            "t": self.t,
            "representative": list(self.representative.indices),
            "size": self.size,
            "factors": self.factors.to_dict() if self.factors else None,
            "symmetric": self.symmetric,
        }
        if members:
            out["members"] = [list(k) for k in self.member_keys()]
        return out

    def to_json(self, members: bool = False) -> str:
        return json.dumps(self.to_dict(members))


def factorize_orbit(rec: OrbitRecord) -> OrbitFactors:
    """Successive orbit growth when adding complement, rotations, swaps, dilatations."""
    t = rec.t
    seed = rec._seed if rec._seed is not None else to_rows(rec.representative)
    sizes = [len(closure(seed, t, fams)) for fams in ("C", "CT", "CTS")] + [rec.size]
    ratios, ok = [sizes[0]], True
    for prev, cur in zip(sizes, sizes[1:]):
        ok &= cur % prev == 0
        ratios.append(cur // prev)
    return OrbitFactors(*ratios, is_product=ok and ratios[0] * ratios[1] * ratios[2] * ratios[3] == rec.size)


def _central(t: int) -> int:
    # the column ceil(t/2) holds Z_t part (t-1)/2
    return (t - 1) // 2


def _rep_key(rows: Rows, t: int):
    count = sum(r.bit_count() for r in rows)
    central = _central(t) in row_axes(rows, t)
    counts = [rows[1].bit_count(), rows[2].bit_count(), rows[3].bit_count(), rows[0].bit_count()]
    nondecreasing = all(a <= b for a, b in zip(counts, counts[1:]))
    return (count, not central, not nondecreasing)


def _descending_classes(rows: Rows, t: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(4 * q + r for q in range(t - 1, -1, -1) if rows[r - 1] >> q & 1)
        for r in (2, 3, 4, 1)
    )


def _tie_key(rows: Rows, t: int):
    # more shared columns between diagram rows 1 and 2 first, then the
    # class-grouped descending index lists
    return (-(rows[1] & rows[2]).bit_count(), _descending_classes(rows, t))


def select_representative(members, t: int) -> tuple[CoboundarySet, bool]:
    """Fewest coboundaries, symmetric about the central column, non-decreasing row counts.

    Remaining ties go to the candidate whose first two diagram rows share the
    most columns, then to the smallest class-grouped descending index lists.
    The second return value is False when no member has a symmetric diagram.
    """
    cands = [e for m in members for e in expressions_rows(m, t)]
    min_count = min(sum(r.bit_count() for r in e) for e in cands)
    cands = [e for e in cands if sum(r.bit_count() for r in e) == min_count]
    keyed = [(_rep_key(e, t), e) for e in cands]
    best_key = min(k for k, _ in keyed)
    rep = min((e for k, e in keyed if k == best_key), key=lambda e: _tie_key(e, t))
    symmetric = any(row_axes(m, t) for m in members)
    return from_rows(t, rep), symmetric


def total_orbit(s: CoboundarySet, factors: bool = True) -> OrbitRecord:
    t = s.t
    seed = to_rows(s)
    members = frozenset(closure(seed, t))
    rep, symmetric = select_representative(members, t)
    rec = OrbitRecord(t, rep, members, symmetric=symmetric, _seed=seed)
    if not symmetric:
        warnings.warn(f"orbit of {list(s.indices)} has no symmetric member", NoSymmetricMember, stacklevel=2)
    if factors:
        rec.factors = factorize_orbit(rec)
    return rec


def representative(rec: OrbitRecord) -> CoboundarySet:
    return rec.representative
