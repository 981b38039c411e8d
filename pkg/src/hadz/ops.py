"""Complement, rotation, swapping and dilatation of coboundary sets.

Internally a set is handled as four ``t``-bit rows, one per residue class
(``rows[r - 1]`` for class ``r``), with bit ``q`` standing for the index
``4q + r``.  All four operations are cheap on this form: complement flips a
row, rotation and dilatation permute bit positions, swapping permutes rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cocycle import CoboundarySet
from .group import check_t
from .hadamard import is_hadamard_set

Rows = tuple[int, int, int, int]

SWAP_GENERATORS = ("23", "24", "21", "34", "31", "41")


class NotCoprime(ValueError):
    pass


def to_rows(s: CoboundarySet) -> Rows:
    t = s.t
    bits = format(s.mask, f"0{4 * t}b")[::-1]
    return tuple(int(bits[r::4][::-1], 2) for r in range(4))


def from_rows(t: int, rows: Sequence[int]) -> CoboundarySet:
    cols = [format(row, f"0{t}b")[::-1] for row in rows]
    bits = "".join(cols[r][q] for q in range(t) for r in range(4))
    return CoboundarySet(t, int(bits[::-1], 2))


def rows_count(rows: Sequence[int]) -> int:
    return sum(r.bit_count() for r in rows)


# -- row-level primitives ----------------------------------------------------


def rotate_row(row: int, t: int, i: int) -> int:
    """Index ``k -> k - 4i``: bit ``q`` moves to ``q - i (mod t)``."""
    i %= t
    if not i:
        return row
    return ((row >> i) | (row << (t - i))) & ((1 << t) - 1)


def reflect_row(row: int, t: int, center: int = 0) -> int:
    """Bit ``q`` moves to ``2*center - q (mod t)``."""
    rev = int(format(row, f"0{t}b")[::-1], 2)  # q -> t-1-q
    return rotate_row(rev, t, -(1 + 2 * center))


@lru_cache(maxsize=None)
def _dilate_tables(t: int, r: int) -> tuple[tuple[int, ...], ...]:
    tables = []
    for chunk in range(0, t, 8):
        tab = []
        for byte in range(256):
            out = 0
            for k in range(8):
                q = chunk + k
                if byte >> k & 1 and q < t:
                    out |= 1 << (q * r % t)
            tab.append(out)
        tables.append(tuple(tab))
    return tuple(tables)


def dilate_row(row: int, t: int, r: int) -> int:
    """Bit ``q`` moves to ``r*q (mod t)``."""
    out = 0
    for tab in _dilate_tables(t, r):
        out |= tab[row & 0xFF]
        row >>= 8
    return out


def row_axes(rows: Sequence[int], t: int) -> list[int]:
    """Centers ``q_c`` such that every row is invariant under ``q -> 2 q_c - q``."""
    revs = [reflect_row(row, t) for row in rows]
    return [
        qc
        for qc in range(t)
        if all(rotate_row(rv, t, -2 * qc) == row for rv, row in zip(revs, rows))
    ]


def column_of_center(t: int, qc: int) -> int:
    """Diagram column (1-based) holding the indices with Z_t part ``qc``."""
    return t - qc if qc else t


def center_of_column(t: int, col: int) -> int:
    return (t - col) % t


# -- swaps -------------------------------------------------------------------


@dataclass(frozen=True)
class SwapSpec:
    """A permutation of the residue classes; ``perm[r - 1]`` is the image of class ``r``."""

    perm: tuple[int, int, int, int]

    @classmethod
    def generator(cls, name: str) -> "SwapSpec":
        if name not in SWAP_GENERATORS:
            raise ValueError(f"unknown swap s{name}; expected one of {SWAP_GENERATORS}")
        j, k = int(name[0]), int(name[1])
        perm = [1, 2, 3, 4]
        perm[j - 1], perm[k - 1] = k, j
        return cls(tuple(perm))

    def then(self, other: "SwapSpec") -> "SwapSpec":
        """Apply ``self`` first, then ``other``."""
        return SwapSpec(tuple(other.perm[p - 1] for p in self.perm))

    @property
    def shifts(self) -> tuple[int, int, int, int]:
        """Index shift applied to each class ``r``: ``4q + r -> 4q + perm(r)``."""
        return tuple(p - r for r, p in zip((1, 2, 3, 4), self.perm))

    def apply_rows(self, rows: Sequence[int]) -> Rows:
        out = [0, 0, 0, 0]
        for r, p in enumerate(self.perm):
            out[p - 1] = rows[r]
        return tuple(out)


def compose_swaps(names: Iterable[str]) -> SwapSpec:
    spec = SwapSpec((1, 2, 3, 4))
    for name in names:
        spec = spec.then(SwapSpec.generator(name))
    return spec


# -- public operations on sets ---------------------------------------------


def complement(s: CoboundarySet, i: int = 2) -> CoboundarySet:
    """Replace the class-``i`` part of ``s`` by its complement in that class."""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"class must be in 1..4, got {i}")
    rows = list(to_rows(s))
    rows[i - 1] ^= (1 << s.t) - 1
    return from_rows(s.t, rows)


def rotate(s: CoboundarySet, i: int) -> CoboundarySet:
    if not 0 <= i < s.t:
        raise ValueError(f"rotation must be in [0, {s.t - 1}], got {i}")
    return from_rows(s.t, [rotate_row(r, s.t, i) for r in to_rows(s)])


def swap(s: CoboundarySet, generator) -> CoboundarySet:
    spec = generator if isinstance(generator, SwapSpec) else SwapSpec.generator(str(generator))
    return from_rows(s.t, spec.apply_rows(to_rows(s)))


def dilate(s: CoboundarySet, r: int) -> CoboundarySet:
    t = s.t
    if math.gcd(r, t) != 1:
        raise NotCoprime(f"dilatation ratio {r} is not coprime to t={t}")
    return from_rows(t, [dilate_row(row, t, r % t) for row in to_rows(s)])


def dilate_index(k: int, r: int, t: int) -> int:
    """Image of a single index: ``4 [((k - [k]_4)/4) r]_t + [k]_4``."""
    k4 = k % 4 or 4
    return 4 * (((k - k4) // 4 * r) % t) + k4


def coprimes(t: int) -> list[int]:
    return [r for r in range(1, t) if math.gcd(r, t) == 1]


# -- operation values and parsing ------------------------------------------


@dataclass(frozen=True)
class Operation:
    kind: str  # "C", "T", "S" or "V"
    arg: object

    def __str__(self) -> str:
        return f"C{self.arg}" if self.kind == "C" else f"{self.kind}:{self.arg}"

    def __call__(self, s: CoboundarySet) -> CoboundarySet:
        if self.kind == "C":
            return complement(s, self.arg)
        if self.kind == "T":
            return rotate(s, self.arg % s.t)
        if self.kind == "S":
            return swap(s, self.arg)
        if self.kind == "V":
            return dilate(s, self.arg)
        raise ValueError(f"unknown operation kind {self.kind!r}")


def parse_op(text: str) -> Operation:
    text = text.strip()
    try:
        if text[:1] == "C" and text[1:].isdigit():
            i = int(text[1:])
            if i not in (1, 2, 3, 4):
                raise ValueError
            return Operation("C", i)
        kind, _, arg = text.partition(":")
        if kind == "T":
            return Operation("T", int(arg))
        if kind == "S" and arg in SWAP_GENERATORS:
            return Operation("S", arg)
        if kind == "V":
            return Operation("V", int(arg))
    except ValueError:
        pass
    raise ValueError(f"cannot parse operation {text!r} (expected C2, T:3, S:23 or V:2)")


def parse_ops(text: str) -> list[Operation]:
    return [parse_op(p) for p in text.split(",") if p.strip()]


def apply_ops(s: CoboundarySet, ops: Iterable[Operation]) -> CoboundarySet:
    for op in ops:
        s = op(s)
    return s


def operation_family(t: int) -> list[Operation]:
    """C2, every rotation, the six swap generators and every coprime dilatation."""
    t = check_t(t)
    return (
        [Operation("C", 2)]
        + [Operation("T", i) for i in range(t)]
        + [Operation("S", g) for g in SWAP_GENERATORS]
        + [Operation("V", r) for r in coprimes(t)]
    )


@dataclass
class PreservationReport:
    op: str
    checked: int
    counterexamples: list[CoboundarySet]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def preserves_hadamard_suite(op: Operation, sets: Iterable[CoboundarySet]) -> PreservationReport:
    checked, bad = 0, []
    for s in sets:
        checked += 1
        if not is_hadamard_set(op(s)):
            bad.append(s)
    return PreservationReport(str(op), checked, bad)
