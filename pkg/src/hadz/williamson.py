"""Williamson-positioned sets and their 4x4 block-circulant structure.

A set is Williamson-positioned when its diagram is symmetric about column t,
the column holding the indices 2, 3, 4, 1.  Scaling column ``h`` of the
generalized assembly by ``phi(h)`` gives ``N(g, h) = phi(gh) R(g, h)``, which
is back-circulant by 4x4 blocks with ``W_i`` built from the values of ``phi``
on the block of Z_t part ``i - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .cocycle import AssemblyConvention, CoboundarySet, _phi, assemble, representative_matrix
from .group import multiplication_table
from .hadamard import NotHadamardSeed, is_hadamard, is_hadamard_set
from .ops import rotate, row_axes, to_rows


class NoAxis(ValueError):
    """The diagram has no symmetry axis."""


class NotBackCirculant(ValueError):
    def __init__(self, message: str, blocks: list[tuple[int, int]]):
        super().__init__(message)
        self.blocks = blocks


class PatternMismatch(ValueError):
    def __init__(self, message: str, blocks: list[int]):
        super().__init__(message)
        self.blocks = blocks


class SeedParseError(ValueError):
    pass


def is_williamson_position(s: CoboundarySet) -> bool:
    """True iff column t is a symmetry axis of the diagram."""
    return 0 in row_axes(to_rows(s), s.t)


def williamson_rotation(s: CoboundarySet) -> int:
    """The rotation ``i`` in ``[0, t-1]`` moving the symmetry axis to column t."""
    axes = row_axes(to_rows(s), s.t)
    if not axes:
        raise NoAxis(f"{s!r} has no symmetry axis")
    hits = [i for i in range(s.t) if is_williamson_position(rotate(s, i))]
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} rotations of {s!r} are Williamson-positioned")
    return hits[0]


def williamson_form(s: CoboundarySet) -> np.ndarray:
    """``N(g, h) = phi(gh) R(g, h)``: the assembly with column ``h`` scaled by ``phi(h)``."""
    t = s.t
    return (_phi(t, s.mask)[multiplication_table(t)] * representative_matrix(t)).astype(np.int8)


def block_pattern(n: int, x: int, y: int, z: int) -> np.ndarray:
    return np.array(
        [[n, x, y, z], [x, -n, z, -y], [y, -z, -n, x], [z, y, -x, -n]], dtype=np.int8
    )


def back_circulant_defects(M: np.ndarray, t: int) -> list[tuple[int, int]]:
    """Block positions ``(i, j)`` (0-based) whose block differs from block ``(0, i+j mod t)``."""
    B = np.asarray(M).reshape(t, 4, t, 4).transpose(0, 2, 1, 3)
    return [
        (i, j)
        for i in range(t)
        for j in range(t)
        if not np.array_equal(B[i, j], B[0, (i + j) % t])
    ]


def is_back_circulant(M: np.ndarray, t: int) -> bool:
    return not back_circulant_defects(M, t)


@dataclass
class WilliamsonBlockData:
    t: int
    blocks: list[np.ndarray]
    symbols: np.ndarray  # shape (t, 4): columns n, x, y, z
    sums: tuple[int, int, int, int]
    assembled_back_circulant: bool

    @property
    def quadruple(self) -> tuple[int, ...]:
        return tuple(sorted(self.sums, reverse=True))

    def decomposition(self) -> str:
        a, b, c, d = self.quadruple
        return f"{4 * self.t}={a}^2+{b}^2+{c}^2+{d}^2"

    def circulants(self) -> list[np.ndarray]:
        """The four ``t x t`` circulant matrices with first rows ``n, x, y, z``."""
        idx = (np.arange(self.t)[None, :] - np.arange(self.t)[:, None]) % self.t
        return [self.symbols[:, c][idx] for c in range(4)]

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "symbols": self.symbols.tolist(),
            "sums": list(self.sums),
            "decomposition": self.decomposition(),
            "assembled_back_circulant": self.assembled_back_circulant,
        }


def extract_quadruple(s: CoboundarySet, form: str = "scaled") -> WilliamsonBlockData:
    """Read the block symbols and sums of a Williamson-positioned set.

    ``form="scaled"`` checks the column-scaled matrix returned by
    :func:`williamson_form`; ``form="assembled"`` checks the generalized
    assembly itself, which is only back-circulant in special cases.
    """
    t = s.t
    if not is_williamson_position(s):
        raise ValueError(f"{s!r} is not Williamson-positioned")
    assembled = assemble(s, AssemblyConvention.GENERALIZED)
    if form == "scaled":
        M = williamson_form(s)
    elif form == "assembled":
        M = assembled
    else:
        raise ValueError(f"unknown form {form!r}")
    bad = back_circulant_defects(M, t)
    if bad:
        raise NotBackCirculant(f"{len(bad)} blocks break back-circulancy", bad)
    blocks = [np.array(M[0:4, 4 * j : 4 * j + 4]) for j in range(t)]
    symbols = np.array([b[0] for b in blocks], dtype=np.int8)
    mismatched = [j for j, b in enumerate(blocks) if not np.array_equal(b, block_pattern(*b[0]))]
    if mismatched:
        raise PatternMismatch(f"blocks {mismatched} do not follow the Williamson block pattern", mismatched)
    asym = [i for i in range(1, t) if not np.array_equal(blocks[i], blocks[t - i])]
    if asym:
        raise PatternMismatch(f"blocks {asym} differ from their mirror blocks", asym)
    sums = tuple(int(abs(v)) for v in symbols.astype(np.int64).sum(axis=0))
    if sum(v * v for v in sums) != 4 * t or not all(v % 2 for v in sums):
        raise ValueError(f"sums {sums} do not give an odd decomposition of {4 * t}")
    return WilliamsonBlockData(t, blocks, symbols, sums, is_back_circulant(assembled, t))


def williamson_census(sets: Iterable[CoboundarySet]) -> int:
    return sum(1 for s in sets if is_williamson_position(s))


def _seed_lines(source) -> list[str]:
    if isinstance(source, Path) or (
        isinstance(source, str) and source.strip() and "\n" not in source and Path(source).is_file()
    ):
        return Path(source).read_text().splitlines()
    if isinstance(source, str):
        return source.splitlines()
    return [line.rstrip("\n") for line in source]


def ingest_external_seed(source) -> list[CoboundarySet]:
    """Parse and verify a JSON-lines seed file of ``{"t": ..., "set": [...]}`` records.

    ``source`` may be a path, the file text, or an iterable of lines.
    """
    out = []
    for lineno, line in enumerate(_seed_lines(source), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            indices = rec["set"] if "set" in rec else rec["coboundaries"]
            s = CoboundarySet.from_indices(int(rec["t"]), indices)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise SeedParseError(f"line {lineno}: {exc}") from exc
        if not (is_hadamard_set(s) and is_hadamard(assemble(s))):
            raise NotHadamardSeed(f"line {lineno}: {list(s.indices)} is not Hadamard")
        out.append(s)
    return out
