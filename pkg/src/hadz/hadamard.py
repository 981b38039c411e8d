"""Hadamard tests: full orthogonality, cocyclic row sums, and path counting.

For a set ``S`` assembled with generalized coboundaries, entry ``(n, x)`` of
the product of coboundaries is -1 iff exactly one of ``x`` and ``g_n x`` lies
in ``S``.  Each used coboundary ``d`` therefore contributes one edge
``{g_d, g_n^-1 g_d}`` to a graph on the columns of row ``n``; its components
are the walks, and the -1 entries are the endpoints of the open ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .cocycle import CoboundarySet, assemble, full_mask, r_negative_nibbles
from .diagram import symmetry_axes, to_diagram
from .group import check_t, multiplication_table


class NotSymmetric(ValueError):
    """The fast test needs a diagram with a symmetry axis."""


class NotHadamardSeed(ValueError):
    """A set offered as a seed does not give a Hadamard matrix."""


def is_hadamard(M) -> bool:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.isin(M, (-1, 1)).all():
        raise ValueError("entries must be +1 or -1")
    n = M.shape[0]
    A = M.astype(np.int32)
    return bool(np.array_equal(A @ A.T, n * np.eye(n, dtype=np.int32)))


def tested_rows(t: int) -> range:
    """1-based rows ``5 .. 2t+2`` whose sums decide the Hadamard property."""
    return range(5, 2 * t + 3)


def cocyclic_row_test(M, t) -> bool:
    t = check_t(t)
    M = np.asarray(M)
    if M.shape != (4 * t, 4 * t):
        raise ValueError(f"expected a {4 * t} x {4 * t} matrix")
    sums = M[4 : 2 * t + 2].astype(np.int64).sum(axis=1)
    return bool((sums == 0).all())


@lru_cache(maxsize=None)
def _nibble_consts(t: int):
    a = int("5" * t, 16)  # bits 0 and 2 of every nibble
    b = int("3" * t, 16)  # bits 0 and 1 of every nibble
    rneg = tuple(int(format(p, "x") * t, 16) for p in r_negative_nibbles())
    return a, b, rneg


def shifted_mask(t: int, mask: int, q: int, c: int) -> int:
    """Bit ``x`` is set iff ``g x`` lies in ``mask``, where ``g = (q, code c)``."""
    a, b, _ = _nibble_consts(t)
    full = full_mask(t)
    if q:
        mask = ((mask >> (4 * q)) | (mask << (4 * (t - q)))) & full
    if c & 1:
        mask = ((mask & a) << 1) | ((mask >> 1) & a)
    if c & 2:
        mask = ((mask & b) << 2) | ((mask >> 2) & b)
    return mask


def row_negatives(t: int, mask: int, n: int) -> int:
    """Bitmask of the -1 entries in row ``n`` (1-based) of the assembled matrix."""
    q, c = divmod(n - 1, 4)
    _, _, rneg = _nibble_consts(t)
    return mask ^ shifted_mask(t, mask, q, c) ^ rneg[c]


def is_hadamard_set(s: CoboundarySet) -> bool:
    """Cocyclic row test evaluated on the bitmask, without building the matrix."""
    t = s.t
    two_t = 2 * t
    return all(row_negatives(t, s.mask, n).bit_count() == two_t for n in tested_rows(t))


@dataclass(frozen=True)
class RowStats:
    n: int
    c_n: int
    I_n: int
    r_n: int

    @property
    def identity_lhs(self) -> int:
        return 2 * self.c_n + self.r_n - 2 * self.I_n

    def to_dict(self) -> dict:
        return {"n": self.n, "c_n": self.c_n, "I_n": self.I_n, "r_n": self.r_n}


@dataclass(frozen=True)
class WalkDecomposition:
    n: int
    components: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def paths(self) -> list[tuple[int, ...]]:
        return [c for kind, c in self.components if kind == "PATH"]

    @property
    def cycles(self) -> list[tuple[int, ...]]:
        return [c for kind, c in self.components if kind == "CYCLE"]


def _edges(s: CoboundarySet, n: int) -> list[tuple[int, int, int]]:
    """(coboundary index, column a, column b) with 0-based columns."""
    mul = multiplication_table(s.t)
    pos = n - 1
    inv = int(np.nonzero(mul[pos] == 0)[0][0])
    return [(d, d - 1, int(mul[inv, d - 1])) for d in s.indices]


def _components(s: CoboundarySet, n: int):
    edges = _edges(s, n)
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps: dict[int, dict] = {}
    for d, a, b in edges:
        c = comps.setdefault(find(a), {"edges": [], "cols": set()})
        c["edges"].append((d, a, b))
        c["cols"].update((a, b))
    return list(comps.values())


def walk_decomposition(s: CoboundarySet, n: int) -> WalkDecomposition:
    """Split the coboundaries used in row ``n`` into maximal paths and cycles."""
    if not 2 <= n <= 4 * s.t:
        raise ValueError(f"row {n} out of range [2, {4 * s.t}]")
    out = []
    for comp in _components(s, n):
        edges = comp["edges"]
        kind = "CYCLE" if len(edges) == len(comp["cols"]) else "PATH"
        by_col: dict[int, list[tuple[int, int, int]]] = {}
        for e in edges:
            by_col.setdefault(e[1], []).append(e)
            by_col.setdefault(e[2], []).append(e)
        if kind == "PATH":
            start_col = min(c for c, es in by_col.items() if len(es) == 1)
        else:
            start_col = min(by_col)
        seq, used, col = [], set(), start_col
        while True:
            nxt = [e for e in by_col[col] if e[0] not in used]
            if not nxt:
                break
            e = min(nxt)
            used.add(e[0])
            seq.append(e[0])
            col = e[2] if e[1] == col else e[1]
        out.append((kind, tuple(seq)))
    out.sort(key=lambda kc: (kc[0], kc[1]))
    return WalkDecomposition(n, out)


def row_stat(s: CoboundarySet, n: int) -> RowStats:
    t = s.t
    q, c = divmod(n - 1, 4)
    _, _, rneg = _nibble_consts(t)
    prod = s.mask ^ shifted_mask(t, s.mask, q, c)
    paths = sum(
        1 for comp in _components(s, n) if len(comp["edges"]) < len(comp["cols"])
    )
    return RowStats(n, paths, (prod & rneg[c]).bit_count(), rneg[c].bit_count())


def row_stats(s: CoboundarySet) -> list[RowStats]:
    return [row_stat(s, n) for n in tested_rows(s.t)]


@dataclass(frozen=True)
class RowIdentityReport:
    t: int
    rows: list[tuple[int, bool, bool]]  # (n, row sum is zero, 2c+r-2I == 2t)

    @property
    def ok(self) -> bool:
        return all(a == b for _, a, b in self.rows)


def row_identity_check(s: CoboundarySet) -> RowIdentityReport:
    t = s.t
    M = assemble(s)
    rows = []
    for st in row_stats(s):
        zero = int(M[st.n - 1].astype(np.int64).sum()) == 0
        rows.append((st.n, zero, st.identity_lhs == 2 * t))
    return RowIdentityReport(t, rows)


def fast_symmetric_test(s: CoboundarySet) -> bool:
    """Exactly ``t`` paths in every tested row ``n = 1 (mod 4)``; needs a symmetric diagram."""
    if not symmetry_axes(to_diagram(s)):
        raise NotSymmetric(f"{s!r} has no symmetric diagram")
    t = s.t
    return all(row_stat(s, n).c_n == t for n in tested_rows(t) if n % 4 == 1)
