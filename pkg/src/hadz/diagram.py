"""4 x t diagrams of coboundary sets.

Row ``i`` (1..4) holds residue class ``(2, 3, 4, 1)[i-1]``; column ``j``
(1..t) holds the indices ``4(t-j) + r``, so the right-most column is
``2, 3, 4, 1``.  Columns wrap around: the diagram is a cylinder.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cocycle import CLASS_ORDER, CoboundarySet
from .group import check_t


def cell_index(t: int, row: int, col: int) -> int:
    """Coboundary index shown at diagram cell ``(row, col)``, both 1-based."""
    return 4 * (t - col) + CLASS_ORDER[row - 1]


@dataclass(frozen=True)
class Diagram:
    t: int
    marks: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        check_t(self.t)
        if len(self.marks) != 4 or any(len(r) != self.t for r in self.marks):
            raise ValueError(f"diagram must be 4 x {self.t}")

    def __getitem__(self, rc):
        i, j = rc
        return self.marks[i - 1][j - 1]

    def row_counts(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.marks)


def to_diagram(s: CoboundarySet) -> Diagram:
    t = s.t
    marks = tuple(
        tuple(cell_index(t, i, j) in s for j in range(1, t + 1)) for i in range(1, 5)
    )
    return Diagram(t, marks)


def from_diagram(d: Diagram) -> CoboundarySet:
    return CoboundarySet.from_indices(
        d.t,
        [
            cell_index(d.t, i, j)
            for i in range(1, 5)
            for j in range(1, d.t + 1)
            if d.marks[i - 1][j - 1]
        ],
    )


def _is_axis(marks, t: int, c: int) -> bool:
    return all(
        row[(c - 1 + k) % t] == row[(c - 1 - k) % t]
        for row in marks
        for k in range(1, t // 2 + 1)
    )


def symmetry_axes(d: Diagram) -> list[int]:
    """Columns ``c`` such that reflecting the cylinder about ``c`` fixes every mark."""
    return [c for c in range(1, d.t + 1) if _is_axis(d.marks, d.t, c)]


def render(d: Diagram) -> str:
    return "\n".join("".join("x" if m else "." for m in row) for row in d.marks)


def parse(text: str) -> Diagram:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 4:
        raise ValueError(f"expected 4 diagram lines, got {len(lines)}")
    t = len(lines[0])
    for n, ln in enumerate(lines, 1):
        if len(ln) != t:
            raise ValueError(f"line {n} has length {len(ln)}, expected {t}")
        bad = set(ln) - {"x", "."}
        if bad:
            raise ValueError(f"line {n} has invalid characters {sorted(bad)}")
    return Diagram(t, tuple(tuple(ch == "x" for ch in ln) for ln in lines))


def to_json(d: Diagram) -> str:
    return json.dumps({"t": d.t, "marks": [list(r) for r in d.marks]})


def from_json(text: str) -> Diagram:
    obj = json.loads(text)
    return Diagram(int(obj["t"]), tuple(tuple(bool(m) for m in r) for r in obj["marks"]))
