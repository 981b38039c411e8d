"""File formats: set JSON, sign matrices as text or packed rows, class-grouped listings."""

from __future__ import annotations

import json
import re

import numpy as np

from .cocycle import CLASS_ORDER, CoboundarySet


def parse_indices(text: str) -> list[int]:
    """``"14,10,6"`` or ``"14 10 6"`` to a list of ints (order kept)."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad index list {text!r}") from exc


def set_to_json(s: CoboundarySet) -> str:
    return json.dumps({"t": s.t, "coboundaries": list(s.indices)})


def set_from_json(text: str) -> CoboundarySet:
    obj = json.loads(text)
    try:
        return CoboundarySet.from_indices(int(obj["t"]), obj["coboundaries"])
    except KeyError as exc:
        raise ValueError(f"set JSON is missing {exc}") from exc


def format_indices(s: CoboundarySet) -> str:
    return ",".join(map(str, s.indices))


def format_paper_style(s: CoboundarySet, style: str = "table") -> str:
    """Class-grouped listing in diagram order 2, 3, 4, 1.

    ``table`` gives braces with each class ascending, ``{{10}, {11}, {8, 16}, {1, 17}}``;
    ``worked`` gives a flat list with each class descending, ``14,10,6,11,...``.
    """
    groups = s.classes()
    if style == "table":
        inner = ", ".join("{" + ", ".join(map(str, groups[r])) + "}" for r in CLASS_ORDER)
        return "{" + inner + "}"
    if style == "worked":
        return ",".join(str(k) for r in CLASS_ORDER for k in sorted(groups[r], reverse=True))
    raise ValueError(f"unknown style {style!r}")


def parse_paper_style(t: int, text: str) -> CoboundarySet:
    """Inverse of the ``table`` style; whitespace is ignored."""
    body = re.sub(r"\s+", "", text)
    m = re.fullmatch(r"\{(\{[0-9,]*\}),(\{[0-9,]*\}),(\{[0-9,]*\}),(\{[0-9,]*\})\}", body)
    if not m:
        raise ValueError(f"not a four-class listing: {text!r}")
    groups = [[int(x) for x in g.strip("{}").split(",") if x] for g in m.groups()]
    for r, g in zip(CLASS_ORDER, groups):
        wrong = [k for k in g if (k % 4 or 4) != r]
        if wrong:
            raise ValueError(f"indices {wrong} are not in class {r}")
    return CoboundarySet.from_classes(t, groups)


def normalize_listing(text: str) -> str:
    """Drop whitespace, for comparing listings typed with different spacing."""
    return re.sub(r"\s+", "", text)


def matrix_to_text(M: np.ndarray) -> str:
    return "\n".join("".join("+" if v > 0 else "-" for v in row) for row in np.asarray(M))


def matrix_from_text(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    n = len(lines)
    if any(len(ln) != n or set(ln) - {"+", "-"} for ln in lines):
        raise ValueError("expected a square grid of '+' and '-'")
    return np.array([[1 if ch == "+" else -1 for ch in ln] for ln in lines], dtype=np.int8)


def matrix_to_packed(M: np.ndarray) -> str:
    """Rows as hex integers, column ``j`` (0-based) at bit ``j``, set bits meaning -1."""
    M = np.asarray(M)
    rows = [format(sum(1 << j for j, v in enumerate(row) if v < 0), "x") for row in M]
    return json.dumps({"order": int(M.shape[0]), "rows": rows})


def matrix_from_packed(text: str) -> np.ndarray:
    obj = json.loads(text)
    n = int(obj["order"])
    rows = [int(h, 16) for h in obj["rows"]]
    if len(rows) != n or any(r >> n for r in rows):
        raise ValueError("packed rows do not match the stated order")
    return np.array([[-1 if r >> j & 1 else 1 for j in range(n)] for r in rows], dtype=np.int8)
