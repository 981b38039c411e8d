"""Numpy version of the row-sum kernels, used when the extension is unavailable."""

from __future__ import annotations

import numpy as np


def _table(t: int, rneg_nibbles):
    a = np.uint64(int("5" * t, 16))
    b = np.uint64(int("3" * t, 16))
    full = np.uint64((1 << (4 * t)) - 1)
    rows = []
    for n in range(5, 2 * t + 3):
        q, c = divmod(n - 1, 4)
        rneg = np.uint64(int(format(rneg_nibbles[c], "x") * t, 16))
        rows.append((np.uint64(4 * q), np.uint64(4 * (t - q)), c, rneg))
    return a, b, full, rows


def _filter(s: np.ndarray, t: int, table) -> np.ndarray:
    a, b, full, rows = table
    one, two = np.uint64(1), np.uint64(2)
    for right, left, c, rneg in rows:
        p = ((s >> right) | (s << left)) & full
        if c & 1:
            p = ((p & a) << one) | ((p >> one) & a)
        if c & 2:
            p = ((p & b) << two) | ((p >> two) & b)
        s = s[np.bitwise_count(s ^ p ^ rneg) == 2 * t]
        if not s.size:
            break
    return s


def test_masks(t: int, masks, rneg_nibbles) -> np.ndarray:
    masks = np.ascontiguousarray(masks, dtype=np.uint64)
    table = _table(t, rneg_nibbles)
    passed = _filter(masks, t, table)
    return np.isin(masks, passed)


def scan_product(t: int, lo, hi, rneg_nibbles) -> np.ndarray:
    lo = np.ascontiguousarray(lo, dtype=np.uint64)
    table = _table(t, rneg_nibbles)
    hits = [_filter(lo | np.uint64(h), t, table) for h in np.asarray(hi, dtype=np.uint64)]
    return np.concatenate(hits) if hits else np.zeros(0, dtype=np.uint64)
