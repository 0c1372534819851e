"""Exact rank and determinant by fraction-free (Bareiss) elimination.

This is the rational-coefficient path: it never forms a unimodular
transform and shares no code with the Smith normal form, so the two can
check each other.
"""

from __future__ import annotations

import numpy as np


def _rows(M) -> list[list[int]]:
    a = np.asarray(M, dtype=object)
    if a.size == 0:
        return []
    return [[int(x) for x in row] for row in a]


def rational_rank(M) -> int:
    """Rank of ``M`` over the rationals."""
    rows = [r for r in _rows(M) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[c]
        for k in range(rank + 1, len(rows)):
            row = rows[k]
            f = row[c]
            if f:
                rows[k] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                rows[k] = [p * x // prev for x in row]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def determinant(M) -> int:
    rows = _rows(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for c in range(n):
        pivot = next((k for k in range(c, n) if rows[k][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        prow = rows[c]
        p = prow[c]
        for k in range(c + 1, n):
            row = rows[k]
            rows[k] = [(p * x - row[c] * y) // prev for x, y in zip(row, prow)]
        prev = p
    return sign * rows[n - 1][n - 1] if n else 1
