"""Pure-Python fraction-free Gauss-Jordan elimination on integer rows."""
from __future__ import annotations

from math import gcd


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        return [a // g for a in row]
    return row


def rref_int(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduce integer rows to primitive reduced echelon form.

    Every returned row has a positive pivot and zeros in every other pivot
    column. Pivot rows are chosen as the first nonzero entry, scanning rows
    in order, so the result is reproducible.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and work[i][c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            work[r], work[i] = work[i], work[r]
        prow = work[r]
        p = prow[c]
        if p < 0:
            prow = [-a for a in prow]
            p = -p
        prow = _primitive(prow)
        p = prow[c]
        work[r] = prow
        for k in range(nrows):
            if k == r:
                continue
            row = work[k]
            e = row[c]
            if e == 0:
                continue
            g = gcd(p, e)
            fp, fe = p // g, e // g
            work[k] = _primitive([fp * a - fe * b for a, b in zip(row, prow)])
        pivots.append(c)
        r += 1
    return work[:r], pivots
