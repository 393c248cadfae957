"""Pure-Python exact integer matrix rank (fraction-free elimination).

Bareiss elimination over Python's arbitrary-precision integers: every
division below is exact, so the computed rank is the rank over the
rationals with no floating point anywhere.
"""

from __future__ import annotations


def rank(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    prev = 1
    pr = 0
    for col in range(nc):
        piv = None
        for r in range(pr, nr):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        pivot = m[pr][col]
        for r in range(pr + 1, nr):
            factor = m[r][col]
            row = m[r]
            top = m[pr]
            for c in range(col + 1, nc):
                row[c] = (pivot * row[c] - factor * top[c]) // prev
            row[col] = 0
        prev = pivot
        pr += 1
        if pr == nr:
            break
    return pr
