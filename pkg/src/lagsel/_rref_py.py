"""Fraction-free Gauss-Jordan elimination on integer rows.

Pure-Python backend for the row-reduction kernel.  ``lagsel._rref`` is a
compiled twin with identical semantics; ``lagsel.linalg`` picks whichever is
importable.  Keeping the arithmetic on plain integers (one common denominator
per row, stripped by gcd after every update) avoids per-operation rational
normalization in the innermost loop.
"""

from math import gcd


def _strip_common_factor(row, ncols):
    # Divide the row by the gcd of its entries (gcd is never negative).
    g = 0
    for j in range(ncols):
        x = row[j]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] //= g


def rref_int_rows(rows):
    """Reduce a list of integer rows in place; return the pivot columns.

    On return the rows form a normalized Gauss-Jordan shape: every pivot
    column contains a single nonzero entry (its pivot), each nonzero row is
    primitive with a positive pivot, rows are ordered by pivot column and
    zero rows sink to the bottom.  Dividing each row by its pivot entry
    yields the unique reduced row echelon form of the row space over the
    rationals.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        src = -1
        for i in range(r, nrows):
            if rows[i][c]:
                src = i
                break
        if src < 0:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        prow = rows[r]
        # Normalize the pivot row first so elimination multipliers stay
        # positive and earlier pivot rows keep their positive pivots.
        if prow[c] < 0:
            for j in range(ncols):
                prow[j] = -prow[j]
        _strip_common_factor(prow, ncols)
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            q = row[c]
            if not q:
                continue
            g = gcd(p, q)
            a = p // g
            b = q // g
            for j in range(ncols):
                row[j] = a * row[j] - b * prow[j]
            _strip_common_factor(row, ncols)
        pivots.append(c)
        r += 1
    return pivots
