# cython: language_level=3
"""Fraction-free Gauss-Jordan elimination on integer rows (compiled kernel).

Semantic twin of ``lagsel._rref_py.rref_int_rows``; entries stay arbitrary
precision Python ints, Cython only strips the interpreter overhead of the
inner loops.  Any behavioral difference between the two backends is a bug
(see tests/test_backends.py).
"""

from math import gcd


cdef void _strip_common_factor(list row, Py_ssize_t ncols):
    cdef Py_ssize_t j
    g = 0
    for j in range(ncols):
        x = row[j]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g


def rref_int_rows(list rows):
    """Reduce a list of integer rows in place; return the pivot columns.

    Same contract as the pure backend: normalized Gauss-Jordan shape with
    primitive rows and positive pivots; dividing each row by its pivot gives
    the reduced row echelon form over the rationals.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t c, i, j, src
    cdef list prow, row
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
