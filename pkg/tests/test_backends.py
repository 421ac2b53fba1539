"""Compiled and pure row-reduction kernels must agree entry for entry."""

from random import Random

import pytest

from lagsel import _rref_py
from lagsel.linalg import rref_backend

try:
    from lagsel import _rref as _rref_c
except ImportError:
    _rref_c = None


def random_int_rows(rng, rows, cols, bound=50):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_backend_reports_a_known_name():
    assert rref_backend() in ("compiled", "python")


@pytest.mark.skipif(_rref_c is None, reason="compiled kernel not built")
def test_backends_agree_on_random_matrices():
    rng = Random(2024)
    for _ in range(200):
        rows = rng.randint(0, 7)
        cols = rng.randint(1, 9)
        data = random_int_rows(rng, rows, cols)
        a = [row[:] for row in data]
        b = [row[:] for row in data]
        piv_py = _rref_py.rref_int_rows(a)
        piv_c = _rref_c.rref_int_rows(b)
        assert piv_py == piv_c
        assert a == b


@pytest.mark.skipif(_rref_c is None, reason="compiled kernel not built")
def test_backends_agree_on_big_entries():
    rng = Random(9)
    for _ in range(20):
        data = random_int_rows(rng, 6, 8, bound=10**30)
        a = [row[:] for row in data]
        b = [row[:] for row in data]
        assert _rref_py.rref_int_rows(a) == _rref_c.rref_int_rows(b)
        assert a == b
