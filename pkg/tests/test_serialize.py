"""JSON wire formats: round-trips and rejection of malformed payloads."""

import json
from fractions import Fraction
from random import Random

import pytest

from lagsel import serialize
from lagsel.lie import builtin, load_algebra
from lagsel.linalg import Matrix, Subspace
from lagsel.presymplectic import Flag, SkewForm
from lagsel.sampling import random_flag, random_skew_form, random_subspace


def test_rational_string_forms():
    assert serialize.rational_to_str(Fraction(3)) == "3"
    assert serialize.rational_to_str(Fraction(-2, 7)) == "-2/7"
    assert serialize.rational_from_obj("-2/7") == Fraction(-2, 7)
    assert serialize.rational_from_obj(5) == Fraction(5)


def test_rational_rejects_floats_and_junk():
    with pytest.raises(ValueError):
        serialize.rational_from_obj(0.5)
    with pytest.raises(ValueError):
        serialize.rational_from_obj(True)
    with pytest.raises(ValueError):
        serialize.rational_from_obj("3/0")


def test_subspace_round_trip_random():
    rng = Random(3)
    for _ in range(30):
        sub = random_subspace(rng, rng.randint(1, 6))
        payload = json.loads(json.dumps(serialize.subspace_to_json(sub)))
        assert serialize.subspace_from_json(payload) == sub


def test_subspace_load_canonicalizes():
    payload = {"ambient_dim": 2, "basis": [["2", "4"]]}
    assert serialize.subspace_from_json(payload) == Subspace.from_vectors(2, [[1, 2]])


def test_subspace_rejects_bad_shapes():
    with pytest.raises(ValueError):
        serialize.subspace_from_json({"basis": []})
    with pytest.raises(ValueError):
        serialize.subspace_from_json({"ambient_dim": 2, "basis": [["1"]]})


def test_skew_form_round_trip():
    rng = Random(5)
    for _ in range(30):
        form = random_skew_form(rng, rng.randint(1, 6))
        payload = json.loads(json.dumps(serialize.skew_form_to_json(form)))
        assert serialize.skew_form_from_json(payload).matrix == form.matrix


def test_skew_form_rejects_diagonal_entries():
    with pytest.raises(ValueError):
        serialize.skew_form_from_json({"dim": 2, "upper": [[1, 1, "1"]]})
    with pytest.raises(ValueError):
        serialize.skew_form_from_json({"dim": 2, "upper": [[2, 1, "1"]]})


def test_flag_round_trip():
    rng = Random(7)
    for _ in range(20):
        flag = random_flag(rng, rng.randint(1, 5))
        payload = json.loads(json.dumps(serialize.flag_to_json(flag)))
        assert serialize.flag_from_json(payload).basis_matrix == flag.basis_matrix


def test_flag_rejects_singular_columns():
    with pytest.raises(ValueError):
        serialize.flag_from_json({"dim": 2, "columns": [["1", "0"], ["1", "0"]]})


def test_lie_algebra_round_trip():
    for kind in ("g54", "g615", "heisenberg:2"):
        algebra = builtin(kind).algebra
        payload = json.loads(json.dumps(serialize.lie_algebra_to_json(algebra)))
        again = serialize.lie_algebra_from_json(payload)
        assert again.dim == algebra.dim
        assert again.table == algebra.table
        assert again.labels == algebra.labels


def test_lie_algebra_rejects_jacobi_violation():
    payload = {"dim": 3, "brackets": [[1, 2, ["0", "0", "1"]], [1, 3, ["1", "0", "0"]]]}
    with pytest.raises(ValueError):
        serialize.lie_algebra_from_json(payload)


def test_functional_round_trip():
    xi = serialize.functional_from_json(["1", "-2/3", "0"], 3)
    assert serialize.functional_to_json(xi) == ["1", "-2/3", "0"]


def test_filtration_trace_serialization():
    from lagsel.schubert import filtration

    form = SkewForm.from_upper_entries(2, [(1, 2, 1)])
    payload = serialize.filtration_trace_to_json(filtration(form))
    assert payload["d"] == 1
    assert payload["i_seq"] == [1]
    assert payload["j_seq"] == [2]
    assert len(payload["chain"]) == 2
    assert payload["chain"][1] == {"ambient_dim": 2, "basis": [["1", "0"]]}
