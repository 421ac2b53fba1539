"""CLI subcommands, exit-code contract, and output determinism."""

import json

import pytest

from lagsel import serialize
from lagsel.cli import main
from lagsel.linalg import Subspace


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_polarize_zero_form(tmp_path, capsys):
    path = write_json(tmp_path, "zero.json", {"dim": 3, "upper": []})
    code, out, _ = run(capsys, "polarize", path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["cell"] == []
    assert payload["signature"] == [1, 2, 3]
    assert serialize.subspace_from_json(payload["selection"]) == Subspace.full(3)


def test_polarize_g54_form_round_trips(tmp_path, capsys):
    path = write_json(tmp_path, "g54.json", {"dim": 5, "upper": [[3, 4, "-1"]]})
    code, out, _ = run(capsys, "polarize", path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["cell"] == [4]
    assert payload["signature"] == [1, 2, 3, 2, 3]
    reload = serialize.subspace_from_json(payload["selection"])
    assert reload == Subspace.from_vectors(
        5, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]]
    )


def test_polarize_rejects_non_skew_input(tmp_path, capsys):
    path = write_json(tmp_path, "bad.json", {"dim": 2, "upper": [[1, 1, "1"]]})
    code, _, err = run(capsys, "polarize", path)
    assert code == 1
    assert "error" in err


def test_polarize_rejects_missing_file(capsys):
    code, _, err = run(capsys, "polarize", "/nonexistent/form.json")
    assert code == 1


def test_vergne_builtin_g54(capsys):
    code, out, _ = run(capsys, "vergne", "g54", "--xi", "0,1,0,0,0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["stratum"] == [1, 2, 3, 4, 3]
    assert payload["cell"] == [5]
    assert serialize.subspace_from_json(payload["polarization"]) == Subspace.from_vectors(
        5, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]
    )


def test_vergne_g615_deep_stratum(capsys):
    code, out, _ = run(capsys, "vergne", "g615", "--xi", "0,0,0,1,1,1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert serialize.subspace_from_json(payload["polarization"]) == Subspace.full(6)


def test_vergne_axb_identity_matrix(capsys):
    code, out, _ = run(capsys, "vergne", "axb", "--matrix", "1,0;0,1", "--xi", "1,0,0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert serialize.subspace_from_json(payload["polarization"]) == Subspace.from_vectors(
        3, [[1, 0, 0], [0, 1, 0]]
    )


def test_vergne_rejects_non_jh_flag(tmp_path, capsys):
    algebra = write_json(
        tmp_path, "heis.json", {"dim": 3, "brackets": [[2, 3, ["1", "0", "0"]]]}
    )
    flag = write_json(
        tmp_path,
        "flag.json",
        {"dim": 3, "columns": [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]]},
    )
    code, _, err = run(capsys, "vergne", algebra, "--xi", "1,0,0", "--flag", flag)
    assert code == 1
    assert "Jordan" in err


def test_vergne_rejects_wrong_xi_length(capsys):
    code, _, _ = run(capsys, "vergne", "g54", "--xi", "1,0")
    assert code == 1


def test_filtration_symplectic_plane(tmp_path, capsys):
    path = write_json(tmp_path, "b2.json", {"dim": 2, "upper": [[1, 2, "1"]]})
    code, out, _ = run(capsys, "filtration", path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 1 and payload["i_seq"] == [1] and payload["j_seq"] == [2]


def test_jump_subcommand(tmp_path, capsys):
    path = write_json(
        tmp_path,
        "w.json",
        {"ambient_dim": 5, "basis": [["1", "0", "0", "0", "0"], ["0", "1", "0", "0", "0"], ["0", "0", "1", "0", "0"], ["0", "0", "0", "0", "1"]]},
    )
    code, out, _ = run(capsys, "jump", path, "--json")
    assert code == 0
    assert json.loads(out)["jump"] == [4]


def test_stratum_subcommand(capsys):
    code, out, _ = run(capsys, "stratum", "g615", "--xi", "0,1,0,0,0,0", "--json")
    assert code == 0
    assert json.loads(out)["stratum"] == [1, 2, 3, 4, 3, 4]


def test_cell_subcommand(capsys):
    code, out, _ = run(capsys, "cell", "--m", "5", "--jumps", "4", "--json")
    assert code == 0
    assert json.loads(out)["signature"] == [1, 2, 3, 2, 3]


def test_cell_rejects_inadmissible(capsys):
    code, _, err = run(capsys, "cell", "--m", "4", "--jumps", "1,2")
    assert code == 1
    assert "cannot arise" in err


def test_verify_small_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "projector-sum", "--trials", "10", "--seed", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["failures"] == []


def test_verify_unknown_suite_rejected(capsys):
    code, _, _ = run(capsys, "verify", "no-such-suite")
    assert code == 1


def test_verify_output_is_deterministic(capsys):
    args = ("verify", "filtration-lemmas", "--trials", "15", "--seed", "9", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_probe_preset(capsys):
    code, out, _ = run(capsys, "probe", "--preset", "g615-discontinuity", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "bounded-away evidence"
    assert len(payload["samples"]) == 20
    assert all(abs(s["gap"] - 1.0) <= 1e-9 for s in payload["samples"])


def test_probe_spec_file(tmp_path, capsys):
    spec = write_json(
        tmp_path,
        "probe.json",
        {
            "algebra": "g54",
            "base": ["1", "0", "0", "0", "0"],
            "direction": ["0", "1", "0", "0", "0"],
            "t_star": "0",
            "samples": ["1/2", "1/4", "1/8"],
        },
    )
    code, out, _ = run(capsys, "probe", spec, "--json")
    assert code == 0
    payload = json.loads(out)
    assert [s["t"] for s in payload["samples"]] == ["1/2", "1/4", "1/8"]


def test_probe_without_input_rejected(capsys):
    code, _, _ = run(capsys, "probe")
    assert code == 1


def test_builtin_subcommand(capsys):
    code, out, _ = run(capsys, "builtin", "g615", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"]["dim"] == 6
    assert len(payload["algebra"]["brackets"]) == 3


def test_unknown_subcommand_is_invalid_input(capsys):
    code, _, _ = run(capsys, "definitely-not-a-command")
    assert code == 1


def test_missing_subcommand_is_invalid_input(capsys):
    code, _, _ = run(capsys)
    assert code == 1
