"""Gap metric, eigensolver, projector-sum law, and continuity probes."""

import math
from fractions import Fraction
from random import Random

import pytest

from lagsel.lie import Functional, builtin, coadjoint_form
from lagsel.linalg import Matrix, Subspace
from lagsel.presymplectic import Flag, SkewForm
from lagsel.probe import (
    FloatSubspace,
    exact_projector,
    functional_path_probe,
    gap,
    jacobi_eigenvalues,
    path_probe,
    projector,
    projector_sum_range_check,
    rank_semicontinuity_probe,
    spectral_norm,
)
from lagsel.sampling import random_skew_form, random_subspace
from lagsel.suites import PROBE_PRESETS, preset_samples


def test_projector_of_axis():
    p = projector(Subspace.from_vectors(2, [[1, 0]]))
    assert p == [[1.0, 0.0], [0.0, 0.0]]


def test_projector_of_full_space():
    p = projector(Subspace.full(2))
    for i in range(2):
        for j in range(2):
            assert p[i][j] == pytest.approx(1.0 if i == j else 0.0, abs=1e-12)


def test_projector_of_diagonal_line():
    p = projector(Subspace.from_vectors(2, [[1, 1]]))
    for row in p:
        for x in row:
            assert x == pytest.approx(0.5, abs=1e-12)


def test_projector_idempotent_and_symmetric():
    rng = Random(3)
    for _ in range(20):
        s = random_subspace(rng, 5)
        p = projector(s)
        m = len(p)
        for i in range(m):
            for j in range(m):
                assert p[i][j] == pytest.approx(p[j][i], abs=1e-10)
                pij = sum(p[i][k] * p[k][j] for k in range(m))
                assert pij == pytest.approx(p[i][j], abs=1e-10)


def test_jacobi_eigenvalues_known_matrix():
    vals = sorted(jacobi_eigenvalues([[2.0, 1.0], [1.0, 2.0]]))
    assert vals[0] == pytest.approx(1.0, abs=1e-12)
    assert vals[1] == pytest.approx(3.0, abs=1e-12)


def test_jacobi_eigenvalues_diagonal_passthrough():
    vals = sorted(jacobi_eigenvalues([[3.0, 0.0], [0.0, -5.0]]))
    assert vals == [-5.0, 3.0]


def test_gap_of_equal_subspaces_is_zero():
    s = Subspace.from_vectors(3, [[1, 2, 3]])
    assert gap(s, s) == 0.0


def test_gap_of_orthogonal_axes_is_one():
    w1 = Subspace.from_vectors(5, [[0, 0, 0, 1, 0]])
    w2 = Subspace.from_vectors(5, [[0, 0, 0, 0, 1]])
    assert gap(w1, w2) == pytest.approx(1.0, abs=1e-12)


def test_gap_is_sine_of_angle_rational_slope():
    # Line of slope 3/4 vs the x-axis: sin(angle) = 3/5 exactly.
    w1 = Subspace.from_vectors(2, [[1, 0]])
    w2 = Subspace.from_vectors(2, [[4, 3]])
    assert gap(w1, w2) == pytest.approx(0.6, abs=1e-12)


def test_gap_is_sine_of_angle_pi_sixth():
    # Not a rational direction, so check at the float layer directly.
    theta = math.pi / 6
    f1 = FloatSubspace(2, ((1.0, 0.0),))
    f2 = FloatSubspace(2, ((math.cos(theta), math.sin(theta)),))
    p1, p2 = f1.projector(), f2.projector()
    diff = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(p1, p2)]
    assert spectral_norm(diff) == pytest.approx(0.5, abs=1e-12)


def test_gap_rejects_ambient_mismatch():
    with pytest.raises(ValueError):
        gap(Subspace.full(2), Subspace.full(3))


def _rational_rotation(m, i, j, c, s):
    rows = [[Fraction(1) if a == b else Fraction(0) for b in range(m)] for a in range(m)]
    rows[i][i] = c
    rows[j][j] = c
    rows[i][j] = -s
    rows[j][i] = s
    return Matrix(rows)


def _rotate(sub, q):
    return Subspace.from_vectors(sub.ambient_dim, [q.apply(v) for v in sub.basis])


def test_gap_pseudometric_and_orthogonal_invariance():
    rng = Random(17)
    # 3-4-5 and 5-12-13 rotations are exactly orthogonal over the rationals.
    q = _rational_rotation(4, 0, 2, Fraction(3, 5), Fraction(4, 5)) @ _rational_rotation(
        4, 1, 3, Fraction(5, 13), Fraction(12, 13)
    )
    for _ in range(15):
        dim = rng.randint(1, 3)
        subs = []
        while len(subs) < 3:
            s = random_subspace(rng, 4)
            if s.dim == dim:
                subs.append(s)
        w1, w2, w3 = subs
        g12, g21 = gap(w1, w2), gap(w2, w1)
        assert abs(g12 - g21) <= 1e-9
        assert gap(w1, w1) == 0.0
        assert gap(w1, w3) <= g12 + gap(w2, w3) + 1e-9
        assert abs(gap(_rotate(w1, q), _rotate(w2, q)) - g12) <= 1e-9


def test_exact_projector_is_idempotent_symmetric():
    rng = Random(29)
    for _ in range(15):
        s = random_subspace(rng, 4)
        p = exact_projector(s)
        assert p == p.transpose()
        assert p @ p == p


def test_projector_sum_of_axes():
    s1 = Subspace.from_vectors(2, [[1, 0]])
    s2 = Subspace.from_vectors(2, [[0, 1]])
    assert projector_sum_range_check([s1, s2])


def test_projector_sum_of_repeated_subspace():
    s = Subspace.from_vectors(3, [[1, 2, 0], [0, 0, 1]])
    assert projector_sum_range_check([s, s])


def test_projector_sum_random_triples():
    rng = Random(37)
    for _ in range(60):
        subs = [random_subspace(rng, 5) for _ in range(3)]
        assert projector_sum_range_check(subs)


def test_path_probe_discontinuity_preset():
    kind, base, direction = PROBE_PRESETS["g54-discontinuity"]
    built = builtin(kind)
    report = functional_path_probe(
        built.algebra, built.flag, base, direction, preset_samples(10), Fraction(0)
    )
    assert report.verdict == "bounded-away evidence"
    for sample in report.samples:
        assert sample.gap == pytest.approx(1.0, abs=1e-9)
        assert sample.stratum.entries == (1, 2, 3, 2, 3)
        assert sample.cell.indices == (4,)
    assert report.star_stratum.entries == (1, 2, 3, 4, 3)
    assert report.star_cell.indices == (5,)


def test_path_probe_in_stratum_preset():
    kind, base, direction = PROBE_PRESETS["g54-instratum"]
    built = builtin(kind)
    report = functional_path_probe(
        built.algebra, built.flag, base, direction, preset_samples(20), Fraction(0)
    )
    assert report.verdict == "gap->0 evidence"
    previous = 2.0
    for sample in report.samples:
        t = float(sample.t)
        assert sample.gap == pytest.approx(t / math.sqrt(1 + t * t), abs=1e-9)
        assert sample.gap < previous
        previous = sample.gap
        assert sample.stratum.entries == (1, 2, 3, 2, 3)


def test_path_probe_g615_discontinuity():
    kind, base, direction = PROBE_PRESETS["g615-discontinuity"]
    built = builtin(kind)
    report = functional_path_probe(
        built.algebra, built.flag, base, direction, preset_samples(10), Fraction(0)
    )
    assert report.verdict == "bounded-away evidence"
    assert all(s.gap == pytest.approx(1.0, abs=1e-9) for s in report.samples)


def test_path_probe_on_raw_forms():
    # Interpolate between two forms on Q^2; selection flips at t = 0.
    b0 = SkewForm.from_upper_entries(2, [(1, 2, 1)])

    def form_at(t):
        return b0.scaled(t)

    report = path_probe(form_at, Flag.standard(2), [Fraction(1, 2**i) for i in range(1, 6)], Fraction(0))
    # At t=0 the form vanishes and the selection is the whole plane; at t>0
    # the selection is the first axis, at constant gap from the plane.
    assert all(s.gap == pytest.approx(1.0, abs=1e-9) for s in report.samples)


def test_rank_semicontinuity_zero_form_never_fails():
    report = rank_semicontinuity_probe(SkewForm.zero(3), trials=10, seed=4)
    assert report.base_radical_dim == 3
    assert report.largest_passing_scale == Fraction(1)
    assert not report.smallest_scale_failed


def test_rank_semicontinuity_symplectic_form():
    form = SkewForm.from_upper_entries(4, [(1, 3, 1), (2, 4, 1)])
    report = rank_semicontinuity_probe(form, trials=25, seed=11)
    assert report.base_radical_dim == 0
    assert report.largest_passing_scale is not None
    assert not report.smallest_scale_failed


def test_rank_semicontinuity_g54_form():
    built = builtin("g54")
    form = coadjoint_form(built.algebra, Functional.of([1, 0, 0, 0, 0]))
    report = rank_semicontinuity_probe(
        form, trials=25, scales=[Fraction(1, 1000)], seed=13
    )
    assert report.base_radical_dim == 3
    assert report.results[0].passed
    assert report.results[0].max_radical_dim <= 3


def test_random_forms_rank_parity_under_perturbation():
    rng = Random(99)
    for _ in range(5):
        form = random_skew_form(rng, 5)
        report = rank_semicontinuity_probe(form, trials=10, seed=3)
        assert not report.smallest_scale_failed
