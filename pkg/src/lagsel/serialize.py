"""JSON wire formats.

Rationals travel as strings ("p/q", or "p" when the denominator is 1) so
payloads stay exact.  Subspaces are emitted in canonical form and re-load to
equal values; loaders validate shape and reject malformed input with
ValueError, which the CLI maps to its invalid-input exit code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .lie import Functional, LieAlgebra
from .linalg import Matrix, Subspace, as_rational
from .presymplectic import Flag, SignatureVector, SkewForm
from .probe import PathProbeReport, RankProbeReport
from .schubert import FiltrationTrace, JumpSet


def rational_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_obj(obj: Any) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ValueError(f"expected a rational as int or 'p/q' string, got {obj!r}")
    return as_rational(obj)


def _vector_to_json(vec) -> list[str]:
    return [rational_to_str(x) for x in vec]


def vector_from_json(obj: Any, dim: int | None = None) -> list[Fraction]:
    if not isinstance(obj, list):
        raise ValueError("expected a list of rationals")
    vec = [rational_from_obj(x) for x in obj]
    if dim is not None and len(vec) != dim:
        raise ValueError(f"expected {dim} entries, got {len(vec)}")
    return vec


_vector_from_json = vector_from_json


def subspace_to_json(sub: Subspace) -> dict:
    return {
        "ambient_dim": sub.ambient_dim,
        "basis": [_vector_to_json(row) for row in sub.basis],
    }


def subspace_from_json(obj: Any) -> Subspace:
    if not isinstance(obj, dict) or "ambient_dim" not in obj or "basis" not in obj:
        raise ValueError("subspace JSON needs 'ambient_dim' and 'basis'")
    m = obj["ambient_dim"]
    if not isinstance(m, int) or m < 0:
        raise ValueError("'ambient_dim' must be a non-negative integer")
    vectors = [_vector_from_json(row, m) for row in obj["basis"]]
    return Subspace.from_vectors(m, vectors)


def skew_form_to_json(form: SkewForm) -> dict:
    upper = []
    for i in range(form.dim):
        for j in range(i + 1, form.dim):
            v = form.matrix.entry(i, j)
            if v:
                upper.append([i + 1, j + 1, rational_to_str(v)])
    return {"dim": form.dim, "upper": upper}


def skew_form_from_json(obj: Any) -> SkewForm:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ValueError("skew form JSON needs 'dim' and 'upper'")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("'dim' must be a positive integer")
    entries = []
    for item in obj.get("upper", []):
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError("'upper' items must be [i, j, value] triples")
        i, j, value = item
        if not isinstance(i, int) or not isinstance(j, int):
            raise ValueError("'upper' indices must be integers")
        entries.append((i, j, rational_from_obj(value)))
    return SkewForm.from_upper_entries(dim, entries)


def flag_to_json(flag: Flag) -> dict:
    cols = [flag.column(a) for a in range(flag.dim)]
    return {"dim": flag.dim, "columns": [_vector_to_json(c) for c in cols]}


def flag_from_json(obj: Any) -> Flag:
    if not isinstance(obj, dict) or "dim" not in obj or "columns" not in obj:
        raise ValueError("flag JSON needs 'dim' and 'columns'")
    dim = obj["dim"]
    cols = [_vector_from_json(c, dim) for c in obj["columns"]]
    if len(cols) != dim:
        raise ValueError(f"flag needs exactly {dim} columns")
    rows = [[cols[a][t] for a in range(dim)] for t in range(dim)]
    return Flag(Matrix(rows))


def lie_algebra_to_json(algebra: LieAlgebra) -> dict:
    return {
        "dim": algebra.dim,
        "brackets": [
            [i, j, _vector_to_json(vec)] for i, j, vec in algebra.sparse_brackets()
        ],
        "labels": list(algebra.labels),
    }


def lie_algebra_from_json(obj: Any) -> LieAlgebra:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ValueError("Lie algebra JSON needs 'dim' and 'brackets'")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("'dim' must be a positive integer")
    brackets = {}
    for item in obj.get("brackets", []):
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError("'brackets' items must be [i, j, coeffs] triples")
        i, j, coeffs = item
        brackets[(i, j)] = _vector_from_json(coeffs, dim)
    labels = obj.get("labels")
    return LieAlgebra(dim, brackets, labels)


def functional_from_json(obj: Any, dim: int | None = None) -> Functional:
    return Functional.of(_vector_from_json(obj, dim))


def functional_to_json(xi: Functional) -> list[str]:
    return _vector_to_json(xi.coeffs)


def signature_to_json(sig: SignatureVector) -> list[int]:
    return list(sig.entries)


def jump_set_to_json(e: JumpSet) -> list[int]:
    return list(e.indices)


def matrix_from_json(obj: Any) -> Matrix:
    if not isinstance(obj, list) or not obj:
        raise ValueError("matrix JSON must be a non-empty list of rows")
    return Matrix([_vector_from_json(row) for row in obj])


def filtration_trace_to_json(trace: FiltrationTrace) -> dict:
    return {
        "d": trace.d,
        "i_seq": list(trace.i_seq),
        "j_seq": list(trace.j_seq),
        "chain": [subspace_to_json(p) for p in trace.chain],
    }


def path_probe_report_to_json(report: PathProbeReport) -> dict:
    return {
        "t_star": rational_to_str(report.t_star),
        "star_stratum": signature_to_json(report.star_stratum),
        "star_cell": jump_set_to_json(report.star_cell),
        "samples": [
            {
                "t": rational_to_str(s.t),
                "gap": s.gap,
                "stratum": signature_to_json(s.stratum),
                "cell": jump_set_to_json(s.cell),
            }
            for s in report.samples
        ],
        "verdict": report.verdict,
    }


def rank_probe_report_to_json(report: RankProbeReport) -> dict:
    return {
        "base_radical_dim": report.base_radical_dim,
        "scales": [
            {
                "scale": rational_to_str(r.scale),
                "max_radical_dim": r.max_radical_dim,
                "passed": r.passed,
            }
            for r in report.results
        ],
        "largest_passing_scale": (
            rational_to_str(report.largest_passing_scale)
            if report.largest_passing_scale is not None
            else None
        ),
        "smallest_scale_failed": report.smallest_scale_failed,
    }
