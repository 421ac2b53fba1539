"""Jump indices, Schubert cells, and the inductive isotropic filtration.

Relative to a complete flag V_1 ⊂ ... ⊂ V_m, every subspace W has a jump set

    jump(W) = {j : V_j ⊄ V_{j-1} + W},

whose cardinality is the codimension of W; the subspaces sharing a jump set
form a Schubert cell.  For a skew form B the filtration here peels the
ambient space down one dimension at a time,

    p^0 = V,   p^{k+1} = (V_{i_{k+1}} ∩ p^k)^{⊥_B} ∩ p^k,

with i_{k+1} the first flag step whose trace in p^k is not B-orthogonal to
p^k, stopping at the first isotropic term p^d.  The end of the chain is
exactly the flag selection ``vergne_select(B)``, the recorded index
sequences land bijectively in the jump sets of N(B) and of the selection,
and the jump set of the selection determines the signature vector.  All of
these facts are exact theorems; ``verify_filtration_lemmas`` re-checks them
on concrete inputs and reports any violation (which would mean a bug here,
not new mathematics).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .linalg import Subspace, contains, intersect
from .presymplectic import (
    Flag,
    SignatureVector,
    SkewForm,
    b_perp,
    is_isotropic,
    null_space,
    signature_vector,
    vergne_select,
)


@dataclass(frozen=True)
class JumpSet:
    """A strictly increasing set of jump indices in {1, ..., m} (1-based)."""

    m: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= j <= self.m for j in self.indices):
            raise ValueError(f"jump indices must lie in 1..{self.m}")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("jump indices must be strictly increasing")

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def complement(self) -> tuple[int, ...]:
        members = set(self.indices)
        return tuple(j for j in range(1, self.m + 1) if j not in members)


def _flag_steps(flag: Flag) -> list[Subspace]:
    return [flag.subspace(j) for j in range(flag.dim + 1)]


def jump_indices(w: Subspace, flag: Flag) -> JumpSet:
    """The jump set of W relative to the flag; its size is codim W."""
    if w.ambient_dim != flag.dim:
        raise ValueError("subspace and flag dimensions differ")
    m = flag.dim
    indices = []
    below = w
    for j in range(1, m + 1):
        # V_{j-1} + W grows one flag vector at a time.
        if j > 1:
            below = below + Subspace.from_vectors(m, [flag.column(j - 2)])
        if not below.contains_vector(flag.column(j - 1)):
            indices.append(j)
    return JumpSet(m, tuple(indices))


@dataclass(frozen=True)
class FiltrationTrace:
    """The full record of the filtration: the chain and both index sequences."""

    chain: tuple[Subspace, ...]
    i_seq: tuple[int, ...]
    j_seq: tuple[int, ...]

    def __post_init__(self):
        if len(self.chain) != len(self.i_seq) + 1 or len(self.i_seq) != len(self.j_seq):
            raise ValueError("inconsistent trace lengths")

    @property
    def d(self) -> int:
        return len(self.i_seq)

    @property
    def final(self) -> Subspace:
        return self.chain[-1]


def filtration(b: SkewForm, flag: Flag | None = None) -> FiltrationTrace:
    """Run the isotropic filtration for B along the flag.

    Stops at the first isotropic chain member; by construction that member is
    the flag selection of a Lagrangian subspace and the number of steps is
    (m - dim N(B)) / 2.
    """
    if flag is None:
        flag = Flag.standard(b.dim)
    if b.dim != flag.dim:
        raise ValueError("form and flag dimensions differ")
    steps = _flag_steps(flag)
    p = Subspace.full(b.dim)
    chain = [p]
    i_seq: list[int] = []
    j_seq: list[int] = []
    while not is_isotropic(b, p):
        perp_p = b_perp(b, p)
        traces = [intersect(steps[i], p) for i in range(b.dim + 1)]
        i_next = next(i for i in range(1, b.dim + 1) if not contains(perp_p, traces[i]))
        p_next = intersect(b_perp(b, traces[i_next]), p)
        j_next = next(j for j in range(1, b.dim + 1) if not contains(p_next, traces[j]))
        if p_next.dim >= p.dim:
            raise RuntimeError("filtration failed to shrink: internal bug")
        chain.append(p_next)
        i_seq.append(i_next)
        j_seq.append(j_next)
        p = p_next
    return FiltrationTrace(tuple(chain), tuple(i_seq), tuple(j_seq))


@dataclass(frozen=True)
class CellSignatureBridge:
    """Translation data between a Schubert cell and its stratum signature.

    ``r_seq`` lists the complement of the jump set (with the sentinel m+1
    appended); the signature entry for step j is j before the first r, and
    2*l - j when r_l <= j < r_{l+1}.
    """

    m: int
    r_seq: tuple[int, ...]
    signature: SignatureVector

    @classmethod
    def from_cell(cls, e: JumpSet) -> CellSignatureBridge:
        m, d = e.m, len(e)
        comp = e.complement()
        r_seq = comp + (m + 1,)
        entries = []
        for j in range(1, m + 1):
            ell = bisect_right(comp, j)
            k_j = j if ell == 0 else 2 * ell - j
            if k_j < 0:
                raise ValueError(
                    f"jump set {e.indices} cannot arise from a Lagrangian selection: "
                    f"derived k_{j} = {k_j} < 0"
                )
            entries.append(k_j)
        if m and entries[-1] != m - 2 * d:
            raise ValueError(
                f"jump set {e.indices} cannot arise from a Lagrangian selection: "
                f"derived k_{m} = {entries[-1]} but codimension {d} forces {m - 2 * d}"
            )
        return cls(m, r_seq, SignatureVector(m, tuple(entries)))


def cell_to_signature(e: JumpSet) -> SignatureVector:
    """The signature vector shared by every form whose selection lies in cell e.

    Raises ValueError when the derived vector is inadmissible, i.e. the cell
    cannot contain any Lagrangian selection.
    """
    return CellSignatureBridge.from_cell(e).signature


def selection_cell(b: SkewForm, flag: Flag | None = None) -> JumpSet:
    """The Schubert cell of the Lagrangian selection of B."""
    if flag is None:
        flag = Flag.standard(b.dim)
    return jump_indices(vergne_select(b, flag), flag)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class FiltrationLemmaReport:
    """Outcome of every structural check run on one (form, flag) pair."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return f"{status}: {sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed"


def verify_filtration_lemmas(b: SkewForm, flag: Flag | None = None) -> FiltrationLemmaReport:
    """Re-verify the filtration theorems on a concrete (B, flag) pair.

    Every check below is a proved statement, so a failure is a bug report,
    not a counterexample; the witness string carries enough context to
    reproduce it.
    """
    if flag is None:
        flag = Flag.standard(b.dim)
    m = b.dim
    checks: list[CheckResult] = []

    def check(name: str, passed: bool, witness: str = "") -> None:
        checks.append(CheckResult(name, passed, "" if passed else witness))

    ctx = f"B={[[str(x) for x in row] for row in b.matrix.entries]}, flag={[[str(x) for x in row] for row in flag.basis_matrix.entries]}"

    trace = filtration(b, flag)
    d = trace.d
    steps = _flag_steps(flag)
    selection = vergne_select(b, flag)
    radical = null_space(b)
    jump_n = jump_indices(radical, flag)
    jump_p = jump_indices(trace.final, flag)

    for k in range(d):
        p_k, p_k1 = trace.chain[k], trace.chain[k + 1]
        i_k, j_k = trace.i_seq[k], trace.j_seq[k]
        vi_trace = intersect(steps[i_k], p_k)
        vj_trace = intersect(steps[j_k], p_k)
        check(
            f"step-{k}: quotient dimension one",
            p_k.dim - p_k1.dim == 1 and contains(p_k, p_k1),
            f"dims {p_k.dim}->{p_k1.dim} [{ctx}]",
        )
        check(
            f"step-{k}: chain member recovered by the j-trace",
            p_k1 + vj_trace == p_k,
            f"sum has dim {(p_k1 + vj_trace).dim}, expected {p_k.dim} [{ctx}]",
        )
        check(
            f"step-{k}: i-trace absorbed",
            contains(p_k1, vi_trace),
            f"i_k={i_k} [{ctx}]",
        )
        check(
            f"step-{k}: i-trace orthogonal to next member",
            contains(b_perp(b, vi_trace), p_k1),
            f"i_k={i_k} [{ctx}]",
        )
        check(
            f"step-{k}: relative radical monotone",
            contains(
                intersect(b_perp(b, p_k1), p_k1),
                intersect(b_perp(b, p_k), p_k),
            ),
            ctx,
        )

    check(
        "chain ends at the flag selection",
        trace.final == selection,
        f"final={trace.final.basis}, selection={selection.basis} [{ctx}]",
    )
    check(
        "step count is half the radical codimension",
        2 * d == m - radical.dim,
        f"d={d}, dim N={radical.dim} [{ctx}]",
    )
    check(
        "i-sequence strictly increasing, below j-sequence",
        all(a < b_ for a, b_ in zip(trace.i_seq, trace.i_seq[1:]))
        and all(i < j for i, j in zip(trace.i_seq, trace.j_seq)),
        f"i_seq={trace.i_seq}, j_seq={trace.j_seq} [{ctx}]",
    )
    check(
        "index sequences inside jump set of the radical",
        set(trace.i_seq) <= set(jump_n.indices) and set(trace.j_seq) <= set(jump_n.indices),
        f"i_seq={trace.i_seq}, j_seq={trace.j_seq}, jump N={jump_n.indices} [{ctx}]",
    )
    check(
        "i-sequence hits jump N minus jump of the selection",
        tuple(sorted(set(jump_n.indices) - set(jump_p.indices))) == trace.i_seq,
        f"i_seq={trace.i_seq}, jump N={jump_n.indices}, jump sel={jump_p.indices} [{ctx}]",
    )
    check(
        "j-sequence bijects onto jump of the selection",
        len(set(trace.j_seq)) == d and set(trace.j_seq) == set(jump_p.indices),
        f"j_seq={trace.j_seq}, jump sel={jump_p.indices} [{ctx}]",
    )
    check(
        "jump cardinalities",
        len(jump_n) == 2 * d and len(jump_p) == d,
        f"|jump N|={len(jump_n)}, |jump sel|={len(jump_p)}, d={d} [{ctx}]",
    )

    sig = signature_vector(b, flag)
    try:
        derived = cell_to_signature(jump_p)
        check(
            "cell determines the signature vector",
            derived == sig,
            f"derived={derived.entries}, signature={sig.entries} [{ctx}]",
        )
    except ValueError as exc:
        check("cell determines the signature vector", False, f"{exc} [{ctx}]")

    comp = jump_p.complement()
    ladder_ok = True
    ladder_witness = ""
    for j in range(1, m + 1):
        ell = bisect_right(comp, j)
        expected = j if ell == 0 else ell
        got = intersect(selection, steps[j]).dim
        if got != expected:
            ladder_ok = False
            ladder_witness = f"dim(selection ∩ V_{j}) = {got}, expected {expected} [{ctx}]"
            break
    check("selection/flag dimension ladder", ladder_ok, ladder_witness)

    return FiltrationLemmaReport(tuple(checks))
