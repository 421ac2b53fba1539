"""Presymplectic structures on Q^m.

A presymplectic structure is a skew-symmetric bilinear form B, not assumed
nondegenerate.  This module computes null spaces (radicals), B-orthogonal
complements, restrictions of B to the steps of a complete flag, and the
flag-based selection of a canonical Lagrangian subspace

    select(B) = N(B|V_1) + N(B|V_2) + ... + N(B|V_m),

where each null space is taken inside the flag step V_j and embedded back
into the ambient space.  The selection is always maximal isotropic, and its
stratum is recorded by the signature vector (dim N(B|V_j))_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .linalg import Matrix, Subspace, Vector, as_rational, dot, kernel


@dataclass(frozen=True)
class SkewForm:
    """A skew-symmetric bilinear form, stored as its Gram matrix.

    ``matrix.entry(i, j)`` is the value of the form on the i-th and j-th
    standard basis vectors; exact skew symmetry is enforced on construction.
    """

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_skew_symmetric():
            raise ValueError("matrix of a skew form must be exactly skew-symmetric")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def zero(cls, dim: int) -> SkewForm:
        return cls(Matrix.zero(dim, dim))

    @classmethod
    def from_upper_entries(cls, dim: int, entries: Iterable[tuple[int, int, object]]) -> SkewForm:
        """Build a form from its strictly-upper entries (1-based index pairs)."""
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for i, j, value in entries:
            if not 1 <= i < j <= dim:
                raise ValueError(f"upper entry ({i}, {j}) out of range for dim {dim}")
            v = as_rational(value)
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = -v
        return cls(Matrix(rows))

    def value(self, u, v) -> Fraction:
        """Evaluate the form on two vectors."""
        return dot(u, self.matrix.apply(v))

    def is_zero(self) -> bool:
        return all(not x for row in self.matrix.entries for x in row)

    def __add__(self, other: SkewForm) -> SkewForm:
        return SkewForm(self.matrix + other.matrix)

    def scaled(self, c) -> SkewForm:
        return SkewForm(self.matrix.scaled(c))


@dataclass(frozen=True)
class Flag:
    """A complete flag V_1 ⊂ ... ⊂ V_m given by an invertible basis matrix.

    The j-th flag step is spanned by the first j columns.
    """

    basis_matrix: Matrix

    def __post_init__(self):
        m = self.basis_matrix.rows
        if self.basis_matrix.cols != m:
            raise ValueError("flag basis matrix must be square")
        standard = self.basis_matrix == Matrix.identity(m)
        if not standard and self.basis_matrix.rank() != m:
            raise ValueError("flag basis matrix must be invertible")
        object.__setattr__(self, "_standard", standard)

    @property
    def dim(self) -> int:
        return self.basis_matrix.rows

    @classmethod
    def standard(cls, dim: int) -> Flag:
        return cls(Matrix.identity(dim))

    def is_standard(self) -> bool:
        return self._standard

    def column(self, a: int) -> Vector:
        """The a-th flag basis vector (0-based)."""
        return self.basis_matrix.column(a)

    def subspace(self, j: int) -> Subspace:
        """The flag step V_j (0 <= j <= m)."""
        if not 0 <= j <= self.dim:
            raise ValueError(f"flag step {j} out of range")
        if self._standard:
            rows = tuple(Matrix.identity(self.dim).entries[:j])
            return Subspace(self.dim, rows, tuple(range(j)))
        return Subspace.from_vectors(self.dim, [self.column(a) for a in range(j)])

    def embed(self, j: int, sub: Subspace) -> Subspace:
        """Map a subspace expressed in V_j-coordinates into the ambient space."""
        if sub.ambient_dim != j:
            raise ValueError("coordinate dimension does not match flag step")
        if self._standard:
            # Zero-padding preserves the canonical form.
            pad = (Fraction(0),) * (self.dim - j)
            return Subspace(self.dim, tuple(row + pad for row in sub.basis), sub.pivots)
        cols = [self.column(a) for a in range(j)]
        vectors = []
        for row in sub.basis:
            vec = [Fraction(0)] * self.dim
            for a, coeff in enumerate(row):
                if coeff:
                    col = cols[a]
                    for t in range(self.dim):
                        vec[t] += coeff * col[t]
            vectors.append(vec)
        return Subspace.from_vectors(self.dim, vectors)


@dataclass(frozen=True)
class SignatureVector:
    """Per-step radical dimensions (k_1, ..., k_m), k_j = dim N(B|V_j).

    Realizable vectors satisfy 0 <= k_j <= j and k_j ≡ j (mod 2), because a
    skew form on a j-dimensional space has even rank.
    """

    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.m:
            raise ValueError("signature vector has wrong length")
        for j, k in enumerate(self.entries, start=1):
            if not 0 <= k <= j:
                raise ValueError(f"signature entry k_{j}={k} outside [0, {j}]")
            if (k - j) % 2:
                raise ValueError(f"signature entry k_{j}={k} has wrong parity")

    def __iter__(self):
        return iter(self.entries)


def _dims_match(b: SkewForm, s: Subspace) -> None:
    if b.dim != s.ambient_dim:
        raise ValueError(f"dimension mismatch: form on Q^{b.dim}, subspace in Q^{s.ambient_dim}")


def b_perp(b: SkewForm, s: Subspace) -> Subspace:
    """The B-orthogonal complement {w : B(v, w) = 0 for all v in S}.

    Computed as the kernel of the matrix whose rows are (basis row of S)·B.
    """
    _dims_match(b, s)
    if s.is_zero():
        return Subspace.full(b.dim)
    cols = [b.matrix.column(j) for j in range(b.dim)]
    rows = [tuple(dot(v, col) for col in cols) for v in s.basis]
    return kernel(Matrix(rows))


def null_space(b: SkewForm) -> Subspace:
    """The radical N(B) = {w : B(v, w) = 0 for all v}."""
    return kernel(b.matrix)


def restrict(b: SkewForm, flag: Flag, j: int) -> SkewForm:
    """The form B restricted to V_j, in the coordinates of the flag basis."""
    if not 1 <= j <= flag.dim:
        raise ValueError(f"flag step {j} out of range 1..{flag.dim}")
    if b.dim != flag.dim:
        raise ValueError("form and flag dimensions differ")
    if flag.is_standard():
        return SkewForm(Matrix([row[:j] for row in b.matrix.entries[:j]]))
    cols = [flag.column(a) for a in range(j)]
    images = [b.matrix.apply(c) for c in cols]
    return SkewForm(Matrix([[dot(cols[a], images[c]) for c in range(j)] for a in range(j)]))


def vergne_select(b: SkewForm, flag: Flag | None = None) -> Subspace:
    """The canonical Lagrangian selection N(B|V_1) + ... + N(B|V_m).

    Each per-step radical is computed in flag coordinates, embedded back into
    the ambient space, and summed.  The result is maximal isotropic with
    dimension (m + dim N(B)) / 2 and contains N(B).
    """
    if flag is None:
        flag = Flag.standard(b.dim)
    selection = Subspace.zero(b.dim)
    for j in range(1, flag.dim + 1):
        nj = null_space(restrict(b, flag, j))
        selection = selection + flag.embed(j, nj)
    return selection


def signature_vector(b: SkewForm, flag: Flag | None = None) -> SignatureVector:
    """The stratum label (dim N(B|V_1), ..., dim N(B|V_m))."""
    if flag is None:
        flag = Flag.standard(b.dim)
    dims = tuple(null_space(restrict(b, flag, j)).dim for j in range(1, flag.dim + 1))
    return SignatureVector(flag.dim, dims)


def is_isotropic(b: SkewForm, w: Subspace) -> bool:
    """True iff the form vanishes identically on W."""
    _dims_match(b, w)
    images = [b.matrix.apply(v) for v in w.basis]
    n = len(w.basis)
    # B(v, v) = 0 automatically for skew forms, so only distinct pairs matter.
    return all(not dot(w.basis[a], images[c]) for a in range(n) for c in range(a + 1, n))


def is_lagrangian(b: SkewForm, w: Subspace) -> bool:
    """True iff W is maximal isotropic: isotropic with dim W = (m + dim N(B)) / 2."""
    _dims_match(b, w)
    target, rem = divmod(b.dim + null_space(b).dim, 2)
    assert rem == 0  # skew forms have even rank
    return w.dim == target and is_isotropic(b, w)
