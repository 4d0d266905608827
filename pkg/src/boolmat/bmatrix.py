"""Boolean matrices as linear maps: products, unitaries, and reductions.

A matrix multiplies by join-of-meets; columns of a stochastic matrix are
stochastic vectors, and unitary matrices (``A A* = A* A = I``) are exactly
the invertible ones, with inverse the transpose. Reflections (symmetric
stochastic matrices) built from invariant stochastic vectors conjugate a
unitary into block-diagonal form; :class:`Reduction` records the outcome.

Hot products dispatch to the packed-word kernel selected at import in
:mod:`boolmat._kernel`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _kernel
from .algebra import (
    Algebra,
    AlgebraMismatchError,
    Elem,
    NotInvertibleError,
    PreconditionError,
    ShapeError,
)
from .bvec import BVec, disjointify

__all__ = [
    "BMatrix",
    "Reduction",
    "mul",
    "apply",
    "adjoint",
    "identity",
    "matrix_leq",
    "is_stochastic_matrix",
    "is_unitary",
    "invert",
    "trace",
    "joint_trace",
    "find_invariant_stochastic",
    "reflection_from",
    "reduce_unitary",
    "reduce_by_orthogonal_set",
    "power",
    "block_diag",
]


@dataclass(frozen=True, slots=True)
class BMatrix:
    """An n-by-m grid of algebra elements, row-major packed.

    Degenerate 0-by-0 matrices are permitted; they appear as cores of full
    reductions. Vectors, by contrast, never have length zero.
    """

    rows: int
    cols: int
    masks: tuple[int, ...]
    algebra: Algebra

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimensions")
        if len(self.masks) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.masks)}"
            )

    @staticmethod
    def of(rows: Sequence[Sequence[Elem]]) -> BMatrix:
        """Build from a rectangular grid of elements."""
        if not rows:
            raise ShapeError("use an explicit 0x0 only via from_masks")
        width = len(rows[0])
        alg = rows[0][0].algebra if width else None
        masks: list[int] = []
        for r in rows:
            if len(r) != width:
                raise ShapeError("ragged rows")
            for e in r:
                if alg is None:
                    alg = e.algebra
                if e.algebra is not alg:
                    raise AlgebraMismatchError("matrix entries from different algebras")
                masks.append(e.mask)
        if alg is None:
            raise ShapeError("cannot infer algebra from an empty grid")
        return BMatrix(len(rows), width, tuple(masks), alg)

    def __getitem__(self, ij: tuple[int, int]) -> Elem:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ShapeError(f"index {ij} out of range for {self.rows}x{self.cols}")
        return Elem(self.masks[i * self.cols + j], self.algebra)

    def row(self, i: int) -> BVec:
        return BVec(self.masks[i * self.cols : (i + 1) * self.cols], self.algebra)

    def column(self, j: int) -> BVec:
        return BVec(tuple(self.masks[i * self.cols + j] for i in range(self.rows)), self.algebra)

    def row_list(self) -> list[BVec]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> list[BVec]:
        return [self.column(j) for j in range(self.cols)]

    @staticmethod
    def from_columns(columns: Sequence[BVec]) -> BMatrix:
        if not columns:
            raise ShapeError("need at least one column")
        n = len(columns[0])
        alg = columns[0].algebra
        for c in columns[1:]:
            if c.algebra is not alg:
                raise AlgebraMismatchError("columns from different algebras")
            if len(c) != n:
                raise ShapeError("columns of different lengths")
        masks = tuple(c.masks[i] for i in range(n) for c in columns)
        return BMatrix(n, len(columns), masks, alg)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __str__(self) -> str:
        lines = []
        for i in range(self.rows):
            lines.append(" ".join(str(self[i, j]) for j in range(self.cols)))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"BMatrix({self.rows}x{self.cols} over {self.algebra.atom_names})"


def _check_same_algebra(a: BMatrix, b: BMatrix) -> None:
    if a.algebra is not b.algebra:
        raise AlgebraMismatchError("matrices from different algebras")


def mul(a: BMatrix, b: BMatrix) -> BMatrix:
    """Join-of-meets product."""
    _check_same_algebra(a, b)
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = _kernel.matmul(a.rows, a.cols, b.cols, a.masks, b.masks, a.algebra.atom_count)
    return BMatrix(a.rows, b.cols, tuple(out), a.algebra)


def apply(a: BMatrix, v: BVec) -> BVec:
    """Apply to a column vector."""
    if a.algebra is not v.algebra:
        raise AlgebraMismatchError("matrix and vector from different algebras")
    if a.cols != len(v):
        raise ShapeError(f"cannot apply {a.rows}x{a.cols} to a length-{len(v)} vector")
    if a.rows == 0:
        raise ShapeError("result would be a length-0 vector")
    out = _kernel.matvec(a.rows, a.cols, a.masks, v.masks, a.algebra.atom_count)
    return BVec(tuple(out), a.algebra)


def adjoint(a: BMatrix) -> BMatrix:
    """Transpose."""
    masks = tuple(a.masks[i * a.cols + j] for j in range(a.cols) for i in range(a.rows))
    return BMatrix(a.cols, a.rows, masks, a.algebra)


def identity(algebra: Algebra, n: int) -> BMatrix:
    masks = [0] * (n * n)
    for i in range(n):
        masks[i * n + i] = algebra._full
    return BMatrix(n, n, tuple(masks), algebra)


def matrix_leq(a: BMatrix, b: BMatrix) -> bool:
    """Entrywise lattice order (equivalent to the bilinear-form order)."""
    _check_same_algebra(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeError("order compares equal shapes only")
    return all(x & ~y == 0 for x, y in zip(a.masks, b.masks))


def is_stochastic_matrix(a: BMatrix) -> bool:
    """Is every column a stochastic vector? (Square matrices only.)"""
    if not a.is_square():
        raise ShapeError("stochastic matrices are square transition matrices")
    full = a.algebra._full
    for j in range(a.cols):
        seen = 0
        for i in range(a.rows):
            m = a.masks[i * a.cols + j]
            if m & seen:
                return False
            seen |= m
        if seen != full:
            return False
    return True


def is_unitary(a: BMatrix) -> bool:
    """Does ``A A* = A* A = I`` hold?"""
    at = adjoint(a)
    return (
        mul(a, at) == identity(a.algebra, a.rows)
        and mul(at, a) == identity(a.algebra, a.cols)
    )


def invert(a: BMatrix) -> BMatrix:
    """Inverse of a unitary matrix: its adjoint."""
    if not is_unitary(a):
        raise NotInvertibleError("matrix is not unitary, hence not invertible")
    return adjoint(a)


def trace(a: BMatrix) -> Elem:
    """Join of the diagonal."""
    if not a.is_square():
        raise ShapeError("trace of a non-square matrix")
    acc = 0
    for i in range(a.rows):
        acc |= a.masks[i * a.cols + i]
    return Elem(acc, a.algebra)


def joint_trace(matrices: Sequence[BMatrix]) -> Elem:
    """Join over i of the meet of the (i,i) entries across the family."""
    if not matrices:
        raise PreconditionError("joint trace of an empty family")
    first = matrices[0]
    if not first.is_square():
        raise ShapeError("joint trace needs square matrices")
    for m in matrices[1:]:
        _check_same_algebra(first, m)
        if (m.rows, m.cols) != (first.rows, first.cols):
            raise ShapeError("joint trace needs equal sizes")
    acc = 0
    n = first.rows
    for i in range(n):
        d = first.algebra._full
        for m in matrices:
            d &= m.masks[i * n + i]
        acc |= d
    return Elem(acc, first.algebra)


def _diagonal_meet(matrices: Sequence[BMatrix]) -> BVec:
    n = matrices[0].rows
    alg = matrices[0].algebra
    masks = []
    for i in range(n):
        d = alg._full
        for m in matrices:
            d &= m.masks[i * n + i]
        masks.append(d)
    return BVec(tuple(masks), alg)


def find_invariant_stochastic(matrices: Sequence[BMatrix]) -> BVec | None:
    """Common invariant stochastic vector of a stochastic family, or None.

    One exists exactly when the joint trace is one; the construction is
    deterministic: greedy disjointification of the diagonal-meet vector in
    index order.
    """
    if not matrices:
        raise PreconditionError("empty family")
    for m in matrices:
        if not is_stochastic_matrix(m):
            raise PreconditionError("find_invariant_stochastic needs stochastic matrices")
    for m in matrices[1:]:
        _check_same_algebra(matrices[0], m)
        if m.rows != matrices[0].rows:
            raise ShapeError("family members must have equal sizes")
    if not joint_trace(matrices).is_one:
        return None
    b = disjointify(_diagonal_meet(matrices))
    assert all(apply(m, b) == b for m in matrices), "constructed vector is not invariant"
    return b


def reflection_from(b: BVec) -> BMatrix:
    """Symmetric stochastic matrix with first row and column ``b``.

    Diagonal entries past the first are complements ``~b_i``; the result
    squares to the identity and swaps ``b`` with the first canonical basis
    vector.
    """
    if not b.is_stochastic():
        raise PreconditionError("reflection_from needs a stochastic vector")
    n = len(b)
    full = b.algebra._full
    masks = [0] * (n * n)
    for i in range(n):
        masks[i] = b.masks[i]
        masks[i * n] = b.masks[i]
    for i in range(1, n):
        masks[i * n + i] = b.masks[i] ^ full
    return BMatrix(n, n, tuple(masks), b.algebra)


@dataclass(frozen=True, slots=True)
class Reduction:
    """Block-diagonalization ``A = B . diag(I_m, C) . B*``.

    ``conjugator`` is unitary (symmetric when ``fixed_count`` is 1, a
    product of reflections otherwise); ``core`` is the trailing block and
    ``fixed_count`` the size of the leading identity block.
    """

    conjugator: BMatrix
    core: BMatrix
    fixed_count: int

    def block(self) -> BMatrix:
        """The middle factor ``diag(I_m, C)``, materialized."""
        return block_diag(self.conjugator.algebra, self.fixed_count, self.core)

    def reconstruct(self) -> BMatrix:
        """Recompute the original matrix ``B . diag(I_m, C) . B*``."""
        b = self.conjugator
        return mul(b, mul(self.block(), adjoint(b)))


def block_diag(algebra: Algebra, fixed: int, core: BMatrix) -> BMatrix:
    """``diag(I_fixed, core)`` as an explicit matrix."""
    if not core.is_square():
        raise ShapeError("core must be square")
    n = fixed + core.rows
    masks = [0] * (n * n)
    for i in range(fixed):
        masks[i * n + i] = algebra._full
    for i in range(core.rows):
        for j in range(core.cols):
            masks[(fixed + i) * n + fixed + j] = core.masks[i * core.cols + j]
    return BMatrix(n, n, tuple(masks), algebra)


def _split_fixed_block(d: BMatrix) -> BMatrix:
    """Check ``d = diag(1, C)`` and return C; failure is an internal error."""
    n = d.rows
    full = d.algebra._full
    ok = d.masks[0] == full
    ok = ok and all(d.masks[j] == 0 for j in range(1, n))
    ok = ok and all(d.masks[i * n] == 0 for i in range(1, n))
    assert ok, "conjugated matrix lost its guaranteed block form"
    core = tuple(d.masks[i * n + j] for i in range(1, n) for j in range(1, n))
    return BMatrix(n - 1, n - 1, core, d.algebra)


def reduce_unitary(matrices: Sequence[BMatrix]) -> list[Reduction] | None:
    """Simultaneously reduce a unitary family sharing joint trace one.

    Returns one :class:`Reduction` per input, all sharing the same
    reflection as conjugator, or None when the joint trace is not one
    (no common invariant stochastic vector exists). Merely stochastic
    inputs are rejected: trace one does not make those reducible.
    """
    if not matrices:
        raise PreconditionError("empty family")
    for m in matrices:
        if not is_unitary(m):
            raise PreconditionError("reduce_unitary needs unitary matrices")
    b = find_invariant_stochastic(matrices)
    if b is None:
        return None
    refl = reflection_from(b)
    out = []
    for m in matrices:
        d = mul(refl, mul(m, refl))
        out.append(Reduction(conjugator=refl, core=_split_fixed_block(d), fixed_count=1))
    return out


def reduce_by_orthogonal_set(a: BMatrix, invariants: Sequence[BVec]) -> Reduction:
    """Reduce a unitary by an invariant orthogonal set of stochastic vectors.

    Peels one vector at a time: reflect it onto the first slot, cut off the
    fixed block, and push the remaining vectors into the smaller space. The
    conjugators accumulate into one unitary B with
    ``A = B . diag(I_m, C) . B*`` where m = len(invariants).
    """
    if not is_unitary(a):
        raise PreconditionError("reduce_by_orthogonal_set needs a unitary matrix")
    if not invariants:
        raise PreconditionError("need at least one invariant vector")
    for v in invariants:
        if v.algebra is not a.algebra or len(v) != a.rows:
            raise ShapeError("invariant vectors must live in the matrix's space")
        if not v.is_stochastic():
            raise PreconditionError("invariant vectors must be stochastic")
        if apply(a, v) != v:
            raise PreconditionError(f"{v} is not invariant under the matrix")
    for i, v in enumerate(invariants):
        for w in invariants[i + 1 :]:
            if any(x & y for x, y in zip(v.masks, w.masks)):
                raise PreconditionError("invariant vectors must be mutually orthogonal")

    alg = a.algebra
    current = a
    remaining = list(invariants)
    conjugator: BMatrix | None = None
    for step in range(len(invariants)):
        refl = reflection_from(remaining[0])
        current = _split_fixed_block(mul(refl, mul(current, refl)))
        next_remaining = []
        for v in remaining[1:]:
            image = apply(refl, v)
            assert image.masks[0] == 0, "orthogonal invariant kept a first component"
            next_remaining.append(BVec(image.masks[1:], alg))
        remaining = next_remaining
        lifted = block_diag(alg, step, refl) if step else refl
        conjugator = lifted if conjugator is None else mul(conjugator, lifted)
    assert conjugator is not None
    result = Reduction(conjugator=conjugator, core=current, fixed_count=len(invariants))
    assert result.reconstruct() == a, "reduction failed to reconstruct its input"
    return result


def power(a: BMatrix, e: int) -> BMatrix:
    """``A**e`` by repeated squaring; ``A**0`` is the identity."""
    if not a.is_square():
        raise ShapeError("powers of a non-square matrix")
    if e < 0:
        raise PreconditionError("negative powers are not defined")
    result = identity(a.algebra, a.rows)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result
