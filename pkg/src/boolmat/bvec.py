"""Boolean vectors and the constructive basis algorithms.

Vectors are n-tuples over one :class:`~boolmat.algebra.Algebra` with
componentwise join as addition and meet as scalar action. The inner product
``<a,b> = OR_i (a_i & b_i)`` is algebra-valued; orthovectors have pairwise
disjoint entries and stochastic vectors are orthovectors whose entries join
to one (a labelled partition of the atom set).

Everything here is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    Algebra,
    AlgebraMismatchError,
    Elem,
    PreconditionError,
    ShapeError,
)

__all__ = [
    "BVec",
    "add",
    "scalar_mul",
    "inner",
    "norm",
    "orthogonal",
    "zero_vec",
    "delta",
    "canonical_basis",
    "disjointify",
    "disjoint_refinement",
    "descent",
    "lift",
    "cyclic_basis",
    "is_orthonormal_set",
    "is_basis",
    "coordinates",
    "extend_to_basis",
    "parse_vector",
]


@dataclass(frozen=True, slots=True)
class BVec:
    """An n-tuple of algebra elements, treated as a column vector.

    ``masks[i]`` packs entry i; entries are materialized as :class:`Elem`
    on demand. Vectors of length zero are rejected.
    """

    masks: tuple[int, ...]
    algebra: Algebra

    @staticmethod
    def of(entries: Sequence[Elem]) -> BVec:
        """Build from elements, validating a shared algebra."""
        if not entries:
            raise ShapeError("vectors of length 0 are not supported")
        alg = entries[0].algebra
        for e in entries[1:]:
            if e.algebra is not alg:
                raise AlgebraMismatchError("vector entries come from different algebras")
        return BVec(tuple(e.mask for e in entries), alg)

    def __post_init__(self) -> None:
        if not self.masks:
            raise ShapeError("vectors of length 0 are not supported")

    def __len__(self) -> int:
        return len(self.masks)

    def __getitem__(self, i: int) -> Elem:
        return Elem(self.masks[i], self.algebra)

    def entries(self) -> list[Elem]:
        return [Elem(m, self.algebra) for m in self.masks]

    def __add__(self, other: BVec) -> BVec:
        _check_pair(self, other)
        return BVec(tuple(x | y for x, y in zip(self.masks, other.masks)), self.algebra)

    def __rmul__(self, c: Elem) -> BVec:
        if c.algebra is not self.algebra:
            raise AlgebraMismatchError("scalar from a different algebra")
        return BVec(tuple(c.mask & x for x in self.masks), self.algebra)

    def norm(self) -> Elem:
        """Join of all entries; equals ``inner(a, a)``."""
        acc = 0
        for m in self.masks:
            acc |= m
        return Elem(acc, self.algebra)

    def is_orthovector(self) -> bool:
        """Are the entries pairwise disjoint?"""
        seen = 0
        for m in self.masks:
            if m & seen:
                return False
            seen |= m
        return True

    def is_unit(self) -> bool:
        """Does the norm equal one?"""
        return self.norm().is_one

    def is_stochastic(self) -> bool:
        """Orthovector whose entries join to one."""
        return self.is_orthovector() and self.is_unit()

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries()) + ")"

    def __repr__(self) -> str:
        return f"BVec{str(self)}"


def _check_pair(a: BVec, b: BVec) -> None:
    if a.algebra is not b.algebra:
        raise AlgebraMismatchError("vectors from different algebras")
    if len(a.masks) != len(b.masks):
        raise ShapeError(f"vector lengths differ: {len(a.masks)} vs {len(b.masks)}")


def add(a: BVec, b: BVec) -> BVec:
    """Componentwise join."""
    return a + b


def scalar_mul(c: Elem, a: BVec) -> BVec:
    """Componentwise meet with the scalar ``c``."""
    return c * a


def inner(a: BVec, b: BVec) -> Elem:
    """Algebra-valued inner product: join over i of ``a_i & b_i``."""
    _check_pair(a, b)
    acc = 0
    for x, y in zip(a.masks, b.masks):
        acc |= x & y
    return Elem(acc, a.algebra)


def norm(a: BVec) -> Elem:
    return a.norm()


def orthogonal(a: BVec, b: BVec) -> bool:
    """Is the inner product zero?"""
    return inner(a, b).is_zero


def zero_vec(algebra: Algebra, n: int) -> BVec:
    if n < 1:
        raise ShapeError("vectors of length 0 are not supported")
    return BVec((0,) * n, algebra)


def delta(algebra: Algebra, n: int, i: int) -> BVec:
    """Canonical basis vector: one in slot ``i`` (0-based), zero elsewhere."""
    if not 0 <= i < n:
        raise PreconditionError(f"slot {i} out of range 0..{n - 1}")
    masks = [0] * n
    masks[i] = algebra._full
    return BVec(tuple(masks), algebra)


def canonical_basis(algebra: Algebra, n: int) -> list[BVec]:
    return [delta(algebra, n, i) for i in range(n)]


def disjoint_refinement(a: BVec) -> BVec:
    """Greedy orthovector below ``a`` with the same norm.

    Entry i keeps what earlier entries have not claimed:
    ``b_i = a_i & ~a_1 & ... & ~a_{i-1}``. Orthovectors are fixed points.
    """
    seen = 0
    out = []
    for m in a.masks:
        out.append(m & ~seen)
        seen |= m
    return BVec(tuple(out), a.algebra)


def disjointify(a: BVec) -> BVec:
    """Stochastic vector below a unit vector, by greedy refinement."""
    if not a.is_unit():
        raise PreconditionError(f"disjointify needs a unit vector, got norm {a.norm()}")
    return disjoint_refinement(a)


def _require_stochastic(a: BVec, what: str) -> None:
    if not a.is_stochastic():
        raise PreconditionError(f"{what} must be stochastic, got {a}")


def descent(a: BVec, b: BVec) -> BVec:
    """Project ``b`` to length n-1 along the stochastic vector ``a``.

    For orthogonal stochastic a, b the vector ``c_i = (b_n & a_i) | b_i``
    (i < n) is stochastic and satisfies ``b_i = c_i & ~a_i``; :func:`lift`
    inverts this.
    """
    _check_pair(a, b)
    if len(a) < 2:
        raise PreconditionError("descent needs vectors of length at least 2")
    _require_stochastic(a, "descent: a")
    _require_stochastic(b, "descent: b")
    if not orthogonal(a, b):
        raise PreconditionError("descent needs orthogonal vectors")
    bn = b.masks[-1]
    return BVec(
        tuple((bn & a.masks[i]) | b.masks[i] for i in range(len(a) - 1)),
        a.algebra,
    )


def lift(a: BVec, c: BVec) -> BVec:
    """Inverse of :func:`descent`: rebuild the length-n vector from ``c``.

    ``b_i = c_i & ~a_i`` for i < n and ``b_n`` the complement of their join;
    the result is stochastic and orthogonal to ``a``.
    """
    if a.algebra is not c.algebra:
        raise AlgebraMismatchError("vectors from different algebras")
    if len(c) != len(a) - 1:
        raise ShapeError(f"lift needs len(c) == len(a)-1, got {len(c)} vs {len(a)}")
    _require_stochastic(a, "lift: a")
    _require_stochastic(c, "lift: c")
    out = [c.masks[i] & ~a.masks[i] for i in range(len(a) - 1)]
    seen = 0
    for m in out:
        seen |= m
    out.append(seen ^ a.algebra._full)
    return BVec(tuple(out), a.algebra)


def cyclic_basis(a: BVec) -> list[BVec]:
    """All rotations of a stochastic vector: an orthonormal basis with ``a`` first."""
    _require_stochastic(a, "cyclic_basis: a")
    n = len(a)
    return [BVec(a.masks[i:] + a.masks[:i], a.algebra) for i in range(n)]


def _uniform(vectors: Sequence[BVec]) -> tuple[int, Algebra]:
    first = vectors[0]
    for v in vectors[1:]:
        _check_pair(first, v)
    return len(first), first.algebra


def is_orthonormal_set(vectors: Sequence[BVec]) -> bool:
    """Pairwise orthogonal and every norm one. Vacuously true when empty."""
    if not vectors:
        return True
    _uniform(vectors)
    for i, v in enumerate(vectors):
        if not v.is_unit():
            return False
        for w in vectors[i + 1 :]:
            if not orthogonal(v, w):
                return False
    return True


def _transpose_family(vectors: Sequence[BVec]) -> list[BVec]:
    n, alg = _uniform(vectors)
    return [BVec(tuple(v.masks[i] for v in vectors), alg) for i in range(n)]


def is_basis(vectors: Sequence[BVec]) -> bool:
    """Orthonormal set of cardinality n: exactly the bases of the space.

    In debug runs the duality characterization (the transposed family is
    orthonormal) is cross-checked; disagreement would be a library bug.
    """
    if not vectors:
        return False
    n, _ = _uniform(vectors)
    result = len(vectors) == n and is_orthonormal_set(vectors)
    if __debug__:
        dual = is_orthonormal_set(_transpose_family(vectors)) and is_orthonormal_set(vectors)
        assert dual == result, f"duality cross-check failed for {vectors!r}"
    return result


def coordinates(b: BVec, basis: Sequence[BVec]) -> list[Elem]:
    """Coefficients of ``b`` in an orthonormal basis: ``c_i = <b, e_i>``.

    The reconstruction ``sum_i c_i e_i`` recovers ``b`` exactly.
    """
    if not is_basis(basis):
        raise PreconditionError("coordinates needs an orthonormal basis")
    return [inner(b, e) for e in basis]


def extend_to_basis(
    vectors: Sequence[BVec],
    *,
    n: int | None = None,
    algebra: Algebra | None = None,
) -> list[BVec]:
    """Extend a stochastic orthonormal set to an orthonormal basis.

    The input vectors stay in place as the first m output vectors. For an
    empty input, ``n`` and ``algebra`` pick the space and the canonical
    basis is returned.

    The construction rotates the first vector into a cyclic basis
    ``e_1..e_n``, expresses the remaining input vectors by their
    coefficients on ``e_2..e_n`` (a stochastic orthonormal set one
    dimension down), recurses, and maps the completed basis back through
    ``w -> sum_i w_i e_{i+1}``.
    """
    vs = list(vectors)
    if not vs:
        if n is None or algebra is None:
            raise PreconditionError("empty set: pass n= and algebra= to fix the space")
        return canonical_basis(algebra, n)
    dim, alg = _uniform(vs)
    if n is not None and n != dim:
        raise ShapeError(f"vectors have length {dim}, not n={n}")
    for v in vs:
        _require_stochastic(v, "extend_to_basis: every vector")
    if not is_orthonormal_set(vs):
        raise PreconditionError("extend_to_basis needs an orthonormal set")
    m = len(vs)
    if m > dim:
        raise PreconditionError(f"{m} orthonormal stochastic vectors cannot fit in dimension {dim}")
    if m == dim:
        return vs

    rot = cyclic_basis(vs[0])
    tail = rot[1:]
    projected = [
        BVec(tuple(inner(v, e).mask for e in tail), alg)
        for v in vs[1:]
    ]
    completed = extend_to_basis(projected, n=dim - 1, algebra=alg)

    def back(w: BVec) -> BVec:
        masks = [0] * dim
        for wi, e in zip(w.masks, tail):
            for t in range(dim):
                masks[t] |= wi & e.masks[t]
        return BVec(tuple(masks), alg)

    mapped = [back(w) for w in completed]
    # Mapping the projections back must reproduce the originals; anything
    # else is a library bug, not a user error.
    assert mapped[: m - 1] == list(vs[1:]), "extension lost its prefix"
    return [vs[0], *mapped]


def parse_vector(algebra: Algebra, text: str) -> BVec:
    """Parse ``({1},{2,3},{})`` style literals; inverse of ``str``."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise PreconditionError(f"bad vector literal {text!r} (expected parentheses)")
    body = t[1:-1]
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in body:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if parts == [""]:
        raise ShapeError("vectors of length 0 are not supported")
    return BVec.of([algebra.parse(p) for p in parts])
