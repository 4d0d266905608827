"""Brute-force reference checks: every theorem, verified by enumeration.

The checks here are deliberately naive. They work on raw bit masks with
triple-loop products and exhaustive searches, never touching the packed
kernels or the constructive algorithms whose correctness they back up. A
verdict of ``passed=False`` from any registered check is a release blocker.

Enumeration sizes follow closed forms where they exist (``2**(k*n)``
vectors, ``n**k`` stochastic vectors, ``n**(k*n)`` stochastic matrices,
``factorial(n)**k`` unitaries); a budget guard refuses blow-ups instead of
silently truncating, because a truncated exhaustive check is not
exhaustive.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterator, Sequence

from . import rand
from .algebra import Algebra, BoolmatError, PreconditionError
from .bmatrix import BMatrix
from .bvec import BVec

__all__ = [
    "EnumSpec",
    "Verdict",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "KINDS",
    "THEOREMS",
    "THEOREM_KINDS",
    "SAMPLING_THEOREMS",
    "space_size",
    "enumerate_objects",
    "brute_check",
    "sample_check",
]

DEFAULT_BUDGET = 10_000_000

KINDS = (
    "all_vectors",
    "stochastic_vectors",
    "stochastic_matrices",
    "unitary_matrices",
    "orthonormal_sets",
)


class BudgetExceededError(BoolmatError):
    """Enumeration would visit more objects than the configured budget."""

    def __init__(self, required: int | None, budget: int):
        self.required = required
        self.budget = budget
        size = "unknown (search-shaped)" if required is None else str(required)
        super().__init__(f"enumeration needs budget {size}, configured {budget}")


@dataclass(frozen=True, slots=True)
class EnumSpec:
    """What to enumerate: vector length ``n``, atom count ``k``, and kind."""

    n: int
    k: int
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown kind {self.kind!r}; choose from {KINDS}")
        if self.n < 1 or self.k < 1:
            raise PreconditionError("n and k must be at least 1")


@dataclass(frozen=True, slots=True)
class Verdict:
    """Outcome of one brute-force or sampled check."""

    theorem: str
    n: int
    k: int
    passed: bool
    checked: int
    counterexample: str | None = None
    mode: str = "exhaustive"

    def __str__(self) -> str:
        tail = "pass" if self.passed else f"FAIL: {self.counterexample}"
        return f"{self.theorem} n={self.n} k={self.k} [{self.mode}]: {tail} ({self.checked} objects)"


def space_size(spec: EnumSpec) -> int | None:
    """Closed-form object count, or None for search-shaped enumerations."""
    if spec.kind == "all_vectors":
        return 1 << (spec.k * spec.n)
    if spec.kind == "stochastic_vectors":
        return spec.n**spec.k
    if spec.kind == "stochastic_matrices":
        return spec.n ** (spec.k * spec.n)
    if spec.kind == "unitary_matrices":
        return math.factorial(spec.n) ** spec.k
    return None


def _numbered_algebra(k: int) -> Algebra:
    return Algebra([str(i + 1) for i in range(k)])


def _require_budget(required: int, budget: int) -> None:
    if required > budget:
        raise BudgetExceededError(required, budget)


def _guard(spec: EnumSpec, budget: int) -> None:
    size = space_size(spec)
    if size is not None:
        _require_budget(size, budget)


# --- raw enumerators (mask tuples; library objects are built only at yield) ---


def _iter_vector_masks(n: int, k: int) -> Iterator[tuple[int, ...]]:
    yield from product(range(1 << k), repeat=n)


def _iter_stochastic_masks(n: int, k: int) -> Iterator[tuple[int, ...]]:
    for assign in product(range(n), repeat=k):
        masks = [0] * n
        for bit, slot in enumerate(assign):
            masks[slot] |= 1 << bit
        yield tuple(masks)


def _iter_stochastic_matrix_masks(n: int, k: int) -> Iterator[tuple[int, ...]]:
    columns = list(_iter_stochastic_masks(n, k))
    for chosen in product(columns, repeat=n):
        yield tuple(chosen[j][i] for i in range(n) for j in range(n))


def _iter_unitary_masks(n: int, k: int) -> Iterator[tuple[int, ...]]:
    perms = list(permutations(range(n)))
    for assign in product(perms, repeat=k):
        masks = [0] * (n * n)
        for bit, perm in enumerate(assign):
            for j, i in enumerate(perm):
                masks[i * n + j] |= 1 << bit
        yield tuple(masks)


def _iter_symmetric_stochastic_masks(n: int, k: int) -> Iterator[tuple[int, ...]]:
    involutions = [p for p in permutations(range(n)) if all(p[p[i]] == i for i in range(n))]
    for assign in product(involutions, repeat=k):
        masks = [0] * (n * n)
        for bit, perm in enumerate(assign):
            for j, i in enumerate(perm):
                masks[i * n + j] |= 1 << bit
        yield tuple(masks)


def _unit_vector_masks(n: int, k: int) -> list[tuple[int, ...]]:
    full = (1 << k) - 1
    return [v for v in _iter_vector_masks(n, k) if _or_all(v) == full]


def _iter_orthonormal_sets(
    n: int, k: int, budget: int, *, stochastic_only: bool = False
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All nonempty orthonormal families, DFS over an indexed vector list.

    Yields index-increasing tuples, so each family appears exactly once.
    Node visits count against the budget.
    """
    if stochastic_only:
        units = list(_iter_stochastic_masks(n, k))
    else:
        units = _unit_vector_masks(n, k)
    visited = 0

    def extend(start: int, chosen: list[tuple[int, ...]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        nonlocal visited
        for idx in range(start, len(units)):
            cand = units[idx]
            if any(_inner(cand, prev) for prev in chosen):
                continue
            visited += 1
            if visited > budget:
                raise BudgetExceededError(None, budget)
            chosen.append(cand)
            yield tuple(chosen)
            yield from extend(idx + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


def enumerate_objects(spec: EnumSpec, budget: int = DEFAULT_BUDGET):
    """Exhaustive, duplicate-free stream of domain objects for ``spec``."""
    _guard(spec, budget)
    alg = _numbered_algebra(spec.k)
    n = spec.n
    if spec.kind == "all_vectors":
        for m in _iter_vector_masks(n, spec.k):
            yield BVec(m, alg)
    elif spec.kind == "stochastic_vectors":
        for m in _iter_stochastic_masks(n, spec.k):
            yield BVec(m, alg)
    elif spec.kind == "stochastic_matrices":
        for m in _iter_stochastic_matrix_masks(n, spec.k):
            yield BMatrix(n, n, m, alg)
    elif spec.kind == "unitary_matrices":
        for m in _iter_unitary_masks(n, spec.k):
            yield BMatrix(n, n, m, alg)
    else:
        for fam in _iter_orthonormal_sets(n, spec.k, budget):
            yield [BVec(v, alg) for v in fam]


# --- naive mask arithmetic (independent of the kernels and of bvec/bmatrix) ---


def _or_all(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def _inner(a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc |= x & y
    return acc


def _is_orthovector(v: Sequence[int]) -> bool:
    seen = 0
    for m in v:
        if m & seen:
            return False
        seen |= m
    return True


def _is_stochastic_vec(v: Sequence[int], full: int) -> bool:
    return _is_orthovector(v) and _or_all(v) == full


def _matmul(n: int, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            acc = 0
            for t in range(n):
                acc |= a[i * n + t] & b[t * n + j]
            out[i * n + j] = acc
    return tuple(out)


def _matvec(n: int, a: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(_or_all(a[i * n + j] & v[j] for j in range(n)) for i in range(n))


def _transpose(n: int, a: Sequence[int]) -> tuple[int, ...]:
    return tuple(a[j * n + i] for i in range(n) for j in range(n))


def _identity_masks(n: int, full: int) -> tuple[int, ...]:
    out = [0] * (n * n)
    for i in range(n):
        out[i * n + i] = full
    return tuple(out)


def _trace(n: int, a: Sequence[int]) -> int:
    return _or_all(a[i * n + i] for i in range(n))


def _scaled_sum(vectors: Sequence[Sequence[int]], coeffs: Sequence[int], n: int) -> tuple[int, ...]:
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        for i in range(n):
            out[i] |= c & v[i]
    return tuple(out)


def _is_generating(vectors: Sequence[Sequence[int]], n: int, k: int) -> bool:
    image = set()
    for coeffs in product(range(1 << k), repeat=len(vectors)):
        image.add(_scaled_sum(vectors, coeffs, n))
    return len(image) == 1 << (k * n)


def _is_orthonormal_family(vectors: Sequence[Sequence[int]], full: int) -> bool:
    for i, v in enumerate(vectors):
        if _or_all(v) != full:
            return False
        for w in vectors[i + 1 :]:
            if _inner(v, w):
                return False
    return True


def _fmt_vec(v: Sequence[int], alg: Algebra) -> str:
    return str(BVec(tuple(v), alg))


def _fmt_mat(n: int, a: Sequence[int], alg: Algebra) -> str:
    rows = "; ".join(
        " ".join(str(alg.from_mask(a[i * n + j])) for j in range(n)) for i in range(n)
    )
    return f"[{rows}]"


def _ok(theorem: str, spec: EnumSpec, checked: int) -> Verdict:
    return Verdict(theorem=theorem, n=spec.n, k=spec.k, passed=True, checked=checked)


def _fail(theorem: str, spec: EnumSpec, checked: int, counterexample: str) -> Verdict:
    return Verdict(
        theorem=theorem, n=spec.n, k=spec.k, passed=False,
        checked=checked, counterexample=counterexample,
    )


# --- theorem checks ---


def _check_norm(spec: EnumSpec, budget: int) -> Verdict:
    """Norm laws and the inner-product axioms, over all vector pairs and scalars."""
    n, k = spec.n, spec.k
    vec_count = 1 << (k * n)
    _require_budget(vec_count * vec_count * (1 << k), budget)
    alg = _numbered_algebra(k)
    vectors = list(_iter_vector_masks(n, k))
    checked = 0
    for a in vectors:
        na = _or_all(a)
        if (_inner(a, a) == 0) != (a == (0,) * n):
            return _fail("NORM", spec, checked, f"definiteness fails at {_fmt_vec(a, alg)}")
        for b in vectors:
            nb = _or_all(b)
            ab = _inner(a, b)
            if _inner(b, a) != ab:
                return _fail("NORM", spec, checked, f"symmetry fails at {_fmt_vec(a, alg)}, {_fmt_vec(b, alg)}")
            if _or_all(x | y for x, y in zip(a, b)) != na | nb:
                return _fail("NORM", spec, checked, f"norm of sum fails at {_fmt_vec(a, alg)}, {_fmt_vec(b, alg)}")
            if ab & ~(na & nb):
                return _fail("NORM", spec, checked, f"norm bound fails at {_fmt_vec(a, alg)}, {_fmt_vec(b, alg)}")
            if _is_orthovector(a) and _is_orthovector(b) and na == nb:
                if (ab == (na & nb)) != (a == b):
                    return _fail(
                        "NORM", spec, checked,
                        f"orthovector equality law fails at {_fmt_vec(a, alg)}, {_fmt_vec(b, alg)}",
                    )
            for c in range(1 << k):
                checked += 1
                ca = tuple(c & x for x in a)
                cb = tuple(c & y for y in b)
                if _or_all(ca) != c & na:
                    return _fail("NORM", spec, checked, f"scaled norm fails at c={c}, a={_fmt_vec(a, alg)}")
                if _inner(ca, b) != c & ab or _inner(ca, b) != _inner(a, cb):
                    return _fail("NORM", spec, checked, f"scalar slide fails at c={c}, a={_fmt_vec(a, alg)}")
                summed = tuple(x | y for x, y in zip(ca, b))
                if _inner(summed, b) != (c & ab) | nb:
                    return _fail("NORM", spec, checked, f"bilinearity fails at c={c}, a={_fmt_vec(a, alg)}")
    return _ok("NORM", spec, checked)


def _check_duality(spec: EnumSpec, budget: int) -> Verdict:
    """Orthonormal family is a basis iff its transposed family is orthonormal."""
    n, k = spec.n, spec.k
    alg = _numbered_algebra(k)
    full = alg._full
    checked = 0
    for fam in _iter_orthonormal_sets(n, k, budget):
        checked += 1
        transposed = [tuple(v[i] for v in fam) for i in range(n)]
        dual_ortho = _is_orthonormal_family(transposed, full)
        generating = _is_generating(fam, n, k)
        if generating != dual_ortho:
            return _fail(
                "DUALITY", spec, checked,
                f"{[_fmt_vec(v, alg) for v in fam]}: generating={generating}, dual orthonormal={dual_ortho}",
            )
    return _ok("DUALITY", spec, checked)


def _check_descent(spec: EnumSpec, budget: int) -> Verdict:
    """Orthogonality of stochastic pairs matches existence of the short vector."""
    n, k = spec.n, spec.k
    if n < 2:
        raise PreconditionError("descent lives in dimension >= 2")
    stoch = list(_iter_stochastic_masks(n, k))
    short = list(_iter_stochastic_masks(n - 1, k))
    _require_budget(len(stoch) ** 2 * len(short), budget)
    alg = _numbered_algebra(k)
    full = alg._full
    checked = 0
    for a in stoch:
        for b in stoch:
            checked += 1
            orth = _inner(a, b) == 0
            exists = any(
                all(b[i] == c[i] & (a[i] ^ full) for i in range(n - 1)) for c in short
            )
            if orth != exists:
                return _fail(
                    "DESCENT", spec, checked,
                    f"a={_fmt_vec(a, alg)} b={_fmt_vec(b, alg)}: orthogonal={orth}, witness={exists}",
                )
            if orth:
                c = tuple((b[n - 1] & a[i]) | b[i] for i in range(n - 1))
                if not _is_stochastic_vec(c, full):
                    return _fail("DESCENT", spec, checked, f"constructed c not stochastic at a={_fmt_vec(a, alg)}")
                if any(b[i] != c[i] & (a[i] ^ full) for i in range(n - 1)):
                    return _fail("DESCENT", spec, checked, f"constructed c misses b at a={_fmt_vec(a, alg)}")
    return _ok("DESCENT", spec, checked)


def _check_basis_upbound(spec: EnumSpec, budget: int) -> Verdict:
    """No stochastic orthonormal family exceeds the dimension."""
    n, k = spec.n, spec.k
    alg = _numbered_algebra(k)
    checked = 0
    for fam in _iter_orthonormal_sets(n, k, budget, stochastic_only=True):
        checked += 1
        if len(fam) > n:
            return _fail(
                "BASIS_UPBOUND", spec, checked,
                f"{len(fam)} orthonormal stochastic vectors in dimension {n}: {[_fmt_vec(v, alg) for v in fam]}",
            )
    return _ok("BASIS_UPBOUND", spec, checked)


def _check_dimension(spec: EnumSpec, budget: int) -> Verdict:
    """Every orthonormal generating family has exactly n members."""
    n, k = spec.n, spec.k
    alg = _numbered_algebra(k)
    checked = 0
    found_basis = False
    for fam in _iter_orthonormal_sets(n, k, budget):
        checked += 1
        if _is_generating(fam, n, k):
            found_basis = True
            if len(fam) != n:
                return _fail(
                    "DIMENSION", spec, checked,
                    f"basis of cardinality {len(fam)} != {n}: {[_fmt_vec(v, alg) for v in fam]}",
                )
    if not found_basis:
        return _fail("DIMENSION", spec, checked, "no orthonormal basis found at all (enumeration bug)")
    return _ok("DIMENSION", spec, checked)


def _check_dimcor2(spec: EnumSpec, budget: int) -> Verdict:
    """An orthonormal family is generating exactly when it has n members."""
    n, k = spec.n, spec.k
    alg = _numbered_algebra(k)
    checked = 0
    for fam in _iter_orthonormal_sets(n, k, budget):
        checked += 1
        if (len(fam) == n) != _is_generating(fam, n, k):
            return _fail(
                "DIMCOR2", spec, checked,
                f"cardinality {len(fam)} vs generating mismatch: {[_fmt_vec(v, alg) for v in fam]}",
            )
    return _ok("DIMCOR2", spec, checked)


def _check_incomplete(spec: EnumSpec, budget: int) -> Verdict:
    """Every short stochastic orthonormal family completes to a basis."""
    n, k = spec.n, spec.k
    alg = _numbered_algebra(k)
    stoch = list(_iter_stochastic_masks(n, k))
    checked = 0

    def completes(fam: list[tuple[int, ...]]) -> bool:
        if len(fam) == n:
            return _is_generating(fam, n, k)
        return any(
            completes(fam + [v])
            for v in stoch
            if all(_inner(v, w) == 0 for w in fam)
        )

    for fam in _iter_orthonormal_sets(n, k, budget, stochastic_only=True):
        if len(fam) >= n:
            continue
        checked += 1
        if not completes(list(fam)):
            return _fail(
                "INCOMPLETE", spec, checked,
                f"no completion for {[_fmt_vec(v, alg) for v in fam]}",
            )
    return _ok("INCOMPLETE", spec, checked)


def _check_inverse(spec: EnumSpec, budget: int) -> Verdict:
    """Bijectivity, unitarity, column-basis and row-basis stay equivalent."""
    n, k = spec.n, spec.k
    mat_count = 1 << (k * n * n)
    vec_count = 1 << (k * n)
    _require_budget(mat_count * vec_count, budget)
    alg = _numbered_algebra(k)
    full = alg._full
    vectors = list(_iter_vector_masks(n, k))
    ident = _identity_masks(n, full)
    checked = 0
    for flat in product(range(1 << k), repeat=n * n):
        checked += 1
        at = _transpose(n, flat)
        bijective = len({_matvec(n, flat, v) for v in vectors}) == vec_count
        unitary = _matmul(n, flat, at) == ident and _matmul(n, at, flat) == ident
        cols = [tuple(flat[i * n + j] for i in range(n)) for j in range(n)]
        rows = [tuple(flat[i * n + j] for j in range(n)) for i in range(n)]
        cols_basis = _is_orthonormal_family(cols, full) and _is_generating(cols, n, k)
        rows_basis = _is_orthonormal_family(rows, full) and _is_generating(rows, n, k)
        if not bijective == unitary == cols_basis == rows_basis:
            return _fail(
                "INVERSE", spec, checked,
                f"{_fmt_mat(n, flat, alg)}: bijective={bijective} unitary={unitary} "
                f"cols={cols_basis} rows={rows_basis}",
            )
    return _ok("INVERSE", spec, checked)


def _check_stoinv(spec: EnumSpec, budget: int) -> Verdict:
    """Invariant stochastic vector exists exactly when the trace is one."""
    n, k = spec.n, spec.k
    _guard(EnumSpec(n, k, "stochastic_matrices"), budget)
    alg = _numbered_algebra(k)
    full = alg._full
    stoch_vecs = list(_iter_stochastic_masks(n, k))
    checked = 0
    for a in _iter_stochastic_matrix_masks(n, k):
        checked += 1
        has_invariant = any(_matvec(n, a, b) == b for b in stoch_vecs)
        if has_invariant != (_trace(n, a) == full):
            return _fail("STOINV", spec, checked, _fmt_mat(n, a, alg))
    return _ok("STOINV", spec, checked)


def _check_oddinv(spec: EnumSpec, budget: int) -> Verdict:
    """Symmetric stochastic matrices in odd dimension always have trace one."""
    n, k = spec.n, spec.k
    if n % 2 == 0:
        raise PreconditionError("this statement concerns odd dimensions")
    involution_count = sum(
        1 for p in permutations(range(n)) if all(p[p[i]] == i for i in range(n))
    )
    _require_budget(involution_count**k, budget)
    alg = _numbered_algebra(k)
    full = alg._full
    checked = 0
    for a in _iter_symmetric_stochastic_masks(n, k):
        checked += 1
        if _trace(n, a) != full:
            return _fail("ODDINV", spec, checked, _fmt_mat(n, a, alg))
    return _ok("ODDINV", spec, checked)


def _block_form(n: int, d: Sequence[int], full: int) -> bool:
    if d[0] != full:
        return False
    return all(d[j] == 0 for j in range(1, n)) and all(d[i * n] == 0 for i in range(1, n))


def _check_unitreduce(spec: EnumSpec, budget: int) -> Verdict:
    """Unitary families reduce simultaneously exactly when joint trace is one.

    Reducibility is decided by searching every unitary conjugator; pairs are
    covered as well as singletons when the budget allows the cubic sweep.
    """
    n, k = spec.n, spec.k
    unit_count = math.factorial(n) ** k
    _require_budget(unit_count * unit_count, budget)
    alg = _numbered_algebra(k)
    full = alg._full
    unitaries = list(_iter_unitary_masks(n, k))
    checked = 0

    def reducible(mats: list[tuple[int, ...]]) -> bool:
        for b in unitaries:
            bt = _transpose(n, b)
            if all(_block_form(n, _matmul(n, bt, _matmul(n, m, b)), full) for m in mats):
                return True
        return False

    def joint_tr(mats: list[tuple[int, ...]]) -> int:
        acc = 0
        for i in range(n):
            d = full
            for m in mats:
                d &= m[i * n + i]
            acc |= d
        return acc

    for a in unitaries:
        checked += 1
        if reducible([a]) != (joint_tr([a]) == full):
            return _fail("UNITREDUCE", spec, checked, _fmt_mat(n, a, alg))
    if unit_count**3 <= budget:
        for a in unitaries:
            for b in unitaries:
                checked += 1
                if reducible([a, b]) != (joint_tr([a, b]) == full):
                    return _fail(
                        "UNITREDUCE", spec, checked,
                        f"pair {_fmt_mat(n, a, alg)}, {_fmt_mat(n, b, alg)}",
                    )
    return _ok("UNITREDUCE", spec, checked)


def _atoms_of(n: int, a: Sequence[int], full: int) -> list[tuple[int, tuple[int, ...]]]:
    """All nonzero column-selection meets with their selections; no pruning."""
    out = []
    for selection in product(range(n), repeat=n):
        m = full
        for j, i in enumerate(selection):
            m &= a[i * n + j]
        if m:
            out.append((m, selection))
    return out


def _atoms_properties(n: int, a: Sequence[int], full: int) -> str | None:
    atoms = _atoms_of(n, a, full)
    joined = 0
    for idx, (m, _) in enumerate(atoms):
        if any(m & m2 for m2, _ in atoms[:idx]):
            return "overlapping atoms"
        joined |= m
    if joined != full:
        return "atoms do not cover one"
    for i in range(n):
        for j in range(n):
            rebuilt = _or_all(m for m, _ in atoms if m & ~a[i * n + j] == 0)
            if rebuilt != a[i * n + j]:
                return f"entry ({i},{j}) is not the join of its atoms"
    for m, selection in atoms:
        for j in range(n):
            target = selection[j]
            scaled = [m if t == j else 0 for t in range(n)]
            expect = tuple(m if t == target else 0 for t in range(n))
            if _matvec(n, a, scaled) != expect:
                return f"atom action fails at column {j}"
    return None


def _check_atoms(spec: EnumSpec, budget: int) -> Verdict:
    """Atoms partition one, rebuild every entry, and drive the slot action."""
    n, k = spec.n, spec.k
    _guard(EnumSpec(n, k, "stochastic_matrices"), budget)
    alg = _numbered_algebra(k)
    full = alg._full
    checked = 0
    for a in _iter_stochastic_matrix_masks(n, k):
        checked += 1
        problem = _atoms_properties(n, a, full)
        if problem:
            return _fail("ATOMS", spec, checked, f"{problem} in {_fmt_mat(n, a, alg)}")
    return _ok("ATOMS", spec, checked)


def _naive_power(n: int, a: Sequence[int], e: int, full: int) -> tuple[int, ...]:
    cur = _identity_masks(n, full)
    for _ in range(e):
        cur = _matmul(n, cur, a)
    return cur


def _check_power(spec: EnumSpec, budget: int) -> Verdict:
    """The stochastic power identity, and its unitary sharpening."""
    n, k = spec.n, spec.k
    _guard(EnumSpec(n, k, "stochastic_matrices"), budget)
    alg = _numbered_algebra(k)
    full = alg._full
    lcm = math.lcm(*range(1, n + 1))
    checked = 0
    for a in _iter_stochastic_matrix_masks(n, k):
        checked += 1
        low = _naive_power(n, a, n - 1, full)
        high = low
        for _ in range(lcm):
            high = _matmul(n, high, a)
        if high != low:
            return _fail("POWER", spec, checked, _fmt_mat(n, a, alg))
    for a in _iter_unitary_masks(n, k):
        checked += 1
        if _naive_power(n, a, lcm, full) != _identity_masks(n, full):
            return _fail("POWER", spec, checked, f"unitary {_fmt_mat(n, a, alg)}")
    return _ok("POWER", spec, checked)


def _brute_period_exponent(n: int, a: Sequence[int]) -> tuple[int, int]:
    """(exponent, period) straight from the definitions.

    Horizon covers the worst case for any Boolean matrix; the period is the
    smallest p admitting any witness exponent, then the exponent is the
    smallest witness for that p.
    """
    horizon = (n - 1) ** 2 + 1 + math.lcm(*range(1, n + 1))
    powers = [tuple(a)]
    for _ in range(horizon):
        powers.append(_matmul(n, powers[-1], a))
    for p in range(1, horizon + 1):
        for e in range(1, horizon - p + 2):
            if powers[e - 1 + p] == powers[e - 1]:
                return e, p
    raise AssertionError("no repeat within the guaranteed horizon")


def _check_period_divides(spec: EnumSpec, budget: int) -> Verdict:
    """Stochastic exponent and period bounds, from definition-level search."""
    n, k = spec.n, spec.k
    _guard(EnumSpec(n, k, "stochastic_matrices"), budget)
    alg = _numbered_algebra(k)
    lcm = math.lcm(*range(1, n + 1))
    checked = 0
    for a in _iter_stochastic_matrix_masks(n, k):
        checked += 1
        e, p = _brute_period_exponent(n, a)
        if lcm % p != 0 or e > max(n - 1, 1):
            return _fail("PERIOD_DIVIDES", spec, checked, f"e={e}, p={p} for {_fmt_mat(n, a, alg)}")
    return _ok("PERIOD_DIVIDES", spec, checked)


THEOREMS: dict[str, Callable[[EnumSpec, int], Verdict]] = {
    "NORM": _check_norm,
    "DUALITY": _check_duality,
    "DESCENT": _check_descent,
    "BASIS_UPBOUND": _check_basis_upbound,
    "DIMENSION": _check_dimension,
    "DIMCOR2": _check_dimcor2,
    "INCOMPLETE": _check_incomplete,
    "INVERSE": _check_inverse,
    "STOINV": _check_stoinv,
    "ODDINV": _check_oddinv,
    "UNITREDUCE": _check_unitreduce,
    "ATOMS": _check_atoms,
    "POWER": _check_power,
    "PERIOD_DIVIDES": _check_period_divides,
}

# Enumeration kind that dominates each check, for building an EnumSpec.
THEOREM_KINDS: dict[str, str] = {
    "NORM": "all_vectors",
    "DUALITY": "orthonormal_sets",
    "DESCENT": "stochastic_vectors",
    "BASIS_UPBOUND": "orthonormal_sets",
    "DIMENSION": "orthonormal_sets",
    "DIMCOR2": "orthonormal_sets",
    "INCOMPLETE": "orthonormal_sets",
    "INVERSE": "all_vectors",
    "STOINV": "stochastic_matrices",
    "ODDINV": "stochastic_matrices",
    "UNITREDUCE": "unitary_matrices",
    "ATOMS": "stochastic_matrices",
    "POWER": "stochastic_matrices",
    "PERIOD_DIVIDES": "stochastic_matrices",
}


def brute_check(theorem: str, spec: EnumSpec, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Exhaustively verify one registered theorem at the given scale."""
    try:
        check = THEOREMS[theorem]
    except KeyError:
        raise PreconditionError(
            f"unknown theorem {theorem!r}; registered: {', '.join(sorted(THEOREMS))}"
        ) from None
    return check(spec, budget)


# --- randomized sweeps for scales the exhaustive checks cannot reach ---


def _sample_norm(rng: random.Random, alg: Algebra, n: int) -> str | None:
    full = alg._full
    a = tuple(rng.randrange(full + 1) for _ in range(n))
    b = tuple(rng.randrange(full + 1) for _ in range(n))
    c = rng.randrange(full + 1)
    if _or_all(c & x for x in a) != c & _or_all(a):
        return f"scaled norm at c={c}, a={a}"
    if _or_all(x | y for x, y in zip(a, b)) != _or_all(a) | _or_all(b):
        return f"norm of sum at {a}, {b}"
    if _inner(a, b) & ~(_or_all(a) & _or_all(b)):
        return f"norm bound at {a}, {b}"
    if _inner(a, b) != _inner(b, a):
        return f"symmetry at {a}, {b}"
    return None


def _sample_descent(rng: random.Random, alg: Algebra, n: int) -> str | None:
    full = alg._full
    a, b = rand.random_orthogonal_stochastic_pair(rng, alg, n)
    c = tuple((b.masks[n - 1] & a.masks[i]) | b.masks[i] for i in range(n - 1))
    if not _is_stochastic_vec(c, full):
        return f"constructed c not stochastic for a={a}, b={b}"
    if any(b.masks[i] != c[i] & (a.masks[i] ^ full) for i in range(n - 1)):
        return f"constructed c misses b for a={a}, b={b}"
    return None


def _sample_stoinv(rng: random.Random, alg: Algebra, n: int) -> str | None:
    full = alg._full
    a = rand.random_stochastic_matrix(rng, alg, n)
    has = any(
        _matvec(n, a.masks, b) == b for b in _iter_stochastic_masks(n, alg.atom_count)
    )
    if has != (_trace(n, a.masks) == full):
        return _fmt_mat(n, a.masks, alg)
    return None


def _sample_oddinv(rng: random.Random, alg: Algebra, n: int) -> str | None:
    if n % 2 == 0:
        raise PreconditionError("this statement concerns odd dimensions")
    a = rand.random_symmetric_stochastic(rng, alg, n)
    if _trace(n, a.masks) != alg._full:
        return _fmt_mat(n, a.masks, alg)
    return None


def _sample_atoms(rng: random.Random, alg: Algebra, n: int) -> str | None:
    a = rand.random_stochastic_matrix(rng, alg, n)
    problem = _atoms_properties(n, a.masks, alg._full)
    if problem:
        return f"{problem} in {_fmt_mat(n, a.masks, alg)}"
    return None


def _sample_power(rng: random.Random, alg: Algebra, n: int) -> str | None:
    full = alg._full
    lcm = math.lcm(*range(1, n + 1))
    a = rand.random_stochastic_matrix(rng, alg, n)
    low = _naive_power(n, a.masks, n - 1, full)
    high = low
    for _ in range(lcm):
        high = _matmul(n, high, a.masks)
    if high != low:
        return _fmt_mat(n, a.masks, alg)
    u = rand.random_unitary(rng, alg, n)
    if _naive_power(n, u.masks, lcm, full) != _identity_masks(n, full):
        return f"unitary {_fmt_mat(n, u.masks, alg)}"
    return None


def _sample_period_divides(rng: random.Random, alg: Algebra, n: int) -> str | None:
    lcm = math.lcm(*range(1, n + 1))
    a = rand.random_stochastic_matrix(rng, alg, n)
    e, p = _brute_period_exponent(n, a.masks)
    if lcm % p != 0 or e > max(n - 1, 1):
        return f"e={e}, p={p} for {_fmt_mat(n, a.masks, alg)}"
    return None


def _sample_incomplete(rng: random.Random, alg: Algebra, n: int) -> str | None:
    m = rng.randrange(1, n)
    fam = [v.masks for v in rand.random_stochastic_orthonormal_set(rng, alg, n, m)]
    stoch = list(_iter_stochastic_masks(n, alg.atom_count))

    def completes(current: list[tuple[int, ...]]) -> bool:
        if len(current) == n:
            return True
        return any(
            completes(current + [v])
            for v in stoch
            if all(_inner(v, w) == 0 for w in current)
        )

    if not completes(list(fam)):
        return f"no completion for a family of {m} in dimension {n}"
    return None


SAMPLING_THEOREMS: dict[str, Callable[[random.Random, Algebra, int], str | None]] = {
    "NORM": _sample_norm,
    "DESCENT": _sample_descent,
    "STOINV": _sample_stoinv,
    "ODDINV": _sample_oddinv,
    "ATOMS": _sample_atoms,
    "POWER": _sample_power,
    "PERIOD_DIVIDES": _sample_period_divides,
    "INCOMPLETE": _sample_incomplete,
}


def sample_check(theorem: str, spec: EnumSpec, samples: int, seed: int = 0) -> Verdict:
    """Randomized verification for scales beyond exhaustive reach."""
    if theorem not in THEOREMS:
        raise PreconditionError(
            f"unknown theorem {theorem!r}; registered: {', '.join(sorted(THEOREMS))}"
        )
    try:
        sampler = SAMPLING_THEOREMS[theorem]
    except KeyError:
        raise PreconditionError(f"{theorem} supports exhaustive checking only") from None
    rng = random.Random(seed)
    alg = _numbered_algebra(spec.k)
    for i in range(samples):
        counterexample = sampler(rng, alg, spec.n)
        if counterexample is not None:
            return Verdict(
                theorem=theorem, n=spec.n, k=spec.k, passed=False,
                checked=i + 1, counterexample=counterexample, mode="sampled",
            )
    return Verdict(theorem=theorem, n=spec.n, k=spec.k, passed=True, checked=samples, mode="sampled")
