import random
from itertools import product

import pytest

from boolmat import (
    BMatrix,
    BVec,
    NotInvertibleError,
    PreconditionError,
    ShapeError,
    adjoint,
    apply,
    block_diag,
    delta,
    find_invariant_stochastic,
    identity,
    invert,
    is_basis,
    is_stochastic_matrix,
    is_unitary,
    joint_trace,
    make_algebra,
    matrix_leq,
    mul,
    power,
    reduce_by_orthogonal_set,
    reduce_unitary,
    reflection_from,
    trace,
    zero_vec,
)
from boolmat import rand as br
from boolmat.bvec import inner

from conftest import mat, vec


def all_square_matrices(alg, n):
    for masks in product(range(alg._full + 1), repeat=n * n):
        yield BMatrix(n, n, masks, alg)


def random_any_matrix(rng, alg, n):
    return BMatrix(n, n, tuple(rng.randrange(alg._full + 1) for _ in range(n * n)), alg)


# --- product and apply ---


def test_identity_neutral(p5):
    rng = random.Random(3)
    a = br.random_stochastic_matrix(rng, p5, 4)
    i4 = identity(p5, 4)
    assert mul(i4, a) == a
    assert mul(a, i4) == a


def test_reflection_product_is_not_reflection(p3):
    r1 = mat(p3, """
        {} * {}
        *  {} {}
        {} {} *
    """)
    r2 = mat(p3, """
        * {} {}
        {} {} *
        {} * {}
    """)
    expected = mat(p3, """
        {} {} *
        *  {} {}
        {} * {}
    """)
    got = mul(r1, r2)
    assert got == expected
    assert adjoint(got) != got


def test_apply_is_column_action(p3):
    a = mat(p3, """
        {1} {2,3}
        {2} {1}
    """)
    v = vec(p3, "({3},{1,2})")
    assert apply(a, v) == vec(p3, "({2},{1})")


def test_dimension_mismatch(p3):
    with pytest.raises(ShapeError):
        mul(identity(p3, 2), identity(p3, 3))
    with pytest.raises(ShapeError):
        apply(identity(p3, 2), vec(p3, "({1},{2},{3})"))


# --- adjoint, order ---


def test_adjoint_involution(p5):
    rng = random.Random(5)
    a = random_any_matrix(rng, p5, 4)
    assert adjoint(adjoint(a)) == a


def test_adjoint_rows_are_dual_basis(p3):
    a1, a2, a3 = p3.atom(0), p3.atom(1), p3.atom(2)
    u = mat(p3, """
        {1} {3}   {2}
        {2} {}    {1,3}
        {3} {1,2} {}
    """)
    assert is_basis(u.column_list())
    assert is_basis(adjoint(u).column_list())
    assert adjoint(u).column_list() == u.row_list()


def test_matrix_leq(p3):
    zero = BMatrix(2, 2, (0, 0, 0, 0), p3)
    a = mat(p3, """
        {1} {2}
        {}  {3}
    """)
    assert matrix_leq(zero, a)
    assert not matrix_leq(a, zero)
    assert matrix_leq(a, a)


def test_matrix_order_matches_bilinear_form():
    alg = make_algebra(["1"])
    mats = list(all_square_matrices(alg, 2))
    vectors = [BVec(m, alg) for m in product(range(2), repeat=2)]
    for a in mats:
        for b in mats:
            entrywise = matrix_leq(a, b)
            form = all(
                inner(apply(a, x), y) <= inner(apply(b, x), y)
                for x in vectors
                for y in vectors
            )
            assert entrywise == form


# --- stochastic / unitary predicates ---


def test_collapse_matrix_is_stochastic(p3):
    a = mat(p3, """
        * *
        {} {}
    """)
    assert is_stochastic_matrix(a)
    assert not is_unitary(a)
    with pytest.raises(NotInvertibleError):
        invert(a)


def test_identity_is_stochastic_and_unitary(p3):
    assert is_stochastic_matrix(identity(p3, 3))
    assert is_unitary(identity(p3, 3))


def test_diagonal_partial_not_stochastic(p2):
    a = mat(p2, """
        {1} {}
        {}  {2}
    """)
    assert not is_stochastic_matrix(a)


def test_stochastic_requires_square(p3):
    with pytest.raises(ShapeError):
        is_stochastic_matrix(BMatrix(1, 2, (0, 0), p3))


def test_stochastic_definition_equivalence():
    # columns-stochastic is the same as A*A >= I and AA* <= I
    alg = make_algebra(["1", "2"])
    ident = identity(alg, 2)
    for a in all_square_matrices(alg, 2):
        at = adjoint(a)
        definition = matrix_leq(ident, mul(at, a)) and matrix_leq(mul(a, at), ident)
        assert definition == is_stochastic_matrix(a)


def test_partition_built_unitary(p3):
    u = mat(p3, """
        {1} {3}   {2}
        {2} {}    {1,3}
        {3} {1,2} {}
    """)
    assert is_unitary(u)
    assert invert(u) == adjoint(u)


def test_permutation_matrices_unitary(p3):
    perm = mat(p3, """
        {} * {}
        {} {} *
        *  {} {}
    """)
    assert is_unitary(perm)


def test_unitary_iff_rows_and_columns_bases():
    rng = random.Random(11)
    alg = make_algebra(["1", "2", "3"])
    pool = [br.random_unitary(rng, alg, 3) for _ in range(20)]
    pool += [br.random_stochastic_matrix(rng, alg, 3) for _ in range(20)]
    pool += [random_any_matrix(rng, alg, 3) for _ in range(20)]
    for a in pool:
        unit = is_unitary(a)
        assert unit == (is_basis(a.column_list()) and is_basis(a.row_list()))
        if unit:
            assert mul(a, invert(a)) == identity(alg, 3)


def test_products_of_stochastic_are_stochastic():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randrange(2, 6)
        k = rng.randrange(1, 6)
        alg = make_algebra([str(i) for i in range(1, k + 1)])
        a = br.random_stochastic_matrix(rng, alg, n)
        b = br.random_stochastic_matrix(rng, alg, n)
        assert is_stochastic_matrix(mul(a, b))


@pytest.mark.parametrize("n,k", [(2, 2), (3, 1), (2, 1)])
def test_stochastic_iff_preserves_stochastic_exhaustive(n, k):
    alg = make_algebra([str(i) for i in range(1, k + 1)])
    stoch_vecs = [
        BVec(m, alg)
        for m in product(range(alg._full + 1), repeat=n)
        if BVec(m, alg).is_stochastic()
    ]
    for a in all_square_matrices(alg, n):
        preserves = all(apply(a, s).is_stochastic() for s in stoch_vecs)
        assert preserves == is_stochastic_matrix(a)


def test_involutive_implies_unitary_exhaustive():
    alg = make_algebra(["1", "2"])
    ident = identity(alg, 2)
    for a in all_square_matrices(alg, 2):
        if mul(a, a) == ident:
            assert is_unitary(a)


def test_symmetric_stochastic_squares_to_identity():
    rng = random.Random(17)
    for _ in range(50):
        n = rng.randrange(2, 6)
        alg = make_algebra([str(i) for i in range(1, rng.randrange(1, 5) + 1)])
        a = br.random_symmetric_stochastic(rng, alg, n)
        assert adjoint(a) == a
        assert mul(a, a) == identity(alg, n)
        assert is_unitary(a)


def test_unitary_preserves_lattice_structure():
    # invertible operators act as Boolean-algebra automorphisms componentwise
    rng = random.Random(19)
    alg = make_algebra(["1", "2", "3", "4"])
    for _ in range(30):
        u = br.random_unitary(rng, alg, 3)
        x = br.random_vector(rng, alg, 3)
        y = br.random_vector(rng, alg, 3)
        ux, uy = apply(u, x), apply(u, y)
        meet_xy = BVec(tuple(a & b for a, b in zip(x.masks, y.masks)), alg)
        comp_x = BVec(tuple(a ^ alg._full for a in x.masks), alg)
        assert apply(u, meet_xy) == BVec(tuple(a & b for a, b in zip(ux.masks, uy.masks)), alg)
        assert apply(u, comp_x) == BVec(tuple(a ^ alg._full for a in ux.masks), alg)


# --- traces ---


def test_trace_identity(p3):
    assert trace(identity(p3, 4)) == p3.one


def test_trace_cyclic_and_conjugation():
    rng = random.Random(23)
    alg = make_algebra(["1", "2", "3"])
    for _ in range(50):
        a = random_any_matrix(rng, alg, 3)
        b = random_any_matrix(rng, alg, 3)
        assert trace(mul(a, b)) == trace(mul(b, a))
        u = br.random_unitary(rng, alg, 3)
        assert trace(mul(u, mul(a, adjoint(u)))) == trace(a)


def test_joint_trace(p2):
    a = identity(p2, 2)
    b = mat(p2, """
        {1} {2}
        {2} {1}
    """)
    assert joint_trace([a, b]) == p2.parse("{1}")
    assert joint_trace([a]) == p2.one


# --- invariant vectors ---


def test_invariant_vector_of_worked_example(p5):
    a = mat(p5, """
        {1} {2}   {3}   {4}     {5}
        {2} {4,5} {}    {}      {1,3}
        {3} {}    {4,5} {1}     {2}
        {4} {}    {1}   {2,3,5} {}
        {5} {1,3} {2}   {}      {4}
    """)
    b = find_invariant_stochastic([a])
    assert b == vec(p5, "({1},{4,5},{},{2,3},{})")
    assert apply(a, b) == b


def test_no_invariant_when_trace_zero(p2):
    swap = mat(p2, """
        {} *
        *  {}
    """)
    assert trace(swap).is_zero
    assert find_invariant_stochastic([swap]) is None


def test_invariant_of_identity(p3):
    b = find_invariant_stochastic([identity(p3, 3)])
    assert b == vec(p3, "(*,{},{})")


def test_invariant_existence_iff_trace_one_exhaustive():
    alg = make_algebra(["1", "2"])
    stoch_vecs = [
        BVec(m, alg) for m in product(range(4), repeat=3) if BVec(m, alg).is_stochastic()
    ]
    count = 0
    for columns in product(stoch_vecs, repeat=3):
        a = BMatrix.from_columns(list(columns))
        count += 1
        b = find_invariant_stochastic([a])
        exists = any(apply(a, s) == s for s in stoch_vecs)
        assert (b is not None) == exists == (trace(a) == alg.one)
        if b is not None:
            assert apply(a, b) == b
    assert count == 729


def test_invariant_rejects_non_stochastic(p2):
    bad = mat(p2, """
        {1} {}
        {}  {2}
    """)
    with pytest.raises(PreconditionError):
        find_invariant_stochastic([bad])


def test_common_invariant_of_family():
    rng = random.Random(29)
    alg = make_algebra(["1", "2", "3"])
    for _ in range(50):
        mats = [br.random_stochastic_matrix(rng, alg, 4) for _ in range(3)]
        b = find_invariant_stochastic(mats)
        if b is None:
            assert joint_trace(mats) != alg.one
        else:
            assert all(apply(m, b) == b for m in mats)


# --- reflections ---


def test_reflection_matches_worked_example(p5):
    b = vec(p5, "({1},{},{},{2,3,5},{4})")
    expected = mat(p5, """
        {1}     {} {} {2,3,5} {4}
        {}      *  {} {}      {}
        {}      {} *  {}      {}
        {2,3,5} {} {} {1,4}   {}
        {4}     {} {} {}      {1,2,3,5}
    """)
    assert reflection_from(b) == expected


def test_reflection_from_delta_is_identity(p3):
    assert reflection_from(delta(p3, 4, 0)) == identity(p3, 4)


def test_reflection_squares_to_identity():
    rng = random.Random(31)
    for _ in range(50):
        n = rng.randrange(1, 7)
        alg = make_algebra([str(i) for i in range(1, rng.randrange(1, 6) + 1)])
        b = br.random_stochastic_vector(rng, alg, n)
        refl = reflection_from(b)
        assert adjoint(refl) == refl
        assert mul(refl, refl) == identity(alg, n)
        assert apply(refl, b) == delta(alg, n, 0)


def test_reflection_rejects_non_stochastic(p3):
    with pytest.raises(PreconditionError):
        reflection_from(vec(p3, "({1,2},{2,3})"))


# --- unitary reduction ---


def test_reduce_identity(p3):
    reductions = reduce_unitary([identity(p3, 4)])
    assert reductions is not None
    red = reductions[0]
    assert red.fixed_count == 1
    assert red.core == identity(p3, 3)
    assert red.reconstruct() == identity(p3, 4)


def test_reduce_refuses_stochastic_non_unitary(p3):
    collapse = mat(p3, """
        * *
        {} {}
    """)
    assert trace(collapse) == p3.one
    with pytest.raises(PreconditionError):
        reduce_unitary([collapse])


def test_reduce_none_when_trace_not_one(p2):
    swap = mat(p2, """
        {} *
        *  {}
    """)
    assert reduce_unitary([swap]) is None


def test_reduced_3x3_unitary_with_trace_one_is_symmetric():
    rng = random.Random(37)
    alg = make_algebra(["1", "2", "3", "4"])
    hits = 0
    for _ in range(300):
        u = br.random_unitary(rng, alg, 3)
        if trace(u) != alg.one:
            continue
        hits += 1
        reductions = reduce_unitary([u])
        core = reductions[0].core
        assert core.rows == 2 and is_unitary(core)
        assert mul(u, u) == identity(alg, 3)
        assert adjoint(u) == u
    assert hits > 5


def test_reduce_simultaneous_family():
    rng = random.Random(41)
    alg = make_algebra(["1", "2", "3"])
    # build a family sharing the invariant vector delta_1
    mats = []
    for _ in range(3):
        core = br.random_unitary(rng, alg, 3)
        mats.append(block_diag(alg, 1, core))
    reductions = reduce_unitary(mats)
    assert reductions is not None
    conj = reductions[0].conjugator
    for m, red in zip(mats, reductions):
        assert red.conjugator == conj
        assert red.reconstruct() == m


def test_reduction_block_materialization(p3):
    core = identity(p3, 2)
    d = block_diag(p3, 2, core)
    assert d == identity(p3, 4)
    empty = BMatrix(0, 0, (), p3)
    assert block_diag(p3, 3, empty) == identity(p3, 3)


def test_reduce_by_orthogonal_set_single_agrees(p5):
    a = mat(p5, """
        {1} {2}   {3}   {4}     {5}
        {2} {4,5} {}    {}      {1,3}
        {3} {}    {4,5} {1}     {2}
        {4} {}    {1}   {2,3,5} {}
        {5} {1,3} {2}   {}      {4}
    """)
    b = find_invariant_stochastic([a])
    single = reduce_by_orthogonal_set(a, [b])
    family = reduce_unitary([a])[0]
    assert single.fixed_count == 1
    assert single.conjugator == family.conjugator
    assert single.core == family.core
    assert single.reconstruct() == a


def test_reduce_by_orthogonal_set_full(p3):
    u = identity(p3, 3)
    invariants = [delta(p3, 3, i) for i in range(3)]
    red = reduce_by_orthogonal_set(u, invariants)
    assert red.fixed_count == 3
    assert red.core.rows == 0
    assert red.reconstruct() == u


def test_reduce_by_orthogonal_set_roundtrip():
    rng = random.Random(43)
    alg = make_algebra(["1", "2", "3"])
    for _ in range(30):
        core = br.random_unitary(rng, alg, 2)
        conj = br.random_unitary(rng, alg, 4)
        a = mul(conj, mul(block_diag(alg, 2, core), adjoint(conj)))
        invariants = [apply(conj, delta(alg, 4, 0)), apply(conj, delta(alg, 4, 1))]
        red = reduce_by_orthogonal_set(a, invariants)
        assert red.fixed_count >= 2
        assert is_unitary(red.conjugator)
        assert red.reconstruct() == a


def test_reduce_by_orthogonal_set_validations(p3):
    u = identity(p3, 3)
    with pytest.raises(PreconditionError):
        reduce_by_orthogonal_set(u, [])
    with pytest.raises(PreconditionError):
        reduce_by_orthogonal_set(u, [vec(p3, "({1,2},{2,3},{})")])
    swap = mat(p3, """
        {} * {}
        *  {} {}
        {} {} *
    """)
    with pytest.raises(PreconditionError):
        reduce_by_orthogonal_set(swap, [delta(p3, 3, 0)])
    # orthogonality violation
    with pytest.raises(PreconditionError):
        reduce_by_orthogonal_set(u, [delta(p3, 3, 0), delta(p3, 3, 0)])


# --- powers ---


def test_power_zero_is_identity(p3):
    rng = random.Random(47)
    a = br.random_stochastic_matrix(rng, p3, 3)
    assert power(a, 0) == identity(p3, 3)


def test_two_by_two_stochastic_cubes_to_itself():
    rng = random.Random(53)
    alg = make_algebra(["1", "2", "3", "4"])
    for _ in range(100):
        a = br.random_stochastic_matrix(rng, alg, 2)
        assert power(a, 3) == a


def test_three_by_three_unitary_sixth_power_identity():
    rng = random.Random(59)
    alg = make_algebra(["1", "2", "3", "4"])
    for _ in range(100):
        u = br.random_unitary(rng, alg, 3)
        assert power(u, 6) == identity(alg, 3)


def test_final_example_square(p3):
    a = mat(p3, """
        {2,3} {1} {}
        {1}   {2} {1}
        {}    {3} {2,3}
    """)
    expected = mat(p3, """
        *  {}    {1}
        {} {1,2} {}
        {} {3}   {2,3}
    """)
    assert power(a, 2) == expected
    assert power(a, 3) == a


def test_even_symmetric_counterexample_family():
    # block-swap symmetric stochastic matrices have zero trace
    rng = random.Random(61)
    alg = make_algebra(["1", "2", "3"])
    for half in (1, 2, 3):
        b = br.random_symmetric_stochastic(rng, alg, half)
        n = 2 * half
        masks = [0] * (n * n)
        for i in range(half):
            for j in range(half):
                masks[i * n + (half + j)] = b.masks[i * half + j]
                masks[(half + i) * n + j] = b.masks[i * half + j]
        swap = BMatrix(n, n, tuple(masks), alg)
        assert is_stochastic_matrix(swap)
        assert adjoint(swap) == swap
        assert trace(swap).is_zero
        assert find_invariant_stochastic([swap]) is None
