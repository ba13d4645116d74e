import random
from fractions import Fraction as Q

import pytest

from qlie.linalg import (
    EchelonBasis,
    Matrix,
    Subspace,
    associative_envelope,
    diagonalize_symmetric,
    dickson_radical,
    form_signature,
    is_definite,
    is_nilpotent_matrix,
    is_semisimple_matrix,
    jordan_chevalley,
    kernel,
    min_poly,
    poly_of_matrix,
    preimage_space,
    solve_linear,
    trace_product,
)
from qlie.poly import pdeg, pderiv, pgcd, pstr


def rand_matrix(rng, n, lo=-3, hi=3):
    return Matrix([[Q(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])


def test_matrix_arithmetic_roundtrip():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a * b == Matrix([[2, 1], [4, 3]])
    assert (a + b) - b == a
    assert (a * b).transpose() == b.transpose() * a.transpose()
    assert a ** 2 == a * a
    assert Matrix.identity(2) ** 5 == Matrix.identity(2)


def test_trace_product_matches_full_product():
    rng = random.Random(1)
    for _ in range(20):
        a = rand_matrix(rng, 4)
        b = rand_matrix(rng, 4)
        assert trace_product(a, b) == (a * b).trace()


def test_subspace_sum_complementary_lines():
    u = Subspace.span(2, [(Q(1), Q(0))])
    v = Subspace.span(2, [(Q(0), Q(1))])
    assert u.add(v) == Subspace.full(2)


def test_subspace_intersection_idempotent():
    v = Subspace.span(3, [(1, 2, 3), (0, 1, 1)])
    assert v.intersect(v) == v


def test_subspace_intersection_plane_line():
    # span{(1,1,0),(0,0,1)} meet span{(1,1,1)}: solving the joint linear
    # system by hand gives exactly the line through (1,1,1).
    a = Subspace.span(3, [(1, 1, 0), (0, 0, 1)])
    b = Subspace.span(3, [(1, 1, 1)])
    assert a.intersect(b) == b
    assert a.contains_space(b)


def test_subspace_dimension_formula_random():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 6)
        u = Subspace.span(n, [tuple(Q(rng.randint(-2, 2)) for _ in range(n))
                              for _ in range(rng.randint(0, n))])
        v = Subspace.span(n, [tuple(Q(rng.randint(-2, 2)) for _ in range(n))
                              for _ in range(rng.randint(0, n))])
        assert u.add(v).dim + u.intersect(v).dim == u.dim + v.dim


def test_subspace_equality_is_canonical():
    a = Subspace.span(2, [(1, 1), (1, -1)])
    b = Subspace.span(2, [(2, 0), (0, 3)])
    assert a == b and hash(a) == hash(b)


def test_echelon_basis_contains():
    eb = EchelonBasis(3)
    eb.insert((1, 2, 0))
    eb.insert((0, 0, 1))
    assert eb.contains((2, 4, 5))
    assert not eb.contains((1, 0, 0))


def test_solve_and_kernel():
    a = Matrix([[1, 2, 3], [0, 1, 1]])
    x = solve_linear(a, (Q(6), Q(2)))
    assert a.apply(x) == (Q(6), Q(2))
    assert solve_linear(Matrix([[1, 1], [1, 1]]), (Q(0), Q(1))) is None
    ker = kernel(a)
    assert len(ker) == 1
    assert a.apply(ker[0]) == (Q(0), Q(0))


def test_preimage_space():
    a = Matrix([[1, 0], [0, 1], [1, 1]])
    w = Subspace.span(3, [(1, 0, 1)])
    pre = preimage_space(a, w)
    assert pre == Subspace.span(2, [(1, 0)])


def test_min_poly_identity():
    m = min_poly(Matrix.identity(3))
    assert m == [Q(-1), Q(1)]  # t - 1


def test_min_poly_rotation_generator():
    m = min_poly(Matrix([[0, -1], [1, 0]]))
    assert m == [Q(1), Q(0), Q(1)]  # t^2 + 1


def test_min_poly_jordan_block():
    # Krylov by hand: e1, A e1 = e1 span a chain with (A-1)^2 = 0.
    m = min_poly(Matrix([[1, 1], [0, 1]]))
    assert m == [Q(1), Q(-2), Q(1)]  # (t-1)^2


def test_jordan_single_block():
    a = Matrix([[1, 1], [0, 1]])
    jp = jordan_chevalley(a)
    assert jp.semisimple == Matrix.identity(2)
    assert jp.nilpotent == Matrix([[0, 1], [0, 0]])


def test_jordan_semisimple_input():
    a = Matrix([[0, -1], [1, 0]])
    jp = jordan_chevalley(a)
    assert jp.semisimple == a
    assert jp.nilpotent.is_zero()


def check_jordan_invariants(a, jp):
    n = a.nrows
    s, nil = jp.semisimple, jp.nilpotent
    assert s + nil == a
    assert s * nil == nil * s
    ms = min_poly(s)
    assert pdeg(pgcd(ms, pderiv(ms))) == 0, f"S not semisimple: {pstr(ms)}"
    assert is_nilpotent_matrix(nil)
    # both parts are polynomials in a with zero constant term
    assert not jp.s_poly or jp.s_poly[0] == 0
    assert poly_of_matrix(list(jp.s_poly), a) == s


def test_jordan_invariants_random():
    rng = random.Random(20260810)
    for _ in range(25):
        n = rng.randint(2, 6)
        a = rand_matrix(rng, n, -2, 2)
        check_jordan_invariants(a, jordan_chevalley(a))


def test_jordan_zero_eigenvalue_keeps_zero_constant_term():
    a = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 2]])
    jp = jordan_chevalley(a)
    assert not jp.s_poly or jp.s_poly[0] == 0
    check_jordan_invariants(a, jp)


def test_envelope_of_identity():
    env = associative_envelope([Matrix.identity(3)])
    assert len(env) == 1


def test_envelope_of_single_nilpotent():
    e12 = Matrix([[0, 1], [0, 0]])
    env = associative_envelope([e12])
    assert env == [e12]


def test_envelope_unital_adds_identity():
    e12 = Matrix([[0, 1], [0, 0]])
    env = associative_envelope([e12], unital=True)
    assert len(env) == 2


def test_dickson_radical_semisimple_diagonal():
    d = Matrix.diagonal([1, 0])
    env = associative_envelope([d], unital=True)
    assert dickson_radical(env) == []


def test_dickson_radical_nilpotent_algebra():
    e12 = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    e13 = Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    env = associative_envelope([e12, e13])
    rad = dickson_radical(env)
    assert len(rad) == len(env)
    for m in rad:
        assert is_nilpotent_matrix(m)
        mp = min_poly(m)
        assert mp[0] == 0  # zero constant term


def test_dickson_rejects_non_closed():
    with pytest.raises(ValueError):
        dickson_radical([Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]])])


def test_diagonalize_symmetric_random():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 5)
        b = rand_matrix(rng, n)
        g = b + b.transpose()
        p, diag = diagonalize_symmetric(g)
        assert p * g * p.transpose() == Matrix.diagonal(diag)


def test_signature_and_definiteness():
    assert form_signature(Matrix.diagonal([2, 3, 4])) == (3, 0, 0)
    assert is_definite(Matrix.diagonal([-1, -5]))
    assert not is_definite(Matrix.diagonal([1, -1]))
    assert not is_definite(Matrix.diagonal([1, 0]))


def test_is_semisimple_matrix():
    assert is_semisimple_matrix(Matrix.diagonal([1, 2, 2]))
    assert not is_semisimple_matrix(Matrix([[1, 1], [0, 1]]))
