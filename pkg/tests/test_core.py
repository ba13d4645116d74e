import random
from fractions import Fraction as Q

import pytest

from qlie import zoo
from qlie.core import (
    LieAlgebra,
    Subalg,
    center,
    centralizer,
    derived_series,
    direct_sum,
    dumps,
    ideal_closure,
    idealizer,
    induced_subalgebra,
    is_abelian,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    loads,
    lower_central_series,
    product_space,
    quotient,
    semidirect_product,
    subalgebra_closure,
)
from qlie.linalg import Matrix, Subspace


def vspan(L, *vecs):
    return Subspace.span(L.dim, [tuple(Q(x) for x in v) for v in vecs])


def test_construction_rejects_bad_jacobi():
    # [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e2 is not a Lie algebra
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {1: 1}, (1, 2): {1: 1}})


def test_construction_rejects_random_perturbations():
    # perturbing one constant of sl2_natural almost always breaks Jacobi
    base = zoo.sl2_natural().c
    rng = random.Random(99)
    rejected = 0
    trials = 40
    for _ in range(trials):
        brackets = {k: dict(v) for k, v in base.items()}
        i, j = sorted(rng.sample(range(5), 2))
        k = rng.randrange(5)
        brackets.setdefault((i, j), {})
        brackets[(i, j)][k] = brackets[(i, j)].get(k, 0) + rng.choice([-1, 1])
        try:
            LieAlgebra(5, brackets)
        except ValueError:
            rejected += 1
    assert rejected >= 36


def test_bracket_defining_constants():
    h3 = zoo.heisenberg3()
    e1, e2, e3 = (h3.basis_vector(i) for i in range(3))
    assert h3.bracket(e1, e2) == e3
    assert h3.bracket(e2, e1) == tuple(-x for x in e3)


def test_bracket_alternating():
    rng = random.Random(4)
    L = zoo.sl2()
    for _ in range(10):
        x = tuple(Q(rng.randint(-3, 3)) for _ in range(3))
        assert L.bracket(x, x) == (0, 0, 0)


def test_sl2_structure_constants():
    L = zoo.sl2()
    e, h, f = (L.basis_vector(i) for i in range(3))
    assert L.bracket(h, e) == tuple(2 * x for x in e)
    assert L.bracket(h, f) == tuple(-2 * x for x in f)
    assert L.bracket(e, f) == h


def test_product_space():
    h3 = zoo.heisenberg3()
    full = h3.full_space()
    assert product_space(h3, full, full) == vspan(h3, (0, 0, 1))
    ab = zoo.abelian(3)
    assert product_space(ab, ab.full_space(), ab.full_space()).is_zero()
    L = zoo.r2()
    assert product_space(L, L.full_space(), L.full_space()) == vspan(L, (0, 1))


def test_closures():
    h3 = zoo.heisenberg3()
    grow = subalgebra_closure(h3, vspan(h3, (1, 0, 0), (0, 1, 0)))
    assert grow.is_full()
    sl = zoo.sl2()
    assert ideal_closure(sl, vspan(sl, (1, 0, 0))).is_full()
    b = vspan(sl, (1, 0, 0), (0, 1, 0))
    assert subalgebra_closure(sl, b) == b


def test_series():
    h3 = zoo.heisenberg3()
    lc = lower_central_series(h3)
    assert [s.dim for s in lc] == [3, 1, 0]
    r2 = zoo.r2()
    ds = derived_series(r2)
    assert [s.dim for s in ds] == [2, 1, 0]
    assert is_solvable(r2) and not is_nilpotent(r2)
    sl = zoo.sl2()
    assert derived_series(sl) == [sl.full_space()]
    assert not is_solvable(sl)
    assert is_nilpotent(h3)
    assert is_abelian(zoo.abelian(4))


def test_center_and_centralizer():
    h3 = zoo.heisenberg3()
    assert center(h3) == vspan(h3, (0, 0, 1))
    assert centralizer(h3, h3.full_space()) == center(h3)
    sl = zoo.sl2()
    assert center(sl).is_zero()


def test_idealizer():
    sl = zoo.sl2()
    e_line = vspan(sl, (1, 0, 0))
    ideal = idealizer(sl, e_line)
    assert ideal.space == vspan(sl, (1, 0, 0), (0, 1, 0))
    # idealizer contains its argument as an ideal
    assert ideal.space.contains_space(e_line)
    assert product_space(sl, ideal.space, e_line).contains_space(
        product_space(sl, e_line, e_line))
    with pytest.raises(ValueError):
        idealizer(sl, vspan(sl, (1, 0, 0), (0, 0, 1)))  # not closed


def test_subalg_handle():
    sl = zoo.sl2()
    b = Subalg(sl, vspan(sl, (1, 0, 0), (0, 1, 0)))
    assert b.dim == 2
    with pytest.raises(ValueError):
        Subalg(sl, vspan(sl, (1, 0, 0), (0, 1, 0)), ideal=True)


def test_killing_sl2():
    sl = zoo.sl2()
    k = sl.killing()
    # basis order e, h, f
    assert k.entry(1, 1) == 8
    assert k.entry(0, 2) == 4
    assert k.entry(0, 0) == 0


def test_killing_heisenberg_zero():
    assert zoo.heisenberg3().killing().is_zero()
    assert zoo.abelian(3).killing().is_zero()


def test_killing_invariance_random():
    rng = random.Random(12)
    for L in (zoo.sl2(), zoo.oscillator4(), zoo.rotation3()):
        for _ in range(10):
            x, y, z = (tuple(Q(rng.randint(-2, 2)) for _ in range(L.dim))
                       for _ in range(3))
            assert L.killing_value(L.bracket(x, y), z) == \
                L.killing_value(x, L.bracket(y, z))


def test_quotient_h3_by_center():
    h3 = zoo.heisenberg3()
    q, qm = quotient(h3, center(h3))
    assert q.dim == 2 and is_abelian(q)
    assert qm.push((Q(1), Q(2), Q(5))) == (Q(1), Q(2))
    lifted = qm.lift_space(q.full_space())
    assert lifted.is_full()


def test_quotient_requires_ideal():
    sl = zoo.sl2()
    with pytest.raises(ValueError):
        quotient(sl, vspan(sl, (1, 0, 0)))


def test_quotient_by_zero_is_identity():
    L = zoo.oscillator4()
    q, qm = quotient(L, L.zero_space())
    assert q.dim == L.dim
    assert q.c == L.c


def test_induced_subalgebra_borel_of_sl2():
    sl = zoo.sl2()
    b, inc = induced_subalgebra(sl, vspan(sl, (1, 0, 0), (0, 1, 0)))
    # basis rows are e, h (pivot order); [h, e] = 2e
    assert b.bracket(b.basis_vector(1), b.basis_vector(0)) == (Q(2), Q(0))
    assert inc.up((Q(1), Q(0))) == (Q(1), Q(0), Q(0))
    assert inc.down((Q(3), Q(4), Q(0))) == (Q(3), Q(4))


def test_rank_nullity_through_quotient():
    for L in (zoo.heisenberg3(), zoo.r2(), zoo.oscillator4(), zoo.sl2_plus_r2()):
        L2 = product_space(L, L.full_space(), L.full_space())
        q, _ = quotient(L, ideal_closure(L, L2))
        assert L.dim == ideal_closure(L, L2).dim + q.dim


def test_semidirect_jordan_block():
    L = zoo.jordan_block3()
    x, y, z = (L.basis_vector(i) for i in range(3))
    assert L.bracket(x, y) == y
    assert L.bracket(x, z) == tuple(a + b for a, b in zip(y, z))


def test_semidirect_zero_action_center():
    L = direct_sum(zoo.abelian(1), zoo.heisenberg3())
    assert center(L).contains((Q(1), Q(0), Q(0), Q(0)))


def test_semidirect_rejects_non_derivation():
    sl = zoo.sl2()
    bad = [Matrix([[1, 0], [0, 1]]), Matrix.zeros(2), Matrix.zeros(2)]
    with pytest.raises(ValueError):
        semidirect_product(sl, zoo.abelian(2), bad)
    # non-homomorphism: x, y both acting as identity on an abelian layer is a
    # homomorphism only if [x,y] acts as zero
    with pytest.raises(ValueError):
        semidirect_product(zoo.r2(), zoo.abelian(1),
                           [Matrix([[1]]), Matrix([[1]])])


def test_sl2_natural_module_brackets():
    L = zoo.sl2_natural()
    e = L.basis_vector(0)
    v1, v2 = L.basis_vector(3), L.basis_vector(4)
    assert L.bracket(e, v2) == v1
    assert L.bracket(e, v1) == (0,) * 5


def test_json_roundtrip_exact():
    for L in (zoo.sl2(), zoo.heisenberg3(), zoo.oscillator4(),
              LieAlgebra(2, {(0, 1): {0: Q(2, 3), 1: Q(-5, 7)}})):
        text = dumps(L)
        back = loads(text)
        assert back.c == L.c
        assert back.dim == L.dim
        assert dumps(back) == text  # bit-exact round trip


def test_is_subalgebra_is_ideal():
    sl = zoo.sl2()
    assert is_subalgebra(sl, vspan(sl, (1, 0, 0), (0, 1, 0)))
    assert not is_ideal(sl, vspan(sl, (1, 0, 0), (0, 1, 0)))
    h3 = zoo.heisenberg3()
    assert is_ideal(h3, vspan(h3, (0, 0, 1)))
