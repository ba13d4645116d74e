"""Named witness algebras and a seeded random solvable generator.

Every constructor is deterministic; the expectation table next to it doubles
as golden test data.  Structure constants are integers wherever possible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import LieAlgebra, direct_sum, semidirect_product
from .linalg import Matrix, is_nilpotent_matrix, kernel_space

Q = Fraction


def abelian(n):
    return LieAlgebra(n, {}, name=f"abelian{n}")


def heisenberg3():
    """[e1,e2] = e3; the three-dimensional Heisenberg algebra."""
    return LieAlgebra(3, {(0, 1): {2: 1}}, name="heisenberg3")


def r2():
    """[x,y] = y: the nonabelian 2-dimensional algebra."""
    return LieAlgebra(2, {(0, 1): {1: 1}}, names=["x", "y"], name="r2")


def sl2():
    """Basis e, h, f with [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    return LieAlgebra(
        3,
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
        names=["e", "h", "f"],
        name="sl2",
    )


def so3():
    """Cyclic [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; anisotropic form of sl2."""
    return LieAlgebra(
        3,
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
        name="so3",
    )


def oscillator4():
    """h3 extended by x acting diagonally (1, -1, 0)."""
    act = Matrix.diagonal([1, -1, 0])
    return semidirect_product(abelian(1), heisenberg3(), [act], name="oscillator4")


def jordan_block3():
    """Fx acting on Q^2 by a Jordan block: [x,y]=y, [x,z]=y+z."""
    act = Matrix([[1, 1], [0, 1]])
    return semidirect_product(abelian(1), abelian(2), [act], name="jordan_block3")


def rotation3():
    """Fx acting on Q^2 by a rotation generator: [x,y]=z, [x,z]=-y."""
    act = Matrix([[0, -1], [1, 0]])
    return semidirect_product(abelian(1), abelian(2), [act], name="rotation3")


def thm45_family(action, name=None):
    """Q^m extended by a line acting via ``action``; rejects nilpotent actions."""
    if isinstance(action, (list, tuple)):
        action = Matrix(action)
    if is_nilpotent_matrix(action):
        raise ValueError("the family requires a non-nilpotent action")
    m = action.nrows
    return semidirect_product(abelian(1), abelian(m), [action],
                              name=name or f"line_ext{m + 1}")


def sl2_natural():
    """sl2 acting on its natural 2-dimensional module."""
    e = Matrix([[0, 1], [0, 0]])
    h = Matrix([[1, 0], [0, -1]])
    f = Matrix([[0, 0], [1, 0]])
    return semidirect_product(sl2(), abelian(2), [e, h, f], name="sl2_natural")


def sl2_plus_r2():
    return direct_sum(sl2(), r2(), name="sl2_plus_r2")


def split(descriptor):
    from .rootsys import split_semisimple, root_system
    return split_semisimple(root_system(descriptor)).algebra


_NAMED = {
    "heisenberg3": heisenberg3,
    "r2": r2,
    "sl2": sl2,
    "so3": so3,
    "oscillator4": oscillator4,
    "jordan_block3": jordan_block3,
    "rotation3": rotation3,
    "sl2_natural": sl2_natural,
    "sl2_plus_r2": sl2_plus_r2,
}


def make_example(spec):
    """Build a named example: 'sl2', 'abelian(3)', 'split(A2)', ...

    Parenthesized arguments carry the parameter; thm45_family takes a
    semicolon-separated integer matrix like 'thm45(1,1;0,1)'.
    """
    spec = spec.strip()
    if "(" in spec:
        head, _, rest = spec.partition("(")
        arg = rest.rstrip(")")
        if head == "abelian":
            return abelian(int(arg))
        if head == "split":
            return split(arg)
        if head == "thm45":
            rows = [[int(v) for v in row.split(",")] for row in arg.split(";")]
            return thm45_family(rows)
        raise ValueError(f"unknown parametrized example {head!r}")
    if spec in _NAMED:
        return _NAMED[spec]()
    raise ValueError(f"unknown example {spec!r}")


def example_names():
    return sorted(_NAMED) + ["abelian(n)", "split(<type>)", "thm45(<matrix>)"]


# Documented facts about each named algebra, asserted by the test suite.
EXPECTATIONS = {
    "abelian(3)": {"dim": 3, "solvable": True, "nilpotent": True, "abelian": True},
    "heisenberg3": {"dim": 3, "solvable": True, "nilpotent": True,
                    "derived_dim": 1, "center_dim": 1, "derived_equals_center": True},
    "r2": {"dim": 2, "solvable": True, "nilpotent": False, "derived_dim": 1},
    "sl2": {"dim": 3, "solvable": False, "derived_dim": 3},
    "so3": {"dim": 3, "solvable": False, "derived_dim": 3},
    "oscillator4": {"dim": 4, "solvable": True, "nilpotent": False, "nilradical_dim": 3},
    "jordan_block3": {"dim": 3, "solvable": True, "nilpotent": False, "derived_dim": 2},
    "rotation3": {"dim": 3, "solvable": True, "nilpotent": False, "derived_dim": 2},
    "sl2_natural": {"dim": 5, "solvable": False, "derived_dim": 5, "perfect": True},
    "sl2_plus_r2": {"dim": 5, "solvable": False, "derived_dim": 4},
}


def corpus():
    """The standard desk-scale corpus used by audits and theorem suites."""
    algebras = [
        abelian(1), abelian(2), abelian(3),
        heisenberg3(), r2(), sl2(), so3(), rotation3(), jordan_block3(),
        oscillator4(), sl2_natural(), sl2_plus_r2(),
        split("A1"), split("A1xA1"), split("A2"),
    ]
    return algebras


def _derivation_space(L):
    """Basis of der(L), solved from D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]."""
    n = L.dim
    basis = [L.basis_vector(t) for t in range(n)]
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            w = L.bracket(basis[i], basis[j])
            block = [[Q(0)] * (n * n) for _ in range(n)]
            for b in range(n):
                if w[b]:
                    for k in range(n):
                        block[k][k * n + b] += w[b]
            for a in range(n):
                for k, v in enumerate(L.bracket(basis[a], basis[j])):
                    if v:
                        block[k][a * n + i] -= v
                for k, v in enumerate(L.bracket(basis[i], basis[a])):
                    if v:
                        block[k][a * n + j] -= v
            rows.extend(block)
    if not rows:
        from .linalg import Subspace
        return [Matrix.unflatten(v, n) for v in Subspace.full(n * n).basis]
    return [Matrix.unflatten(v, n) for v in kernel_space(Matrix(rows)).basis]


def random_solvable(dim, seed):
    """Seeded random solvable algebra of the given dimension (dim <= 6).

    Built as iterated semidirect extensions: a random abelian layer first,
    then one-dimensional extensions acting by random integer combinations of
    a derivation basis, so Jacobi holds by construction.
    """
    if dim < 1 or dim > 6:
        raise ValueError("random_solvable supports 1 <= dim <= 6")
    rng = random.Random(seed)
    base_dim = rng.randint(1, dim)
    cur = abelian(base_dim)
    step = 0
    while cur.dim < dim:
        step += 1
        if cur.dim == base_dim and not cur.c:
            # abelian layer: any matrix acts by derivations
            act = Matrix([[rng.randint(-3, 3) for _ in range(cur.dim)]
                          for _ in range(cur.dim)])
        else:
            ders = _derivation_space(cur)
            act = Matrix.zeros(cur.dim)
            for d in ders:
                c = rng.randint(-3, 3)
                if c:
                    act = act + d.scale(c)
        cur = semidirect_product(abelian(1), cur, [act],
                                 name=f"rand{dim}s{seed}.{step}")
    cur._cache.clear()
    cur_renamed = LieAlgebra(cur.dim, cur.c, name=f"random_solvable(dim={dim},seed={seed})",
                             jacobi="none")
    return cur_renamed
