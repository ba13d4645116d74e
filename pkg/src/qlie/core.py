"""Structure-constant Lie algebras and the elementary structural calculus.

A ``LieAlgebra`` stores its bracket as a sparse tensor c[i][j] -> {k: coeff}
for i < j only; the i > j values follow by antisymmetry, which therefore
cannot be violated.  The Jacobi identity is verified at construction (fully
by default, on sampled triples for large internally-built algebras).

Vectors live in Q^dim as tuples of Fractions; subspaces use the canonical
RREF representation from ``linalg``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    EchelonBasis,
    Matrix,
    Subspace,
    kernel_space,
    qparse,
    qstr,
    solve_linear,
    vadd,
)

Q = Fraction
_Q0 = Fraction(0)
_Q1 = Fraction(1)


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q given by structure constants."""

    def __init__(self, dim, brackets, names=None, name="L", jacobi="full", seed=0):
        """brackets: {(i, j): {k: coeff}} with i < j, zero-based indices."""
        self.dim = dim
        self.name = name
        self.names = tuple(names) if names else tuple(f"e{i}" for i in range(dim))
        if len(self.names) != dim:
            raise ValueError("basis name count differs from dimension")
        c = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices ({i},{j}) must satisfy 0 <= i < j < dim")
            cleaned = {k: Fraction(v) for k, v in coeffs.items() if Fraction(v)}
            for k in cleaned:
                if not 0 <= k < dim:
                    raise ValueError(f"target index {k} out of range")
            if cleaned:
                c[(i, j)] = cleaned
        self.c = c
        self._cache = {}
        if jacobi == "full":
            self._check_jacobi_full()
        elif jacobi == "sample":
            self._check_jacobi_sampled(seed)
        elif jacobi != "none":
            raise ValueError("jacobi must be 'full', 'sample' or 'none'")

    # -- bracket machinery ---------------------------------------------------

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse dict."""
        if i == j:
            return {}
        if i < j:
            return self.c.get((i, j), {})
        return {k: -v for k, v in self.c.get((j, i), {}).items()}

    def _bracket_sparse(self, d, j):
        """[v, e_j] for sparse v."""
        out = {}
        for i, ci in d.items():
            if not ci:
                continue
            for k, v in self.bracket_basis(i, j).items():
                out[k] = out.get(k, _Q0) + ci * v
        return {k: v for k, v in out.items() if v}

    def bracket(self, x, y):
        """Bilinear antisymmetric bracket of two coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        out = [_Q0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                coeffs = self.bracket_basis(i, j)
                if coeffs:
                    c = xi * yj
                    for k, v in coeffs.items():
                        out[k] += c * v
        return tuple(out)

    def _check_jacobi_triple(self, i, j, k):
        acc = {}
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = self.bracket_basis(a, b)
            for m, v in self._bracket_sparse(inner, c).items():
                acc[m] = acc.get(m, _Q0) + v
        return all(not v for v in acc.values())

    def _check_jacobi_full(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if not self._check_jacobi_triple(i, j, k):
                        raise ValueError(
                            f"Jacobi identity fails on basis triple ({i},{j},{k})")

    def _check_jacobi_sampled(self, seed, count=None):
        n = self.dim
        if n < 3:
            return
        rng = random.Random(seed)
        count = count if count is not None else 4 * n
        for _ in range(count):
            i, j, k = rng.sample(range(n), 3)
            if not self._check_jacobi_triple(i, j, k):
                raise ValueError(
                    f"Jacobi identity fails on sampled triple ({i},{j},{k})")

    # -- adjoint matrices ----------------------------------------------------

    def ad_basis(self, i):
        cache = self._cache.setdefault("ad_basis", {})
        if i not in cache:
            cols = []
            for j in range(self.dim):
                col = [_Q0] * self.dim
                for k, v in self.bracket_basis(i, j).items():
                    col[k] = v
                cols.append(col)
            cache[i] = Matrix.from_columns(cols)
        return cache[i]

    def ad(self, x):
        """Matrix of ad x acting on column vectors."""
        acc = Matrix.zeros(self.dim)
        for i, xi in enumerate(x):
            if xi:
                acc = acc + self.ad_basis(i).scale(xi)
        return acc

    def ad_space(self):
        """Span of ad L inside the dim^2-dimensional matrix space."""
        if "ad_space" not in self._cache:
            self._cache["ad_space"] = Subspace.span(
                self.dim ** 2, [self.ad_basis(i).flatten() for i in range(self.dim)])
        return self._cache["ad_space"]

    def ad_preimage(self, m):
        """Some x with ad x = m, or None; unique modulo the center."""
        cols = [self.ad_basis(i).flatten() for i in range(self.dim)]
        return solve_linear(Matrix.from_columns(cols), m.flatten())

    def killing(self):
        """Killing form matrix kappa(e_i, e_j) = tr(ad e_i ad e_j)."""
        if "killing" not in self._cache:
            from .linalg import trace_product
            ads = [self.ad_basis(i) for i in range(self.dim)]
            n = self.dim
            rows = [[_Q0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    rows[i][j] = rows[j][i] = trace_product(ads[i], ads[j])
            self._cache["killing"] = Matrix(rows)
        return self._cache["killing"]

    def killing_value(self, x, y):
        ky = self.killing().apply(y)
        return sum((xi * v for xi, v in zip(x, ky) if xi and v), _Q0)

    def full_space(self):
        return Subspace.full(self.dim)

    def zero_space(self):
        return Subspace.zero(self.dim)

    def basis_vector(self, i):
        return tuple(_Q1 if j == i else _Q0 for j in range(self.dim))

    def __repr__(self):
        return f"LieAlgebra({self.name}, dim={self.dim})"


# ---------------------------------------------------------------------------
# Subalgebra handles


@dataclass(frozen=True)
class Subalg:
    """A subspace verified to be bracket-closed in its parent algebra."""

    parent: LieAlgebra
    space: Subspace
    ideal: bool = False

    def __post_init__(self):
        if not is_subalgebra(self.parent, self.space):
            raise ValueError("subspace is not bracket-closed")
        if self.ideal and not is_ideal(self.parent, self.space):
            raise ValueError("subspace is not an ideal")

    @property
    def dim(self):
        return self.space.dim


# ---------------------------------------------------------------------------
# Products, closures, series


def product_space(L, a, b):
    """Span of all pairwise brackets [a_i, b_j]; product_space(L, L, L) = L^2."""
    eb = EchelonBasis(L.dim)
    for u in a.basis:
        for v in b.basis:
            eb.insert(L.bracket(u, v))
    return Subspace(L.dim, eb.sorted_rows(), eb.sorted_pivots())


def derived_subalgebra(L):
    if "derived" not in L._cache:
        full = L.full_space()
        L._cache["derived"] = product_space(L, full, full)
    return L._cache["derived"]


def is_subalgebra(L, s):
    return s.contains_space(product_space(L, s, s))


def is_ideal(L, s):
    return s.contains_space(product_space(L, L.full_space(), s))


def subalgebra_closure(L, s):
    """Smallest bracket-closed subspace containing s (fixpoint by dimension)."""
    cur = s
    while True:
        nxt = cur.add(product_space(L, cur, cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def ideal_closure(L, s):
    cur = s
    full = L.full_space()
    while True:
        nxt = cur.add(product_space(L, full, cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def derived_series(L, s=None):
    """Strictly decreasing derived series of a bracket-closed subspace."""
    cur = s if s is not None else L.full_space()
    out = [cur]
    while True:
        nxt = product_space(L, cur, cur)
        if nxt.dim == cur.dim:
            break
        out.append(nxt)
        cur = nxt
        if cur.is_zero():
            break
    return out


def lower_central_series(L, s=None):
    top = s if s is not None else L.full_space()
    cur = top
    out = [cur]
    while True:
        nxt = product_space(L, top, cur)
        if nxt.dim == cur.dim:
            break
        out.append(nxt)
        cur = nxt
        if cur.is_zero():
            break
    return out


def series(L, kind):
    if kind == "derived":
        return derived_series(L)
    if kind == "lower_central":
        return lower_central_series(L)
    raise ValueError("kind must be 'derived' or 'lower_central'")


def is_solvable_space(L, s):
    return derived_series(L, s)[-1].is_zero() if not s.is_zero() else True


def is_nilpotent_space(L, s):
    return lower_central_series(L, s)[-1].is_zero() if not s.is_zero() else True


def is_abelian_space(L, s):
    return product_space(L, s, s).is_zero()


def is_solvable(L):
    return is_solvable_space(L, L.full_space())


def is_nilpotent(L):
    return is_nilpotent_space(L, L.full_space())


def is_abelian(L):
    return not L.c


# ---------------------------------------------------------------------------
# Centralizers, centre, idealizer


def center(L):
    if "center" not in L._cache:
        L._cache["center"] = centralizer(L, L.full_space())
    return L._cache["center"]


def centralizer(L, b):
    """{x : [x, v] = 0 for all v in b} as an exact kernel."""
    rows = []
    for v in b.basis:
        # row block: mapping x -> [x, v]; entry (k, i) = coeff of e_k in [e_i, v]
        block = [[_Q0] * L.dim for _ in range(L.dim)]
        for i in range(L.dim):
            col = L.bracket(L.basis_vector(i), v)
            for k, val in enumerate(col):
                if val:
                    block[k][i] = val
        rows.extend(block)
    if not rows:
        return L.full_space()
    return kernel_space(Matrix(rows))


def idealizer(L, b):
    """I_L(B) = {x : [x, B] <= B}; B must be a subalgebra."""
    if not is_subalgebra(L, b):
        raise ValueError("idealizer requires a bracket-closed subspace")
    n = L.dim
    # residual map R vanishing exactly on b
    res = [[_Q1 if i == j else _Q0 for j in range(n)] for i in range(n)]
    for p, row in zip(b.pivots, b.basis):
        for i in range(n):
            res[i][p] -= row[i]
    resm = Matrix(res)
    rows = []
    for v in b.basis:
        block = [[_Q0] * n for _ in range(n)]
        for i in range(n):
            col = resm.apply(L.bracket(L.basis_vector(i), v))
            for k, val in enumerate(col):
                if val:
                    block[k][i] = val
        rows.extend(block)
    space = kernel_space(Matrix(rows)) if rows else L.full_space()
    return Subalg(L, space)


# ---------------------------------------------------------------------------
# Quotients and induced subalgebras


@dataclass(frozen=True)
class QuotientMap:
    parent: LieAlgebra
    quotient: LieAlgebra
    ideal: Subspace

    def push(self, v):
        """Image of a parent vector in quotient coordinates."""
        res = list(v)
        for p, row in zip(self.ideal.pivots, self.ideal.basis):
            c = res[p]
            if c:
                for j in range(self.parent.dim):
                    if row[j]:
                        res[j] -= c * row[j]
        return tuple(res[j] for j in self.ideal.nonpivots())

    def push_space(self, s):
        return Subspace.span(self.quotient.dim, [self.push(v) for v in s.basis])

    def lift(self, w):
        """Canonical transversal lift of a quotient vector."""
        out = [_Q0] * self.parent.dim
        for c, j in zip(w, self.ideal.nonpivots()):
            out[j] = c
        return tuple(out)

    def lift_space(self, s):
        vecs = [self.lift(w) for w in s.basis] + list(self.ideal.basis)
        return Subspace.span(self.parent.dim, vecs)


def quotient(L, ideal_space, name=None):
    """Quotient algebra in the canonical transversal basis (non-pivot coords)."""
    if not is_ideal(L, ideal_space):
        raise ValueError("quotient requires an ideal")
    trans = ideal_space.nonpivots()
    qdim = len(trans)
    pos = {j: a for a, j in enumerate(trans)}

    def reduce_vec(v):
        res = list(v)
        for p, row in zip(ideal_space.pivots, ideal_space.basis):
            c = res[p]
            if c:
                for j in range(L.dim):
                    if row[j]:
                        res[j] -= c * row[j]
        return res

    brackets = {}
    for a in range(qdim):
        for b in range(a + 1, qdim):
            w = reduce_vec(L.bracket(L.basis_vector(trans[a]), L.basis_vector(trans[b])))
            coeffs = {pos[j]: w[j] for j in trans if w[j]}
            if coeffs:
                brackets[(a, b)] = coeffs
    qname = name if name else f"{L.name}/I"
    Lq = LieAlgebra(qdim, brackets, names=[L.names[j] for j in trans],
                    name=qname, jacobi="none")
    return Lq, QuotientMap(L, Lq, ideal_space)


@dataclass(frozen=True)
class InclusionMap:
    parent: LieAlgebra
    sub: LieAlgebra
    space: Subspace

    def up(self, w):
        return self.space.from_coords(w)

    def up_space(self, s):
        return Subspace.span(self.parent.dim, [self.up(w) for w in s.basis])

    def down(self, v):
        """Coordinates of a member vector of the subalgebra."""
        return self.space.coords(v)

    def down_space(self, s):
        return Subspace.span(self.sub.dim, [self.down(v) for v in s.basis])


def induced_subalgebra(L, b, name=None):
    """The subalgebra b as an algebra in its own canonical basis."""
    if not is_subalgebra(L, b):
        raise ValueError("induced algebra requires a bracket-closed subspace")
    k = b.dim
    brackets = {}
    for a in range(k):
        for c in range(a + 1, k):
            w = L.bracket(b.basis[a], b.basis[c])
            coords = b.coords(w)
            coeffs = {m: val for m, val in enumerate(coords) if val}
            if coeffs:
                brackets[(a, c)] = coeffs
    sname = name if name else f"{L.name}|sub"
    Ls = LieAlgebra(k, brackets, name=sname, jacobi="none")
    return Ls, InclusionMap(L, Ls, b)


# ---------------------------------------------------------------------------
# Semidirect products


def semidirect_product(s_alg, a_alg, action, name=None, jacobi="full"):
    """S acting on A by derivations: the algebra S (+) A.

    ``action`` lists one matrix per basis element of S.  The matrices must be
    derivations of A and respect the bracket of S; both conditions are
    verified exactly.
    """
    ns, na = s_alg.dim, a_alg.dim
    if len(action) != ns:
        raise ValueError("need one action matrix per basis element of S")
    for m in action:
        if m.nrows != na or m.ncols != na:
            raise ValueError("action matrices must be square of size dim A")
    # derivation property on basis brackets of A
    for i in range(na):
        for j in range(i + 1, na):
            w = a_alg.bracket(a_alg.basis_vector(i), a_alg.basis_vector(j))
            for m in action:
                lhs = m.apply(w)
                rhs = vadd(a_alg.bracket(m.apply(a_alg.basis_vector(i)), a_alg.basis_vector(j)),
                           a_alg.bracket(a_alg.basis_vector(i), m.apply(a_alg.basis_vector(j))))
                if lhs != rhs:
                    raise ValueError("action matrix is not a derivation of A")
    # homomorphism property on basis brackets of S
    from .linalg import commutator
    for i in range(ns):
        for j in range(i + 1, ns):
            w = s_alg.bracket_basis(i, j)
            acc = Matrix.zeros(na)
            for k, v in w.items():
                acc = acc + action[k].scale(v)
            if commutator(action[i], action[j]) != acc:
                raise ValueError("action is not a Lie algebra homomorphism")
    dim = ns + na
    brackets = {}
    for (i, j), coeffs in s_alg.c.items():
        brackets[(i, j)] = dict(coeffs)
    for (i, j), coeffs in a_alg.c.items():
        brackets[(ns + i, ns + j)] = {ns + k: v for k, v in coeffs.items()}
    for i in range(ns):
        for j in range(na):
            col = action[i].apply(a_alg.basis_vector(j))
            coeffs = {ns + k: v for k, v in enumerate(col) if v}
            if coeffs:
                brackets[(i, ns + j)] = coeffs
    names = [f"s.{n}" for n in s_alg.names] + [f"a.{n}" for n in a_alg.names]
    pname = name if name else f"{s_alg.name}|x{a_alg.name}"
    return LieAlgebra(dim, brackets, names=names, name=pname, jacobi=jacobi)


def direct_sum(a, b, name=None):
    zero = [Matrix.zeros(b.dim) for _ in range(a.dim)]
    out = semidirect_product(a, b, zero, name=name or f"{a.name}(+){b.name}")
    return out


# ---------------------------------------------------------------------------
# JSON algebra format


def to_json_dict(L):
    brackets = []
    for (i, j) in sorted(L.c):
        coeffs = {str(k): qstr(v) for k, v in sorted(L.c[(i, j)].items())}
        brackets.append({"i": i, "j": j, "coeffs": coeffs})
    return {"name": L.name, "dim": L.dim, "basis": list(L.names), "brackets": brackets}


def from_json_dict(d, jacobi="full"):
    dim = d["dim"]
    brackets = {}
    for item in d["brackets"]:
        i, j = item["i"], item["j"]
        coeffs = {int(k): qparse(v) for k, v in item["coeffs"].items()}
        brackets[(i, j)] = coeffs
    return LieAlgebra(dim, brackets, names=d.get("basis"),
                      name=d.get("name", "L"), jacobi=jacobi)


def dumps(L):
    return json.dumps(to_json_dict(L), indent=2, sort_keys=True) + "\n"


def loads(text, jacobi="full"):
    return from_json_dict(json.loads(text), jacobi=jacobi)
