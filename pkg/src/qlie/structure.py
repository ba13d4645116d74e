"""Higher structure theory in characteristic zero.

Radical, nilradical, Levi decompositions, Jordan parts inside the adjoint
image, almost-algebraicity, nil/toral/ad-semisimple certificates and the
simple-ideal decomposition.  Everything is exact; randomized checks take an
explicit seed and are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .core import (
    center,
    derived_subalgebra,
    induced_subalgebra,
    is_abelian_space,
    is_ideal,
    is_nilpotent_space,
    is_subalgebra,
    product_space,
    quotient,
)
from .linalg import (
    Matrix,
    Subspace,
    associative_envelope,
    dickson_radical,
    is_definite,
    is_nilpotent_matrix,
    jordan_chevalley,
    kernel_space,
    matrix_space,
    min_poly,
    poly_of_matrix,
    preimage_space,
    restrict_operator,
    solve_linear,
    vadd,
)
from .tristate import TriState, proven_false, proven_true, unknown

_Q0 = Fraction(0)
_Q1 = Fraction(1)

DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 64


# ---------------------------------------------------------------------------
# Radical and nilradical


def radical(L):
    """Solvable radical via the Cartan criterion: R = {x : kappa(x, L^2) = 0}."""
    if "radical" in L._cache:
        return L._cache["radical"]
    k = L.killing()
    l2 = derived_subalgebra(L)
    rows = [k.apply(w) for w in l2.basis]
    r = kernel_space(Matrix(rows)) if rows else L.full_space()
    L._cache["radical"] = r
    return r


def is_semisimple(L):
    return radical(L).is_zero()


def _ad_matrices(L, space):
    return [L.ad(v) for v in space.basis]


def _pullback_ad(L, domain, target_mats):
    """{x in domain : ad x in span(target_mats)} as a subspace of L."""
    n = L.dim
    w = matrix_space(target_mats, n) if target_mats else Subspace.zero(n * n)
    cols = [L.ad(v).flatten() for v in domain.basis]
    if not cols:
        return Subspace.zero(n)
    coeffs = preimage_space(Matrix.from_columns(cols), w)
    return Subspace.span(n, [domain.from_coords(c) for c in coeffs.basis])


def nilradical(L):
    """Largest nilpotent ideal, via the trace-form radical of the solvable part.

    The associative envelope of ad R is simultaneously triangularizable over
    the closure, so inside R the ad-nilpotent elements are exactly those whose
    adjoint lands in the envelope's Dickson radical.  (The envelope is already
    closed under commutation with ad L, since [ad x, ad r] = ad [x,r] and R is
    an ideal.)
    """
    if "nilradical" in L._cache:
        return L._cache["nilradical"]
    r = radical(L)
    if r.is_zero():
        L._cache["nilradical"] = r
        return r
    env = associative_envelope(_ad_matrices(L, r))
    rad = dickson_radical(env, check_closed=False)
    n = _pullback_ad(L, r, rad)
    # self-checks: a failure here would mean an internal inconsistency
    if not is_ideal(L, n):
        raise RuntimeError("nilradical self-check failed: not an ideal")
    if not is_nilpotent_space(L, n):
        raise RuntimeError("nilradical self-check failed: not nilpotent")
    if not n.contains_space(product_space(L, L.full_space(), r)):
        raise RuntimeError("nilradical self-check failed: [L, R] not contained")
    L._cache["nilradical"] = n
    return n


# ---------------------------------------------------------------------------
# Levi decomposition


@dataclass(frozen=True)
class LeviDecomposition:
    radical: Subspace
    levi: Subspace


def levi_decomposition(L):
    """L = R (+) S with S a semisimple subalgebra; deterministic and exact.

    Computed by induction along the derived series of R: for abelian radical
    a complement is an affine-linear solve (Whitehead guarantees consistency);
    otherwise reduce modulo R^2 and recurse inside the pullback.
    """
    if "levi" in L._cache:
        return L._cache["levi"]
    r = radical(L)
    if r.is_zero():
        out = LeviDecomposition(r, L.full_space())
    elif r.is_full():
        out = LeviDecomposition(r, L.zero_space())
    else:
        out = LeviDecomposition(r, _levi_complement(L, r))
    s = out.levi
    if not (s.intersect(r).is_zero() and s.add(r).is_full()):
        raise RuntimeError("Levi self-check failed: not a complement")
    if not is_subalgebra(L, s):
        raise RuntimeError("Levi self-check failed: not a subalgebra")
    if not s.is_zero() and product_space(L, s, s) != s:
        raise RuntimeError("Levi self-check failed: S^2 != S")
    L._cache["levi"] = out
    return out


def _levi_complement(L, r):
    r2 = product_space(L, r, r)
    if r2.is_zero():
        return _levi_abelian_step(L, r)
    lbar, qm = quotient(L, r2)
    sbar = _levi_complement(lbar, radical(lbar))
    p = qm.lift_space(sbar)
    lp, inc = induced_subalgebra(L, p)
    s_in_p = _levi_complement(lp, radical(lp))
    return inc.up_space(s_in_p)


def _levi_abelian_step(L, r):
    """Complement to an abelian radical: one affine-linear system."""
    lbar, qm = quotient(L, r)
    s = lbar.dim
    k = r.dim
    lifts = [qm.lift(lbar.basis_vector(a)) for a in range(s)]
    rbasis = list(r.basis)
    nuns = s * k
    rows, rhs = [], []
    for a in range(s):
        for b in range(a + 1, s):
            cbar = lbar.bracket_basis(a, b)
            w = L.bracket(lifts[a], lifts[b])
            target = [-x for x in w]
            for d, cv in cbar.items():
                target = vadd(tuple(target), tuple(cv * x for x in lifts[d]))
            # unknown theta[c][i] multiplies: +[x_a, r_i] (c=b), -[x_b, r_i]
            # (c=a), -cbar_ab^d r_i (c=d)
            block = [[_Q0] * nuns for _ in range(L.dim)]
            for i, rv in enumerate(rbasis):
                va = L.bracket(lifts[a], rv)
                vb = L.bracket(lifts[b], rv)
                for m in range(L.dim):
                    if va[m]:
                        block[m][b * k + i] += va[m]
                    if vb[m]:
                        block[m][a * k + i] -= vb[m]
                    if rv[m]:
                        for d, cv in cbar.items():
                            block[m][d * k + i] -= cv * rv[m]
            rows.extend(block)
            rhs.extend(target)
    if not rows:
        theta = (_Q0,) * nuns
    else:
        theta = solve_linear(Matrix(rows), tuple(rhs))
        if theta is None:
            raise RuntimeError("Levi linear system inconsistent")
    vecs = []
    for a in range(s):
        v = lifts[a]
        for i, rv in enumerate(rbasis):
            c = theta[a * k + i]
            if c:
                v = vadd(v, tuple(c * x for x in rv))
        vecs.append(v)
    return Subspace.span(L.dim, vecs)


# ---------------------------------------------------------------------------
# Jordan parts inside ad L


@dataclass(frozen=True)
class AdJordanParts:
    s_matrix: Matrix
    n_matrix: Matrix
    s_in_ad: TriState
    n_in_ad: TriState


def ad_jordan_parts(L, x):
    """Jordan pair of ad x, with exact membership of both parts in ad L.

    Preimages are returned inside the certificates; they are unique modulo
    the center.
    """
    jp = jordan_chevalley(L.ad(x))
    return AdJordanParts(jp.semisimple, jp.nilpotent,
                         _membership(L, jp.semisimple, "semisimple part"),
                         _membership(L, jp.nilpotent, "nilpotent part"))


def _membership(L, m, label):
    pre = L.ad_preimage(m)
    if pre is None:
        return proven_false("ad-membership-system", witness={"part": label},
                            detail=f"{label} of the adjoint escapes ad L")
    return proven_true("ad-membership-system", witness={"preimage": pre})


def _seeded_vectors(L, samples, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(L.dim))
        if any(v):
            out.append(v)
    return out


def is_almost_algebraic(L, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
    """Does ad L contain the Jordan parts of all of its elements?

    ProvenFalse carries a concrete escaping element.  ProvenTrue combines the
    deterministic closure fixpoint (adjoining Jordan parts of a canonical
    basis of ad L grows nothing) with a seeded randomized element check,
    since basis closure alone is not an established sufficient condition.
    """
    key = ("almost_algebraic", samples, seed)
    if key in L._cache:
        return L._cache[key]
    out = _is_almost_algebraic(L, samples, seed)
    L._cache[key] = out
    return out


def _is_almost_algebraic(L, samples, seed):
    adsp = L.ad_space()
    if adsp.is_zero():
        return proven_true("abelian-adjoint-zero")
    # closure step on a canonical basis of ad L: each row is ad z for a
    # computable z, so an escape yields an element witness
    for row in adsp.basis:
        m = Matrix.unflatten(row, L.dim)
        z = L.ad_preimage(m)
        jp = jordan_chevalley(m)
        for part, mat in (("semisimple", jp.semisimple), ("nilpotent", jp.nilpotent)):
            if not adsp.contains(mat.flatten()):
                return proven_false(
                    "jordan-part-escape", witness={"element": z, "part": part},
                    detail="Jordan part of a basis element of ad L escapes")
    for v in _seeded_vectors(L, samples, seed):
        jp = jordan_chevalley(L.ad(v))
        for part, mat in (("semisimple", jp.semisimple), ("nilpotent", jp.nilpotent)):
            if not adsp.contains(mat.flatten()):
                return proven_false(
                    "jordan-part-escape", witness={"element": v, "part": part},
                    detail="Jordan part of a sampled element escapes")
    return proven_true("jordan-closure-fixpoint+sampling",
                       detail=f"stable basis closure; {samples} seeded samples, seed={seed}")


# ---------------------------------------------------------------------------
# Nil subalgebras and U(S)


def is_nil_subalgebra(L, u, certify=True):
    """Is every element of the subalgebra u ad-nilpotent in L?

    The certificate is element-independent: the associative envelope of ad u
    must be nil (identically zero trace form and nilpotent basis elements),
    which certifies all of u, not only a basis.
    """
    if not is_subalgebra(L, u):
        raise ValueError("nil test requires a bracket-closed subspace")
    if u.is_zero():
        return True
    for v in u.basis:
        if not is_nilpotent_matrix(L.ad(v)):
            return False
    if not is_nilpotent_space(L, u):
        return False
    if not certify:
        # weight-space argument: a nilpotent subalgebra spanned by
        # ad-nilpotent elements is nil
        return True
    env = associative_envelope(_ad_matrices(L, u))
    rad = dickson_radical(env, check_closed=False)
    if len(rad) != len(env):
        return False
    for m in env:
        if not is_nilpotent_matrix(m):
            raise RuntimeError("nil certificate inconsistency: trace-radical "
                               "element is not nilpotent")
    return True


def u_of(L, s):
    """U(S): the ad-nilpotent part of the solvable radical of a subalgebra.

    Computed exactly as in ``nilradical`` (envelope + trace-form radical,
    with ad taken in the ambient algebra).  The result is self-checked to be
    a nil ideal of S and the operation fails loudly otherwise.
    """
    if not is_subalgebra(L, s):
        raise ValueError("U(S) requires a subalgebra")
    si, inc = induced_subalgebra(L, s)
    rs = inc.up_space(radical(si))
    if rs.is_zero():
        return rs
    env = associative_envelope(_ad_matrices(L, rs))
    rad = dickson_radical(env, check_closed=False)
    u = _pullback_ad(L, rs, rad)
    if not is_nil_subalgebra(L, u, certify=False):
        raise RuntimeError("U(S) self-check failed: result is not nil")
    if not u.contains_space(product_space(L, s, u)):
        raise RuntimeError("U(S) self-check failed: not an ideal of S")
    return u


def is_toral(L, t):
    """Abelian with every ad semisimple, certified basis-independently.

    The commutative unital envelope of ad T having zero trace-form radical
    makes every element of the envelope semisimple at once.
    """
    if not is_subalgebra(L, t):
        raise ValueError("toral test requires a subalgebra")
    if t.is_zero():
        return proven_true("zero-subalgebra")
    pr = product_space(L, t, t)
    if not pr.is_zero():
        a, b = _noncommuting_pair(L, t)
        return proven_false("nonabelian", witness={"x": a, "y": b})
    mats = _ad_matrices(L, t)
    for v, m in zip(t.basis, mats):
        mp = min_poly(m)
        if poly.pdeg(poly.pgcd(mp, poly.pderiv(mp))) != 0:
            return proven_false("non-semisimple-adjoint", witness={"element": v})
    env = associative_envelope(mats, unital=True)
    rad = dickson_radical(env, check_closed=False)
    if rad:
        raise RuntimeError("toral certificate inconsistency: commuting "
                           "semisimple family with nonzero trace radical")
    return proven_true("commutative-semisimple-envelope")


def _noncommuting_pair(L, s):
    for i, a in enumerate(s.basis):
        for b in s.basis[i + 1:]:
            if any(L.bracket(a, b)):
                return a, b
    raise RuntimeError("no noncommuting pair found")


# ---------------------------------------------------------------------------
# Ad-semisimple algebras


def is_ad_semisimple(L, b=None, samples=8, seed=DEFAULT_SEED):
    """Is ad x semisimple for every x (of the subalgebra b, default all of L)?

    ProvenTrue certificates: an abelian algebra via the commuting-family
    envelope, or (toral centre) (+) (semisimple part) with the semisimple
    part anisotropic: a definite Killing form admits no nonzero ad-nilpotent
    element, since those are isotropic.  Indefinite forms come back Unknown
    rather than guessed.
    """
    space = b if b is not None else L.full_space()
    if space.is_zero():
        return proven_true("zero-subalgebra")
    if not is_subalgebra(L, space):
        raise ValueError("ad-semisimple test requires a subalgebra")
    # witness scan: basis then seeded samples
    for v in space.basis:
        t = _nonzero_nilpart_witness(L, v)
        if t is not None:
            return t
    for c in _seeded_vectors_in(space, samples, seed):
        t = _nonzero_nilpart_witness(L, c)
        if t is not None:
            return t
    if is_abelian_space(L, space):
        st = is_toral(L, space)
        if st.is_true:
            return proven_true("commuting-family-envelope")
        return unknown("commuting-family", detail="abelian but not certified toral")
    bi, inc = induced_subalgebra(L, space)
    rb = radical(bi)
    zb = center(bi)
    if rb != zb:
        # elements of N(B) outside Z(B) have nilpotent nonzero adjoint on B;
        # when N(B) <= Z(B), anything in R(B) outside Z(B) does instead,
        # since then (ad_B x)^2 maps B into [x, Z(B)] = 0
        nb = nilradical(bi)
        pool = nb if not zb.contains_space(nb) else rb
        wit = next(v for v in pool.basis if not zb.contains(v))
        x = inc.up(wit)
        t = _nonzero_nilpart_witness(L, x)
        if t is not None:
            return t
        raise RuntimeError("ad-semisimple inconsistency: radical exceeds "
                           "centre but adjoint looks semisimple")
    s = derived_subalgebra(bi)
    if not (zb.add(s).is_full() and zb.intersect(s).is_zero()):
        return unknown("reductive-decomposition",
                       detail="no toral-centre/semisimple splitting found")
    zt = is_toral(L, inc.up_space(zb))
    if not zt.is_true:
        return unknown("central-torus", detail="centre not certified toral")
    si, _ = induced_subalgebra(bi, s)
    if not radical(si).is_zero():
        return unknown("semisimple-part", detail="derived part not semisimple")
    if is_definite(si.killing()):
        return proven_true("anisotropic-killing",
                           detail="definite Killing form forbids nil elements")
    return unknown("anisotropic-killing",
                   detail="indefinite Killing form; anisotropy certificate inapplicable")


def _nonzero_nilpart_witness(L, x):
    jp = jordan_chevalley(L.ad(x))
    if not jp.nilpotent.is_zero():
        return proven_false("nonzero-nilpotent-jordan-part", witness={"element": x})
    return None


def _seeded_vectors_in(space, samples, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        coords = [Fraction(rng.randint(-2, 2)) for _ in range(space.dim)]
        v = space.from_coords(coords)
        if any(v):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# Simple ideal decomposition


def simple_ideal_decomposition(L):
    """Pairwise Killing-orthogonal simple ideals of a semisimple algebra.

    The centre of the unital envelope of ad L is spanned by the projections
    onto the simple ideals; its elements have rational spectrum, so repeated
    eigenspace refinement with Lagrange idempotents cuts out the ideals.
    """
    if not radical(L).is_zero():
        raise ValueError("simple ideal decomposition requires a semisimple algebra")
    n = L.dim
    ads = [L.ad_basis(i) for i in range(n)]
    env = associative_envelope(ads, unital=True)
    centre = _envelope_centre(env, ads, n)
    blocks = [Matrix.identity(n)]
    for c in centre:
        if len(blocks) == len(centre):
            break
        new_blocks = []
        for e in blocks:
            new_blocks.extend(_split_block(c, e, n))
        blocks = new_blocks
    if len(blocks) != len(centre):
        raise RuntimeError("central idempotent refinement incomplete")
    ideals = []
    for e in blocks:
        cols = [tuple(col) for col in zip(*e.rows)]
        ideals.append(Subspace.span(n, cols))
    ideals.sort(key=lambda s: (s.dim, s.basis))
    # verification: ideals, orthogonal, summing to L
    total = L.zero_space()
    for i, s in enumerate(ideals):
        if not is_ideal(L, s):
            raise RuntimeError("decomposition piece is not an ideal")
        total = total.add(s)
        for s2 in ideals[i + 1:]:
            for v in s.basis:
                for w in s2.basis:
                    if L.killing_value(v, w):
                        raise RuntimeError("ideals are not Killing-orthogonal")
    if not total.is_full():
        raise RuntimeError("ideals do not sum to the algebra")
    return ideals


def _envelope_centre(env, gens, n):
    """Elements of the envelope commuting with every generator."""
    sys_rows = []
    for g in gens:
        cols = [(b * g - g * b).flatten() for b in env]
        sys_rows.extend(Matrix.from_columns(cols).rows)
    coeffs = kernel_space(Matrix(sys_rows))
    out = []
    for cvec in coeffs.basis:
        acc = Matrix.zeros(n)
        for c, b in zip(cvec, env):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def _split_block(c, e, n):
    """Split an idempotent block by the rational spectrum of c on its image."""
    img = Subspace.span(n, [tuple(col) for col in zip(*e.rows)])
    if img.is_zero():
        return []
    m = restrict_operator(c, img)
    mp = min_poly(m)
    roots = poly.rational_roots(mp)
    check = [_fz(1)]
    for r in roots:
        check = poly.pmul(check, [-r, _fz(1)])
    if poly.pmonic(check) != poly.pmonic(mp):
        raise RuntimeError("central element has irrational spectrum")
    if len(roots) == 1:
        return [e]
    out = []
    for lam in roots:
        q = [_Q1]
        for mu in roots:
            if mu != lam:
                q = poly.pmul(q, poly.pscale([-mu, _Q1], 1 / (lam - mu)))
        out.append(poly_of_matrix(q, c) * e)
    return out
