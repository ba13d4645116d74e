"""Exact rational matrices, canonical subspaces, and matrix-level algorithms.

Scalars are ``fractions.Fraction`` throughout: always in lowest terms with a
positive denominator, so arithmetic is exact and equality is structural.
Vectors are tuples of Fractions; matrices act on column vectors.  Subspaces
of Q^n are stored by their reduced-row-echelon basis, which makes subspace
equality a plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .poly import pdeg, pderiv, pgcd, plcm, pmod, pmonic, psquarefree, pxgcd

Q = Fraction
_Q0 = Fraction(0)
_Q1 = Fraction(1)


def qparse(s):
    """Parse a rational written as 'p' or 'p/q'."""
    return Fraction(s)


def qstr(x):
    return str(x)


def vec(entries):
    return tuple(Fraction(e) for e in entries)


def zero_vec(n):
    return (_Q0,) * n


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero_vec(u):
    return not any(u)


class Matrix:
    """Immutable dense matrix over Q."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(e) for e in r) for r in rows)
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged rows")

    @staticmethod
    def zeros(n, m=None):
        m = n if m is None else m
        return Matrix([[_Q0] * m for _ in range(n)])

    @staticmethod
    def identity(n):
        return Matrix([[_Q1 if i == j else _Q0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(entries):
        entries = [Fraction(e) for e in entries]
        n = len(entries)
        return Matrix([[entries[i] if i == j else _Q0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(cols):
        return Matrix(list(zip(*cols))) if cols else Matrix([])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in r) for r in self.rows)
        return f"Matrix[{body}]"

    def __add__(self, other):
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-e for e in r] for r in self.rows])

    def scale(self, c):
        c = Fraction(c)
        return Matrix([[c * e for e in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in product")
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [_Q0] * other.ncols
            for k, aik in enumerate(arow):
                if not aik:
                    continue
                brow = brows[k]
                for j, bkj in enumerate(brow):
                    if bkj:
                        acc[j] += aik * bkj
            out.append(acc)
        return Matrix(out)

    __matmul__ = __mul__

    def __pow__(self, k):
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def apply(self, v):
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch in apply")
        out = []
        for row in self.rows:
            acc = _Q0
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return Matrix(list(zip(*self.rows))) if self.rows else self

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.nrows)), _Q0)

    def is_zero(self):
        return all(not e for r in self.rows for e in r)

    def is_square(self):
        return self.nrows == self.ncols

    def flatten(self):
        return tuple(e for r in self.rows for e in r)

    @staticmethod
    def unflatten(v, n, m=None):
        m = n if m is None else m
        return Matrix([v[i * m:(i + 1) * m] for i in range(n)])

    def entry(self, i, j):
        return self.rows[i][j]


def commutator(a, b):
    return a * b - b * a


def trace_product(a, b):
    """tr(a*b) without forming the product."""
    acc = _Q0
    for i in range(a.nrows):
        arow = a.rows[i]
        for j, aij in enumerate(arow):
            if aij:
                bji = b.rows[j][i]
                if bji:
                    acc += aij * bji
    return acc


def is_nilpotent_matrix(a):
    if not a.is_square():
        raise ValueError("nilpotency needs a square matrix")
    n = a.nrows
    p = a
    k = 1
    while k < n:
        if p.is_zero():
            return True
        p = p * p
        k *= 2
    return p.is_zero()


class EchelonBasis:
    """Mutable fully-reduced row-echelon collection over Q^n.

    Rows are kept monic with zeros above and below every pivot, so the row
    set is a canonical basis of its span at all times.
    """

    __slots__ = ("n", "pivots")

    def __init__(self, n):
        self.n = n
        self.pivots = {}  # pivot column -> row (list)

    def reduce(self, v):
        """Residual of v after reduction; a fresh list."""
        w = list(v)
        for p, row in self.pivots.items():
            c = w[p]
            if c:
                for j in range(p, self.n):
                    rj = row[j]
                    if rj:
                        w[j] -= c * rj
        return w

    def insert(self, v):
        """Add v to the span; returns the inserted canonical row or None."""
        w = self.reduce(v)
        p = next((j for j in range(self.n) if w[j]), None)
        if p is None:
            return None
        c = w[p]
        if c != 1:
            w = [e / c for e in w]
        for row in self.pivots.values():
            d = row[p]
            if d:
                for j in range(p, self.n):
                    wj = w[j]
                    if wj:
                        row[j] -= d * wj
        self.pivots[p] = w
        return tuple(w)

    def contains(self, v):
        return not any(self.reduce(v))

    @property
    def dim(self):
        return len(self.pivots)

    def sorted_rows(self):
        return tuple(tuple(self.pivots[p]) for p in sorted(self.pivots))

    def sorted_pivots(self):
        return tuple(sorted(self.pivots))


class Subspace:
    """A subspace of Q^n held by its canonical RREF basis.

    Two subspaces are equal iff their canonical bases are identical tuples.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, basis, pivots):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @staticmethod
    def span(ambient, vectors):
        eb = EchelonBasis(ambient)
        for v in vectors:
            if len(v) != ambient:
                raise ValueError("vector length differs from ambient dimension")
            eb.insert(v)
        return Subspace(ambient, eb.sorted_rows(), eb.sorted_pivots())

    @staticmethod
    def zero(ambient):
        return Subspace(ambient, (), ())

    @staticmethod
    def full(ambient):
        eye = Matrix.identity(ambient)
        return Subspace(ambient, eye.rows, tuple(range(ambient)))

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.dim == self.ambient

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient})"

    def _echelon(self):
        eb = EchelonBasis(self.ambient)
        for p, row in zip(self.pivots, self.basis):
            eb.pivots[p] = list(row)
        return eb

    def contains(self, v):
        if len(v) != self.ambient:
            raise ValueError("ambient dimension mismatch")
        return self._echelon().contains(v)

    def contains_space(self, other):
        self._check(other)
        eb = self._echelon()
        return all(eb.contains(v) for v in other.basis)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")

    def add(self, other):
        self._check(other)
        return Subspace.span(self.ambient, self.basis + other.basis)

    def intersect(self, other):
        """Zassenhaus: stack [u|u] and [v|0]; zero-left rows carry the meet."""
        self._check(other)
        n = self.ambient
        eb = EchelonBasis(2 * n)
        for u in self.basis:
            eb.insert(u + u)
        for v in other.basis:
            eb.insert(v + zero_vec(n))
        out = []
        for row in eb.sorted_rows():
            if not any(row[:n]):
                out.append(row[n:])
        return Subspace.span(n, out)

    def coords(self, v):
        """Coordinates of a member vector in the canonical basis."""
        res = list(v)
        out = []
        for p, row in zip(self.pivots, self.basis):
            c = res[p]
            out.append(c)
            if c:
                for j in range(p, self.ambient):
                    if row[j]:
                        res[j] -= c * row[j]
        if any(res):
            raise ValueError("vector not in subspace")
        return tuple(out)

    def from_coords(self, cs):
        out = [_Q0] * self.ambient
        for c, row in zip(cs, self.basis):
            if c:
                for j, rj in enumerate(row):
                    if rj:
                        out[j] += c * rj
        return tuple(out)

    def nonpivots(self):
        ps = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in ps)

    def to_json(self):
        return [[qstr(e) for e in row] for row in self.basis]


def subspace_sum_intersection(a, b):
    """Convenience: (a+b, a∩b, a contains b)."""
    return a.add(b), a.intersect(b), a.contains_space(b)


def rref(rows, ncols):
    eb = EchelonBasis(ncols)
    for r in rows:
        eb.insert(r)
    return eb.sorted_rows(), eb.sorted_pivots()


def solve_linear(a, b):
    """One exact solution x of A x = b, or None; free variables are zero."""
    m = a.nrows
    n = a.ncols
    eb = EchelonBasis(n + 1)
    for i in range(m):
        eb.insert(a.rows[i] + (b[i],))
    x = [_Q0] * n
    for p, row in sorted(eb.pivots.items()):
        if p == n:
            return None  # row (0 ... 0 | 1): inconsistent
        x[p] = row[n]
    return tuple(x)


def kernel(a):
    """Canonical basis of the right kernel of A."""
    n = a.ncols
    rows, pivots = rref(a.rows, n)
    pivot_set = set(pivots)
    out = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = [_Q0] * n
        v[j] = _Q1
        for p, row in zip(pivots, rows):
            if row[j]:
                v[p] = -row[j]
        out.append(tuple(v))
    return out


def kernel_space(a):
    return Subspace.span(a.ncols, kernel(a))


def image_space(a):
    """Column space of A as a Subspace."""
    return Subspace.span(a.nrows, [tuple(col) for col in zip(*a.rows)]) \
        if a.rows else Subspace.zero(0)


def preimage_space(a, w):
    """{x : A x in W} for a matrix A: m x n and W <= Q^m."""
    if a.nrows != w.ambient:
        raise ValueError("target ambient mismatch")
    # Kernel of R o A where R is the linear residual map of reduction by W:
    # R(v) = v - sum_t v[p_t] * row_t, which vanishes exactly on W.
    m = a.nrows
    res = [[_Q1 if i == j else _Q0 for j in range(m)] for i in range(m)]
    for p, row in zip(w.pivots, w.basis):
        for i in range(m):
            res[i][p] -= row[i]
    return kernel_space(Matrix(res) * a)


def restrict_operator(m, space):
    """Matrix of an operator on an invariant subspace, in its canonical basis."""
    cols = []
    for row in space.basis:
        img = m.apply(row)
        cols.append(space.coords(img))
    return Matrix.from_columns(cols) if cols else Matrix([])


# ---------------------------------------------------------------------------
# Minimal polynomials and the Jordan–Chevalley decomposition


def min_poly(a):
    """Monic minimal polynomial, by per-vector Krylov chains and lcm."""
    if not a.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = a.nrows
    if n == 0:
        return [_Q1]
    m = [_Q1]
    for i in range(n):
        if pdeg(m) == n:
            break
        v = tuple(_Q1 if j == i else _Q0 for j in range(n))
        # Krylov chain with expression tracking: rows carry their coordinates
        # in terms of v, Av, A^2 v, ...
        chain = []  # list of (reduced row, combo) pairs
        cur = v
        k = 0
        while True:
            w = list(cur)
            combo = [_Q0] * (k + 1)
            combo[k] = _Q1
            for row, rcombo in chain:
                p = next(j for j in range(n) if row[j])
                c = w[p]
                if c:
                    for j in range(n):
                        if row[j]:
                            w[j] -= c * row[j]
                    for j, rc in enumerate(rcombo):
                        if rc:
                            combo[j] -= c * rc
            if not any(w):
                local = poly.ptrim(combo)
                m = plcm(m, local)
                break
            lead = next(e for e in w if e)
            chain.append(([e / lead for e in w], [e / lead for e in combo]))
            cur = a.apply(cur)
            k += 1
    return pmonic(m)


def is_semisimple_matrix(a):
    m = min_poly(a)
    return pdeg(pgcd(m, pderiv(m))) == 0


def poly_of_matrix(p, a):
    """p(A) by Horner."""
    n = a.nrows
    acc = Matrix.zeros(n)
    for c in reversed(p):
        acc = acc * a
        if c:
            acc = acc + Matrix.identity(n).scale(c)
    return acc


@dataclass(frozen=True)
class JordanPair:
    """A = semisimple + nilpotent with both parts polynomials in A.

    ``s_poly`` has zero constant term and evaluates to the semisimple part.
    """

    semisimple: Matrix
    nilpotent: Matrix
    s_poly: tuple


def jordan_chevalley(a):
    """Exact Jordan-Chevalley decomposition by Newton iteration.

    With m the minimal polynomial and f its squarefree part, iterate
    S <- S - f(S) u(S) where u f' = 1 mod f, starting at S = A.  The
    iteration converges quadratically; characteristic zero guarantees
    gcd(f, f') = 1.
    """
    if not a.is_square():
        raise ValueError("Jordan decomposition of a non-square matrix")
    n = a.nrows
    m = min_poly(a)
    f = psquarefree(m)
    if pdeg(f) == pdeg(m):
        p = _zero_constant_term([_Q0, _Q1], m)
        return JordanPair(a, Matrix.zeros(n), tuple(p))
    _, u, _ = pxgcd(pderiv(f), f)
    s = a
    p = [_Q0, _Q1]
    for _ in range(2 * n + 2):
        fs = poly_of_matrix(f, s)
        if fs.is_zero():
            break
        s = s - fs * poly_of_matrix(u, s)
        p = pmod(poly.psub(p, poly.pmul(poly.pcompose(f, p), poly.pcompose(u, p))), m)
    else:
        raise RuntimeError("Newton iteration failed to converge")
    p = _zero_constant_term(p, m)
    return JordanPair(s, a - s, tuple(p))


def _zero_constant_term(p, m):
    if p and p[0]:
        if not m[0]:
            raise RuntimeError("constant term should vanish when 0 is an eigenvalue")
        return poly.psub(p, poly.pscale(m, p[0] / m[0]))
    return p


# ---------------------------------------------------------------------------
# Associative envelopes and the trace-form (Dickson) radical


def associative_envelope(gens, unital=False):
    """Canonical basis of the smallest product-closed subspace containing gens.

    Returns matrices whose flattenings form an RREF basis of the envelope as
    a subspace of the n^2-dimensional matrix space.
    """
    if not gens and not unital:
        return []
    n = gens[0].nrows if gens else None
    for g in gens:
        if g.nrows != n or g.ncols != n:
            raise ValueError("generators must share a square size")
    if unital and n is None:
        raise ValueError("unital envelope needs at least one generator")
    eb = EchelonBasis(n * n)
    work = []

    def push(mat):
        if eb.insert(mat.flatten()) is not None:
            work.append(mat)

    if unital:
        push(Matrix.identity(n))
    for g in gens:
        push(g)
    i = 0
    while i < len(work):
        mi = work[i]
        j = 0
        while j <= i:
            mj = work[j]
            push(mi * mj)
            if j < i:
                push(mj * mi)
            j += 1
        i += 1
    return [Matrix.unflatten(row, n) for row in eb.sorted_rows()]


def matrix_space(mats, n):
    return Subspace.span(n * n, [m.flatten() for m in mats])


def dickson_radical(basis, check_closed=True):
    """Trace-form radical {a : tr(a b) = 0 for all b} of a matrix algebra.

    In characteristic zero this is the Jacobson radical, so every returned
    element is nilpotent.  ``basis`` must span a product-closed subspace.
    """
    if not basis:
        return []
    n = basis[0].nrows
    if check_closed:
        space = matrix_space(basis, n)
        for x in basis:
            for y in basis:
                if not space.contains((x * y).flatten()):
                    raise ValueError("input basis is not product-closed")
    k = len(basis)
    gram = Matrix([[trace_product(basis[i], basis[j]) for j in range(k)] for i in range(k)])
    rad = []
    for coeffs in kernel(gram):
        acc = Matrix.zeros(n)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.scale(c)
        rad.append(acc)
    eb = EchelonBasis(n * n)
    for r in rad:
        eb.insert(r.flatten())
    return [Matrix.unflatten(row, n) for row in eb.sorted_rows()]


# ---------------------------------------------------------------------------
# Symmetric forms


def diagonalize_symmetric(g):
    """Congruence diagonalization: returns (P, diag) with P G P^T diagonal."""
    if not g.is_square():
        raise ValueError("not square")
    n = g.nrows
    a = [list(r) for r in g.rows]
    p = [list(r) for r in Matrix.identity(n).rows]

    def row_op(dst, src, c):
        for j in range(n):
            a[dst][j] += c * a[src][j]
            p[dst][j] += c * p[src][j]
        for i in range(n):
            a[i][dst] += c * a[i][src]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]
        for r in a:
            r[i], r[j] = r[j], r[i]

    for k in range(n):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][i]), None)
            if pivot is not None:
                swap(k, pivot)
            else:
                off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
                if off is None:
                    break
                i, j = off
                if i != k:
                    swap(k, i)
                    j = i if j == k else j
                row_op(k, j, _Q1)
        d = a[k][k]
        if not d:
            continue
        for i in range(k + 1, n):
            if a[i][k]:
                row_op(i, k, -a[i][k] / d)
    return Matrix(p), [a[i][i] for i in range(n)]


def form_signature(g):
    """(positive, negative, zero) counts of a symmetric form over Q."""
    _, diag = diagonalize_symmetric(g)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg


def is_definite(g):
    pos, neg, zero = form_signature(g)
    return zero == 0 and (pos == 0 or neg == 0)
