"""Dense univariate polynomial arithmetic over the rationals.

Polynomials are lists of Fractions indexed by degree, with no trailing
zeros; the zero polynomial is the empty list.  Everything here is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

Q = Fraction
_Q0 = Fraction(0)
_Q1 = Fraction(1)

Poly = list


def ptrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def pdeg(p):
    """Degree, with deg 0 = -1."""
    return len(p) - 1


def padd(p, q):
    n = max(len(p), len(q))
    out = [_Q0] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return ptrim(out)


def psub(p, q):
    n = max(len(p), len(q))
    out = [_Q0] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return ptrim(out)


def pscale(p, c):
    if not c:
        return []
    return [c * a for a in p]


def pmul(p, q):
    if not p or not q:
        return []
    out = [_Q0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return ptrim(out)


def pdivmod(p, q):
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(p)
    d = len(q) - 1
    lead = q[-1]
    quo = [_Q0] * max(len(p) - d, 0)
    while len(r) - 1 >= d and r:
        c = r[-1] / lead
        k = len(r) - 1 - d
        quo[k] = c
        for i in range(d + 1):
            r[k + i] -= c * q[i]
        ptrim(r)
    return ptrim(quo), r


def pmod(p, q):
    return pdivmod(p, q)[1]


def pmonic(p):
    if not p:
        return []
    lead = p[-1]
    if lead == 1:
        return list(p)
    return [c / lead for c in p]


def pderiv(p):
    return ptrim([p[i] * i for i in range(1, len(p))])


def _primitive(p):
    # Integer primitive part; keeps Euclidean remainders from blowing up.
    if not p:
        return []
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = math.gcd(*ints)
    if g > 1:
        ints = [a // g for a in ints]
    if ints[-1] < 0:
        ints = [-a for a in ints]
    return [Q(a) for a in ints]


def pgcd(p, q):
    """Monic gcd, computed on primitive integer remainders."""
    a, b = _primitive(p), _primitive(q)
    while b:
        a, b = b, _primitive(pmod(a, b))
    return pmonic(a)


def plcm(p, q):
    if not p or not q:
        return []
    g = pgcd(p, q)
    return pmonic(pmul(pdivmod(p, g)[0], q))


def pxgcd(p, q):
    """Extended gcd: returns (g, u, v) with u*p + v*q = g, g monic."""
    r0, r1 = list(p), list(q)
    u0, u1 = [_Q1], []
    v0, v1 = [], [_Q1]
    while r1:
        quo, rem = pdivmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, psub(u0, pmul(quo, u1))
        v0, v1 = v1, psub(v0, pmul(quo, v1))
    if not r0:
        return [], u0, v0
    lead = r0[-1]
    inv = 1 / lead
    return pscale(r0, inv), pscale(u0, inv), pscale(v0, inv)


def psquarefree(p):
    """Squarefree part p / gcd(p, p'), monic."""
    if pdeg(p) <= 1:
        return pmonic(p)
    g = pgcd(p, pderiv(p))
    return pmonic(pdivmod(p, g)[0])


def pcompose(p, inner):
    """p(inner(t)) by Horner."""
    out = []
    for c in reversed(p):
        out = padd(pmul(out, inner), [c] if c else [])
    return out


def peval(p, x):
    acc = _Q0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pstr(p, var="t"):
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*{var}" if c != 1 else var)
        else:
            terms.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(terms).replace("+ -", "- ")


def _int_monic(p):
    """Rescale t -> t/c so that a monic rational poly becomes monic integral.

    Returns the integer coefficient list; irreducibility over Q is preserved.
    """
    p = pmonic(p)
    c = math.lcm(*(a.denominator for a in p))
    n = pdeg(p)
    out = [p[i] * Q(c) ** (n - i) for i in range(len(p))]
    return [int(a) for a in out]


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(p):
    """All rational roots of p, without multiplicity."""
    if not p:
        raise ValueError("zero polynomial")
    roots = []
    work = list(p)
    while work and not work[0]:
        work = work[1:]
        if _Q0 not in roots:
            roots.append(_Q0)
    if pdeg(work) < 1:
        return roots
    den = math.lcm(*(c.denominator for c in work))
    ints = [int(c * den) for c in work]
    for num in _divisors(ints[0]) or [0]:
        for dd in _divisors(ints[-1]):
            for sgn in (1, -1):
                cand = Q(sgn * num, dd)
                if cand not in roots and peval(work, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


_FACTOR_SEARCH_CAP = 400_000


def _monic_factor_exists(ints, d):
    """Search for a monic integer factor of degree d by bounded enumeration.

    Returns True/False, or None when the search space exceeds the cap.
    """
    n = len(ints) - 1
    # Cauchy bound on complex roots, then coefficient bounds for a factor.
    m = max(abs(a) for a in ints[:-1]) if n else 0
    root_bound = 1 + m
    bounds = [math.comb(d, d - i) * root_bound ** (d - i) for i in range(d)]
    const_divs = _divisors(ints[0])
    if ints[0] == 0:
        return True  # t divides
    total = 2 * len(const_divs)
    for b in bounds[1:]:
        total *= 2 * b + 1
        if total > _FACTOR_SEARCH_CAP:
            return None
    pf = [Q(a) for a in ints]
    ranges = [range(-b, b + 1) for b in bounds[1:]]
    for c0 in const_divs:
        for s in (1, -1):
            for mid in product(*ranges):
                cand = [Q(s * c0)] + [Q(a) for a in mid] + [_Q1]
                if not pmod(pf, cand):
                    return True
    return False


def is_irreducible(p):
    """Irreducibility over Q; returns True/False, or None if undecided.

    Complete for degree <= 5 with moderate coefficients; larger inputs may
    come back undecided when the factor enumeration would be too big.
    """
    n = pdeg(p)
    if n <= 0:
        return False
    if n == 1:
        return True
    ints = _int_monic(p)
    if ints[0] == 0:
        return False
    if rational_roots([Q(a) for a in ints]):
        return False
    if n <= 3:
        return True
    undecided = False
    for d in range(2, n // 2 + 1):
        found = _monic_factor_exists(ints, d)
        if found:
            return False
        if found is None:
            undecided = True
    return None if undecided else True
