"""Factorization of univariate polynomials over Q.

Classic Zassenhaus pipeline: Yun squarefree decomposition, factorization
mod a small prime (distinct-degree plus Cantor-Zassenhaus splitting),
quadratic Hensel lifting past the Mignotte bound, then naive subset
recombination.  Degrees here stay small (a few dozen), so the exponential
recombination step is harmless.

Integer polynomials are lists of ints, lowest degree first.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .qpoly import QPoly

# --- GF(p) arithmetic on dense coefficient lists ---


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def gf_divmod(a, b, p):
    a = [c % p for c in a]
    _trim(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while a and len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        f = a[-1] * inv % p
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] = (a[k + i] - f * c) % p
        a.pop()
    return _trim(q), _trim(a)


def gf_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % p
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def gf_gcd(a, b, p):
    a, b = [c % p for c in a], [c % p for c in b]
    _trim(a), _trim(b)
    while b:
        a, b = b, gf_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def gf_pow_mod(a, n, mod, p):
    out = [1]
    base = gf_divmod(a, mod, p)[1]
    while n:
        if n & 1:
            out = gf_divmod(gf_mul(out, base, p), mod, p)[1]
        base = gf_divmod(gf_mul(base, base, p), mod, p)[1]
        n >>= 1
    return out


def gf_factor_squarefree(f, p, rng):
    """Factor a monic squarefree polynomial over GF(p), p odd."""
    pieces = []
    v = list(f)
    w = [0, 1]
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            pieces.append((v, len(v) - 1))
            break
        w = gf_pow_mod(w, p, v, p)
        g = gf_gcd(gf_sub(w, [0, 1], p), v, p)
        if len(g) > 1:
            pieces.append((g, d))
            v = gf_divmod(v, g, p)[0]
            w = gf_divmod(w, v, p)[1]
    factors = []
    for poly, d in pieces:
        stack = [poly]
        while stack:
            h = stack.pop()
            if len(h) - 1 == d:
                factors.append(h)
                continue
            while True:
                r = _trim([rng.randrange(p) for _ in range(len(h) - 1)])
                if len(r) < 2:
                    continue
                g = gf_gcd(r, h, p)
                if 1 < len(g) < len(h):
                    break
                t = gf_sub(gf_pow_mod(r, (p**d - 1) // 2, h, p), [1], p)
                g = gf_gcd(t, h, p)
                if 1 < len(g) < len(h):
                    break
            stack.append(g)
            stack.append(gf_divmod(h, g, p)[0])
    return factors


# --- integer polynomial helpers ---


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _z_primitive(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    if g == 0:
        return list(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _z_divides(a, b):
    """Return a/b if b divides a exactly over Z, else None."""
    if not b:
        return None
    a = list(a)
    db = len(b) - 1
    q = [0] * max(0, len(a) - len(b) + 1)
    while _trim(a) and len(a) - 1 >= db:
        if a[-1] % b[-1] != 0:
            return None
        k = len(a) - 1 - db
        f = a[-1] // b[-1]
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] -= f * c
        a.pop()
    return q if not _trim(a) else None


def _mod_sym(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _m_mul(a, b, m):
    return _trim([c % m for c in _z_mul(a, b)])


def _m_add(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % m
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _trim(out)


def _m_sub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % m
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _trim(out)


def _m_divmod(a, b, m):
    """Division with remainder mod m; b must be monic."""
    a = [c % m for c in a]
    _trim(a)
    db = len(b) - 1
    q = [0] * max(0, len(a) - len(b) + 1)
    while a and len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        f = a[-1] % m
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] = (a[k + i] - f * c) % m
        a.pop()
    return _trim(q), _trim(a)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step (von zur Gathen & Gerhard 15.10).

    Requires f = g*h (mod m), s*g + t*h = 1 (mod m), g and h monic.
    Returns (g*, h*, s*, t*) with the same relations mod m**2.
    """
    m2 = m * m
    e = _m_sub(f, _z_mul(g, h), m2)
    q, r = _m_divmod(_m_mul(s, e, m2), h, m2)
    gs = _m_add(g, _m_add(_m_mul(t, e, m2), _m_mul(q, g, m2), m2), m2)
    hs = _m_add(h, r, m2)
    b = _m_sub(_m_add(_m_mul(s, gs, m2), _m_mul(t, hs, m2), m2), [1], m2)
    c, d = _m_divmod(_m_mul(s, b, m2), hs, m2)
    ss = _m_sub(s, d, m2)
    ts = _m_sub(t, _m_add(_m_mul(t, b, m2), _m_mul(c, gs, m2), m2), m2)
    return gs, hs, ss, ts


def _hensel_lift_pair(f, g, h, p, bound):
    """Lift the coprime monic split f = g*h (mod p) to modulus >= bound."""
    # Bezout over GF(p)
    a, b = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while b:
        q, r = gf_divmod(a, b, p)
        a, b = b, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    inv = pow(a[0], -1, p)
    s = [c * inv % p for c in s0]
    t = [c * inv % p for c in t0]
    m = p
    while m < bound:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return g, m


def _next_prime(p):
    p += 2
    while not _is_prime(p):
        p += 2
    return p


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
        if q * q > n:
            return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_monic_squarefree(f, seed):
    """Factor a monic squarefree int polynomial into monic int factors."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)] if n == 1 else []
    rng = random.Random(seed)
    p = 3
    while True:
        fp = [c % p for c in f]
        dfp = _trim([i * c % p for i, c in enumerate(fp)][1:])
        if len(fp) == n + 1 and dfp and len(gf_gcd(list(fp), dfp, p)) == 1:
            break
        p = _next_prime(p)
    modular = gf_factor_squarefree(fp, p, rng)
    if len(modular) == 1:
        return [list(f)]
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (1 << n) * norm2 + 1
    lifted = []
    for g in modular:
        h = gf_divmod(fp, g, p)[0]
        gl, modulus = _hensel_lift_pair(f, g, h, p, bound)
        lifted.append(gl)
    factors = []
    rem = list(f)
    idx = list(range(len(lifted)))
    k = 1
    while 2 * k <= len(idx):
        found = True
        while found and 2 * k <= len(idx):
            found = False
            for sub in combinations(idx, k):
                prod = [1]
                for i in sub:
                    prod = _m_mul(prod, lifted[i], modulus)
                cand = [_mod_sym(c, modulus) for c in prod]
                q = _z_divides(rem, cand)
                if q is not None:
                    factors.append(cand)
                    rem = q
                    idx = [i for i in idx if i not in sub]
                    found = True
                    break
        k += 1
    if len(rem) > 1:
        factors.append(rem)
    return factors


def factor_squarefree_int(f, seed=0):
    """Irreducible factors over Z of a primitive squarefree int polynomial.

    Non-monic input is monicized (y = lc*x substitution), factored, and
    mapped back, so Hensel lifting and recombination only ever see monic
    polynomials.
    """
    f = _z_primitive(f)
    n = len(f) - 1
    if n <= 0:
        return []
    if n == 1:
        return [f]
    lc = f[-1]
    if lc == 1:
        return _factor_monic_squarefree(f, seed)
    # F(y) = lc^(n-1) * f(y/lc) is monic with integer coefficients
    big = [c * lc ** (n - 1 - i) for i, c in enumerate(f[:-1])] + [1]
    out = []
    for g in _factor_monic_squarefree(big, seed):
        d = len(g) - 1
        back = [c * lc**i for i, c in enumerate(g)]
        out.append(_z_primitive(back))
    return out


def yun_squarefree(f):
    """Yun's squarefree decomposition of a primitive int polynomial.

    Returns [(g_i, i)] with the g_i primitive, squarefree, pairwise
    coprime and f = unit * prod g_i^i.
    """
    p = QPoly(f)
    dp = p.derivative()
    a = p.gcd(dp)
    if a.degree == 0:
        return [(list(f), 1)]
    out = []
    b = p // a
    c = dp // a
    i = 1
    while b.degree > 0:
        d2 = c - b.derivative()
        g = b.gcd(d2)
        if g.degree > 0:
            out.append((g.primitive_int()[1], i))
        b = b // g
        c = d2 // g
        i += 1
    return out


def factor_irreducible(p: QPoly, seed=0):
    """Factor p over Q into monic irreducibles.

    Returns (lead, [(QPoly, multiplicity)]) with lead a Fraction such that
    lead * prod q_i^{m_i} == p; factors are pairwise distinct, monic and
    irreducible over Q, sorted by (degree, coefficients).
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0], []
    content, f = p.primitive_int()
    lead = content * f[-1]
    k0 = 0
    while f[k0] == 0:
        k0 += 1
    f = f[k0:]
    found = {}
    if k0:
        found[QPoly.x()] = k0
    for g, mult in yun_squarefree(f):
        for irr in factor_squarefree_int(g, seed=seed):
            q = QPoly(irr).monic()
            found[q] = found.get(q, 0) + mult
    items = sorted(found.items(), key=lambda t: (t[0].degree, t[0].coeffs))
    return Fraction(lead), items
