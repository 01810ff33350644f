"""Low-level arithmetic on sparse polynomial term maps (pure Python).

A polynomial is stored as a dict mapping monomials to coefficients:

  terms:    {mono: (num, den), ...}     zero polynomial = {}
  mono:     flat tuple (v1, e1, v2, e2, ...) with packed variable ids
            v1 < v2 < ... and all exponents > 0; () is the constant monomial
  coeff:    pair of ints with den > 0, gcd(|num|, den) == 1, num != 0

Inputs are never mutated; every function returns a fresh dict in canonical
form (no zero coefficients, reduced fractions).

superschur._terms_c is a Cython build of the same functions; see
superschur.backend for how one of the two is selected at import time.
"""

from math import gcd


def frac_norm(num, den):
    """Reduce num/den to lowest terms with a positive denominator."""
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return num, den


def frac_add(n1, d1, n2, d2):
    """n1/d1 + n2/d2, reduced."""
    return frac_norm(n1 * d2 + n2 * d1, d1 * d2)


def frac_mul(n1, d1, n2, d2):
    """(n1/d1) * (n2/d2), reduced."""
    return frac_norm(n1 * n2, d1 * d2)


def mono_mul(m1, m2):
    """Merge two sorted flat monomials, adding exponents."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = 0
    j = 0
    len1 = len(m1)
    len2 = len(m2)
    while i < len1 and j < len2:
        v1 = m1[i]
        v2 = m2[j]
        if v1 == v2:
            out.append(v1)
            out.append(m1[i + 1] + m2[j + 1])
            i += 2
            j += 2
        elif v1 < v2:
            out.append(v1)
            out.append(m1[i + 1])
            i += 2
        else:
            out.append(v2)
            out.append(m2[j + 1])
            j += 2
    if i < len1:
        out.extend(m1[i:])
    if j < len2:
        out.extend(m2[j:])
    return tuple(out)


def mono_div(m1, m2):
    """m1 / m2 as a monomial, or None when m2 does not divide m1."""
    if not m2:
        return m1
    out = []
    i = 0
    j = 0
    len1 = len(m1)
    len2 = len(m2)
    while j < len2:
        if i >= len1:
            return None
        v1 = m1[i]
        v2 = m2[j]
        if v1 == v2:
            e = m1[i + 1] - m2[j + 1]
            if e < 0:
                return None
            if e > 0:
                out.append(v1)
                out.append(e)
            i += 2
            j += 2
        elif v1 < v2:
            out.append(v1)
            out.append(m1[i + 1])
            i += 2
        else:
            return None
    if i < len1:
        out.extend(m1[i:])
    return tuple(out)


def mono_degree(m):
    """Total degree of a monomial."""
    return sum(m[1::2])


def terms_add(a, b):
    """a + b."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for mono, (n2, d2) in b.items():
        c1 = out.get(mono)
        if c1 is None:
            out[mono] = (n2, d2)
            continue
        d1 = c1[1]
        if d1 == 1 and d2 == 1:
            n = c1[0] + n2
            d = 1
        else:
            n, d = frac_add(c1[0], d1, n2, d2)
        if n == 0:
            del out[mono]
        else:
            out[mono] = (n, d)
    return out


def terms_sub(a, b):
    """a - b."""
    if not b:
        return dict(a)
    out = dict(a)
    for mono, (n2, d2) in b.items():
        c1 = out.get(mono)
        if c1 is None:
            out[mono] = (-n2, d2)
            continue
        d1 = c1[1]
        if d1 == 1 and d2 == 1:
            n = c1[0] - n2
            d = 1
        else:
            n, d = frac_add(c1[0], d1, -n2, d2)
        if n == 0:
            del out[mono]
        else:
            out[mono] = (n, d)
    return out


def terms_neg(a):
    """-a."""
    return {mono: (-n, d) for mono, (n, d) in a.items()}


def terms_scale(a, num, den):
    """a * (num/den)."""
    if num == 0:
        return {}
    out = {}
    for mono, (n, d) in a.items():
        out[mono] = frac_mul(n, d, num, den)
    return out


def terms_mul_term(a, mono, num, den):
    """a * (num/den) * mono."""
    if num == 0:
        return {}
    out = {}
    for m, (n, d) in a.items():
        out[mono_mul(m, mono)] = frac_mul(n, d, num, den)
    return out


def terms_mul(a, b):
    """a * b by distributing every term pair; the hot kernel.

    Integer coefficients (den == 1 throughout, the dominant case here) take
    a gcd-free path.
    """
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for mb, (nb, db) in b.items():
        if db == 1:
            for ma, (na, da) in a.items():
                mono = mono_mul(ma, mb)
                c = out.get(mono)
                if c is None:
                    if da == 1:
                        out[mono] = (na * nb, 1)
                    else:
                        out[mono] = frac_norm(na * nb, da)
                elif c[1] == 1 and da == 1:
                    n = c[0] + na * nb
                    if n == 0:
                        del out[mono]
                    else:
                        out[mono] = (n, 1)
                else:
                    n, d = frac_add(c[0], c[1], na * nb, da)
                    if n == 0:
                        del out[mono]
                    else:
                        out[mono] = (n, d)
        else:
            for ma, (na, da) in a.items():
                mono = mono_mul(ma, mb)
                c = out.get(mono)
                if c is None:
                    out[mono] = frac_norm(na * nb, da * db)
                else:
                    n, d = frac_add(c[0], c[1], na * nb, da * db)
                    if n == 0:
                        del out[mono]
                    else:
                        out[mono] = (n, d)
    return out
